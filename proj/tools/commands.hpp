// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

namespace tlg::cli {

// Parses argv, runs the selected subcommand and returns the process exit
// code: 0 on success, 1 on computation errors and failed checks, 2 on usage
// errors.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace tlg::cli
