// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <json.hpp>

#include "tlg/laurent.hpp"
#include "tlg/lattice.hpp"
#include "tlg/picard_fuchs.hpp"
#include "tlg/polytope.hpp"
#include "tlg/series.hpp"

namespace tlg {

// Insertion-ordered objects keep every printed document in a fixed layout.
using Json = nlohmann::ordered_json;

// Every reader takes the location of `j` inside its document (a path such as
// "$.terms[2].c") and throws a ParseError naming the offending location.

Json rational_to_json(const Q& q);
Q rational_from_json(const Json& j, const std::string& where);

// {"vars":["x","y"],"terms":[{"e":[1,0],"c":"1"},...]}; terms in exponent
// order. Repeated exponents accumulate.
Json laurent_to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j, const std::string& where = "$");

// {"order":5,"coeffs":["1","12",...]}; order must equal the coefficient count.
Json series_to_json(const PowerSeries& s);
PowerSeries series_from_json(const Json& j, const std::string& where = "$");

// {"dim":3,"vertices":[[1,0,0],...]}; any point list is accepted and hulled.
Json polytope_to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const Json& j, const std::string& where = "$");
// Rational vertices print as strings.
Json rational_polytope_to_json(const RationalPolytope& p);

// {"gram":[[0,1],[1,0]]}; the matrix must be square and symmetric.
Json gram_to_json(const GramLattice& l);
GramLattice gram_from_json(const Json& j, const std::string& where = "$");

// {"terms":[{"t":0,"theta":2,"c":"1"},...]}.
Json operator_to_json(const DifferentialOperator& op);
DifferentialOperator operator_from_json(const Json& j, const std::string& where = "$");

IMat int_matrix_from_json(const Json& j, const std::string& where);
std::vector<int> int_list_from_json(const Json& j, const std::string& where);

// Reads and parses a file; syntax errors report the file name and byte
// offset. "-" reads standard input.
Json read_json_file(const std::string& path);
void write_json_file(const Json& j, const std::string& path);

// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace tlg
