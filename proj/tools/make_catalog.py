#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Writes data/catalog.json.

Laurent polynomials are expanded from their printed closed forms. Entries
without a generator get a regression prefix computed by `tlg phi`, so the
tlg binary must be built first:

    tools/make_catalog.py --tlg build/tlg --out data/catalog.json
"""
import argparse
import json
import subprocess
import tempfile
from fractions import Fraction


class Poly:
    """Laurent polynomial as {exponent tuple: Fraction}."""

    def __init__(self, nvars, terms=None):
        self.n = nvars
        self.t = {k: v for k, v in (terms or {}).items() if v != 0}

    def __add__(self, o):
        o = lift(o, self.n)
        r = dict(self.t)
        for k, v in o.t.items():
            r[k] = r.get(k, 0) + v
        return Poly(self.n, r)

    __radd__ = __add__

    def __mul__(self, o):
        o = lift(o, self.n)
        r = {}
        for a, c in self.t.items():
            for b, d in o.t.items():
                k = tuple(x + y for x, y in zip(a, b))
                r[k] = r.get(k, 0) + c * d
        return Poly(self.n, r)

    __rmul__ = __mul__

    def __pow__(self, m):
        r = lift(1, self.n)
        for _ in range(m):
            r = r * self
        return r


def lift(o, n):
    if isinstance(o, Poly):
        return o
    return Poly(n, {(0,) * n: Fraction(o)})


def mono(*e):
    return Poly(len(e), {tuple(e): Fraction(1)})


def laurent_json(p, names):
    terms = [{"e": list(k), "c": str(v)} for k, v in sorted(p.t.items())]
    return {"vars": names, "terms": terms}


X3 = ["x", "y", "z"]
x, y, z = mono(1, 0, 0), mono(0, 1, 0), mono(0, 0, 1)


def inv(*e):
    return mono(*[-a for a in e])


def table_entries():
    xyz = inv(1, 1, 1)
    return [
        ("1-1", "Sextic double solid: degree 6 hypersurface in P(1,1,1,1,3)", (x + y + z + 1) ** 6 * xyz,
         {"type": "wci", "weights": [1, 1, 1, 1, 3], "degrees": [6]}, 2, 1),
        ("1-2", "Quartic threefold", (x + y + z + 1) ** 4 * xyz,
         {"type": "wci", "weights": [1, 1, 1, 1, 1], "degrees": [4]}, 4, 1),
        ("1-3", "Complete intersection of a quadric and a cubic in P^5", (x + 1) ** 2 * (y + z + 1) ** 3 * xyz,
         {"type": "wci", "weights": [1] * 6, "degrees": [2, 3]}, 6, 1),
        ("1-4", "Complete intersection of three quadrics in P^6", (x + 1) ** 2 * (y + 1) ** 2 * (z + 1) ** 2 * xyz,
         {"type": "wci", "weights": [1] * 7, "degrees": [2, 2, 2]}, 8, 1),
        ("1-5", "Section of G(2,5) by two hyperplanes and a quadric",
         (1 + x + y + z + x * y + x * z + y * z) ** 2 * xyz,
         {"type": "grass", "k": 2, "n": 3, "degrees": [2, 1, 1]}, 10, 1),
        ("1-6", "Linear section of OG(5,10) of codimension 7",
         (x + z + 1) * (x + y + z + 1) * (z + 1) * (y + z) * xyz, None, 12, 1),
        ("1-7", "Section of G(2,6) by five hyperplanes",
         (x + y + z + 1) ** 2 * inv(1, 0, 0) + (x + y + z + 1) * (y + z + 1) * (z + 1) ** 2 * xyz,
         {"type": "grass", "k": 2, "n": 4, "degrees": [1, 1, 1, 1, 1]}, 14, 1),
        ("1-8", "Linear section of SGr(3,6) of codimension 3", (x + y + z + 1) * (x + 1) * (y + 1) * (z + 1) * xyz,
         None, 16, 1),
        ("1-9", "Linear section of the G2 Grassmannian of codimension 2",
         (x + y + z) * (x + x * z + x * y + x * y * z + z + y + y * z) * xyz, None, 18, 1),
        ("1-10", "Section of three copies of the second exterior power of U* on G(3,7)",
         (z + 1) * (x + y + 1) * (x * y + z) * xyz + x * y * inv(0, 0, 1) + z + 3, None, 22, 1),
        ("1-11", "Degree 6 hypersurface in P(1,1,1,2,3)", (x + y + 1) ** 6 * inv(1, 2, 1) + z,
         {"type": "wci", "weights": [1, 1, 1, 2, 3], "degrees": [6]}, 8, 2),
        ("1-12", "Degree 4 hypersurface in P(1,1,1,1,2)", (x + y + 1) ** 4 * xyz + z,
         {"type": "wci", "weights": [1, 1, 1, 1, 2], "degrees": [4]}, 16, 2),
        ("1-13", "Cubic threefold", (x + y + 1) ** 3 * xyz + z,
         {"type": "wci", "weights": [1] * 5, "degrees": [3]}, 24, 2),
        ("1-14", "Intersection of two quadrics in P^5", (x + 1) ** 2 * (y + 1) ** 2 * xyz + z,
         {"type": "wci", "weights": [1] * 6, "degrees": [2, 2]}, 32, 2),
        ("1-15", "Section of G(2,5) by three hyperplanes", x + y + z + inv(1, 0, 0) + inv(0, 1, 0) + inv(0, 0, 1) + x * y * z,
         {"type": "grass", "k": 2, "n": 3, "degrees": [1, 1, 1]}, 40, 2),
        ("1-16", "Smooth quadric threefold", (x + 1) ** 2 * xyz + y + z,
         {"type": "wci", "weights": [1] * 5, "degrees": [2]}, 54, 3),
        ("1-17", "Projective space P^3", x + y + z + xyz,
         {"type": "wci", "weights": [1] * 4, "degrees": []}, 64, 4),
    ]


def hyperelliptic_entries():
    return [
        ("2-1", "Complete intersection of types (1,1) and (0,6) in P^1 x P(1,1,1,2,3)",
         (x + y + 1) ** 6 * (z + 1) * inv(1, 2, 0) + inv(0, 0, 1), None, None, 1),
        ("2-2", "Hypersurface in a toric variety (double cover model)",
         (x + y + z + 1) ** 2 * inv(1, 0, 0) + (x + y + z + 1) ** 4 * inv(0, 1, 1), None, None, 1),
        ("2-3", "Complete intersection of types (1,1) and (0,4) in P^1 x P(1,1,1,1,2)",
         (x + y + 1) ** 4 * (z + 1) * inv(1, 1, 1) + z + 1,
         {"type": "toric", "rows": [[1, 1, 0, 0, 0, 0, 0], [0, 0, 1, 1, 1, 1, 2]], "hyper": [[1, 0], [1, 4]]}, None, 1),
        ("9-1", "P^1 x S_2 with S_2 the degree 2 del Pezzo surface",
         x + inv(1, 0, 0) + (y + z + 1) ** 4 * inv(0, 1, 1),
         {"type": "toric", "rows": [[1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 1, 2]], "hyper": [[0], [4]]}, None, 1),
        ("10-1", "P^1 x S_1 with S_1 the degree 1 del Pezzo surface",
         (x + y + 1) ** 6 * inv(1, 2, 0) + z + inv(0, 0, 1),
         {"type": "toric", "rows": [[1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 2, 3]], "hyper": [[0], [6]]}, None, 1),
    ]


# Entries whose Newton polytope carries a certificate within the default
# bound of four summands per facet.
MINKOWSKI = {"1-2", "1-4", "1-5", "1-6", "1-7", "1-8", "1-9", "1-10", "1-13", "1-14", "1-15", "1-16", "1-17"}

S7_TORIC = {"type": "toric", "rows": [[1, 0, 1, 0, 0], [1, 1, 0, 1, 0], [0, 1, 0, 0, 1]]}


def run_tlg(tlg, args, payload=None):
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        if payload is not None:
            json.dump(payload, f)
        path = f.name
    cmd = [tlg] + args + (["-i", path] if payload is not None else []) + ["--output", "json"]
    return json.loads(subprocess.run(cmd, check=True, capture_output=True, text=True).stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--tlg", default="build/tlg")
    ap.add_argument("--out", default="data/catalog.json")
    ap.add_argument("--prefix-order", type=int, default=10)
    args = ap.parse_args()

    entries = []

    def add(eid, desc, laurent, gen, degree, index, rho, extra=None):
        e = {"id": eid, "description": desc, "laurent": laurent, "generator": gen or {"type": "none"}}
        if gen is None:
            s = run_tlg(args.tlg, ["phi", "--order", str(args.prefix_order)], laurent)
            e["expected_series_prefix"] = {"order": s["order"], "coeffs": s["coeffs"], "provenance": "derived-regression"}
        if extra:
            e.update(extra)
        if eid in MINKOWSKI:
            e["check_minkowski"] = True
        if degree is not None:
            e["degree"] = degree
        e["index"] = index
        e["rho"] = rho
        entries.append(e)

    for eid, desc, p, gen, degree, index in table_entries():
        extra = {}
        if eid == "1-6":
            extra["polytope_notes"] = {"dual_vertices": [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1],
                                                         [-1, -1, 0], [0, 1, 1], [-1, -1, -1]]}
        add(eid, desc, laurent_json(p, X3), gen, degree, index, 1, extra)
    for eid, desc, p, gen, degree, index in hyperelliptic_entries():
        add(eid, desc, laurent_json(p, X3), gen, degree, index, int(eid.split("-")[0]) if eid != "2-2" else 2)

    for eid, desc, steps, mode in [
        ("S7-d1", "Degree 7 del Pezzo surface, toric script (0,-1),(1,1)", [[0, -1], [1, 1]], "toric"),
        ("S7-d2", "Degree 7 del Pezzo surface, surface script (0,-1),(1,-1)", [[0, -1], [1, -1]], "surface"),
    ]:
        f = run_tlg(args.tlg, ["build", "delpezzo", "--mode", mode, "--params-one"], {"base": "P2", "steps": steps})
        add(eid, desc, f, S7_TORIC, 7, 1, 3)

    for eid, degs in [("G36-1121", [1, 1, 2, 1]), ("G36-1112", [1, 1, 1, 2])]:
        f = run_tlg(args.tlg, ["build", "grass", "--n", "3", "--k", "3", "--degrees", ",".join(map(str, degs))])
        f.pop("explain", None)
        add(eid, "Complete intersection of degrees " + ",".join(map(str, degs)) + " in G(3,6)", f,
            {"type": "grass", "k": 3, "n": 3, "degrees": degs}, None, 1, 1)

    with open(args.out, "w") as out:
        json.dump(entries, out, indent=1)
        out.write("\n")


if __name__ == "__main__":
    main()
