"""Serialization of graphs and check reports: JSON, DOT, and text.

Matrices are rendered as arrays of digit strings (one string per row,
0-9 then a-z per entry), which keeps dumps diffable and language
neutral.  Reports are plain dicts built in a fixed order, so identical
configurations always serialize to identical bytes.
"""

from __future__ import annotations

from fractions import Fraction

from .coreness import CorenessReport
from .field import FieldSpec, make_field
from .fixture import FixtureReport
from .graph import DualReport, GrassmannGraph, LemmaReport, bits
from .linalg import matrix
from .qpoly import HReport, IntPolynomial, ScanReport
from .subspaces import Subspace, canonicalize

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def digit(x: int) -> str:
    if x >= len(_DIGITS):
        raise ValueError(f"element {x} too large for single-character rendering")
    return _DIGITS[x]


def matrix_digits(S: Subspace) -> list[str]:
    return ["".join(digit(x) for x in row) for row in S.basis.rows]


def parse_matrix_digits(spec: FieldSpec, rows: list[str]) -> Subspace:
    entries = [[_DIGITS.index(ch) for ch in row] for row in rows]
    return canonicalize(matrix(spec, entries, len(rows[0]) if rows else 1))


def params_dict(G: GrassmannGraph) -> dict:
    return {
        "q": G.spec.q,
        "p": G.spec.p,
        "e": G.spec.e,
        "n": G.n,
        "m": G.m,
        "vertices": G.num_vertices,
    }


def graph_to_json_dict(G: GrassmannGraph) -> dict:
    edges = []
    for i in range(G.num_vertices):
        for j in bits(G.adjacency[i] >> (i + 1) << (i + 1)):
            edges.append([i, j])
    return {
        "params": params_dict(G),
        "vertices": [{"id": i, "matrix": matrix_digits(v)} for i, v in enumerate(G.vertices)],
        "edges": edges,
    }


def graph_from_json_dict(data: dict) -> GrassmannGraph:
    """Rebuild a graph from a dump; adjacency comes from the edge list."""
    from .graph import GrassmannGraph as GG

    p, e, n, m = (data["params"][k] for k in ("p", "e", "n", "m"))
    spec = make_field(p, e)
    vertices = tuple(parse_matrix_digits(spec, v["matrix"]) for v in data["vertices"])
    adjacency = [0] * len(vertices)
    for i, j in data["edges"]:
        adjacency[i] |= 1 << j
        adjacency[j] |= 1 << i
    from .subspaces import vector_mask

    index = {v.basis.rows: i for i, v in enumerate(vertices)}
    return GG(spec, n, m, vertices, tuple(adjacency), tuple(vector_mask(v) for v in vertices), index)


def graph_to_dot(G: GrassmannGraph) -> str:
    lines = ["graph grassmann {"]
    for i, v in enumerate(G.vertices):
        rows = "/".join(matrix_digits(v))
        lines.append(f'  v{i} [label="v{i}", tooltip="{rows}"];')
    for i in range(G.num_vertices):
        for j in bits(G.adjacency[i] >> (i + 1) << (i + 1)):
            lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_text(G: GrassmannGraph) -> str:
    lines = [
        f"J_{G.spec.q}({G.n},{G.m}): {G.num_vertices} vertices, "
        f"{sum(a.bit_count() for a in G.adjacency) // 2} edges, degree {G.degree(0)}"
    ]
    for i, v in enumerate(G.vertices):
        lines.append(f"  v{i}: {' '.join(matrix_digits(v))}")
    return "\n".join(lines) + "\n"


def lemma_report_dict(rep: LemmaReport) -> dict:
    return {
        "q": rep.q,
        "star_top_intersection": rep.star_top_ok,
        "pairwise_at_most_one": rep.pairwise_ok,
        "star_meet": rep.star_meet_ok,
        "top_meet": rep.top_meet_ok,
        "ok": rep.ok,
        "counterexamples": rep.counterexamples,
    }


def dual_report_dict(rep: DualReport | None) -> dict:
    if rep is None:
        return {"applicable": False, "note": "requires n = 2m"}
    return {
        "applicable": True,
        "bijection": rep.bijection,
        "involution": rep.involution,
        "preserves_adjacency": rep.preserves_adjacency,
        "stars_to_tops": rep.stars_to_tops,
        "tops_to_stars": rep.tops_to_stars,
        "ok": rep.ok,
        "counterexamples": rep.counterexamples,
    }


def census_dict(census) -> dict:
    return {
        "total_maximal_cliques": census.total,
        "stars": census.star_count,
        "tops": census.top_count,
        "star_size": census.star_size,
        "top_size": census.top_size,
        "unmatched": [list(c) for c in census.unmatched],
        "ok": census.ok,
    }


def _value_or_bounds(v):
    if v is None:
        return None
    if isinstance(v, tuple):
        return {"lower": v[0], "upper": v[1]}
    return v


def coreness_report_dict(rep: CorenessReport) -> dict:
    value = rep.integrality_value
    if isinstance(value, Fraction):
        integrality = {
            "is_integer": False,
            "numerator": value.numerator,
            "denominator": value.denominator,
            "value": f"{value.numerator}/{value.denominator}",
        }
    elif value is None:
        integrality = None
    else:
        integrality = {"is_integer": True, "value": value}
    out = {
        "params": {"q": rep.q, "n": rep.n, "m": rep.m, "vertices": rep.num_vertices},
        "verdict": rep.verdict,
        "omega": rep.omega,
        "alpha": _value_or_bounds(rep.alpha),
        "chi": _value_or_bounds(rep.chi),
        "integrality": integrality,
        "evidence": rep.evidence,
    }
    if rep.witness is not None:
        out["witness"] = {
            "map": list(rep.witness.mapping),
            "classification": rep.witness_class,
            "image_size": len(rep.witness.image()),
            "injective": rep.witness.is_injective(),
        }
    return out


def fixture_report_dict(rep: FixtureReport) -> dict:
    return {
        "distinct_and_covering": rep.distinct_ok,
        "partition": rep.partition_ok,
        "independent_sets": rep.independent_ok,
        "ok": rep.ok,
        "chi_upper": rep.chi_upper,
        "violations": rep.violations,
        "label_to_vertex": rep.label_to_vertex,
    }


def poly_dict(p: IntPolynomial) -> dict:
    return {"coeffs": list(p.coeffs), "text": str(p)}


def h_report_dict(rep: HReport) -> dict:
    return {
        "n": rep.n,
        "m": rep.m,
        "gcd": rep.gcd_value,
        "applicable": rep.applicable,
        "exponents": {str(t): e for t, e in sorted(rep.exponents.exponents.items())},
        "f": poly_dict(rep.f),
        "g": poly_dict(rep.g),
        "f1": poly_dict(rep.f1),
        "r": poly_dict(rep.r),
    }


def scan_report_dict(rep: ScanReport) -> dict:
    return {
        "n": rep.n,
        "m": rep.m,
        "q_max": rep.q_max,
        "gcd": rep.gcd_value,
        "applicable": rep.applicable,
        "largest_integer_q": rep.largest_integer_q,
        "entries": [
            {
                "q": e.q,
                "is_integer": e.is_integer,
                "value": str(e.numerator) if e.is_integer else f"{e.numerator}/{e.denominator}",
            }
            for e in rep.entries
        ],
    }
