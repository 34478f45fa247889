"""The J_2(4,2) fixture: 35 labelled matrices and 7 independent sets.

File format: one block per matrix (a label line ``A<k>`` followed by the
matrix rows as digit strings, then a blank line), and after the blocks one
line per set, ``L<k>: A.. A.. ...``.  The shipped file lists the vertices
of J_2(4,2) by 2x4 matrix representatives together with a partition of
the labels into 7 independent sets, which certifies a 7-colouring.

Some fixture matrices are not in reduced echelon form; verification
canonicalizes them, tracking identity by label alongside the vertex id.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from importlib import resources
from pathlib import Path

from .field import FieldSpec
from .graph import GrassmannGraph
from .linalg import matrix, stack_rank
from .subspaces import Subspace, canonicalize


@dataclass(frozen=True)
class J242Fixture:
    matrices: dict  # label -> tuple of digit-string rows
    sets: dict  # set name -> tuple of labels


def default_fixture_path() -> Path:
    return Path(str(resources.files("grassmann_lab").joinpath("data/j2_4_2_fixture.txt")))


def load_fixture(path: str | Path | None = None) -> J242Fixture:
    text = Path(path if path is not None else default_fixture_path()).read_text()
    matrices: dict[str, tuple[str, ...]] = {}
    sets: dict[str, tuple[str, ...]] = {}
    label = None
    rows: list[str] = []
    for line in text.splitlines() + [""]:
        line = line.strip()
        if not line:
            if label is not None:
                matrices[label] = tuple(rows)
                label, rows = None, []
            continue
        if line.startswith("L") and ":" in line:
            name, _, members = line.partition(":")
            sets[name.strip()] = tuple(members.split())
        elif label is None:
            label = line
        else:
            rows.append(line)
    if not matrices or not sets:
        raise ValueError("fixture file has no matrix blocks or no set lines")
    return J242Fixture(matrices, sets)


def fixture_subspace(spec: FieldSpec, rows) -> Subspace:
    return canonicalize(matrix(spec, [[int(ch) for ch in r] for r in rows]))


@dataclass
class FixtureReport:
    """Result of checking a fixture against its graph.

    distinct_ok:  the labelled matrices canonicalize to pairwise distinct
                  vertices that exhaust the vertex set.
    partition_ok: the sets partition the labels.
    independent_ok: no set contains an adjacent pair.
    When everything holds the number of sets is an upper bound for the
    chromatic number.
    """

    distinct_ok: bool = True
    partition_ok: bool = True
    independent_ok: bool = True
    chi_upper: int | None = None
    violations: list[dict] = dataclass_field(default_factory=list)
    label_to_vertex: dict = dataclass_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.distinct_ok and self.partition_ok and self.independent_ok


def verify_fixture_partition(G: GrassmannGraph, fx: J242Fixture) -> FixtureReport:
    """Check coverage, partition, and independence of the fixture sets."""
    report = FixtureReport()
    spec = G.spec

    subspaces = {label: fixture_subspace(spec, rows) for label, rows in fx.matrices.items()}
    ids = {}
    for label, S in subspaces.items():
        if S.dim != G.m or S.ambient != G.n:
            report.distinct_ok = False
            report.violations.append({"check": "vertex", "label": label, "dim": S.dim})
            continue
        ids[label] = G.vertex_id(S)
    report.label_to_vertex = dict(sorted(ids.items()))
    if len(set(ids.values())) != G.num_vertices or len(ids) != len(fx.matrices):
        report.distinct_ok = False
        report.violations.append(
            {
                "check": "coverage",
                "distinct_vertices": len(set(ids.values())),
                "expected": G.num_vertices,
            }
        )

    seen: dict[str, str] = {}
    for name, labels in fx.sets.items():
        for label in labels:
            if label in seen:
                report.partition_ok = False
                report.violations.append(
                    {"check": "partition", "label": label, "sets": (seen[label], name)}
                )
            seen[label] = name
            if label not in fx.matrices:
                report.partition_ok = False
                report.violations.append({"check": "partition", "label": label, "sets": (name,)})
    missing = sorted(set(fx.matrices) - set(seen))
    if missing:
        report.partition_ok = False
        report.violations.append({"check": "partition-coverage", "missing": missing})

    for name in sorted(fx.sets):
        labels = [l for l in fx.sets[name] if l in ids]
        for a in range(len(labels)):
            for b in range(a + 1, len(labels)):
                la, lb = labels[a], labels[b]
                if G.adjacent(ids[la], ids[lb]):
                    report.independent_ok = False
                    report.violations.append(
                        {
                            "check": "independence",
                            "set": name,
                            "pair": (la, lb),
                            "stacked_rank": stack_rank(
                                subspaces[la].basis, subspaces[lb].basis
                            ),
                        }
                    )

    if report.ok:
        report.chi_upper = len(fx.sets)
    return report


def fixture_colouring(G: GrassmannGraph, fx: J242Fixture) -> list[int]:
    """Colour table induced by the fixture sets (set k -> colour k)."""
    report = verify_fixture_partition(G, fx)
    if not report.ok:
        raise ValueError("fixture does not verify; no colouring induced")
    colours = [-1] * G.num_vertices
    for c, name in enumerate(sorted(fx.sets, key=lambda s: (len(s), s))):
        for label in fx.sets[name]:
            colours[report.label_to_vertex[label]] = c
    return colours
