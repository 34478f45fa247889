"""Grassmann graphs: construction, maximal cliques, and structure checks.

Vertices are the m-dimensional subspaces of GF(q)^n in canonical
enumeration order; two are adjacent when their intersection has
dimension m-1.  Adjacency is stored as one int bitset per vertex, which
keeps pair queries, clique enumeration, and the exhaustive lemma checks
cheap at desk scale.

The maximal cliques of these graphs are exactly the stars (all m-spaces
over a fixed (m-1)-space) and the tops (all m-spaces inside a fixed
(m+1)-space); the operations here both construct those families directly
and re-discover them by brute force for verification.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .config import BUILD_BOUND, CLIQUE_ENUM_BOUND, MAX_GRAPH_FIELD, BoundExceeded
from .field import FieldSpec
from .linalg import stack_rank
from .qpoly import gaussian_binomial_int
from .subspaces import (
    Subspace,
    dual_complement,
    enumerate_subspaces,
    full_subspace,
    intersect,
    join,
    subspaces_between,
    vector_mask,
    zero_subspace,
)


def bits(x: int):
    """Indices of set bits, ascending."""
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


@dataclass(frozen=True, eq=False)
class GrassmannGraph:
    spec: FieldSpec
    n: int
    m: int
    vertices: tuple[Subspace, ...]
    adjacency: tuple[int, ...]
    masks: tuple[int, ...]
    index: dict

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def vertex_id(self, S: Subspace) -> int:
        return self.index[S.basis.rows]

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.adjacency[i].bit_count()

    def intersection_dim(self, i: int, j: int) -> int:
        count = (self.masks[i] & self.masks[j]).bit_count()
        d = 0
        power = 1
        while power < count:
            power *= self.spec.q
            d += 1
        if power != count:
            raise AssertionError("mask intersection is not a subspace size")
        return d

    def distance(self, i: int, j: int) -> int:
        """m - dim(X intersect Y); equals the path distance."""
        return self.m - self.intersection_dim(i, j)


def build_graph(
    spec: FieldSpec,
    n: int,
    m: int,
    max_vertices: int = BUILD_BOUND,
    max_q: int = MAX_GRAPH_FIELD,
) -> GrassmannGraph:
    """Build J_q(n, m) with adjacency decided by intersection dimension.

    Each vertex carries the bitmask of its member vectors; a pair is
    adjacent iff the AND of their masks has exactly q^(m-1) elements.
    """
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= m < n, got m={m}, n={n}")
    if spec.q > max_q:
        raise BoundExceeded(f"field too large for graph building: q={spec.q} > {max_q}")
    count = gaussian_binomial_int(n, m, spec.q)
    if count > max_vertices:
        raise BoundExceeded(
            f"enumeration too large: J_{spec.q}({n},{m}) has {count} vertices > {max_vertices}"
        )
    vertices = tuple(enumerate_subspaces(spec, n, m))
    masks = [vector_mask(v) for v in vertices]
    thr = spec.q ** (m - 1)
    adjacency = [0] * count
    for i in range(count):
        mi = masks[i]
        ai = adjacency[i]
        for j in range(i + 1, count):
            if (mi & masks[j]).bit_count() == thr:
                ai |= 1 << j
                adjacency[j] |= 1 << i
        adjacency[i] = ai
    index = {v.basis.rows: i for i, v in enumerate(vertices)}
    return GrassmannGraph(spec, n, m, vertices, tuple(adjacency), tuple(masks), index)


@dataclass(frozen=True)
class MaximalClique:
    kind: Literal["star", "top"]
    center: Subspace
    members: tuple[int, ...]
    bitset: int

    @property
    def size(self) -> int:
        return len(self.members)


def star(G: GrassmannGraph, P: Subspace) -> MaximalClique:
    """All vertices containing the (m-1)-dimensional centre P."""
    if P.dim != G.m - 1:
        raise ValueError(f"star centre must have dimension {G.m - 1}, got {P.dim}")
    members = tuple(
        sorted(G.vertex_id(S) for S in subspaces_between(P, full_subspace(G.spec, G.n), G.m))
    )
    return MaximalClique("star", P, members, _to_bitset(members))


def top(G: GrassmannGraph, Q: Subspace) -> MaximalClique:
    """All vertices contained in the (m+1)-dimensional centre Q."""
    if Q.dim != G.m + 1:
        raise ValueError(f"top centre must have dimension {G.m + 1}, got {Q.dim}")
    members = tuple(
        sorted(G.vertex_id(S) for S in subspaces_between(zero_subspace(G.spec, G.n), Q, G.m))
    )
    return MaximalClique("top", Q, members, _to_bitset(members))


def _to_bitset(ids) -> int:
    out = 0
    for i in ids:
        out |= 1 << i
    return out


def star_catalog(G: GrassmannGraph) -> list[MaximalClique]:
    return [star(G, P) for P in enumerate_subspaces(G.spec, G.n, G.m - 1)]


def top_catalog(G: GrassmannGraph) -> list[MaximalClique]:
    return [top(G, Q) for Q in enumerate_subspaces(G.spec, G.n, G.m + 1)]


def all_maximal_cliques_bruteforce(
    G: GrassmannGraph, bound: int = CLIQUE_ENUM_BOUND
) -> list[tuple[int, ...]]:
    """Every maximal clique, by pivoting Bron-Kerbosch over the bitsets.

    Vertices are seeded in degeneracy order; results are returned as
    sorted member tuples in a deterministic order.
    """
    nv = G.num_vertices
    if nv > bound:
        raise BoundExceeded(f"graph too large for clique enumeration: {nv} > {bound}")
    adj = G.adjacency
    order = _degeneracy_order(adj, nv)
    out: list[tuple[int, ...]] = []

    def expand(R: list[int], P: int, X: int):
        if not P and not X:
            out.append(tuple(sorted(R)))
            return
        # pivot with the most candidates among P | X
        best_u, best_cnt = -1, -1
        pux = P | X
        for u in bits(pux):
            c = (P & adj[u]).bit_count()
            if c > best_cnt:
                best_u, best_cnt = u, c
        for v in bits(P & ~adj[best_u]):
            vb = 1 << v
            R.append(v)
            expand(R, P & adj[v], X & adj[v])
            R.pop()
            P ^= vb
            X |= vb

    P = (1 << nv) - 1
    X = 0
    for v in order:
        vb = 1 << v
        expand([v], P & adj[v], X & adj[v])
        P ^= vb
        X |= vb
    out.sort()
    return out


def _degeneracy_order(adj, nv: int) -> list[int]:
    remaining = (1 << nv) - 1
    degs = [adj[i].bit_count() for i in range(nv)]
    order = []
    for _ in range(nv):
        v = min(bits(remaining), key=lambda u: (degs[u], u))
        order.append(v)
        remaining ^= 1 << v
        for u in bits(adj[v] & remaining):
            degs[u] -= 1
    return order


@dataclass
class CliqueCensus:
    """Brute-force maximal cliques matched against the star/top catalog."""

    total: int
    star_count: int
    top_count: int
    star_size: int | None
    top_size: int | None
    unmatched: list[tuple[int, ...]]

    @property
    def ok(self) -> bool:
        return not self.unmatched


def classify_maximal_cliques(
    G: GrassmannGraph, cliques: list[tuple[int, ...]] | None = None
) -> CliqueCensus:
    if cliques is None:
        cliques = all_maximal_cliques_bruteforce(G)
    catalog: dict[int, str] = {}
    star_size = top_size = None
    for c in star_catalog(G):
        catalog[c.bitset] = "star"
        star_size = c.size
    if G.m + 1 <= G.n:
        for c in top_catalog(G):
            catalog[c.bitset] = "top"
            top_size = c.size
    stars = tops = 0
    unmatched = []
    for members in cliques:
        kind = catalog.get(_to_bitset(members))
        if kind == "star":
            stars += 1
        elif kind == "top":
            tops += 1
        else:
            unmatched.append(members)
    return CliqueCensus(len(cliques), stars, tops, star_size, top_size, unmatched)


@dataclass
class LemmaReport:
    """Exhaustive checks of the star/top intersection structure.

    star_top_ok:   a star and top meet iff the star centre sits inside
                   the top centre, and then in exactly q+1 vertices.
    pairwise_ok:   two distinct cliques of the same kind share at most
                   one vertex.
    star_meet_ok:  distinct stars meet iff their centres A, B intersect
                   in dimension m-2, and then exactly in {A v B}.
    top_meet_ok:   distinct tops meet iff their centres P, Q intersect
                   in dimension m, and then exactly in {P intersect Q}.
    """

    q: int
    star_top_ok: bool = True
    pairwise_ok: bool = True
    star_meet_ok: bool = True
    top_meet_ok: bool = True
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.star_top_ok and self.pairwise_ok and self.star_meet_ok and self.top_meet_ok


def verify_clique_lemmas(G: GrassmannGraph) -> LemmaReport:
    """Check the four structural facts over all relevant clique pairs."""
    report = LemmaReport(q=G.spec.q)
    stars = star_catalog(G)
    tops = top_catalog(G)
    q = G.spec.q
    m = G.m

    from .subspaces import contains

    for s in stars:
        for t in tops:
            common = (s.bitset & t.bitset).bit_count()
            incident = contains(t.center, s.center)
            if (common > 0) != incident or (incident and common != q + 1):
                report.star_top_ok = False
                report.counterexamples.append(
                    {"check": "star-top", "star": s.members, "top": t.members, "common": common}
                )

    for fam_name, fam in (("stars", stars), ("tops", tops)):
        for i in range(len(fam)):
            bi = fam[i].bitset
            for j in range(i + 1, len(fam)):
                c = (bi & fam[j].bitset).bit_count()
                if c > 1:
                    report.pairwise_ok = False
                    report.counterexamples.append(
                        {"check": "pairwise", "family": fam_name, "pair": (i, j), "common": c}
                    )

    for i in range(len(stars)):
        A = stars[i].center
        bi = stars[i].bitset
        for j in range(i + 1, len(stars)):
            B = stars[j].center
            meet = bi & stars[j].bitset
            dim_ab = A.dim + B.dim - stack_rank(A.basis, B.basis)
            expect_meet = dim_ab == m - 2
            ok = (meet != 0) == expect_meet
            if ok and meet:
                ok = meet == 1 << G.vertex_id(join(A, B))
            if not ok:
                report.star_meet_ok = False
                report.counterexamples.append(
                    {"check": "star-meet", "pair": (i, j), "dim": dim_ab}
                )

    for i in range(len(tops)):
        P = tops[i].center
        bi = tops[i].bitset
        for j in range(i + 1, len(tops)):
            Qc = tops[j].center
            meet = bi & tops[j].bitset
            dim_pq = P.dim + Qc.dim - stack_rank(P.basis, Qc.basis)
            expect_meet = dim_pq == m
            ok = (meet != 0) == expect_meet
            if ok and meet:
                ok = meet == 1 << G.vertex_id(intersect(P, Qc))
            if not ok:
                report.top_meet_ok = False
                report.counterexamples.append({"check": "top-meet", "pair": (i, j), "dim": dim_pq})

    return report


@dataclass
class DualReport:
    """The orthogonal-complement map on a J_q(2m, m).

    It should be an adjacency-preserving involution on the vertices that
    carries every star onto the top over the dual centre and conversely.
    """

    bijection: bool = True
    involution: bool = True
    preserves_adjacency: bool = True
    stars_to_tops: bool = True
    tops_to_stars: bool = True
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.bijection
            and self.involution
            and self.preserves_adjacency
            and self.stars_to_tops
            and self.tops_to_stars
        )


def dual_permutation(G: GrassmannGraph) -> list[int]:
    """Vertex permutation induced by the orthogonal complement."""
    if G.n != 2 * G.m:
        raise ValueError("duality requires n = 2m")
    return [G.vertex_id(dual_complement(v)) for v in G.vertices]


def dual_map_check(G: GrassmannGraph) -> DualReport:
    report = DualReport()
    perm = dual_permutation(G)
    nv = G.num_vertices

    if sorted(perm) != list(range(nv)):
        report.bijection = False
        report.counterexamples.append({"check": "bijection"})
        return report
    for i in range(nv):
        if perm[perm[i]] != i:
            report.involution = False
            report.counterexamples.append({"check": "involution", "vertex": i})

    adj = G.adjacency
    for i in range(nv):
        image = _to_bitset(perm[j] for j in bits(adj[i]))
        if image != adj[perm[i]]:
            report.preserves_adjacency = False
            report.counterexamples.append({"check": "adjacency", "vertex": i})

    for P in enumerate_subspaces(G.spec, G.n, G.m - 1):
        s = star(G, P)
        image = tuple(sorted(perm[v] for v in s.members))
        t = top(G, dual_complement(P))
        if image != t.members:
            report.stars_to_tops = False
            report.counterexamples.append({"check": "star-to-top", "center": P.basis.rows})
    for Q in enumerate_subspaces(G.spec, G.n, G.m + 1):
        t = top(G, Q)
        image = tuple(sorted(perm[v] for v in t.members))
        s = star(G, dual_complement(Q))
        if image != s.members:
            report.tops_to_stars = False
            report.counterexamples.append({"check": "top-to-star", "center": Q.basis.rows})

    return report
