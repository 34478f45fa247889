import pytest

from grassmann_lab import (
    all_maximal_cliques_bruteforce,
    build_graph,
    classify_maximal_cliques,
    dual_map_check,
    enumerate_subspaces,
    star,
    star_catalog,
    top,
    top_catalog,
    verify_clique_lemmas,
)
from grassmann_lab.config import BoundExceeded
from grassmann_lab.graph import bits
from grassmann_lab.linalg import stack_rank
from grassmann_lab.subspaces import contains
from oracles import bfs_distances, intersection_dim_by_enumeration


def test_vertex_counts(j242, j252, j342):
    assert j242.num_vertices == 35
    assert j252.num_vertices == 155
    assert j342.num_vertices == 130


def test_m_equal_one_is_complete(f2):
    G = build_graph(f2, 3, 1)
    assert G.num_vertices == 7
    assert all(G.degree(i) == 6 for i in range(7))


def test_regular_with_expected_degree(j242, j252, j342):
    for G, expected in ((j242, 18), (j252, 42), (j342, 48)):
        degrees = {G.degree(i) for i in range(G.num_vertices)}
        assert degrees == {expected}


def test_adjacency_iff_stacked_rank(j242, j342):
    # two independent implementations: vector counting vs Gaussian elimination
    for G in (j242, j342):
        for i in range(G.num_vertices):
            for j in range(i + 1, G.num_vertices):
                by_rank = (
                    stack_rank(G.vertices[i].basis, G.vertices[j].basis) == G.m + 1
                )
                assert G.adjacent(i, j) == by_rank


def test_adjacency_iff_enumerated_intersection(j242):
    for i in range(0, j242.num_vertices, 5):
        for j in range(i + 1, j242.num_vertices):
            d = intersection_dim_by_enumeration(j242.spec, j242.vertices[i], j242.vertices[j])
            assert j242.adjacent(i, j) == (d == j242.m - 1)
            assert j242.intersection_dim(i, j) == d


def test_distance_formula_equals_bfs(j242, j252, j342):
    for G in (j242, j252, j342):
        for src in range(G.num_vertices):
            dist = bfs_distances(G.adjacency, src)
            for v in range(G.num_vertices):
                assert G.distance(src, v) == dist[v]


def test_distance_basics(j242):
    assert j242.distance(0, 0) == 0
    some_neighbour = next(iter(bits(j242.adjacency[0])))
    assert j242.distance(0, some_neighbour) == 1


def test_star_and_top_sizes(f2, j242, j252, j342):
    for G, star_size, top_size in ((j242, 7, 7), (j252, 15, 7), (j342, 13, 13)):
        P = enumerate_subspaces(G.spec, G.n, G.m - 1)[0]
        Q = enumerate_subspaces(G.spec, G.n, G.m + 1)[0]
        assert star(G, P).size == star_size
        assert top(G, Q).size == top_size
    # n > 2m makes stars strictly larger; n = 2m makes sizes equal
    assert star(j252, enumerate_subspaces(f2, 5, 1)[0]).size > 7


def test_star_members_contain_centre(j242):
    P = enumerate_subspaces(j242.spec, 4, 1)[3]
    s = star(j242, P)
    members = {v for v in range(35) if contains(j242.vertices[v], P)}
    assert set(s.members) == members
    for i in s.members:
        for j in s.members:
            if i < j:
                assert j242.adjacent(i, j)


def test_top_members_inside_centre(j242):
    Q = enumerate_subspaces(j242.spec, 4, 3)[2]
    t = top(j242, Q)
    members = {v for v in range(35) if contains(Q, j242.vertices[v])}
    assert set(t.members) == members
    for i in t.members:
        for j in t.members:
            if i < j:
                assert j242.adjacent(i, j)


def test_star_top_wrong_centre_dim(j242):
    with pytest.raises(ValueError):
        star(j242, j242.vertices[0])
    with pytest.raises(ValueError):
        top(j242, j242.vertices[0])


def test_bruteforce_cliques_j242(j242):
    cliques = all_maximal_cliques_bruteforce(j242)
    census = classify_maximal_cliques(j242, cliques)
    assert census.total == 30
    assert census.star_count == 15 and census.top_count == 15
    assert census.star_size == 7 and census.top_size == 7
    assert census.unmatched == []
    for members in cliques:
        assert len(members) == 7
        # really a clique, and maximal: nobody outside is adjacent to all
        for a in members:
            for b in members:
                if a < b:
                    assert j242.adjacent(a, b)
        mask = 0
        for v in members:
            mask |= 1 << v
        for outside in range(35):
            if not mask >> outside & 1:
                assert (j242.adjacency[outside] & mask) != mask


def test_bruteforce_cliques_j252(j252):
    census = classify_maximal_cliques(j252)
    assert census.total == 186
    assert census.star_count == 31 and census.star_size == 15
    assert census.top_count == 155 and census.top_size == 7
    assert census.unmatched == []


def test_bruteforce_cliques_j342(j342):
    census = classify_maximal_cliques(j342)
    assert census.total == 80
    assert census.star_count == 40 and census.top_count == 40
    assert census.star_size == 13 and census.top_size == 13
    assert census.unmatched == []


def test_bruteforce_bound(j242):
    with pytest.raises(BoundExceeded):
        all_maximal_cliques_bruteforce(j242, bound=10)


def test_clique_lemmas_pass(j242, j252, j342):
    for G in (j242, j252, j342):
        report = verify_clique_lemmas(G)
        assert report.ok, report.counterexamples


def test_incident_star_top_sizes(j242, j342):
    for G in (j242, j342):
        q = G.spec.q
        stars = star_catalog(G)
        tops = top_catalog(G)
        seen = 0
        for s in stars:
            for t in tops:
                common = s.bitset & t.bitset
                if common:
                    assert common.bit_count() == q + 1
                    seen += 1
        assert seen > 0


def test_dual_map_on_j242(j242):
    report = dual_map_check(j242)
    assert report.ok, report.counterexamples


def test_dual_map_requires_n_twice_m(j252):
    with pytest.raises(ValueError, match="duality requires n = 2m"):
        dual_map_check(j252)


def test_build_bound(f2):
    with pytest.raises(BoundExceeded, match="enumeration too large"):
        build_graph(f2, 10, 5)


def test_build_rejects_big_fields():
    from grassmann_lab import make_field

    f25 = make_field(5, 2)
    with pytest.raises(BoundExceeded):
        build_graph(f25, 3, 1, max_q=16)


def test_catalog_counts(j252):
    assert len(star_catalog(j252)) == 31
    assert len(top_catalog(j252)) == 155


def test_extension_field_graph(f4):
    # J_4(4,2): 357 vertices over GF(4), n = 2m so duality applies
    G = build_graph(f4, 4, 2)
    assert G.num_vertices == 357
    assert {G.degree(i) for i in range(357)} == {4 * 5 * 5}
    P = enumerate_subspaces(f4, 4, 1)[0]
    Q = enumerate_subspaces(f4, 4, 3)[0]
    assert star(G, P).size == top(G, Q).size == 21
    assert dual_map_check(G).ok


def test_duality_on_complete_graph(f2):
    # n = 2m with m = 1: the complement map swaps the one star with the
    # one top, both being the whole triangle
    G = build_graph(f2, 2, 1)
    report = dual_map_check(G)
    assert report.ok, report.counterexamples
