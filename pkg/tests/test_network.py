import json
import random

import networkx as nx
import pytest

from ejpan import Generator, build
from ejpan.eisenstein import UNIT_OFFSETS, EJInt, congruent, norm
from ejpan.errors import FormulaGap, GeneratorTooSmall
from ejpan.network import (
    algebraic_distance,
    common_neighbors,
    distance,
    distance_profile,
    distance_profile_formula,
    eccentricity,
    is_wraparound,
    lemma_common_neighbors,
    neighbors,
    relocate,
    to_dot,
    to_json_dict,
    translate,
)
from ejpan.panconnectivity import validate_path
from ejpan.path import Path

from .conftest import node

DENSE = [(2, 3), (3, 4), (4, 5), (5, 6)]


def as_nx(net):
    G = nx.Graph()
    G.add_nodes_from(range(net.n))
    G.add_edges_from(net.edges())
    return G


def congruence_graph(g):
    """Adjacency straight from the definition: beta ~ gamma iff
    beta - gamma is congruent to a unit, over a brute-force residue list."""
    reps = []
    for x in range(-6, 7):
        for y in range(-6, 7):
            p = EJInt(x, y)
            if not any(congruent(p, r, g) for r in reps):
                reps.append(p)
    G = nx.Graph()
    G.add_nodes_from(range(len(reps)))
    for i, p in enumerate(reps):
        for j, q in enumerate(reps):
            if i < j and any(congruent(p - q, u, g) for u in UNIT_OFFSETS):
                G.add_edge(i, j)
    return G


@pytest.mark.parametrize("a, b", [(1, 2), (2, 2), (2, 3), (3, 4)])
def test_build_isomorphic_to_definition(a, b):
    g = Generator(a, b)
    net = build(g)
    ref = congruence_graph(g)
    assert ref.number_of_nodes() == net.n == g.norm
    assert nx.is_isomorphic(ref, as_nx(net))


def test_build_ej23(ej23):
    assert ej23.n == 19
    assert ej23.nodes[0] == EJInt(0, 0)
    assert all(len(set(row)) == 6 for row in ej23.adjacency)


def test_build_k7(k7):
    assert k7.n == 7
    G = as_nx(k7)
    assert G.number_of_edges() == 21
    assert nx.is_isomorphic(G, nx.complete_graph(7))


def test_build_rejects_small():
    with pytest.raises(GeneratorTooSmall):
        build(Generator(1, 1))
    with pytest.raises(GeneratorTooSmall):
        build(Generator(0, 2))


@pytest.mark.parametrize("a, b", DENSE + [(1, 2), (2, 2), (0, 3), (1, 4), (3, 3)])
def test_structure(a, b):
    net = build(Generator(a, b))
    assert net.n == a * a + a * b + b * b
    assert list(net.nodes) == sorted(net.nodes, key=lambda p: (norm(p), p.x, p.y))
    for i, row in enumerate(net.adjacency):
        assert len(set(row)) == 6 and i not in row
        for j in row:
            assert i in net.adjacency[j]


def test_neighbors_of_rho(ej23):
    rho = node(ej23, 0, 1)
    got = {ej23.nodes[v] for v in neighbors(ej23, rho)}
    assert {EJInt(1, 0), EJInt(0, 0), EJInt(1, 1)} <= got
    assert len(got) == 6


def test_neighbors_k7(k7):
    for v in range(7):
        assert sorted(neighbors(k7, v)) == [u for u in range(7) if u != v]


def test_common_neighbors_example(ej23):
    rho, one = node(ej23, 0, 1), node(ej23, 1, 0)
    assert set(common_neighbors(ej23, rho, one)) == {node(ej23, 1, 1), node(ej23, 0, 0)}


def test_common_neighbors_k7(k7):
    assert len(common_neighbors(k7, 0, 1)) == 5


def test_common_neighbors_non_adjacent(ej34):
    far = max(range(ej34.n), key=lambda v: distance(ej34, 0, v))
    assert common_neighbors(ej34, 0, far) == []


@pytest.mark.parametrize("fixture", ["ej23", "ej34"])
def test_lemma_pair_is_the_intersection(fixture, request):
    net = request.getfixturevalue(fixture)
    for u in range(net.n):
        for v in net.adjacency[u]:
            assert set(lemma_common_neighbors(net, u, v)) == set(common_neighbors(net, u, v))


def test_lemma_pair_in_intersection_degenerate(k7):
    for u in range(7):
        for v in k7.adjacency[u]:
            assert set(lemma_common_neighbors(k7, u, v)) <= set(common_neighbors(k7, u, v))


@pytest.mark.parametrize("a, b", [(2, 3), (3, 4), (2, 2), (1, 2)])
def test_distances_match_networkx_and_algebra(a, b):
    net = build(Generator(a, b))
    ref = dict(nx.all_pairs_shortest_path_length(as_nx(net)))
    for u in range(net.n):
        for v in range(net.n):
            assert distance(net, u, v) == ref[u][v]
            assert algebraic_distance(net, u, v) == ref[u][v]


def test_distance_examples(ej23):
    rho, one = node(ej23, 0, 1), node(ej23, 1, 0)
    assert distance(ej23, rho, rho) == 0
    assert distance(ej23, rho, one) == 1
    assert max(distance(ej23, u, v) for u in range(19) for v in range(19)) == 2


def test_distance_symmetry_and_triangle(ej34):
    rng = random.Random(7)
    for _ in range(300):
        u, v, w = (rng.randrange(ej34.n) for _ in range(3))
        assert distance(ej34, u, v) == distance(ej34, v, u)
        assert distance(ej34, u, w) <= distance(ej34, u, v) + distance(ej34, v, w)


@pytest.mark.parametrize("a, b", DENSE)
def test_diameter_formula(a, b):
    net = build(Generator(a, b))
    assert nx.diameter(as_nx(net)) == eccentricity(net) == (a + 2 * b) // 3


def test_diameter_formula_survey():
    # the closed form holds well beyond dense generators
    for b in range(1, 10):
        for a in range(b + 1):
            g = Generator(a, b)
            if g.norm >= 7:
                assert eccentricity(build(g)) == g.diameter, (a, b)


def test_profile_examples(ej23):
    assert distance_profile(ej23).w == (1, 6, 12)
    assert distance_profile_formula(Generator(2, 3)).w == (1, 6, 12)
    assert distance_profile(build(Generator(3, 4))).total == 37


@pytest.mark.parametrize("a, b", [(2, 3), (3, 4), (4, 5), (5, 6)])
def test_profile_formula_matches_bfs(a, b):
    net = build(Generator(a, b))
    p = distance_profile(net)
    assert distance_profile_formula(net.generator) == p
    assert p.w[0] == 1 and p.total == net.n


def test_profile_formula_integer_t_branch():
    # t = (2 + 2) / 2 = 2 = k: remainder branch N - R
    assert distance_profile_formula(Generator(2, 2)).w == (1, 6, 5)
    assert distance_profile(build(Generator(2, 2))).w == (1, 6, 5)


def test_profile_formula_gap_reported():
    # k = 3 > t = 2.5 and 5 != 0 (mod 3): no branch covers s = 3
    with pytest.raises(FormulaGap):
        distance_profile_formula(Generator(0, 5))


def test_profile_formula_never_wrong():
    for b in range(1, 10):
        for a in range(b + 1):
            g = Generator(a, b)
            if g.norm < 7:
                continue
            try:
                f = distance_profile_formula(g)
            except FormulaGap:
                continue
            assert f == distance_profile(build(g)), (a, b)


def test_profile_zero_beyond_diameter():
    from ejpan.network import DistanceProfile

    prof = distance_profile_formula(Generator(3, 4))
    assert isinstance(prof, DistanceProfile) and prof.k == 3


@pytest.mark.parametrize("fixture", ["ej23", "ej34"])
def test_vertex_transitivity(fixture, request):
    net = request.getfixturevalue(fixture)
    base = distance_profile(net, 0)
    assert all(distance_profile(net, v) == base for v in range(net.n))


def test_translation_is_automorphism(ej34):
    edges = set(ej34.edges())
    for w in range(0, ej34.n, 5):
        for u, v in edges:
            tu, tv = translate(ej34, Path((u, v)), w).nodes
            assert (min(tu, tv), max(tu, tv)) in edges


def test_translate_examples(ej23):
    table_row5 = [(0, 1), (0, 2), (-1, 2), (-1, 1), (0, 0), (1, 0)]
    p = Path(tuple(node(ej23, *xy) for xy in table_row5))
    moved = translate(ej23, p, p.start)
    assert moved.start == 0
    assert validate_path(ej23, moved, moved.start, moved.end, 5)
    assert translate(ej23, p, 0) == p
    again = relocate(ej23, moved, p.start)
    assert again == p


def test_json_export(ej23):
    body = to_json_dict(ej23)
    assert body["alpha"] == {"a": 2, "b": 3}
    assert body["n"] == 19 and body["diameter"] == 2
    assert body["nodes"][0] == [0, 0]
    assert len(body["edges"]) == 19 * 3
    assert all(i < j for i, j in body["edges"])
    json.dumps(body)


def test_dot_export(ej23):
    dot = to_dot(ej23)
    assert dot.startswith('graph "EJ(2+3*r)" {')
    assert dot.count(" -- ") == 57
    dashed = dot.count("style=dashed")
    wrap = sum(is_wraparound(ej23, u, v) for u, v in ej23.edges())
    assert dashed == wrap and 0 < wrap < 57
    assert '[label="0+1*r"]' in dot


def test_wraparound_definition(ej23):
    zero, one = node(ej23, 0, 0), node(ej23, 1, 0)
    assert not is_wraparound(ej23, zero, one)
    # 2 + 1 = 3 leaves the region and reduces
    two, three = node(ej23, 2, 0), node(ej23, 3, 0)
    assert ej23.nodes[three] != EJInt(3, 0)
    assert is_wraparound(ej23, two, three)


def test_translation_map_is_permutation(ej34):
    from ejpan.network import translation_map

    for base in (0, 7, 36):
        perm = translation_map(ej34, base)
        assert sorted(perm) == list(range(ej34.n))
        assert perm[base] == 0
