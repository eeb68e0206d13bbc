import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicdecomp import (
    DegreeClass,
    Diamond,
    Graph,
    StringConfig,
    Triangle,
    classify_degrees,
    find_claw,
    find_diamond_strings,
    unit_multigraph,
    unit_partition,
)
from cubicdecomp.errors import IsK4, PreconditionFailed
from cubicdecomp.generators import (
    double_bracelet,
    inflate,
    insert_diamond_string,
    k4,
    necklace,
    path,
    prism,
    random_claw_free_cubic,
    random_cubic,
)


def star():
    return Graph.from_edge_list(4, [(0, 1), (0, 2), (0, 3)])


def test_classify_degrees():
    assert classify_degrees(k4()) is DegreeClass.CUBIC
    assert classify_degrees(path(3)) is DegreeClass.SUBCUBIC_PROPER
    k5 = Graph.from_edge_list(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    assert classify_degrees(k5) is DegreeClass.OTHER


def test_find_claw_examples():
    assert find_claw(star()) == (0, (1, 2, 3))
    assert find_claw(k4()) is None
    assert find_claw(necklace(7)) is None


def test_find_claw_smallest_centre_on_k33():
    k33 = Graph.from_edge_list(6, [(u, v) for u in range(3) for v in range(3, 6)])
    assert find_claw(k33) == (0, (3, 4, 5))


@settings(max_examples=40)
@given(st.integers(0, 10_000))
def test_find_claw_agrees_with_brute_force(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 9)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
    g = Graph.from_edge_list(n, edges)
    x = nx.Graph(edges)
    x.add_nodes_from(range(n))
    claw = nx.complete_bipartite_graph(1, 3)
    brute = any(
        nx.is_isomorphic(x.subgraph([v, *leaves]), claw)
        for v in range(n)
        for leaves in itertools.combinations(sorted(x[v]), 3)
    )
    assert (find_claw(g) is not None) == brute


def test_unit_partition_examples():
    p = unit_partition(prism())
    assert p.units == [Triangle((0, 1, 2)), Triangle((3, 4, 5))]
    p = unit_partition(necklace(2))
    assert p.units == [Diamond(0, 1, 2, 3), Diamond(4, 5, 6, 7)]
    with pytest.raises(IsK4):
        unit_partition(k4())
    k33 = Graph.from_edge_list(6, [(u, v) for u in range(3) for v in range(3, 6)])
    with pytest.raises(PreconditionFailed):
        unit_partition(k33)


def test_unit_partition_units_induce_their_kind():
    g = random_claw_free_cubic(12, 3, strings=3, bracelets=1)
    p = unit_partition(g)
    covered = sorted(v for u in p.units for v in (u.vertices))
    assert covered == list(range(g.n))
    for unit in p.units:
        if isinstance(unit, Diamond):
            a, b, c, d = unit.vertices
            assert not g.has_edge(a, d)
            assert all(g.has_edge(x, y) for x, y in ((a, b), (a, c), (b, c), (b, d), (c, d)))
            assert b < c
        else:
            x, y, z = unit.vertices
            assert g.has_edge(x, y) and g.has_edge(y, z) and g.has_edge(x, z)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 10))
def test_unit_partition_is_relabeling_invariant(seed, half):
    g = random_claw_free_cubic(2 * half, seed, strings=seed % 3)
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    h = g.relabeled(perm)
    image = {frozenset(perm[v] for v in u.vertices) for u in unit_partition(g).units}
    assert image == {frozenset(u.vertices) for u in unit_partition(h).units}


def test_unit_multigraph_examples():
    g = prism()
    assert dict(unit_multigraph(g, unit_partition(g))) == {(0, 1): 3}
    g = necklace(2)
    assert dict(unit_multigraph(g, unit_partition(g))) == {(0, 1): 2}
    g = inflate(k4())
    mult = unit_multigraph(g, unit_partition(g))
    assert len(unit_partition(g).units) == 4
    assert len(mult) == 6 and set(mult.values()) == {1}


def test_inflate_unit_multigraph_is_isomorphic_to_base():
    base = random_cubic(12, 5)
    g = inflate(base)
    p = unit_partition(g)
    assert not p.diamonds()
    mult = unit_multigraph(g, p)
    assert set(mult.values()) == {1}
    assert nx.is_isomorphic(nx.Graph(list(mult)), nx.Graph(base.edges()))


def test_find_diamond_strings_examples():
    g = necklace(7)
    (s,) = find_diamond_strings(g, unit_partition(g))
    assert s.k == 7 and s.config is StringConfig.NECKLACE
    assert s.diamonds[0].a == 0

    g = double_bracelet(1, 1)
    strings = find_diamond_strings(g, unit_partition(g))
    assert [s.k for s in strings] == [1, 1]
    assert all(s.config is StringConfig.COMMON_TRIANGLE for s in strings)
    assert [s.u for s in strings] == [6, 13]

    g = prism()
    assert find_diamond_strings(g, unit_partition(g)) == []


def test_distinct_triangles_config_and_orientation():
    g = insert_diamond_string(inflate(k4()), 0, 3, 2)
    (s,) = find_diamond_strings(g, unit_partition(g))
    assert s.config is StringConfig.DISTINCT_TRIANGLES
    assert (s.w, s.z) == (0, 3)
    assert s.diamonds[0].a == g.n - 8


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_strings_are_maximal_and_disjoint(seed):
    g = random_claw_free_cubic(8 + 2 * (seed % 5), seed, strings=3, bracelets=seed % 2)
    p = unit_partition(g)
    strings = find_diamond_strings(g, p)
    seen = []
    for s in strings:
        vs = s.vertices()
        assert len(set(vs)) == 4 * s.k
        seen += vs
        for end in (s.w, s.z):
            assert not isinstance(p.units[p.unit_of[end]], Diamond)
        assert s.w != s.z
        for d1, d2 in zip(s.diamonds, s.diamonds[1:]):
            assert g.has_edge(d1.d, d2.a)
        assert g.has_edge(s.w, s.diamonds[0].a) and g.has_edge(s.diamonds[-1].d, s.z)
        assert s.w < s.z
    assert len(seen) == len(set(seen)) == 4 * len(p.diamonds())
