import random

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicdecomp import Decomposition, Graph, decompose, lemma2_check, unit_partition, verify
from cubicdecomp.certificate import certificate_from_json, to_dot
from cubicdecomp.generators import inflate, k4, necklace, prism, random_claw_free_cubic, random_cubic
from cubicdecomp.verify import o_cycles

K4_GOOD = Decomposition.from_parts(tree=[(0, 1), (0, 2), (0, 3)], cycles=[(1, 2), (1, 3), (2, 3)])


def naive_good(g: Graph, labels: dict, cubic: bool) -> bool:
    """Definition-level check on networkx, sharing no code with verify."""
    if set(labels) != set(g.edges()) or not set(labels.values()) <= {"T", "M", "O"}:
        return False
    t = nx.Graph()
    t.add_nodes_from(range(g.n))
    t.add_edges_from(e for e, lab in labels.items() if lab == "T")
    if g.n and not nx.is_tree(t):
        return False
    m = [e for e, lab in labels.items() if lab == "M"]
    if len({v for e in m for v in e}) != 2 * len(m):
        return False
    o = nx.Graph([e for e, lab in labels.items() if lab == "O"])
    if any(deg != 2 for _, deg in o.degree()):
        return False
    if cubic and o.number_of_edges() == 0:
        return False
    return True


def test_k4_star_passes():
    assert verify(k4(), K4_GOOD).passed


def test_k4_matching_conflict_witness():
    d = Decomposition.from_parts(tree=[(0, 1), (0, 2), (0, 3)], matching=[(1, 2), (2, 3)], cycles=[(1, 3)])
    report = verify(k4(), d)
    assert not report.passed
    assert {"check": "matching-disjoint", "witness": {"vertex": 2}} in report.to_json_dict()["failures"]


def test_prism_certificate_passes():
    g = prism()
    assert verify(g, decompose(g)).passed


def test_partition_total_failures():
    d = Decomposition(dict(K4_GOOD.labels))
    del d.labels[(0, 1)]
    assert verify(k4(), d).failed("partition-total")
    d = Decomposition(dict(K4_GOOD.labels))
    d.labels[(0, 1)] = "X"
    assert verify(k4(), d).failed("partition-total")


def test_empty_o_on_cubic_fails():
    g = prism()
    d = Decomposition.from_parts(
        tree=[(0, 1), (1, 2), (0, 3), (3, 4), (4, 5)], matching=[(0, 2), (1, 4), (3, 5), (2, 5)]
    )
    r = verify(g, d)
    assert r.failed("o-nonempty") and r.failed("matching-disjoint")


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**6))
def test_verify_agrees_with_naive(seed):
    rng = random.Random(seed)
    g = [k4(), prism(), necklace(2), inflate(k4())][seed % 4]
    labels = {e: rng.choice("TMO") for e in g.edges()}
    if seed % 3 == 0:
        # start from a good certificate and flip a couple of labels
        labels = dict(decompose(g).labels)
        for e in rng.sample(g.edges(), rng.randint(0, 2)):
            labels[e] = rng.choice("TMO")
    assert verify(g, Decomposition(labels)).passed == naive_good(g, labels, cubic=True)


def test_lemma2_odd_cycle_violation():
    # prism with O = 5-cycle 0-1-4-5-2 (verify bypassed)
    g = prism()
    o = [(0, 1), (1, 4), (4, 5), (2, 5), (0, 2)]
    d = Decomposition.from_parts(tree=[(0, 3), (3, 4), (3, 5), (1, 2)], cycles=o)
    problems = lemma2_check(g, d, unit_partition(g))
    assert {p["property"] for p in problems} >= {"even", "chordless"}


def test_lemma2_necklace_vacuous():
    g = necklace(3)
    d = decompose(g)
    assert o_cycles(g, d) == [[0, 1, 2]]
    assert lemma2_check(g, d, unit_partition(g)) == []


def test_lemma2_clean_on_random_certificates():
    for seed in range(30):
        g = random_claw_free_cubic(6 + 2 * (seed % 8), seed, strings=seed % 3, bracelets=seed % 2)
        assert lemma2_check(g, decompose(g), unit_partition(g)) == []


def test_certificate_json_roundtrip():
    g = inflate(random_cubic(8, 1))
    d = decompose(g)
    g2, d2 = certificate_from_json(d.to_json(g))
    assert g2 == g and d2.labels == d.labels


def test_dot_styles():
    text = to_dot(k4(), K4_GOOD)
    assert "0 -- 1 [style=solid" in text and "1 -- 2 [style=bold" in text
    assert "color=" not in text
    assert "color=" in to_dot(k4(), K4_GOOD, color=True)
