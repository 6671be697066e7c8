import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degseqopt import (
    Graph,
    InvalidWitness,
    PreconditionViolated,
    RealizationWitness,
    WitnessClaim,
    annihilation,
    degree_sequence,
    domination_number,
    graph_from_json_obj,
    graph_to_json_obj,
    independence_number,
    normalize,
    parse_edge_list_text,
    slater,
    two_switch,
    validate_witness,
)

from conftest import random_graph


def triangle():
    return Graph(3, [(0, 1), (0, 2), (1, 2)])


def test_graph_construction_validation():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 5)])


def test_graph_accessors():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.degrees == (1, 2, 2, 1)
    assert g.m == 3
    assert g.neighbors(1) == (0, 2)
    assert g.has_edge(2, 1) and not g.has_edge(0, 3)
    assert g.is_forest() and g.is_connected()
    assert g.connected_components() == [[0, 1, 2, 3]]


def test_masks_agree_with_sets():
    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 12), rng.random())
        for v in range(g.n):
            from_mask = {b for b in range(g.n) if g.adjacency_masks[v] >> b & 1}
            assert from_mask == set(g.adjacency_sets[v])


def test_complement():
    g = Graph(4, [(0, 1)])
    assert g.complement().edges() == [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


@pytest.mark.parametrize(
    "graph, expected",
    [
        (triangle(), (2, 2, 2)),
        (Graph(4, [(0, 1), (0, 2), (0, 3)]), (3, 1, 1, 1)),
        (Graph(2), (0, 0)),
    ],
)
def test_degree_sequence_examples(graph, expected):
    assert degree_sequence(graph).entries == expected


def test_two_switch_p4_example():
    # a-b-c-d with edges ab, cd switched to ac, bd
    g = Graph(4, [(0, 1), (2, 3), (1, 2)])
    switched = two_switch(g, (0, 1), (2, 3))
    assert switched.edges() == [(0, 2), (1, 2), (1, 3)]
    assert sorted(switched.degrees, reverse=True) == [2, 2, 1, 1]


def test_two_switch_preserves_degrees_positionally():
    g = Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    switched = two_switch(g, (0, 1), (3, 4))
    assert switched.degrees == g.degrees


def test_two_switch_rejects_bad_requests():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(PreconditionViolated):
        two_switch(g, (0, 1), (1, 2))  # shared endpoint
    with pytest.raises(PreconditionViolated):
        two_switch(g, (0, 2), (1, 3))  # not edges
    g2 = Graph(4, [(0, 1), (2, 3), (0, 2)])
    with pytest.raises(PreconditionViolated):
        two_switch(g2, (0, 1), (2, 3))  # replacement edge exists


# ---------------------------------------------------------------------------
# witnesses


def spec_example_witness():
    # star K_{1,2} union K_2 realizing (2,1,1,1,1) with split k=2
    g = Graph(5, [(0, 2), (0, 3), (1, 4)])
    seq = normalize([2, 1, 1, 1, 1])
    return g, seq


def test_validate_witness_spec_examples():
    g, seq = spec_example_witness()
    w = RealizationWitness(
        g, seq, 2,
        frozenset({WitnessClaim.HEAD_DOMINATING, WitnessClaim.TAIL_INDEPENDENT,
                   WitnessClaim.IS_FOREST}),
    )
    assert validate_witness(w).ok

    w2 = RealizationWitness(g, seq, 2, frozenset({WitnessClaim.HEAD_INDEPENDENT}))
    assert validate_witness(w2).ok  # u1 and u2 are non-adjacent

    w3 = RealizationWitness(triangle(), normalize([2, 2, 2]), 1,
                            frozenset({WitnessClaim.IS_FOREST}))
    report = validate_witness(w3)
    assert not report.ok
    assert report.claim_results[WitnessClaim.IS_FOREST] is False


def test_validate_witness_catches_degree_mismatch():
    g, _ = spec_example_witness()
    wrong = normalize([2, 2, 1, 1, 0])
    report = validate_witness(RealizationWitness(g, wrong, 2, frozenset()))
    assert not report.degrees_match and not report.ok


def test_checked_constructor_fails_fast():
    with pytest.raises(InvalidWitness):
        RealizationWitness.checked(
            triangle(), normalize([2, 2, 2]), 1, {WitnessClaim.IS_FOREST}
        )


def test_witness_report_lists_each_claim():
    g, seq = spec_example_witness()
    claims = {WitnessClaim.HEAD_DOMINATING, WitnessClaim.HEAD_INDEPENDENT,
              WitnessClaim.TAIL_INDEPENDENT, WitnessClaim.IS_FOREST}
    report = validate_witness(RealizationWitness(g, seq, 2, frozenset(claims)))
    assert set(report.claim_results) == claims
    assert all(report.claim_results.values())


# ---------------------------------------------------------------------------
# sequence-level bounds hold on concrete graphs


@given(st.integers(min_value=1, max_value=10), st.floats(min_value=0, max_value=1),
       st.integers(min_value=0, max_value=10**6))
@settings(max_examples=150, deadline=None)
def test_slater_pepper_bounds_on_random_graphs(n, p, seed):
    g = random_graph(random.Random(seed), n, p)
    d = degree_sequence(g)
    assert domination_number(g)[0] >= slater(d)
    assert independence_number(g)[0] <= annihilation(d)


def test_complement_of_minimum_dominating_set_dominates():
    rng = random.Random(11)
    tried = 0
    while tried < 200:
        g = random_graph(rng, rng.randint(2, 10), rng.uniform(0.2, 0.9))
        if any(d == 0 for d in g.degrees):
            continue
        tried += 1
        _, dset = domination_number(g)
        rest = set(range(g.n)) - dset
        assert all(
            any(w in rest for w in g.adjacency_sets[v]) for v in set(range(g.n)) - rest
        )


# ---------------------------------------------------------------------------
# serialization


def test_edge_list_roundtrip():
    g = parse_edge_list_text("4 3\n1 2\n2 3\n3 4\n")
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    with pytest.raises(ValueError):
        parse_edge_list_text("4 2\n1 2\n")
    with pytest.raises(ValueError):
        parse_edge_list_text("")


def test_graph_json_roundtrip():
    g = Graph(4, [(0, 1), (2, 3)])
    obj = graph_to_json_obj(g)
    assert obj == {"n": 4, "edges": [[1, 2], [3, 4]]}
    assert graph_from_json_obj(obj) == g
