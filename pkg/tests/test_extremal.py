import random

import pytest

from degseqopt import (
    Graph,
    NotConnected,
    NotForestSequence,
    NotGraphic,
    PreconditionViolated,
    WitnessClaim,
    alpha_max,
    alpha_max_forest,
    annihilation,
    bound_chain,
    check_slater_bound,
    gamma_min_bounded,
    gamma_min_forest,
    gamma_min_forest_fastpath,
    normalize,
    omega_max,
    slater,
    validate_witness,
)

from conftest import random_graph


# ---------------------------------------------------------------------------
# largest clique / independence number


@pytest.mark.parametrize(
    "seq, expected",
    [
        ([3, 3, 3, 3], 4),
        ([2, 2, 2, 2, 2, 2], 3),
        ([1, 1], 2),
        ([0], 1),
    ],
)
def test_omega_max_examples(seq, expected):
    assert omega_max(normalize(seq)).value == expected


@pytest.mark.parametrize(
    "seq, expected",
    [
        ([1, 1, 1, 1], 2),
        ([0, 0, 0], 3),
        ([2, 2, 2, 1, 1, 1, 1, 1, 1], 6),
    ],
)
def test_alpha_max_examples(seq, expected):
    assert alpha_max(normalize(seq)).value == expected


def test_omega_alpha_reject_non_graphic():
    with pytest.raises(NotGraphic):
        omega_max(normalize([3, 3, 1, 1]))
    with pytest.raises(NotGraphic):
        alpha_max(normalize([3, 3, 1, 1]))


# ---------------------------------------------------------------------------
# smallest domination number


@pytest.mark.parametrize(
    "seq, expected",
    [
        ([2, 2, 2, 1, 1, 1, 1, 1, 1], 3),
        ([1, 1], 1),
        ([2, 2, 2, 2, 2, 2], 2),
        ([0, 0], 2),
        ([2, 1, 1, 0], 2),
    ],
)
def test_gamma_min_examples(seq, expected):
    assert gamma_min_bounded(normalize(seq)).value == expected


def test_gamma_min_rejects_non_graphic():
    with pytest.raises(NotGraphic):
        gamma_min_bounded(normalize([3, 3, 1, 1]))


def test_gamma_min_delta_cap_guard():
    with pytest.raises(PreconditionViolated):
        gamma_min_bounded(normalize([3, 1, 1, 1]), delta_cap=2)


def test_gamma_min_runtime_warning_for_large_degree_and_order():
    seq = [5] + [1] * 39
    with pytest.warns(RuntimeWarning):
        result = gamma_min_bounded(normalize(seq))
    assert result.value == slater(normalize(seq)) == 18


def test_gamma_min_witness_dominates():
    res = gamma_min_bounded(normalize([3, 2, 2, 2, 1, 1, 1]))
    assert res.witness is not None
    assert validate_witness(res.witness).ok
    assert WitnessClaim.HEAD_DOMINATING in res.witness.claims
    assert res.witness.split_k == res.achieving_k


def test_gamma_min_scan_returns_first_feasible_split():
    from degseqopt.extremal import _split_feasible

    for seq in ([2, 2, 2, 1, 1, 1, 1, 1, 1], [3, 2, 2, 2, 1, 1, 1], [2, 2, 2, 2, 2, 2]):
        d = normalize(seq)
        res = gamma_min_bounded(d)
        pos = d.positive_part()
        assert _split_feasible(pos, res.achieving_k, d.max_entry) is not None
        for k in range(slater(pos), res.achieving_k):
            assert _split_feasible(pos, k, d.max_entry) is None


def test_gamma_min_result_never_below_slater():
    rng = random.Random(3)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 6), rng.random())
        from degseqopt import degree_sequence

        d = degree_sequence(g)
        assert gamma_min_bounded(d).value >= slater(d)


# ---------------------------------------------------------------------------
# forest formulas


@pytest.mark.parametrize(
    "seq, expected, k",
    [
        ([3, 2, 2, 2, 1, 1, 1], 2, 2),
        ([2, 1, 1, 1, 1], 2, 2),
        ([1, 1], 1, 1),
    ],
)
def test_gamma_min_forest_examples(seq, expected, k):
    res = gamma_min_forest(normalize(seq))
    assert res.value == expected
    assert res.achieving_k == k
    assert res.witness is not None and validate_witness(res.witness).ok


def test_gamma_min_forest_zero_entries_add_isolated_vertices():
    base = gamma_min_forest(normalize([2, 2, 1, 1])).value
    assert gamma_min_forest(normalize([2, 2, 1, 1, 0, 0])).value == base + 2
    assert gamma_min_forest(normalize([0, 0, 0])).value == 3


def test_gamma_min_forest_rejects_non_forest():
    with pytest.raises(NotForestSequence):
        gamma_min_forest(normalize([2, 2, 2]))


@pytest.mark.parametrize(
    "seq, expected",
    [
        ([2, 1, 1, 1, 1], 2),
        ([2, 2, 2, 1, 1, 1, 1, 1, 1], 3),
        ([1, 1, 1, 1], 2),
    ],
)
def test_gamma_min_forest_fastpath_examples(seq, expected):
    d = normalize(seq)
    res = gamma_min_forest_fastpath(d)
    assert res.value == expected
    assert res.value == gamma_min_forest(d).value
    assert res.value == slater(d) == d.n - annihilation(d)


def test_fastpath_rejects_hypothesis_failure():
    with pytest.raises(PreconditionViolated):
        gamma_min_forest_fastpath(normalize([2, 2, 2, 1, 1, 1]))  # 3 leaves < 6
    with pytest.raises(PreconditionViolated):
        gamma_min_forest_fastpath(normalize([1, 1, 0]))


@pytest.mark.parametrize(
    "seq, expected",
    [
        ([2, 2, 1, 1], 2),
        ([2, 2, 2, 1, 1, 1, 1, 1, 1], 6),
        ([1, 1], 1),
        ([1, 1, 0], 2),
        ([0, 0, 0], 3),
    ],
)
def test_alpha_max_forest_examples(seq, expected):
    res = alpha_max_forest(normalize(seq))
    assert res.value == expected
    assert res.witness is not None
    assert validate_witness(res.witness).ok
    assert res.witness.graph.n - res.witness.split_k == expected


def test_alpha_max_forest_rejects_non_forest():
    with pytest.raises(NotForestSequence):
        alpha_max_forest(normalize([2, 2, 2]))


# ---------------------------------------------------------------------------
# bound chain and the connected-graph bound


@pytest.mark.parametrize(
    "seq, low, high",
    [
        ([3, 2, 2, 2, 1, 1, 1], 2, 3),
        ([1, 1], 1, 1),
        ([2, 1, 1, 1, 1], 2, 2),
    ],
)
def test_bound_chain_examples(seq, low, high):
    chain = bound_chain(normalize(seq))
    assert chain.forest_gamma_low == low == chain.slater
    assert chain.forest_gamma_high == high
    value = gamma_min_forest(normalize(seq)).value
    assert low <= value <= high


def test_forest_extrema_bracketed_by_general_extrema():
    # forests are realizations, so restricting can only worsen each optimum
    from degseqopt import is_forest_sequence, iter_degree_sequences

    for n in range(2, 8):
        for seq in iter_degree_sequences(n, positive_only=True):
            d = normalize(list(seq))
            if not is_forest_sequence(d):
                continue
            assert gamma_min_bounded(d).value <= gamma_min_forest(d).value
            assert alpha_max(d).value >= alpha_max_forest(d).value


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


@pytest.mark.parametrize(
    "graph, gamma, sl, k, bound",
    [
        (Graph(6, [(0, i) for i in range(1, 6)]), 1, 1, 0, 1),
        (path(7), 3, 3, 0, 7),
        (Graph(6, [(i, (i + 1) % 6) for i in range(6)]), 2, 2, 1, 6),
    ],
)
def test_check_slater_bound_examples(graph, gamma, sl, k, bound):
    rep = check_slater_bound(graph)
    assert rep.holds
    assert (rep.gamma, rep.slater, rep.cycle_excess, rep.bound) == (gamma, sl, k, bound)


def test_check_slater_bound_requires_connected():
    with pytest.raises(NotConnected):
        check_slater_bound(Graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(PreconditionViolated):
        check_slater_bound(Graph(0))
