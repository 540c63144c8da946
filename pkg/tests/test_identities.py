import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import P, S, partitions
from skewsign.dominoes import GaussianInteger
from skewsign.identities import (
    OddN,
    OddSize,
    check_proposition,
    check_tilings,
    sweep,
    verify_theorem1,
)
from skewsign.shapes import v_statistic


def test_proposition_examples():
    square = check_proposition(S((2, 2)))
    assert (square.imbalance_squared, square.rhs_value, square.equal) == (0, 0, True)
    hook = check_proposition(S((2, 1, 1)))
    assert hook.spin_sum == GaussianInteger(0, 1)
    assert (hook.imbalance_squared, hook.rhs_value, hook.equal) == (1, 1, True)
    empty = check_proposition(S(()))
    assert (empty.imbalance_squared, empty.rhs_value, empty.equal) == (1, 1, True)
    assert all(hook.chain.values())


def test_proposition_odd_size():
    with pytest.raises(OddSize):
        check_proposition(S((2, 1)))


def test_proposition_untileable_even_shape():
    # two cells in different rows and columns: no tiling, no tableau, I = 0
    r = check_proposition(S((3, 1), (2,)))
    assert r.imbalance == 0 and r.v_prime is None
    assert r.ok


def test_theorem1_examples():
    r = verify_theorem1(P(), 2)
    assert (r.lhs, r.rhs, r.equal) == (0, 0, True)
    assert r.rhs_terms == ()
    r = verify_theorem1(P(2), 2)
    assert (r.lhs, r.rhs) == (1, 1)
    assert [(str(lam), v, sq) for lam, v, sq in r.lhs_terms] == [
        ("[4]", 0, 1),
        ("[3,1]", 1, 0),
        ("[2,2]", 2, 1),
        ("[2,1,1]", 1, 1),
    ]
    assert [(str(mu), v, sq) for mu, v, sq in r.rhs_terms] == [("[]", 0, 1)]


@given(partitions(max_size=8))
def test_theorem1_n_zero(alpha):
    r = verify_theorem1(alpha, 0)
    expected = (-1) ** v_statistic(alpha)
    assert r.lhs == r.rhs == expected


@pytest.mark.parametrize("n", [1, 3, -2])
def test_theorem1_rejects_odd_n(n):
    with pytest.raises(OddN):
        verify_theorem1(P(1), n)


@settings(max_examples=25, deadline=None)
@given(partitions(max_size=5), st.sampled_from([2, 4]))
def test_theorem1_report_consistency(alpha, n):
    r = verify_theorem1(alpha, n)
    assert r.lhs == sum((-1) ** v * sq for _, v, sq in r.lhs_terms)
    assert r.rhs == sum((-1) ** v * sq for _, v, sq in r.rhs_terms)
    assert r.equal
    d = r.to_dict()
    assert d["alpha"] == str(alpha) and d["equal"] is True


def test_check_tilings_report():
    r = check_tilings(S((3, 3)))
    assert r.tilings == 3 and r.flip_edges == 2 and r.components == 1
    assert r.nv_minus_bv == (-1,)
    assert r.ok


def test_sweep_examples():
    r = sweep(0, [0])
    assert (r.checks, r.passed) == (1, 1)
    r = sweep(4, [2])
    assert r.ok and r.counterexample is None
    r = sweep(6, [2, 4])
    assert r.ok and r.failed == 0 and r.counterexample is None


def test_sweep_with_shapes_parallel_matches_serial():
    serial = sweep(2, [2], max_cells=6)
    parallel = sweep(2, [2], max_cells=6, jobs=2)
    assert serial.to_dict() == parallel.to_dict()
    assert set(serial.by_kind) == {"theorem1", "proposition", "tilings"}


def test_sweep_records_counterexample():
    from skewsign.identities import SweepReport

    r = SweepReport()
    r.record("theorem1", True, {"alpha": "[1]"})
    r.record("theorem1", False, {"alpha": "[2]"})
    r.record("theorem1", False, {"alpha": "[3]"})
    assert (r.checks, r.passed, r.failed) == (3, 1, 2)
    assert r.counterexample == {"kind": "theorem1", "alpha": "[2]"}


def test_sweep_rejects_odd_n():
    with pytest.raises(OddN):
        sweep(1, [3])


def test_spin_sum_square_is_real():
    for outer in [(2, 2), (3, 3), (2, 1, 1), (4, 2), (3, 2, 1)]:
        r = check_proposition(S(outer))
        assert r.spin_sum_squared.is_real()
