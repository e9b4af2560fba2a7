import itertools
import random

import pytest

from subtopes.closedform import (
    IntervalSet,
    canonical_intervals,
    case_label,
    closed_form_xbar,
    combine_rows,
    componentwise_xbar,
    explicit_row_sum,
    parse_intervals,
    row_terms,
    singleton_xbar,
)
from subtopes.cycles import distinguished_cycle, p_row
from subtopes.decomp import xbar_of_tope
from subtopes.errors import DomainError, SingularError
from subtopes.signs import tope_from_negative_part


def P(i, t):
    return p_row(i, t)


def lin(*terms):
    """Signed sum of row vectors given as (sign, vector)."""
    return tuple(sum(s * v[j] for s, v in terms) for j in range(len(terms[0][1])))


def test_canonical_intervals():
    assert canonical_intervals({2, 3, 5}, 6).intervals == ((2, 3), (5, 5))
    assert canonical_intervals(range(1, 7), 6).intervals == ((1, 6),)
    assert canonical_intervals({1, 3, 5}, 6).intervals == ((1, 1), (3, 3), (5, 5))
    with pytest.raises(DomainError):
        canonical_intervals(set(), 6)


def test_interval_set_validation():
    with pytest.raises(DomainError):
        IntervalSet(((1, 2), (3, 4)), 6)
    with pytest.raises(DomainError):
        IntervalSet(((0, 2),), 6)
    with pytest.raises(DomainError):
        IntervalSet((), 6)
    assert IntervalSet(((1, 2), (4, 4)), 6).rho == 2


def test_parse_intervals():
    assert parse_intervals("2-3,5", 6).intervals == ((2, 3), (5, 5))
    assert parse_intervals("1-t", 8).intervals == ((1, 8),)
    assert parse_intervals("2-3,4", 6).intervals == ((2, 4),)
    for bad in ("0-2", "3-2", "x", "1-9"):
        with pytest.raises(DomainError):
            parse_intervals(bad, 6)


@pytest.mark.parametrize("t", [4, 6, 8, 10])
def test_prefix_kernel_matches_explicit_rows(t):
    rng = random.Random(t)
    for _ in range(50):
        terms = [(rng.choice((1, -1)), rng.randint(1, t)) for _ in range(rng.randint(1, 6))]
        assert combine_rows(terms, t) == explicit_row_sum(terms, t)


def test_examples():
    t = 6
    for j in range(1, t):
        assert closed_form_xbar(canonical_intervals(range(1, j + 1), t)) == P(j + 1, t)
    assert closed_form_xbar(canonical_intervals(range(1, t + 1), t)) == lin((-1, P(1, t)))
    for i in range(2, t + 1):
        assert closed_form_xbar(canonical_intervals(range(i, t + 1), t)) == lin((-1, P(i, t)))
    # value frozen from xbar_of_tope("+--+-+", R) via exact solve
    assert closed_form_xbar(parse_intervals("2-3,5", 6)) == (3, -5, 5, -3, 1, 1)
    assert closed_form_xbar({2, 3, 5}, 6) == (3, -5, 5, -3, 1, 1)
    with pytest.raises(DomainError):
        closed_form_xbar({2, 3})


def test_case_labels():
    assert case_label(parse_intervals("1-2", 6)) == "i"
    assert case_label(parse_intervals("1,6", 6)) == "ii"
    assert case_label(parse_intervals("2-3,5", 6)) == "iii"
    assert case_label(parse_intervals("3-6", 6)) == "iv"
    assert row_terms(parse_intervals("2-3,5", 6)) == [(1, 1), (1, 4), (1, 6), (-1, 2), (-1, 5)]


def test_singleton():
    assert singleton_xbar(1, 6) == (1, 1, -1, 1, -1, 1) == P(2, 6)
    assert singleton_xbar(6, 6) == (-1, 1, -1, 1, -1, -1)
    # frozen from xbar_of_tope of the tope negative only at 3
    assert singleton_xbar(3, 6) == (3, -3, 1, 1, -1, 1)
    with pytest.raises(DomainError):
        singleton_xbar(7, 6)
    with pytest.raises(SingularError):
        singleton_xbar(1, 5)


def test_componentwise_examples():
    assert componentwise_xbar(parse_intervals("1-2", 6), 1) == -1
    # exact solve over W(R) gives xbar(+--+++) = (1,-3,3,-1,1,-1)
    assert componentwise_xbar(parse_intervals("2-3", 6), 1) == 1
    with pytest.raises(DomainError):
        componentwise_xbar(parse_intervals("2-3", 6), 7)


def test_componentwise_random_pairs():
    rng = random.Random(2024)
    for _ in range(200):
        t = rng.choice([4, 6, 8, 10])
        A = {e for e in range(1, t + 1) if rng.random() < 0.5} or {rng.randint(1, t)}
        I = canonical_intervals(A, t)
        assert tuple(componentwise_xbar(I, e) for e in range(1, t + 1)) == closed_form_xbar(I)


@pytest.mark.parametrize("t", [4, 6, 8])
def test_equivalence_with_solve_path_exhaustive(t):
    R = distinguished_cycle(t)
    cases = set()
    for r in range(1, t + 1):
        for A in itertools.combinations(range(1, t + 1), r):
            I = canonical_intervals(A, t)
            cases.add(case_label(I))
            xbar = closed_form_xbar(I)
            assert xbar == xbar_of_tope(tope_from_negative_part(A, t), R)
            assert all(v % 2 and abs(v) <= t - 1 for v in xbar)
    assert cases == {"i", "ii", "iii", "iv"}


def test_odd_t_rejected():
    with pytest.raises(SingularError):
        closed_form_xbar(canonical_intervals({1}, 5))


def test_large_t_is_cheap():
    t = 4096
    A = set(range(1, t + 1, 2))
    xbar = closed_form_xbar(A, t)
    assert len(xbar) == t and all(v % 2 for v in xbar)
