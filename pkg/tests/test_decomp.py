import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_cycles
from subtopes.cycles import distinguished_cycle, matrix_M, matrix_P, matrix_W, random_cycle
from subtopes.decomp import (
    Decomposition,
    decompose,
    matrix_X,
    parse_terms,
    reconstruct,
    subtope_decomposition,
    subtope_to_tope_pair,
    tope_coords,
    tope_decomposition,
    vertex_decomposition,
    xbar_of_subtope,
    xbar_of_tope,
)
from subtopes.errors import DomainError, NotATopeError, SingularError
from subtopes.linalg import inverse, mat_mul, vec_mat
from subtopes.oracle import all_subtopes, all_topes, brute_force_tope_coords, exact_solve
from subtopes.signs import Subtope, Tope, meet_midpoint


def test_tope_coords_worked_values(cycle6):
    assert tope_coords("++++++", cycle6) == (1, -1, 1, -1, 1, 0)
    assert tope_coords("--++--", cycle6) == (-1, 1, 0, 0, 0, -1)
    assert tope_coords("---+--", cycle6) == (-1, 1, -1, 1, 0, -1)


@pytest.mark.parametrize("t", [3, 4, 5, 6])
def test_tope_coords_of_cycle_vertices(t):
    D = random_cycle(t, 5)
    for k in range(2 * t):
        e = [0] * t
        e[k % t] = 1 if k < t else -1
        assert tope_coords(D[k], D) == tuple(e)


def test_tope_coords_guards_length(cycle6):
    with pytest.raises(DomainError):
        tope_coords("++++", cycle6)
    with pytest.raises(DomainError):
        tope_coords("++0+++", cycle6)


def test_not_a_tope_error_is_reachable_through_a_corrupt_cycle(cycle6, monkeypatch):
    # a basis that is not a cycle's vertex matrix yields non-ternary coordinates
    import subtopes.decomp as d

    fake = d.IntMatrix(tuple(tuple(3 * x for x in r) for r in matrix_M(cycle6)))
    monkeypatch.setattr(d, "matrix_M", lambda D: fake)
    with pytest.raises(NotATopeError):
        tope_coords("++++++", cycle6)


def test_vertex_decomposition(cycle6):
    vd = vertex_decomposition("++++++", cycle6)
    assert vd.indices == (0, 2, 4, 7, 9)
    assert vd.render() == "D^0 + D^2 + D^4 + D^7 + D^9"
    assert vertex_decomposition(cycle6[5], cycle6).indices == (5,)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_vertex_decomposition_exhaustive_t4(seed):
    D = random_cycle(4, seed)
    for T in all_topes(4):
        vd = vertex_decomposition(T, D)
        assert len(vd.indices) % 2 == 1
        assert tuple(map(sum, zip(*(D[k] for k in vd.indices)))) == T.entries
        assert not {k for k in vd.indices} & {(k + 4) % 8 for k in vd.indices}
        assert tope_coords(T, D) == brute_force_tope_coords(T, D)


def test_xbar_of_tope(cycle6):
    assert xbar_of_tope("++++++", cycle6) == (-3, 1, 1, -3, 5, -5)
    assert xbar_of_tope(cycle6[0], cycle6) == matrix_P(6)[0]
    with pytest.raises(SingularError):
        xbar_of_tope("+++++", distinguished_cycle(5))


def test_xbar_bounds_all_topes_cycle6(cycle6):
    W = matrix_W(cycle6)
    for T in all_topes(6):
        xbar = xbar_of_tope(T, cycle6)
        assert all(v % 2 and abs(v) <= 5 for v in xbar)
        assert tuple(exact_solve(T.entries, W)) == xbar


def test_tope_decomposition(cycle6):
    dec = tope_decomposition("++++++", cycle6)
    assert dec.render() == "S^1 + S^2 + 5S^4 + 3S^6 + 3S^9 + 5S^11"
    assert reconstruct(dec) == (1, 1, 1, 1, 1, 1)
    for T in all_topes(6):
        assert len(tope_decomposition(T, cycle6).terms) == 6


def test_tope_decomposition_reconstructs_t4():
    R = distinguished_cycle(4)
    for T in all_topes(4):
        assert reconstruct(tope_decomposition(T, R)) == T.entries


def test_subtope_to_tope_pair():
    a, b = subtope_to_tope_pair("--0+--")
    assert (str(a), str(b)) == ("--++--", "---+--")
    for S in all_subtopes(4):
        assert meet_midpoint(*subtope_to_tope_pair(S)) == S
    with pytest.raises(DomainError):
        subtope_to_tope_pair("++++")


def test_xbar_of_subtope(cycle6):
    assert xbar_of_subtope("--0+--", cycle6) == (0, 2, -3, 4, -4, 2)
    for k in range(6):
        e = tuple(int(i == k) for i in range(6))
        assert xbar_of_subtope(cycle6.subtopes[k], cycle6) == e
    R = distinguished_cycle(4)
    W = matrix_W(R)
    subs = list(all_subtopes(4))
    assert len(subs) == 32
    for S in subs:
        assert vec_mat(xbar_of_subtope(S, R), W) == S.entries


def test_subtope_decomposition(cycle6):
    dec = subtope_decomposition("--0+--", cycle6)
    assert dec.render() == "2S^1 + 4S^3 + 2S^5 + 3S^8 + 4S^10"
    assert reconstruct(dec) == (-1, -1, 0, 1, -1, -1)
    assert subtope_decomposition(cycle6.subtopes[0], cycle6).terms == ((0, 1),)


@pytest.mark.parametrize("t", [4, 6])
def test_subtope_coefficients_within_bounds(t):
    R = distinguished_cycle(t)
    for S in all_subtopes(t):
        dec = subtope_decomposition(S, R)
        assert all(1 <= c <= t - 1 for _, c in dec.terms)
        assert len(dec.terms) <= t


def test_odd_t_rejected():
    D = distinguished_cycle(5)
    for fn in (tope_decomposition, xbar_of_subtope, subtope_decomposition):
        with pytest.raises(SingularError):
            fn("++0++" if fn is not tope_decomposition else "+++++", D)
    with pytest.raises(SingularError):
        matrix_X(D)


def test_matrix_X(cycle6):
    X = matrix_X(cycle6)
    assert X @ matrix_M(cycle6) == matrix_P(6)


@pytest.mark.parametrize("t", [4, 6, 8])
def test_matrix_X_rows_have_odd_support(t):
    for row in matrix_X(distinguished_cycle(t)):
        assert set(row) <= {-1, 0, 1}
        assert sum(1 for v in row if v) % 2 == 1


@pytest.mark.parametrize("D", random_cycles(4), ids=lambda D: str(D[0]))
def test_remark_identity_rational(D):
    M, W = matrix_M(D), matrix_W(D)
    lhs = mat_mul(M, inverse(W))
    assert lhs == (matrix_X(D) @ M).rows
    assert lhs == matrix_P(4).rows


def test_reconstruct_edge_cases(cycle6):
    empty = Decomposition(Tope.parse("++++++"), (), cycle6)
    assert reconstruct(empty) == (0,) * 6
    short = distinguished_cycle(4).subtopes
    dec = Decomposition(Tope.parse("++++++"), ((11, 1),), cycle6)
    with pytest.raises(DomainError):
        reconstruct(dec, short)


def test_decomposition_rejects_bad_terms(cycle6):
    T = Tope.parse("++++++")
    with pytest.raises(DomainError):
        Decomposition(T, ((0, 1), (6, 1)), cycle6)
    with pytest.raises(DomainError):
        Decomposition(T, ((0, 0),), cycle6)
    with pytest.raises(DomainError):
        Decomposition(T, ((12, 1),), cycle6)


def test_decomposition_json_round_trip(cycle6):
    for target in ("++++++", "--0+--"):
        dec = decompose(target, cycle6)
        data = json.loads(json.dumps(dec.to_json()))
        assert set(data) == {"target", "terms", "cycle"}
        assert Decomposition.from_json(data) == dec


def test_parse_terms_round_trip(cycle6):
    for T in all_topes(6):
        dec = tope_decomposition(T, cycle6)
        assert parse_terms(dec.render()) == dec.terms
    assert parse_terms("0") == ()
    with pytest.raises(DomainError):
        parse_terms("2X^1")


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([4, 6, 8]), st.integers(0, 10**6), st.data())
def test_antipodal_consistency(t, seed, data):
    D = random_cycle(t, seed)
    T = Tope(tuple(data.draw(st.lists(st.sampled_from((1, -1)), min_size=t, max_size=t))))
    dec, anti = tope_decomposition(T, D), tope_decomposition(-T, D)
    assert anti.terms == tuple(sorted(((k + t) % (2 * t), c) for k, c in dec.terms))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([4, 6, 8, 10]), st.integers(0, 10**6), st.data())
def test_uniqueness_against_exact_solve(t, seed, data):
    D = random_cycle(t, seed)
    W = matrix_W(D)
    signs = data.draw(st.lists(st.sampled_from((1, -1)), min_size=t, max_size=t))
    z = data.draw(st.integers(0, t - 1))
    T = Tope(tuple(signs))
    S = Subtope(tuple(signs[:z]) + (0,) + tuple(signs[z + 1 :]))
    assert tuple(exact_solve(T.entries, W)) == xbar_of_tope(T, D)
    assert tuple(exact_solve(S.entries, W)) == xbar_of_subtope(S, D)


@pytest.mark.parametrize("t", [4, 6])
def test_xbar_injective(t):
    D = random_cycle(t, 99)
    seen = {xbar_of_tope(T, D) for T in all_topes(t)}
    assert len(seen) == 2**t
