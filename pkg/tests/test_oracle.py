import pytest

from eqsc.errors import IndexOutOfRange
from eqsc.oracle import (GKMSolver, billey_cuw, billey_r, billey_roots, billey_sum, gkm_constants,
                         projective_space_check)
from eqsc.parabolic import all_parabolics, build_quotient
from eqsc.poly import Polynomial

X1 = Polynomial.var(2, 0)
X2 = Polynomial.var(2, 1)


def test_billey_r():
    rs = build_quotient("A2", ()).rs
    assert billey_roots(rs, (0, 1)) == [(1, 0), (1, 1)]
    assert billey_roots(rs, (1, 0)) == [(0, 1), (1, 1)]
    pq = build_quotient("A2", (1,))
    assert billey_r(pq, 0, 1) == (0, 1)
    assert billey_r(pq, 0, 2) == (1, 1)
    with pytest.raises(IndexOutOfRange):
        billey_r(pq, 0, 3)
    with pytest.raises(IndexOutOfRange):
        billey_r(pq, 0, 0)


def test_billey_closed_forms():
    p1 = build_quotient("A1", ())
    assert billey_cuw(p1, 0, 0) == Polynomial.var(1, 0)
    p2 = build_quotient("A2", (1,))
    assert billey_cuw(p2, 0, 0) == X1 * (X1 + X2)
    assert billey_cuw(p2, 1, 0) == X1 + X2
    for w in range(p2.size):
        assert billey_cuw(p2, p2.wbar0, w) == 1


@pytest.mark.parametrize("group", ["A2", "B2", "A3", "G2"])
def test_billey_support_and_positivity(group):
    for dp in all_parabolics(int(group[1])):
        pq = build_quotient(group, dp)
        for u in range(pq.size):
            for w in range(pq.size):
                val = billey_cuw(pq, u, w)
                assert bool(val) == pq.prec(u, w)
                assert val.has_nonnegative_coeffs()
                assert val.is_homogeneous(pq.codims[u]) or not val


def _reduced_words(rs, w):
    """All reduced words of w (small groups only)."""
    if w.is_identity():
        return [()]
    out = []
    for i in range(rs.rank):
        if rs.has_right_descent(w, i):
            out += [word + (i,) for word in _reduced_words(rs, w * rs.s(i))]
    return out


@pytest.mark.parametrize("group", ["A3", "B2"])
def test_billey_word_independence(group):
    pq = build_quotient(group, ())
    rs = pq.rs
    for w in range(pq.size):
        words = _reduced_words(rs, pq.element(pq.dual(w)))
        for u in range(pq.size):
            vals = {billey_cuw(pq, u, w, word) for word in words[:4]}
            assert len(vals) == 1


def test_billey_full_word():
    # the whole word spells w0 once: phi(b1) phi(b1 + b2) phi(b2)
    rs = build_quotient("A2", ()).rs
    assert billey_sum(rs, (0, 1, 0), rs.w0) == X1 * X2 * (X1 + X2)
    assert billey_sum(rs, (0, 1, 0), rs.s(0)) == X2 + X1


def test_gkm_a1():
    pq = build_quotient("A1", ())
    x = Polynomial.var(1, 0)
    assert gkm_constants(pq, 0, 0, 0) == x
    assert gkm_constants(pq, 0, 1, 0) == 1
    assert gkm_constants(pq, 1, 1, 1) == 1
    assert gkm_constants(pq, 1, 1, 0) == 0


def test_gkm_unit():
    pq = build_quotient("B2", ())
    solver = GKMSolver(pq)
    for v in range(pq.size):
        assert solver.constants(pq.wbar0, v) == {v: Polynomial.one(2)}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_projective_space(n):
    rep = projective_space_check(n)
    assert rep.ok and rep.checked == n + 1
