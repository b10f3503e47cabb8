import random

import pytest

from eqsc.engine import (ClassVector, EqlrEngine, all_assignments, default_assignment,
                         is_valid_assignment, path_graph, path_sum_R, random_assignment)
from eqsc.errors import PreconditionViolated, StratumNotReady
from eqsc.parabolic import build_quotient
from eqsc.poly import Polynomial, RatFn

X1 = Polynomial.var(2, 0)
X2 = Polynomial.var(2, 1)


@pytest.fixture
def p1():
    return build_quotient("A1", ())


@pytest.fixture
def p2():
    return build_quotient("A2", (1,))


def test_default_assignment_p2(p2):
    f = default_assignment(p2, p2.wbar0, 0)
    assert {p2.name(v): b for v, b in f.items()} == {"s2s1": 0, "s1": 0}
    assert default_assignment(p2, 1, 1) == {}


def test_assignments_valid_a2():
    pq = build_quotient("A2", ())
    for u in range(pq.size):
        for w in range(pq.size):
            if pq.prec(u, w):
                assert is_valid_assignment(pq, u, w, default_assignment(pq, u, w))
                assert is_valid_assignment(pq, u, w, random_assignment(pq, u, w, random.Random(u)))
            else:
                with pytest.raises(PreconditionViolated):
                    default_assignment(pq, u, w)


def test_path_sums(p1, p2):
    assert path_sum_R(p2, 2, 2) == 1
    assert path_sum_R(build_quotient("A1", ()), 1, 0) == RatFn(Polynomial.one(1), Polynomial.var(1, 0))
    assert path_sum_R(p2, p2.wbar0, 0) == RatFn(Polynomial.one(2), X1 * (X1 + X2))
    g = path_graph(p2, p2.wbar0, 0)
    assert [[p2.name(v) for v in path] for path in g.paths()] == [["s2s1", "s1", "e"]]


def test_path_sum_matches_path_enumeration():
    pq = build_quotient("B2", ())
    for w in range(pq.size):
        g = path_graph(pq, pq.wbar0, w)
        total = RatFn.zero(2)
        for path in g.paths():
            wt = RatFn.one(2)
            for a, b in zip(path, path[1:]):
                wt = wt * next(x for _, t, x in g.edges[a] if t == b)
            total = total + wt
        assert total == path_sum_R(pq, pq.wbar0, w)


def test_f_independence_b2():
    pq = build_quotient("B2", ())
    for u in range(pq.size):
        for w in range(pq.size):
            if pq.prec(u, w):
                vals = {path_sum_R(pq, u, w, f) for f in all_assignments(pq, u, w)}
                assert len(vals) == 1 and next(iter(vals))


def test_p1_table(p1):
    eng = EqlrEngine(p1)
    x = Polynomial.var(1, 0)
    assert eng.compute(0, 0, 0, (0,)) == x
    assert eng.compute(0, 0, 1, (1,)) == 1
    assert eng.compute(0, 0, 1, (0,)) == 0
    assert eng.compute(0, 0, 0, (1,)) == 0
    assert eng.diagonal_coeff(0) == x
    assert eng.reduce_nonprec(0, 0, 1, (1,)) == 1


def test_reduce_nonprec(p2):
    eng = EqlrEngine(p2)
    eng.ensure_degree((1,))
    assert eng.reduce_nonprec(0, 1, 1, (0,)) == 0
    with pytest.raises(PreconditionViolated):
        eng.reduce_nonprec(2, 2, 0, (0,))


def test_p2_values(p2):
    eng = EqlrEngine(p2)
    assert eng.diagonal_coeff(0) == X1 * (X1 + X2)
    assert eng.compute(1, 0, 0) == X1 + X2
    assert eng.compute(1, 0, 2, (1,)) == 1
    assert eng.multiply(1, 1).format(p2) == "σ(e) + x2·σ(s1)"
    assert eng.multiply(1, 0).format(p2) == "(x1 + x2)·σ(e) + q1·σ(s2s1)"


@pytest.mark.parametrize("prune", [True, False])
def test_unit_law(prune):
    pq = build_quotient("A2", ())
    eng = EqlrEngine(pq, prune=prune, symmetric=False)
    for v in range(pq.size):
        assert eng.multiply(pq.wbar0, v) == ClassVector.basis(pq, v)
        assert eng.multiply(v, pq.wbar0) == ClassVector.basis(pq, v)


def test_threads_agree():
    pq = build_quotient("B2", ())
    a, b = EqlrEngine(pq), EqlrEngine(pq, threads=4)
    a.ensure_up_to(2 * pq.dim)
    b.ensure_up_to(2 * pq.dim)
    assert a.table == b.table


def test_stratum_guard(p2):
    eng = EqlrEngine(p2)
    with pytest.raises(StratumNotReady):
        eng._lookup(0, 0, 0, (1,))


def test_bad_degree(p2):
    with pytest.raises(ValueError):
        EqlrEngine(p2).compute(0, 0, 0, (1, 0))


def test_multiply_vectors_specialization(p2):
    eng = EqlrEngine(p2)
    h = ClassVector.basis(p2, 1)
    cube = eng.multiply_vectors(eng.multiply(1, 1), h)
    assert cube.specialize_zero() == {(p2.wbar0, (1,)): 1}
