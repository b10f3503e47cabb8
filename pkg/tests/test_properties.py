"""Randomized checks of the structural theorems on unpruned engines."""
from functools import lru_cache

from hypothesis import given, strategies as st

from eqsc import qdegree
from eqsc.checks import check_chevalley, check_properties
from eqsc.engine import ClassVector, EqlrEngine
from eqsc.parabolic import build_quotient
from eqsc.poly import Polynomial

QUOTIENTS = [("A1", ()), ("A2", ()), ("A2", (0,)), ("A2", (1,)), ("B2", ()), ("B2", (0,)),
             ("B2", (1,)), ("G2", (0,)), ("G2", (1,)), ("A3", (0, 2)), ("A3", (1,)), ("C3", (0, 1))]


@lru_cache(maxsize=None)
def engines(i):
    pq = build_quotient(*QUOTIENTS[i])
    return pq, EqlrEngine(pq), EqlrEngine(pq, prune=False, symmetric=False)


@st.composite
def cells(draw):
    i = draw(st.integers(0, len(QUOTIENTS) - 1))
    pq, eng, raw = engines(i)
    u, v, w = (draw(st.integers(0, pq.size - 1)) for _ in range(3))
    n = qdegree.grading_vector(pq)
    d = draw(st.sampled_from(qdegree.degrees_up_to(n, 2 * pq.dim)))
    return pq, eng, raw, u, v, w, d


@given(cells())
def test_cell_theorems(cell):
    pq, eng, raw, u, v, w, d = cell
    val = raw.compute(u, v, w, d)
    assert isinstance(val, Polynomial)
    assert val == eng.compute(u, v, w, d)
    assert val == raw.compute(v, u, w, d)
    if val:
        p = raw.poly_degree(u, v, w, d)
        assert p >= 0 and val.is_homogeneous(p)
        assert val.has_nonnegative_coeffs()
    c = pq.codims
    wd = c[w] + qdegree.weighted_deg(d, raw.n)
    if any(d) and (c[u] + 1 > wd or c[v] + 1 > wd):
        assert not val
    if not any(d) and not (pq.prec(u, w) and pq.prec(v, w)):
        assert not val


@given(st.integers(0, len(QUOTIENTS) - 1), st.data())
def test_associativity_sampled(i, data):
    pq, eng, _ = engines(i)
    a, b, c = (data.draw(st.integers(0, pq.size - 1)) for _ in range(3))
    left = eng.multiply_vectors(eng.multiply(a, b), ClassVector.basis(pq, c))
    right = eng.multiply_vectors(ClassVector.basis(pq, a), eng.multiply(b, c))
    assert left == right


@given(st.integers(0, len(QUOTIENTS) - 1), st.data())
def test_specializations(i, data):
    pq, eng, _ = engines(i)
    u, v = (data.draw(st.integers(0, pq.size - 1)) for _ in range(2))
    prod = eng.multiply(u, v)
    n = qdegree.grading_vector(pq)
    for (w, d), c in prod.entries.items():
        assert qdegree.weighted_deg(d, n) <= pq.codims[u] + pq.codims[v]
    # x -> 0 leaves integers on the classes of matching degree
    for (w, d), k in prod.specialize_zero().items():
        assert k > 0 and raw_degree(pq, u, v, w, d, n) == 0


def raw_degree(pq, u, v, w, d, n):
    c = pq.codims
    return c[u] + c[v] - c[w] - qdegree.weighted_deg(d, n)


def test_suites_on_small_quotients():
    for i in range(len(QUOTIENTS)):
        pq, eng, raw = engines(i)
        assert check_properties(pq, raw).ok
        assert check_chevalley(pq, eng).ok
