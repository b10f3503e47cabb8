import pytest

from eqsc import qdegree as Q
from eqsc.errors import RootInLevi
from eqsc.parabolic import build_quotient


@pytest.mark.parametrize("group,dp,n", [
    ("A1", (), (2,)), ("A2", (1,), (3,)), ("A3", (1, 2), (4,)), ("A2", (), (2, 2)),
    ("B2", (1,), (3,)), ("B2", (0,), (4,)), ("G2", (), (2, 2)), ("A3", (0, 2), (4,)),
    ("B3", (), (2, 2, 2)),
])
def test_grading(group, dp, n):
    assert Q.grading_vector(build_quotient(group, dp)) == n


def test_degree_of_root():
    pq = build_quotient("A2", ())
    assert Q.d_of_alpha(pq, (1, 1)) == (1, 1)
    assert Q.n_of_alpha(pq, (1, 1)) == 4
    pp = build_quotient("A2", (1,))
    with pytest.raises(RootInLevi):
        Q.d_of_alpha(pp, (0, 1))
    # B2: long root 2b1+b2 has coroot h1 + h2 ... checked through its pairing
    b2 = build_quotient("B2", ())
    assert Q.d_of_alpha(b2, (1, 2)) == (1, 1)


def test_degree_order():
    n = (2, 2)
    ds = Q.degrees_below((1, 1), n)
    assert ds[0] == (0, 0) and ds[-1] == (1, 1)
    assert set(ds) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert Q.degrees_up_to((3,), 7) == [(0,), (1,), (2,)]
    assert Q.degrees_up_to((2, 2), 2) == [(0, 0), (1, 0), (0, 1)]


def test_formatting():
    pq = build_quotient("A3", (1,))
    assert Q.format_q((1, 2), pq) == "q1*q3^2"
    assert Q.format_q((0, 0), pq) == ""
    assert Q.parse_degree("1,2", pq) == (1, 2)
    assert Q.parse_degree("0", pq) == (0, 0)
    with pytest.raises(ValueError):
        Q.parse_degree("1", pq)
