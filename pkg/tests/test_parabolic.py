import pytest

from eqsc.parabolic import all_parabolics, build_quotient


def test_p2_structure(quotient):
    pq = quotient("A2", (1,))
    assert [pq.name(k) for k in range(pq.size)] == ["e", "s1", "s2s1"]
    assert pq.codims == [2, 1, 0]
    assert [pq.name(pq.dual(k)) for k in range(pq.size)] == ["s2s1", "s1", "e"]
    assert pq.name(pq.wbar0) == "s2s1"
    assert {b: pq.name(k) for b, k in pq.s_of_beta.items()} == {0: "s1"}
    assert pq.cov(pq.wbar0, 0) == [(1, 1)]
    assert pq.cov(1, 0) == [(1, 0)]


@pytest.mark.parametrize("group,expected", [("A3", {(): 24, (0,): 12, (0, 2): 6, (1, 2): 4}),
                                            ("B3", {(): 48, (1, 2): 6, (0, 1): 8}),
                                            ("G2", {(): 12, (0,): 6})])
def test_sizes(group, expected):
    for dp, size in expected.items():
        assert build_quotient(group, dp).size == size


@pytest.mark.parametrize("group", ["A2", "B2", "G2", "A3", "B3", "C3"])
def test_prec_matches_chains(group):
    for dp in all_parabolics(int(group[1])):
        pq = build_quotient(group, dp)
        assert pq.prec_table == pq.chain_prec_table()
        assert pq.prec_table == pq.chain_prec_table(covers_only=False)


@pytest.mark.parametrize("group", ["A2", "B2", "A3"])
def test_duality_and_extremes(group):
    for dp in all_parabolics(int(group[1])):
        pq = build_quotient(group, dp)
        for k in range(pq.size):
            assert pq.dual(pq.dual(k)) == k
            assert pq.codim(k) == pq.length(pq.dual(k))
            assert pq.prec(pq.wbar0, k)
            assert pq.prec(k, 0)
            # covers raise codimension by one
            for _, x in pq.up_covers[k]:
                assert pq.codims[x] == pq.codims[k] + 1


def test_min_rep():
    pq = build_quotient("A2", (1,))
    rs = pq.rs
    assert pq.min_rep(rs.s(1)) == rs.identity
    assert pq.name(pq.min_rep_index(rs.from_word([1, 0, 1]))) == "s2s1"


def test_interval():
    pq = build_quotient("A2", ())
    top = pq.wbar0
    assert pq.interval(top, 0) == list(range(pq.size))
    assert pq.interval(0, 0) == [0]
