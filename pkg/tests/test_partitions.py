import pytest
from hypothesis import given

from strategies import partitions
from wittlab import partitions as P
from wittlab.errors import InputError


def test_partition_numbers():
    assert [len(list(P.partitions_of(n))) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_reverse_lex_order():
    assert list(P.partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_window_is_graded():
    w = P.Window(3)
    assert w.partitions() == [(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]
    assert P.Window.box(2, 2).partitions() == [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]


def test_bounded_partitions():
    assert list(P.partitions_of(5, max_part=2)) == [(2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]
    assert list(P.partitions_of(5, max_length=2)) == [(5,), (4, 1), (3, 2)]


def test_rect_is_part_repeated():
    assert P.rect(3, 2) == (3, 3)
    assert P.rect(1, 0) == ()
    assert P.is_rectangle((2, 2, 2)) and not P.is_rectangle((2, 1))


def test_parse_and_format():
    assert P.parse("[3,2,1]") == (3, 2, 1)
    assert P.parse("[]") == ()
    assert P.parse(" [ 3 , 1 ] ") == (3, 1)
    assert P.fmt((3, 1)) == "[3,1]"
    for bad in ("3,2", "[a]", "[1,-1]", "(1)", "[1,3]"):
        with pytest.raises(InputError):
            P.parse(bad)


def test_make_rejects_nonpositive():
    with pytest.raises(InputError):
        P.make([2, -1])


@given(partitions(10, 6))
def test_conjugate_involution(lam):
    assert P.conjugate(P.conjugate(lam)) == lam
    assert sum(P.conjugate(lam)) == sum(lam)


@given(partitions(), partitions())
def test_sum_and_interleave_are_conjugate(lam, mu):
    assert P.conjugate(P.part_sum(lam, mu)) == P.interleave(P.conjugate(lam), P.conjugate(mu))


@given(partitions(), partitions())
def test_union_is_least_upper_bound(lam, mu):
    u = P.union(lam, mu)
    assert P.contains(u, lam) and P.contains(u, mu)
    assert P.conjugate(u) == P.union(P.conjugate(lam), P.conjugate(mu))


@given(partitions(), partitions())
def test_containment_matches_parts(lam, mu):
    expected = all(P.part(lam, i) >= P.part(mu, i) for i in range(1, 8))
    assert P.contains(lam, mu) == expected


@given(partitions(8, 8))
def test_dominance_reverses_under_conjugation(lam):
    for mu in P.partitions_of(sum(lam)):
        assert P.dominates(lam, mu) == P.dominates(P.conjugate(mu), P.conjugate(lam))


@given(partitions(8, 8))
def test_round_trip_text(lam):
    assert P.parse(P.fmt(lam)) == lam


def test_window_membership():
    w = P.Window(6, max_part=3, max_length=2)
    assert (3, 3) in w and (4,) not in w and (1, 1, 1) not in w
    with pytest.raises(InputError):
        P.Window(-1)
