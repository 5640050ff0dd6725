import pytest
from hypothesis import given
from hypothesis import strategies as st

from wittlab import boolean_witt as B
from wittlab import countability as C
from wittlab import partitions as P
from wittlab.errors import InputError, WindowError


@given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5), st.integers(1, 5))
def test_truncated_semiring_axioms(a, b, c, n):
    a, b, c = (C.TruncatedNat(n, min(v, n)) for v in (a, b, c))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_truncated_tables():
    ops = C.truncated_ops(2)
    assert ops["add"] == [[0, 1, 2], [1, 2, 2], [2, 2, 2]]
    assert ops["mul"] == [[0, 0, 0], [0, 1, 2], [0, 2, 2]]
    with pytest.raises(InputError):
        C.TruncatedNat(2, 3)


def test_partial_hom_validation():
    w = P.Window(1)
    with pytest.raises(InputError):
        C.PartialHom(2, w, {(): 0, (1,): 1})
    with pytest.raises(InputError):
        C.PartialHom(2, w, {(): 1})
    f = C.PartialHom(2, w, {(): 1, (1,): 2})
    assert C.PartialHom.from_json(f.to_json()) == f


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_nat_images_are_homs(n):
    w = P.Window(5)
    for k in range(5):
        assert C.verify_multiplicativity(C.nat_image(k, n, w)).passed


def test_nat_image_values():
    f = C.nat_image(2, 5, P.Window(3))
    assert f((1,)) == 2 and f((1, 1)) == 1 and f((1, 1, 1)) == 0 and f((2,)) == 2


def test_non_hom_is_caught():
    w = P.Window(2)
    f = C.PartialHom(2, w, {(): 1, (1,): 1, (2,): 0, (1, 1): 0})
    v = C.verify_multiplicativity(f)
    assert not v.passed and v.witness == ((1,), (1,))


@pytest.mark.parametrize("n", [3, 4])
def test_u_family(n):
    w = P.Window(5)
    parts = [lam for lam in w.partitions() if lam]
    for U in ([], parts[:3], parts[::2], parts):
        assert C.verify_multiplicativity(C.u_family_hom(U, n, w)).passed


def test_u_family_needs_n_at_least_3():
    with pytest.raises(InputError):
        C.u_family_hom([], 2, P.Window(3))


@pytest.mark.parametrize("size", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_memoised_count_matches_enumeration(size, n):
    w = P.Window(size)
    assert C.count_partial_homs(n, w) == C.count_partial_homs_plain(n, w)


@pytest.mark.parametrize("size", [1, 2, 3, 4])
def test_boolean_count_matches_brute_force(size):
    w = P.Window(size)
    assert C.count_partial_homs(1, w) == C.count_boolean_homs_brute(w)


def test_counts():
    assert [C.count_partial_homs(2, P.Window(s)) for s in (1, 2, 3, 4)] == [3, 9, 67, 791]
    assert [C.count_partial_homs(3, P.Window(s)) for s in (1, 2, 3)] == [4, 26, 483]


def test_restrictions_are_homs():
    w = P.Window(4)
    assert C.count_restrictions(w) <= C.count_partial_homs(1, w)


def test_count_window_limit():
    with pytest.raises(WindowError):
        C.count_partial_homs(2, P.Window(C.MAX_COUNT_SIZE + 1))


def test_reductions_are_boolean_homs():
    w = P.Window(3)
    for f in C.enumerate_partial_homs(2, w):
        assert C.verify_multiplicativity(f).passed
        assert C.verify_multiplicativity(f.reduction()).passed


def test_forcing_closure():
    w = P.Window(5)
    z = B.BoolWitt(1, 0)
    res = C.forcing_closure({(1,): 2}, z, w)
    assert res.hom((1,)) == 2 and res.hom((5,)) == 2 and res.hom((1, 1)) == 0
    assert C.verify_multiplicativity(res.hom).passed
    bad = C.forcing_closure({(1,): 0}, z, w)
    assert bad.hom is None and bad.contradiction
    assert C.forcing_closure({}, z, w).hom is None


def test_forcing_boundary_shapes():
    assert C.boundary_shapes(B.BoolWitt(2, 1), P.Window(8)) == [(1, 1), (2, 2), (3, 3)]
    assert C.boundary_shapes(B.BoolWitt(0, 3), P.Window(8)) == []


def test_forcing_against_enumeration():
    assert C.check_forcing_against_enumeration(P.Window(4)) > 0


def test_forcing_bound_dominates_count():
    for size in (2, 3, 4):
        w = P.Window(size)
        assert C.forcing_bound(w) >= C.count_partial_homs(2, w)


def test_count_table():
    assert C.count_table([2], [1, 2]) == [(1, 2, 3), (2, 2, 9)]
