import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wittlab import boolean_witt as B
from wittlab import monomial as M
from wittlab import ptypical as T
from wittlab.errors import IndeterminateError, InputError
from wittlab.symfunc import SymFunc


def witts(p, bound=3):
    finite = st.tuples(st.integers(0, bound), st.integers(0, bound)).map(lambda xy: T.PTypicalBoolWitt(p, *xy))
    return st.one_of(finite, st.just(T.PTypicalBoolWitt(p, None)))


def test_d_poly_small():
    # ((x1 + x2 + ...)^2 - sum x^2)/2 = e_2
    assert T.d_poly(2) == M.e(2)
    # ((sum x)^3 - sum x^3)/3 = m_21 + 2 m_111
    assert T.d_poly(3) == SymFunc({(2, 1): 1, (1, 1, 1): 2})


def test_d_ij_degrees():
    assert T.d_ij(2, 0, 0) == M.e(1)
    assert T.d_ij(2, 0, 1) == M.psi(2)
    assert T.d_ij(2, 1, 1).degree() == 4
    assert T.d_ij(3, 1, 0) == T.d_poly(3)


@pytest.mark.parametrize("p,i,j", [(2, 0, 0), (2, 1, 0), (2, 0, 1), (3, 0, 0), (5, 0, 0)])
def test_relation(p, i, j):
    assert T.verify_relation(p, i, j)


def test_relation_cap():
    with pytest.raises(InputError):
        T.verify_relation(2, 2, 2, degcap=4)


def test_nonprime_rejected():
    with pytest.raises(InputError):
        T.PTypicalBoolWitt(4, 1, 1)


def test_parse_and_json():
    a = T.PTypicalBoolWitt.parse("p=3:(1,2)")
    assert a == T.PTypicalBoolWitt(3, 1, 2) and repr(a) == "p=3:(1,2)"
    assert T.PTypicalBoolWitt.parse("inf", 2).is_infinite
    assert T.PTypicalBoolWitt.from_json(a.to_json()) == a
    with pytest.raises(InputError):
        T.PTypicalBoolWitt.parse("(1,1)")
    with pytest.raises(InputError):
        T.PTypicalBoolWitt.parse("p=3:(1,1)", 2)


def test_entries():
    a = T.PTypicalBoolWitt(2, 1, 2)
    assert a.entry(0, 5) == 1 and a.entry(1, 2) == 0 and a.entry(3, 1) == 1


@pytest.mark.parametrize("p", [2, 3, 5])
def test_naturals_two_ways(p):
    for n in range(12):
        assert T.from_nat_p(n, p) == T.from_nat_p_by_iteration(n, p)
    assert T.from_nat_p(2, 2) == T.PTypicalBoolWitt(2, 2, 0)
    assert T.from_nat_p(2, 3).is_infinite


def test_iteration_step_limit():
    # 2 -> 1 -> 0 needs three steps at p = 2
    with pytest.raises(IndeterminateError):
        T.from_nat_p_by_iteration(2, 2, steps=2)


def test_nat_images_small():
    assert T.from_nat_p_by_iteration(2, 2) == T.PTypicalBoolWitt(2, 2, 0)
    assert T.from_nat_p_by_iteration(1, 3) == T.PTypicalBoolWitt(3, 1, 0)


def test_d_on_naturals():
    assert T.d_nat(3, 2) == 3 and T.d_nat(2, 3) == 2


def test_operators():
    a = T.PTypicalBoolWitt(2, 2, 1)
    assert T.apply_d(a) == T.PTypicalBoolWitt(2, 1, 1)
    assert T.apply_psi(a) == T.PTypicalBoolWitt(2, 2, 0)
    assert T.apply_d(T.PTypicalBoolWitt(2, None)).is_infinite


@given(witts(2), witts(2), witts(2))
def test_laws_p2(a, b, c):
    assert T.add_p(a, b) == T.add_p(b, a)
    assert T.mul_p(a, b) == T.mul_p(b, a)
    assert T.add_p(T.add_p(a, b), c) == T.add_p(a, T.add_p(b, c))
    assert T.mul_p(T.mul_p(a, b), c) == T.mul_p(a, T.mul_p(b, c))
    assert T.mul_p(a, T.add_p(b, c)) == T.add_p(T.mul_p(a, b), T.mul_p(a, c))


@given(witts(3), witts(3), witts(3))
def test_laws_p3(a, b, c):
    assert T.mul_p(a, T.add_p(b, c)) == T.add_p(T.mul_p(a, b), T.mul_p(a, c))
    assert T.add_p(T.add_p(a, b), c) == T.add_p(a, T.add_p(b, c))


@given(witts(2), witts(2))
def test_order_absorbs(a, b):
    assert T.leq_p(a, T.add_p(a, b))
    assert T.leq_p(a, b) == T.leq_p_pointwise(a, b, 8)


def test_law_examples():
    p = 2
    one, two = T.PTypicalBoolWitt(p, 1, 0), T.PTypicalBoolWitt(p, 2, 0)
    assert T.add_p(one, one) == two
    assert T.add_p(one, two).is_infinite
    assert T.mul_p(two, two).is_infinite
    inf = T.PTypicalBoolWitt(p, None)
    assert T.mul_p(inf, T.PTypicalBoolWitt(p, 0, 2)) == T.PTypicalBoolWitt(p, 0, 2)
    assert T.mul_p(inf, T.PTypicalBoolWitt(p, 0, 0)) == T.PTypicalBoolWitt(p, 0, 0)
    d = T.derive_mul(inf, inf)
    assert d.value.is_infinite and d.rules


def test_mixed_primes_rejected():
    with pytest.raises(InputError):
        T.add_p(T.PTypicalBoolWitt(2, 1, 0), T.PTypicalBoolWitt(3, 1, 0))


def test_calculus_on_numbers():
    # d and psi on polynomials agree with d_nat after substituting numbers
    calc = T.Calculus(2)
    x = T.variable(0, 0, 0)
    y = T.variable(1, 0, 0)
    s = T.poly_add(x, y)
    ds = calc.d(s)

    def ev(poly, vx, vy):
        total = 0
        for mono, c in poly.items():
            term = c
            for (side, k, l), e in mono:
                base = vx if side == 0 else vy
                for _ in range(k):
                    base = T.d_nat(base, 2)
                term *= base ** e
            total += term
        return total

    for vx in range(4):
        for vy in range(4):
            assert ev(ds, vx, vy) == T.d_nat(vx + vy, 2)


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("op", ["add", "mul"])
def test_coproduct_routes_agree(p, op):
    for i, j in T.triangle(T.feasible_k(p) if p == 3 else 2):
        assert T.coproduct_tensor_symbolic(p, op, i, j) == T.coproduct_tensor_monomial(p, op, i, j)


@settings(max_examples=30)
@given(witts(2, 2), witts(2, 2), st.sampled_from(["add", "mul"]))
def test_law_arrays_match_first_principles(a, b, op):
    law = T.add_p if op == "add" else T.mul_p
    assert T.pairing_array(a, b, op, 3) == law(a, b).restrict(3)


def test_identify_from_coproduct():
    a, b = T.PTypicalBoolWitt(2, 1, 0), T.PTypicalBoolWitt(2, 0, 1)
    assert T.law_check_p_via_coproduct(a, b, "add", 2) == T.PTypicalBoolWitt(2, 1, 1)
    assert T.law_check_p_via_coproduct(a, b, "mul", 2) == T.PTypicalBoolWitt(2, 0, 1)
    with pytest.raises(InputError):
        T.law_check_p_via_coproduct(a, b, "add", 2, window_k=9)


def test_truncated_counts():
    for k in range(5):
        arrays = T.enumerate_truncated(2, k)
        assert len(arrays) == 2 ** (k + 1)
        assert set(arrays) == set(T.enumerate_truncated_brute(k))
        assert all(t.is_valid() for t in arrays)


def test_truncated_encoding():
    t = T.TruncatedArray.decode(T.TWO_BLOCK_ARRAY)
    assert t.k == 2 and t.encode() == T.TWO_BLOCK_ARRAY
    assert t.zero_blocks() == 2
    with pytest.raises(InputError):
        T.TruncatedArray.decode("0;1")


def test_two_blocks_do_not_lift():
    t = T.TruncatedArray.decode(T.TWO_BLOCK_ARRAY)
    assert T.lifts(t, 3) == [] and T.lifts(t, 4) == []


def test_single_block_arrays_lift():
    for t in T.enumerate_truncated(2, 2):
        if t.zero_blocks() <= 1:
            assert T.lifts(t, 4)


def test_restriction_of_elements():
    a = T.PTypicalBoolWitt(2, 1, 1)
    assert a.restrict(4).restrict(2) == a.restrict(2)
    assert a.restrict(3) in T.enumerate_truncated(2, 3)


def test_from_big_witt():
    assert T.from_big_witt(B.BoolWitt(1, 0), 2) == T.PTypicalBoolWitt(2, 1, 0)
    assert T.from_big_witt(B.INF, 3).is_infinite
    for w in B.sample(2):
        img = T.from_big_witt(w, 2)
        assert T.from_big_witt_array(w, 2, 3) == img.restrict(3)


@given(st.sampled_from(B.sample(2)), st.sampled_from(B.sample(2)))
def test_from_big_witt_is_a_homomorphism(a, b):
    f = lambda w: T.from_big_witt(w, 2)
    assert f(B.add_w(a, b)) == T.add_p(f(a), f(b))
    assert f(B.mul_w(a, b)) == T.mul_p(f(a), f(b))
