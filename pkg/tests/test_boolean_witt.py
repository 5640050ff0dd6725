import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import bool_witts, partitions, schur_witts
from wittlab import boolean_witt as B
from wittlab import partitions as P
from wittlab.errors import IndeterminateError, InputError, PropertyViolation, WindowError


def test_parse_and_repr():
    assert B.BoolWitt.parse("(2, 1)") == B.BoolWitt(2, 1)
    assert B.BoolWitt.parse("inf") is not None and B.BoolWitt.parse("∞").is_infinite
    assert repr(B.BoolWitt(3, 0)) == "(3,0)"
    assert B.SchurBoolWitt.parse("2+3*eta") == B.SchurBoolWitt(2, 3)
    assert B.SchurBoolWitt.parse("eta") == B.SchurBoolWitt(0, 1)
    assert B.SchurBoolWitt.parse("4") == B.SchurBoolWitt(4, 0)
    for bad in ("(1,-1)", "(1)", "x", ""):
        with pytest.raises(InputError):
            B.BoolWitt.parse(bad)


@given(bool_witts())
def test_json_round_trip(w):
    assert B.BoolWitt.from_json(w.to_json()) == w


def test_evaluation_is_indicator_of_rectangle_ideal():
    w = B.BoolWitt(1, 2)
    assert w.kernel_rectangle() == (3, 3)
    assert B.eval_m(w, (3, 3)) == 0 and B.eval_m(w, (4, 3, 1)) == 0
    assert B.eval_m(w, (3, 2)) == 1 and B.eval_m(w, (9,)) == 1
    assert B.eval_m(B.INF, (5, 5, 5)) == 1


def test_examples():
    assert B.add_w(B.BoolWitt(2, 1), B.BoolWitt(3, 2)) == B.BoolWitt(5, 2)
    assert B.mul_w(B.BoolWitt(2, 0), B.BoolWitt(3, 0)) == B.BoolWitt(6, 0)
    assert B.mul_w(B.BoolWitt(0, 2), B.BoolWitt(0, 1)) == B.BoolWitt(0, 1)
    assert B.mul_w(B.BoolWitt(1, 0), B.BoolWitt(0, 2)) == B.BoolWitt(0, 2)
    assert B.mul_w(B.INF, B.BoolWitt(0, 0)) == B.BoolWitt(0, 0)
    assert B.mul_w(B.INF, B.BoolWitt(0, 3)) == B.BoolWitt(0, 3)
    assert B.mul_w(B.INF, B.BoolWitt(1, 0)) == B.INF


def test_naturals_embed():
    for m in range(4):
        for n in range(4):
            assert B.add_w(B.from_nat(m), B.from_nat(n)) == B.from_nat(m + n)
            assert B.mul_w(B.from_nat(m), B.from_nat(n)) == B.from_nat(m * n)


@given(bool_witts(), bool_witts(), bool_witts())
def test_semiring_axioms(a, b, c):
    assert B.add_w(a, b) == B.add_w(b, a)
    assert B.mul_w(a, b) == B.mul_w(b, a)
    assert B.add_w(B.add_w(a, b), c) == B.add_w(a, B.add_w(b, c))
    assert B.mul_w(B.mul_w(a, b), c) == B.mul_w(a, B.mul_w(b, c))
    assert B.mul_w(a, B.add_w(b, c)) == B.add_w(B.mul_w(a, b), B.mul_w(a, c))
    assert B.mul_w(a, B.from_nat(1)) == a and B.add_w(a, B.from_nat(0)) == a


@settings(max_examples=30)
@given(bool_witts(2), bool_witts(2), st.sampled_from(["add", "mul"]))
def test_laws_match_coproduct(a, b, op):
    expected = B.add_w(a, b) if op == "add" else B.mul_w(a, b)
    if expected.is_infinite:
        window, bound = P.Window.box(3, 3), (2, 2)
    else:
        window, bound = B.corner_window(expected), None
    assert B.law_check_via_coproduct(a, b, op, window, bound) == expected


@settings(max_examples=20)
@given(bool_witts(2, infinity=False), bool_witts(2, infinity=False), partitions(4, 3))
def test_mul_pairing_two_ways(a, b, lam):
    table = B.pairing_table(a, b, "mul", P.Window(sum(lam)))
    assert table[lam] == B.mul_pairing_by_tensor(a, b, lam)


@given(bool_witts(), bool_witts())
def test_order_is_pointwise(a, b):
    assert B.leq_w(a, b) == B.leq_pointwise(a, b, P.Window.box(5, 5))


@given(bool_witts(), bool_witts(), bool_witts())
def test_order_absorbs_sums(a, b, c):
    assert B.leq_w(a, B.add_w(a, b))
    if B.leq_w(a, b):
        assert B.leq_w(B.mul_w(a, c), B.mul_w(b, c))


def test_identify_kernel():
    w = P.Window.box(3, 3)
    kernel = [lam for lam in w.partitions() if P.contains(lam, (2, 2))]
    assert B.identify_kernel(kernel, w) == (1, 1)
    assert B.identify_kernel([], w) is None
    with pytest.raises(PropertyViolation):
        B.identify_kernel([(2, 2), (3,)], w)
    with pytest.raises(PropertyViolation):
        B.identify_kernel([(3, 3)], w)
    with pytest.raises(IndeterminateError):
        B.identify_kernel([], P.Window(2))
    with pytest.raises(IndeterminateError):
        B.identify_kernel([], w, bound=(3, 3))


@given(bool_witts(), bool_witts())
def test_ghost_is_a_homomorphism(a, b):
    ga, gb = B.ghost(a), B.ghost(b)
    assert B.ghost(B.add_w(a, b)) == ga.pointwise_max(gb)
    assert B.ghost(B.mul_w(a, b)) == ga.pointwise_min(gb)


def test_ghost_bits():
    assert B.ghost(B.BoolWitt(0, 2)).bits(4) == [1, 1, 0, 0]
    assert B.ghost(B.BoolWitt(1, 0)).bits(3) == [1, 1, 1]
    assert B.ghost(B.BoolWitt(0, 0)).bits(2) == [0, 0]
    with pytest.raises(InputError):
        B.ghost(B.INF).bit(0)


def _dorroh(w):
    return B.DorrohElement(0, None) if w.is_infinite else B.DorrohElement(w.x, w.y)


@given(bool_witts(), bool_witts())
def test_dorroh_model_projects_onto_laws(a, b):
    assert B.dorroh_project(B.dorroh_add(_dorroh(a), _dorroh(b))) == B.add_w(a, b)
    assert B.dorroh_project(B.dorroh_mul(_dorroh(a), _dorroh(b))) == B.mul_w(a, b)


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1)])
@pytest.mark.parametrize("y", [0, 1, 2, 3])
def test_plethystic_action_closed_form(lam, y):
    w = B.BoolWitt(0, y)
    closed = B.pleth_act_m(lam, w)
    window = B.corner_window(closed)
    assert B.pleth_act_m_via_plethysm(lam, w, window) == closed


def test_m1_acts_as_identity():
    for w in (B.BoolWitt(1, 0), B.BoolWitt(1, 1), B.BoolWitt(2, 0)):
        assert B.pleth_act_m((1,), w, B.corner_window(w)) == w


def test_pleth_needs_nonzero_partition():
    with pytest.raises(InputError):
        B.pleth_act_m((), B.BoolWitt(1, 0))


# W^Sch(B)

def test_schur_examples():
    eta = B.anti_teichmuller_bool()
    assert B.mul_s(eta, eta) == B.SchurBoolWitt(1, 0)
    assert B.add_s(B.SchurBoolWitt(1, 1), B.SchurBoolWitt(0, 1)) == B.SchurBoolWitt(1, 2)
    assert B.mul_s(B.SINF, B.SchurBoolWitt(0, 0)) == B.SchurBoolWitt(0, 0)
    assert B.mul_s(B.SINF, eta) == B.SINF
    assert B.eval_s(eta, (1, 1, 1)) == 1 and B.eval_s(eta, (2,)) == 0


@given(schur_witts(), schur_witts(), schur_witts())
def test_schur_semiring_axioms(a, b, c):
    assert B.mul_s(a, b) == B.mul_s(b, a)
    assert B.mul_s(B.mul_s(a, b), c) == B.mul_s(a, B.mul_s(b, c))
    assert B.mul_s(a, B.add_s(b, c)) == B.add_s(B.mul_s(a, b), B.mul_s(a, c))


@settings(max_examples=25)
@given(schur_witts(2), schur_witts(2))
def test_schur_addition_matches_coproduct(a, b):
    expected = B.add_s(a, b)
    if expected.is_infinite:
        window, bound = P.Window.box(3, 3), (2, 2)
    else:
        window, bound = B.corner_window(expected), None
    assert B.law_check_schur_via_coproduct(a, b, "add", window, bound) == expected


def test_schur_multiplication_matches_kronecker():
    for a, b in [((1, 0), (0, 1)), ((0, 1), (0, 1)), ((1, 1), (1, 0)), ((2, 0), (0, 1))]:
        u, v = B.SchurBoolWitt(*a), B.SchurBoolWitt(*b)
        expected = B.mul_s(u, v)
        assert B.law_check_schur_via_coproduct(u, v, "mul", B.corner_window(expected)) == expected


def test_kronecker_size_cap():
    a = B.SchurBoolWitt(1, 0)
    with pytest.raises(WindowError):
        B.law_check_schur_via_coproduct(a, a, "mul", P.Window(B.KRONECKER_MAX_SIZE + 1))


def test_map_to_schur_side():
    assert B.to_schur_witt(B.BoolWitt(3, 0)) == B.SchurBoolWitt(3, 0)
    assert B.to_schur_witt(B.BoolWitt(0, 1)) == B.SINF


@given(bool_witts(3), bool_witts(3))
def test_map_to_schur_side_is_a_homomorphism(a, b):
    f = B.to_schur_witt
    assert f(B.add_w(a, b)) == B.add_s(f(a), f(b))
    assert f(B.mul_w(a, b)) == B.mul_s(f(a), f(b))


def test_schur_kernels_from_addition():
    w = P.Window(8)
    for x in range(3):
        for y in range(3):
            expected = {lam for lam in w.partitions() if not B.SchurBoolWitt(x, y).evaluate(lam)}
            assert B.schur_kernel_by_addition(x, y, w) == expected
