import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wittlab import ideals as I
from wittlab import partitions as P
from wittlab.errors import InputError, WindowError
from wittlab.symfunc import MONOMIAL, SCHUR


def test_generated_ideal_members():
    w = P.Window(4)
    ideal = I.PartitionIdeal.generated_by([(2,), (1, 1)], w)
    assert ideal.members() == [lam for lam in w.partitions() if sum(lam) >= 2]


def test_generators_are_minimised():
    w = P.Window(4)
    ideal = I.PartitionIdeal.generated_by([(2,), (3,), (2, 1)], w)
    assert ideal.generators == ((2,),)


def test_non_antichain_rejected_by_constructor():
    with pytest.raises(InputError):
        I.PartitionIdeal(((2,), (3,)), P.Window(4))


def test_generator_outside_window():
    with pytest.raises(WindowError):
        I.PartitionIdeal.generated_by([(5,)], P.Window(4))


def test_rectangle_ideal():
    ideal = I.ideal_from_rectangle(1, 2, P.Window(8))
    assert ideal.generators == ((3, 3),)
    assert ideal.rectangle() == (1, 2)


def test_enumeration_counts_antichains():
    for n in range(6):
        w = P.Window(n)
        ideals = I.enumerate_ideals(w)
        assert len(ideals) == len(set(ideals)) == I.count_antichains(w.partitions())
        assert all(I.is_ideal(i.members(), w) for i in ideals)


def test_enumeration_small_window():
    gens = {i.generators for i in I.enumerate_ideals(P.Window(2))}
    assert gens == {(), ((1, 1),), ((2,),), ((2,), (1, 1)), ((1,),), ((),)}


def test_json_round_trip():
    ideal = I.PartitionIdeal.generated_by([(3, 1), (2, 2)], P.Window(6))
    assert I.PartitionIdeal.from_json(ideal.to_json()) == ideal


@pytest.mark.parametrize("basis", [MONOMIAL, SCHUR])
def test_rectangles_are_prime(basis):
    w = P.Window(8)
    for ideal in I.rectangle_ideals(w):
        assert I.prime_witness(ideal, w, basis) is None


@pytest.mark.parametrize("basis", [MONOMIAL, SCHUR])
def test_two_generator_ideal_is_not_prime(basis):
    w = P.Window(8)
    ideal = I.PartitionIdeal.generated_by([(3,), (1, 1)], w)
    lam, mu = I.prime_witness(ideal, w, basis)
    assert lam not in ideal and mu not in ideal


def test_full_ideal_is_not_prime():
    w = P.Window(3)
    assert I.prime_witness(I.PartitionIdeal.generated_by([()], w), w) == ((), ())


def test_classification_small_window():
    w = P.Window(6, 3, 3)
    for basis in (MONOMIAL, SCHUR):
        res = I.classify_primes(w, basis)
        assert set(res.nonempty_primes()) == set(I.rectangle_ideals(w))


def test_classification_agrees_with_brute_force():
    w = P.Window(5)
    brute = {i for i in I.enumerate_ideals(w) if not i.is_empty() and I.prime_witness(i, w) is None}
    assert set(I.classify_primes(w).nonempty_primes()) == brute


def test_pker_and_absorption():
    w = P.Window(6)
    values = {lam: (0 if P.contains(lam, (2, 2)) else 1) for lam in w.partitions()}
    kernel = I.pker(values)
    assert kernel == set(I.ideal_from_rectangle(1, 1, w).members())
    assert I.absorbs_products(kernel, w)
