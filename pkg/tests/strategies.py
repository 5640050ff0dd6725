"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from wittlab import partitions as P


def partitions(max_size: int = 6, max_parts: int = 4):
    return st.lists(st.integers(1, max_size), max_size=max_parts).map(lambda v: P.make(sorted(v, reverse=True))).filter(
        lambda lam: sum(lam) <= max_size)


def bool_witts(bound: int = 4, infinity: bool = True):
    from wittlab.boolean_witt import INF, BoolWitt
    finite = st.tuples(st.integers(0, bound), st.integers(0, bound)).map(lambda xy: BoolWitt(*xy))
    return st.one_of(finite, st.just(INF)) if infinity else finite


def schur_witts(bound: int = 4, infinity: bool = True):
    from wittlab.boolean_witt import SINF, SchurBoolWitt
    finite = st.tuples(st.integers(0, bound), st.integers(0, bound)).map(lambda xy: SchurBoolWitt(*xy))
    return st.one_of(finite, st.just(SINF)) if infinity else finite
