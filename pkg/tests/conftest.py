from fractions import Fraction

from hypothesis import settings, strategies as st

from supercircle.diffop import DiffOperator
from supercircle.superring import Poly, SuperFunction

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.builds(
    Fraction, st.integers(min_value=-6, max_value=6), st.integers(min_value=1, max_value=5)
)


def polys(max_degree=3):
    return st.lists(rationals, max_size=max_degree + 1).map(Poly)


def functions(max_degree=3, parity=None):
    even = polys(max_degree) if parity != 1 else st.just(Poly())
    odd = polys(max_degree) if parity != 0 else st.just(Poly())
    return st.builds(SuperFunction, even, odd)


homogeneous = st.integers(min_value=0, max_value=1).flatmap(
    lambda p: st.tuples(st.just(p), functions(3, p))
)


def operators(src, dst, max_index=3, max_degree=2):
    return st.lists(functions(max_degree), max_size=max_index + 1).map(
        lambda cs: DiffOperator(src, dst, cs)
    )
