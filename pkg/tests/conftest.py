from fractions import Fraction

from hypothesis import settings, strategies as st

from lfcheck.exactring import Poly
from lfcheck.matrix import ExactMatrix

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

VARS = ("x1_2", "x2_1", "y")

integers = st.integers(-50, 50)
rationals = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 12))
monomials = st.lists(st.tuples(st.sampled_from(VARS), st.integers(1, 3)), max_size=3).map(
    lambda pairs: tuple(sorted(dict(pairs).items())))
polys = st.dictionaries(monomials, st.integers(-6, 6), max_size=4).map(Poly)


def small_entries(zero_weight=3):
    return st.one_of(st.just(0), st.integers(-9, 9)) if zero_weight else st.integers(-9, 9)


@st.composite
def int_matrices(draw, min_n=1, max_n=5, density=None):
    n = draw(st.integers(min_n, max_n))
    cells = draw(st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n))
    if density is not None:
        mask = draw(st.lists(st.lists(st.booleans(), min_size=n, max_size=n), min_size=n, max_size=n))
        cells = [[c if keep else 0 for c, keep in zip(r, mr)] for r, mr in zip(cells, mask)]
    return ExactMatrix.from_rows(cells)
