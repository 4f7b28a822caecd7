"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from polyharm.randgen import make_rng, random_n_harmonic
from polyharm.symcalc import BiLaurent, GaussRational

fractions = st.builds(
    Fraction,
    st.integers(min_value=-100, max_value=100),
    st.integers(min_value=1, max_value=100),
)

gauss_rationals = st.builds(GaussRational, fractions, fractions)

exponents = st.integers(min_value=0, max_value=6)
laurent_exponents = st.integers(min_value=-4, max_value=6)


def bilaurents(laurent: bool = False, max_terms: int = 8) -> st.SearchStrategy[BiLaurent]:
    """Sparse BiLaurent polynomials, with negative exponents when laurent is set."""
    e = laurent_exponents if laurent else exponents
    return st.dictionaries(st.tuples(e, e), gauss_rationals, max_size=max_terms).map(BiLaurent)


def harmonics(max_degree: int = 6) -> st.SearchStrategy[BiLaurent]:
    """Sums of pure z and pure conj(z) powers."""
    d = st.integers(min_value=0, max_value=max_degree)
    keys = st.one_of(d.map(lambda k: (k, 0)), d.map(lambda k: (0, k)))
    return st.dictionaries(keys, gauss_rationals, max_size=5).map(BiLaurent)


orders = st.integers(min_value=1, max_value=4)
seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def n_harmonics(draw: st.DrawFn, max_order: int = 4) -> tuple[BiLaurent, int]:
    """An N-harmonic polynomial together with its order N."""
    n = draw(st.integers(min_value=1, max_value=max_order))
    u = random_n_harmonic(make_rng(draw(seeds)), n, max_degree=3)
    return u, n


positive_p = st.builds(
    Fraction,
    st.integers(min_value=1, max_value=96),
    st.integers(min_value=1, max_value=24),
)
