"""Shared hypothesis strategies and small builders for the test suite."""

from fractions import Fraction

from hypothesis import settings, strategies as st

from cuntzcalc import Element, GaussianRational

settings.register_profile("package", deadline=None, max_examples=40)
settings.load_profile("package")


def fractions_small():
    return st.fractions(min_value=-3, max_value=3, max_denominator=4)


def scalars():
    return st.builds(GaussianRational, fractions_small(), fractions_small())


def words(n: int, max_len: int = 2):
    return st.lists(st.integers(min_value=1, max_value=n), max_size=max_len).map(tuple)


def elements(n: int, max_len: int = 2, max_terms: int = 3):
    term = st.tuples(scalars(), words(n, max_len), words(n, max_len))
    return st.lists(term, max_size=max_terms).map(
        lambda triples: _build_element(n, triples)
    )


def _build_element(n: int, triples) -> Element:
    out = Element.zero(n)
    for coeff, mu, nu in triples:
        out = out + Element.term(n, coeff, mu, nu)
    return out


def gens(n: int):
    """The generator elements S_1 .. S_n."""
    return [Element.generator(n, i) for i in range(1, n + 1)]
