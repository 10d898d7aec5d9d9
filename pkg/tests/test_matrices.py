import random
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import elements
from cuntzcalc import Element, GaussianRational
from cuntzcalc.maps import WeightedKraus, ad, canonical_endomorphism
from cuntzcalc.matrices import (
    Matrix,
    embed_balanced,
    is_psd,
    kadison_schwartz_check,
    trace_cross_check,
    word_index,
)
from cuntzcalc.theorems import random_balanced, random_hermitian


def gr(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


def m2(a, b, c, d):
    return Matrix([[a, b], [c, d]])


def term(n, mu, nu, coeff=1):
    return Element.term(n, coeff, tuple(mu), tuple(nu))


# -- oracle: characteristic polynomial via Faddeev-LeVerrier -----------------
#
# For Hermitian m, all eigenvalues are real and m is PSD exactly when every
# elementary symmetric function e_k of the eigenvalues is >= 0.  With the
# characteristic polynomial written t^d + c_1 t^{d-1} + ... + c_d we have
# c_k = (-1)^k e_k, so the PSD test is (-1)^k c_k >= 0 for all k.  This gives
# a second, independent exact positivity decision to pit against is_psd.


def charpoly_coeffs(m: Matrix) -> list[GaussianRational]:
    d = m.dim
    coeffs: list[GaussianRational] = []
    mk = m
    for k in range(1, d + 1):
        if k > 1:
            mk = m * (mk + coeffs[-1] * Matrix.identity(d))
        coeffs.append(mk.trace() * Fraction(-1, k))
    return coeffs


def psd_by_charpoly(m: Matrix) -> bool:
    if not m.is_hermitian:
        raise ValueError("oracle needs a Hermitian matrix")
    for k, c in enumerate(charpoly_coeffs(m), start=1):
        assert c.is_real
        signed = c.re if k % 2 == 0 else -c.re
        if signed < 0:
            return False
    return True


class TestCharpolyOracle:
    def test_known_spectrum(self):
        # [[1,2],[2,1]] has eigenvalues 3 and -1
        coeffs = charpoly_coeffs(m2(1, 2, 2, 1))
        assert [c.re for c in coeffs] == [Fraction(-2), Fraction(-3)]
        assert not psd_by_charpoly(m2(1, 2, 2, 1))

    def test_projection(self):
        assert psd_by_charpoly(m2(1, 0, 0, 0))


class TestMatrixBasics:
    def test_constructor_requires_square(self):
        with pytest.raises(ValueError):
            Matrix([[1, 2]])

    def test_identity_multiplication(self):
        a = m2(1, 2, 3, 4)
        assert Matrix.identity(2) * a == a
        assert a * Matrix.identity(2) == a

    def test_scalar_multiplication_both_sides(self):
        a = m2(1, 2, 3, 4)
        assert a * Fraction(1, 2) == Fraction(1, 2) * a == m2(Fraction(1, 2), 1, Fraction(3, 2), 2)

    def test_dagger_conjugates_and_transposes(self):
        a = m2(gr(1), gr(0, 1), gr(2), gr(3))
        assert a.dagger() == m2(gr(1), gr(2), gr(0, -1), gr(3))

    def test_trace(self):
        assert m2(1, 5, 7, 2).trace() == gr(3)

    def test_is_hermitian(self):
        assert m2(2, gr(0, 1), gr(0, -1), 2).is_hermitian
        assert not m2(1, 1, 0, 1).is_hermitian

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            m2(1, 0, 0, 1) + Matrix.identity(3)

    def test_str_rows(self):
        assert str(m2(1, 0, 0, Fraction(1, 2))) == "1 0\n0 1/2"

    def test_immutable(self):
        a = Matrix.identity(2)
        with pytest.raises(AttributeError):
            a.dim = 3


class TestWordIndex:
    def test_lexicographic_order_at_level_two(self):
        order = [word_index(2, 2, w) for w in [(1, 1), (1, 2), (2, 1), (2, 2)]]
        assert order == [0, 1, 2, 3]

    def test_rank_three(self):
        assert word_index(3, 2, (1, 1)) == 0
        assert word_index(3, 2, (3, 3)) == 8
        assert word_index(3, 1, (2,)) == 1


class TestEmbedBalanced:
    def test_matrix_units_at_level_one(self):
        assert embed_balanced(term(2, (1,), (2,)), 1) == m2(0, 1, 0, 0)
        assert embed_balanced(term(2, (2,), (1,)), 1) == m2(0, 0, 1, 0)

    def test_unit_becomes_identity(self):
        assert embed_balanced(Element.unit(2), 1) == Matrix.identity(2)
        assert embed_balanced(Element.unit(2), 2) == Matrix.identity(4)

    def test_rejects_unbalanced(self):
        with pytest.raises(ValueError):
            embed_balanced(Element.generator(2, 1), 1)

    def test_rejects_overlong_words(self):
        with pytest.raises(ValueError):
            embed_balanced(term(2, (1, 1), (2, 2)), 1)

    def test_multiplicative_frozen_example(self):
        x = term(2, (1,), (2,))
        y = term(2, (2,), (2,))
        assert embed_balanced(x * y, 1) == embed_balanced(x, 1) * embed_balanced(y, 1)

    def test_adjoint_becomes_dagger(self):
        x = term(2, (1,), (2,), coeff=GaussianRational(Fraction(1), Fraction(2)))
        assert embed_balanced(x.adjoint(), 1) == embed_balanced(x, 1).dagger()

    @given(elements(2, max_len=1), elements(2, max_len=1))
    def test_multiplicative_on_balanced_parts(self, x, y):
        x = x.weight_split().get(0, Element.zero(2))
        y = y.weight_split().get(0, Element.zero(2))
        k = 2
        lhs = embed_balanced(x * y, k)
        assert lhs == embed_balanced(x, k) * embed_balanced(y, k)

    def test_algebraically_equal_elements_embed_identically(self):
        split = term(2, (1,), (1,)) + term(2, (2,), (2,))
        assert embed_balanced(split, 2) == embed_balanced(Element.unit(2), 2)


class TestIsPsd:
    def test_requires_hermitian(self):
        with pytest.raises(ValueError):
            is_psd(m2(1, 1, 0, 1))

    @pytest.mark.parametrize(
        "m, expected",
        [
            (m2(1, 2, 2, 1), False),
            (m2(1, 0, 0, 0), True),
            (m2(0, 0, 0, -1), False),
            (m2(0, 1, 1, 0), False),
            (Matrix.zero(3), True),
            (Matrix.identity(3), True),
            (m2(gr(2), gr(0, 1), gr(0, -1), gr(2)), True),
            (m2(gr(1), gr(0, 2), gr(0, -2), gr(1)), False),
        ],
    )
    def test_examples(self, m, expected):
        assert is_psd(m) is expected

    def test_gram_matrices_are_psd(self):
        rng = random.Random(11)
        for _ in range(25):
            a = random_hermitian(rng, 3)
            assert is_psd(a * a)  # a Hermitian, so a*a = a a† is a Gram matrix

    def test_agrees_with_charpoly_oracle(self):
        rng = random.Random(23)
        for dim in (2, 3):
            for _ in range(60):
                h = random_hermitian(rng, dim)
                assert is_psd(h) is psd_by_charpoly(h)


class TestTraceCrossCheck:
    def test_unit(self):
        assert trace_cross_check(Element.unit(2), 1)
        assert trace_cross_check(Element.unit(2), 3)

    def test_projections_and_units(self):
        assert trace_cross_check(term(2, (1,), (1,)), 1)
        assert trace_cross_check(term(2, (1,), (2,)), 2)
        assert trace_cross_check(term(3, (1, 2), (1, 2)), 2)

    def test_random_balanced(self):
        rng = random.Random(5)
        for _ in range(30):
            x = random_balanced(rng, 2, k=2)
            assert trace_cross_check(x, 2)


class TestKadisonSchwartz:
    def test_endomorphism_satisfies_inequality(self):
        rng = random.Random(7)
        endo = canonical_endomorphism(2)
        for _ in range(10):
            x = random_balanced(rng, 2, k=2)
            assert kadison_schwartz_check(endo, x, 2)

    def test_compression_corner_satisfies_inequality(self):
        corner = ad(Element.generator(2, 1).adjoint())
        assert kadison_schwartz_check(corner, term(2, (1,), (2,)), 1)

    def test_amplified_identity_fails(self):
        # x -> 2x is CP but not contractive: F(x*x) - F(x)*F(x) = -2 x*x
        double = WeightedKraus(((Fraction(2), Element.unit(2)),))
        assert not kadison_schwartz_check(double, term(2, (1,), (2,)), 1)

    def test_rejects_unbalanced_argument(self):
        with pytest.raises(ValueError):
            kadison_schwartz_check(canonical_endomorphism(2), Element.generator(2, 1), 1)

    def test_rejects_overlong_argument(self):
        with pytest.raises(ValueError):
            kadison_schwartz_check(canonical_endomorphism(2), term(2, (1, 1), (1, 1)), 1)
