"""Exact matrix bridge for the balanced part of the algebra.

The span of ``{S_mu S_nu* : |mu| = |nu| = k}`` multiplies exactly like the
full matrix algebra of size ``n^k``: after rewriting to right-word length
``k``, the assignment ``S_mu S_nu* -> E_{mu,nu}`` (matrix units indexed by
the lexicographic enumeration of length-``k`` words) is an isomorphism onto
``M_{n^k}``.  That turns positivity questions about balanced elements into
exact linear algebra over Q(i).

Positivity is decided by :func:`is_psd`: pivoted triangular elimination in
exact arithmetic.  Each pivot of a positive semidefinite Hermitian matrix is
real and nonnegative, and a zero diagonal entry forces its whole row and
column to vanish; any violation is a certificate of indefiniteness.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Element
from .scalars import GaussianRational, ZERO, ONE, as_scalar
from .state import phi

__all__ = [
    "Matrix",
    "word_index",
    "embed_balanced",
    "is_psd",
    "trace_cross_check",
    "kadison_schwartz_check",
]


class Matrix:
    """A square matrix over Q(i); immutable, exact, structurally comparable."""

    __slots__ = ("dim", "rows")

    def __init__(self, rows):
        if isinstance(rows, Matrix):
            rows = rows.rows
        rows = tuple(tuple(as_scalar(e) for e in row) for row in rows)
        dim = len(rows)
        if any(len(row) != dim for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zero(cls, dim: int) -> "Matrix":
        return cls([[ZERO] * dim for _ in range(dim)])

    @classmethod
    def identity(cls, dim: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)])

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._match(other)
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._match(other)
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return Matrix([[e * as_scalar(other) for e in row] for row in self.rows])
        self._match(other)
        cols = list(zip(*other.rows))
        return Matrix(
            [
                [sum((a * b for a, b in zip(row, col)), ZERO) for col in cols]
                for row in self.rows
            ]
        )

    def __rmul__(self, other):
        return Matrix([[as_scalar(other) * e for e in row] for row in self.rows])

    def _match(self, other: "Matrix"):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def dagger(self) -> "Matrix":
        return Matrix(
            [
                [self.rows[j][i].conjugate() for j in range(self.dim)]
                for i in range(self.dim)
            ]
        )

    def trace(self) -> GaussianRational:
        return sum((self.rows[i][i] for i in range(self.dim)), ZERO)

    @property
    def is_hermitian(self) -> bool:
        return self == self.dagger()

    def __str__(self) -> str:
        # Row-major exact text, one row per line; entries contain no spaces,
        # so the dump is diffable and unambiguous.
        return "\n".join(" ".join(str(e) for e in row) for row in self.rows)

    def __repr__(self) -> str:
        return f"<{self.dim}x{self.dim} matrix over Q(i)>"


def word_index(n: int, k: int, word: tuple[int, ...]) -> int:
    """Position of a length-``k`` word in the lexicographic enumeration."""
    if len(word) != k:
        raise ValueError(f"expected a word of length {k}, got {word!r}")
    idx = 0
    for a in word:
        idx = idx * n + (a - 1)
    return idx


def embed_balanced(x: Element, k: int) -> Matrix:
    """Represent a balanced element on the level-``k`` matrix algebra.

    Requires every term of ``x`` to have weight zero and word length at most
    ``k``.  The element is first rewritten to right-word length ``k``; the
    resulting coefficients are exactly the matrix entries.  The embedding is
    unital and multiplicative, and intertwines adjoint with conjugate
    transpose — properties the test suite checks against direct computation.
    """
    if not x.is_balanced:
        raise ValueError("embed_balanced needs a balanced element (all weights zero)")
    if x.max_word_len() > k:
        raise ValueError(f"element has words longer than level {k}")
    leveled = x.level_normalize(k)
    n = x.rank
    dim = n**k
    rows = [[ZERO] * dim for _ in range(dim)]
    for (mu, nu), c in leveled._terms.items():
        rows[word_index(n, k, mu)][word_index(n, k, nu)] = c
    return Matrix(rows)


def is_psd(m: Matrix) -> bool:
    """Exact positive-semidefiniteness for a Hermitian matrix.

    Pivoted elimination: take the first nonzero diagonal entry as pivot —
    it must be real and positive — and eliminate; a diagonal of all zeros
    forces the remaining block to be identically zero.  Raises ValueError
    on a non-Hermitian input rather than guessing.
    """
    if not m.is_hermitian:
        raise ValueError("is_psd is defined for Hermitian matrices only")
    # Work on a mutable copy, shrinking the active index set as we pivot.
    a = [list(row) for row in m.rows]
    active = list(range(m.dim))
    while active:
        pivot = None
        for i in active:
            d = a[i][i]
            if not d.is_zero:
                if not d.is_real or d.re < 0:
                    return False
                pivot = i
                break
        if pivot is None:
            # All diagonal entries vanish: PSD iff the rest vanishes too.
            return all(a[i][j].is_zero for i in active for j in active)
        d = a[pivot][pivot]
        rest = [i for i in active if i != pivot]
        for i in rest:
            factor = a[i][pivot] / d
            if factor.is_zero:
                continue
            for j in rest:
                a[i][j] = a[i][j] - factor * a[pivot][j]
        active = rest
    return True


def trace_cross_check(x: Element, k: int) -> bool:
    """phi(x) against the normalized matrix trace at level ``k``."""
    m = embed_balanced(x, k)
    return phi(x) == m.trace() * Fraction(1, x.rank**k)


def kadison_schwartz_check(F, x: Element, k: int) -> bool:
    """Exact check that F(x* x) - F(x)* F(x) is positive semidefinite.

    ``x`` must be balanced with words no longer than ``k``, and ``F`` must
    send it (and ``x* x``) to balanced elements; otherwise the difference
    leaves the matrix bridge's scope and a ValueError is raised.  The
    difference is embedded at the smallest level containing it.
    """
    if not x.is_balanced or x.max_word_len() > k:
        raise ValueError("kadison_schwartz_check needs a balanced element within level k")
    fx = F.apply(x)
    gain = F.apply(x.adjoint() * x) - fx.adjoint() * fx
    if not gain.is_balanced:
        raise ValueError("map left the balanced span; positivity undecidable here")
    return is_psd(embed_balanced(gain, gain.max_word_len()))
