"""The canonical gauge-invariant state on O_n and the inner product it induces.

``phi`` evaluates the state in closed form::

    phi(S_mu S_nu*) = n^{-|mu|}  if mu == nu,  else 0

extended linearly.  :func:`phi_by_iteration` recomputes the same value by
repeatedly applying the standard left inverse ``x -> (1/n) sum_i S_i* x S_i``
until the element stabilizes; it exists purely as an independent cross-check
(the engine itself never calls it) and the two are compared term-for-term in
the test suite.

``inner(x, y) = phi(y* x)`` gives the GNS inner product, conjugate-linear in
``y``.  :func:`verify_adjoint` and :func:`preserves_phi` sweep basis words and
return mismatch records; an empty list is a pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, basis_words
from .scalars import GaussianRational, ZERO

__all__ = [
    "phi",
    "phi_by_iteration",
    "inner",
    "Mismatch",
    "verify_adjoint",
    "preserves_phi",
]


def phi(x: Element) -> GaussianRational:
    """The canonical state, in closed form.

    Only diagonal balanced terms contribute: phi(S_mu S_mu*) = n^{-|mu|}.
    """
    total = ZERO
    for (mu, nu), c in x._terms.items():
        if mu == nu:
            total = total + c * Fraction(1, x.rank ** len(mu))
    return total


def _left_inverse_step(x: Element) -> Element:
    """(1/n) sum_i S_i* x S_i, written out directly so this oracle does not
    depend on the map-calculus module it is meant to cross-check."""
    n = x.rank
    w = Fraction(1, n)
    out = Element.zero(n)
    for i in range(1, n + 1):
        si = Element.generator(n, i)
        out = out + (si.adjoint() * x * si).scale(w)
    return out


def _iterate_word(n: int, mu, nu) -> GaussianRational:
    x = Element.term(n, 1, mu, nu)
    seen = set()
    while True:
        if x.is_zero:
            return ZERO
        scalar = x.scalar_part()
        if scalar is not None:
            return scalar
        keys = frozenset(x._terms)
        if keys in seen:
            # The word part cycles while the coefficient keeps shrinking by
            # 1/n per step (this happens exactly on nonzero-weight words,
            # whose left-over word is cyclically shifted); the limit is 0.
            return ZERO
        seen.add(keys)
        x = _left_inverse_step(x)


def phi_by_iteration(x: Element) -> GaussianRational:
    """The state evaluated as the limit of iterated left-inverse applications.

    Balanced words stabilize to an exact scalar in at most |mu| steps;
    nonzero-weight words enter a coefficient-shrinking cycle and converge
    to 0, detected by recurrence of the word support.  Extended linearly.
    """
    total = ZERO
    for (mu, nu), c in x._terms.items():
        total = total + c * _iterate_word(x.rank, mu, nu)
    return total


def inner(x: Element, y: Element) -> GaussianRational:
    """<x, y> = phi(y* x); linear in x, conjugate-linear in y."""
    return phi(y.adjoint() * x)


@dataclass(frozen=True)
class Mismatch:
    """One failed comparison, printable as a counterexample."""

    x: str
    y: str | None
    lhs: GaussianRational
    rhs: GaussianRational

    def line(self) -> str:
        at = f"x={self.x}" if self.y is None else f"x={self.x} y={self.y}"
        return f"{at} lhs={self.lhs} rhs={self.rhs}"


def verify_adjoint(F, G, level: int) -> list[Mismatch]:
    """Check <F x, y> == <x, G y> on all basis-word pairs up to ``level``.

    ``F`` and ``G`` are maps with an ``apply(Element) -> Element`` method and
    a ``rank`` attribute.  Returns the failing pairs as records; empty means
    the pairing identity holds on the whole sweep.
    """
    words = list(basis_words(F.rank, level))
    f_images = [F.apply(w) for w in words]
    g_images = [G.apply(w) for w in words]
    failures = []
    for x, fx in zip(words, f_images):
        for y, gy in zip(words, g_images):
            lhs = inner(fx, y)
            rhs = inner(x, gy)
            if lhs != rhs:
                failures.append(Mismatch(str(x), str(y), lhs, rhs))
    return failures


def preserves_phi(F, level: int) -> list[Mismatch]:
    """Check phi(F w) == phi(w) on all basis words up to ``level``."""
    failures = []
    for w in basis_words(F.rank, level):
        lhs = phi(F.apply(w))
        rhs = phi(w)
        if lhs != rhs:
            failures.append(Mismatch(str(w), None, lhs, rhs))
    return failures
