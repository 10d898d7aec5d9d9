"""Finite formal sums over the Cuntz algebra O_n.

The algebra of rank ``n >= 2`` is generated by isometries ``S_1 .. S_n``
subject to::

    S_i* S_j = delta_ij * 1        and        sum_i S_i S_i* = 1

Every element handled here is a finite sum of terms ``c * S_mu S_nu*``
where ``mu`` and ``nu`` are words over the alphabet ``{1, .., n}`` and the
coefficient ``c`` is a Gaussian rational.  Products of such terms stay in
this span::

    (S_mu S_nu*)(S_alpha S_beta*) = S_{mu.gamma} S_beta*   if alpha = nu.gamma
                                  = S_mu S_{beta.gamma}*   if nu = alpha.gamma
                                  = 0                      otherwise

Distinct formal sums may denote the same element (the second relation above
lets a term be split into ``n`` longer siblings), so structural equality of
term dictionaries is *not* algebraic equality.  :meth:`Element.equals`
decides the latter by rewriting each weight-homogeneous part to a common
right-word length, where the surviving words are linearly independent.
:meth:`Element.canonical_reduce` goes the other way — collapsing complete
sibling families for compact printing — and is display-level only; it is
never used to decide equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .scalars import GaussianRational, ZERO, as_scalar

__all__ = [
    "RankMismatchError",
    "Word",
    "Term",
    "Element",
    "subword",
    "basis_words",
    "scalar_ratio",
]


class RankMismatchError(ValueError):
    """Raised when values of different ranks are combined."""


def _check_rank(n: int) -> int:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank must be an integer >= 2, got {n!r}")
    return n


def _check_letters(n: int, letters) -> tuple[int, ...]:
    letters = tuple(letters)
    for a in letters:
        if not isinstance(a, int) or not 1 <= a <= n:
            raise ValueError(f"letter {a!r} out of range 1..{n}")
    return letters


def _common_rank(a, b) -> int:
    if a.rank != b.rank:
        raise RankMismatchError(f"rank mismatch: {a.rank} vs {b.rank}")
    return a.rank


@dataclass(frozen=True)
class Word:
    """A word over the alphabet ``{1, .., rank}``; the label of S_mu."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rank", _check_rank(self.rank))
        object.__setattr__(self, "letters", _check_letters(self.rank, self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def concat(self, other: "Word") -> "Word":
        return Word(_common_rank(self, other), self.letters + other.letters)

    def __str__(self) -> str:
        return "S[" + ",".join(map(str, self.letters)) + "]" if self.letters else "1"


def subword(beta: Word, i: int, j: int) -> Word:
    """The letters ``i`` through ``j`` of ``beta``, 1-indexed, inclusive.

    Requires ``1 <= i <= j <= len(beta)``.
    """
    if not 1 <= i <= j <= len(beta):
        raise ValueError(f"subword range ({i},{j}) invalid for word of length {len(beta)}")
    return Word(beta.rank, beta.letters[i - 1 : j])


@dataclass(frozen=True)
class Term:
    """One summand ``coeff * S_left S_right*``."""

    coeff: GaussianRational
    left: Word
    right: Word

    @property
    def weight(self) -> int:
        return len(self.left) - len(self.right)


def _term_order(key) -> tuple:
    mu, nu = key
    return (len(mu) - len(nu), mu, nu)


class Element:
    """A finite formal sum of terms ``c * S_mu S_nu*`` of one fixed rank.

    Instances are immutable; all arithmetic returns new elements.  ``==``
    compares term dictionaries structurally.  Use :meth:`equals` for
    equality in the algebra.
    """

    __slots__ = ("rank", "_terms")

    def __init__(self, rank: int, terms=None):
        _check_rank(rank)
        object.__setattr__(self, "rank", rank)
        merged: dict = {}
        if terms:
            for (mu, nu), c in terms.items() if isinstance(terms, dict) else terms:
                c = as_scalar(c)
                if c.is_zero:
                    continue
                key = (_check_letters(rank, mu), _check_letters(rank, nu))
                acc = merged.get(key)
                c = c if acc is None else acc + c
                if c.is_zero:
                    merged.pop(key, None)
                else:
                    merged[key] = c
        object.__setattr__(self, "_terms", merged)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Element is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, rank: int) -> "Element":
        return cls(rank)

    @classmethod
    def unit(cls, rank: int) -> "Element":
        return cls.term(rank, 1, (), ())

    @classmethod
    def term(cls, rank: int, coeff, mu=(), nu=()) -> "Element":
        return cls(rank, [((tuple(mu), tuple(nu)), as_scalar(coeff))])

    @classmethod
    def generator(cls, rank: int, i: int) -> "Element":
        """The isometry S_i."""
        return cls.term(rank, 1, (i,), ())

    @classmethod
    def word(cls, rank: int, mu) -> "Element":
        """The product S_mu = S_{mu_1} ... S_{mu_k} (the unit if mu is empty)."""
        return cls.term(rank, 1, tuple(mu), ())

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> list[Term]:
        """The summands in canonical order: by weight, then left word, then right."""
        return [
            Term(c, Word(self.rank, mu), Word(self.rank, nu))
            for (mu, nu), c in sorted(self._terms.items(), key=lambda kv: _term_order(kv[0]))
        ]

    def term_keys(self):
        return set(self._terms)

    def coefficient(self, mu, nu) -> GaussianRational:
        return self._terms.get((tuple(mu), tuple(nu)), ZERO)

    def scalar_part(self):
        """The coefficient c if this element is literally c*1 or 0, else None."""
        if not self._terms:
            return ZERO
        if len(self._terms) == 1 and ((), ()) in self._terms:
            return self._terms[((), ())]
        return None

    def max_word_len(self) -> int:
        return max((max(len(mu), len(nu)) for mu, nu in self._terms), default=0)

    def max_right_len(self) -> int:
        return max((len(nu) for _, nu in self._terms), default=0)

    @property
    def is_balanced(self) -> bool:
        """True when every term has weight zero (|mu| = |nu|)."""
        return all(len(mu) == len(nu) for mu, nu in self._terms)

    # -- ring structure ------------------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        _common_rank(self, other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            acc = out.get(key)
            c = c if acc is None else acc + c
            if c.is_zero:
                out.pop(key, None)
            else:
                out[key] = c
        return Element(self.rank, out)

    def __neg__(self) -> "Element":
        return Element(self.rank, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, scalar) -> "Element":
        scalar = as_scalar(scalar)
        if scalar.is_zero:
            return Element(self.rank)
        return Element(self.rank, {k: scalar * c for k, c in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.scale(other)
        _common_rank(self, other)
        out: dict = {}
        for (mu, nu), c in self._terms.items():
            for (alpha, beta), d in other._terms.items():
                # (S_mu S_nu*)(S_alpha S_beta*): match nu against alpha.
                if len(nu) <= len(alpha):
                    if alpha[: len(nu)] != nu:
                        continue
                    key = (mu + alpha[len(nu) :], beta)
                else:
                    if nu[: len(alpha)] != alpha:
                        continue
                    key = (mu, beta + nu[len(alpha) :])
                cd = c * d
                acc = out.get(key)
                cd = cd if acc is None else acc + cd
                if cd.is_zero:
                    out.pop(key, None)
                else:
                    out[key] = cd
        return Element(self.rank, out)

    def __rmul__(self, other):
        # Scalars commute with everything; Element*Element goes through __mul__.
        return self.scale(other)

    def adjoint(self) -> "Element":
        """The *-operation: (c S_mu S_nu*)* = conj(c) S_nu S_mu*."""
        return Element(
            self.rank, {(nu, mu): c.conjugate() for (mu, nu), c in self._terms.items()}
        )

    # -- rewriting -----------------------------------------------------------

    def weight_split(self) -> dict[int, "Element"]:
        """Partition into gauge-homogeneous parts, keyed by |mu| - |nu|."""
        groups: dict[int, dict] = {}
        for (mu, nu), c in self._terms.items():
            groups.setdefault(len(mu) - len(nu), {})[(mu, nu)] = c
        return {w: Element(self.rank, g) for w, g in sorted(groups.items())}

    def level_normalize(self, level: int) -> "Element":
        """Rewrite so every term's right word has length exactly ``level``.

        Uses S_mu S_nu* = sum_{|gamma| = t} S_{mu.gamma} S_{nu.gamma}*, which
        follows from sum_i S_i S_i* = 1.  The represented element is
        unchanged; only the expression is.  ``level`` must be at least the
        longest right word already present.
        """
        if level < 0:
            raise ValueError("level must be nonnegative")
        out: dict = {}
        alphabet = range(1, self.rank + 1)
        for (mu, nu), c in self._terms.items():
            pad = level - len(nu)
            if pad < 0:
                raise ValueError(
                    f"level {level} below existing right-word length {len(nu)}"
                )
            for gamma in itertools.product(alphabet, repeat=pad):
                key = (mu + gamma, nu + gamma)
                acc = out.get(key)
                cc = c if acc is None else acc + c
                if cc.is_zero:
                    out.pop(key, None)
                else:
                    out[key] = cc
        return Element(self.rank, out)

    def canonical_reduce(self) -> "Element":
        """Collapse complete sibling families for compact display.

        Whenever all ``n`` terms ``(mu.i, nu.i)`` for ``i = 1..n`` are present
        with one shared coefficient ``c``, they are replaced by ``c * S_mu
        S_nu*``; repeated to a fixed point.  Display-level only — equality
        of elements is decided by :meth:`equals`, never by this rewriting.
        """
        n = self.rank
        terms = dict(self._terms)
        while True:
            families: dict = {}
            for (mu, nu) in terms:
                if mu and nu and mu[-1] == nu[-1]:
                    families.setdefault((mu[:-1], nu[:-1]), {})[mu[-1]] = (mu, nu)
            collapsed = None
            for parent in sorted(families, key=_term_order):
                kids = families[parent]
                if len(kids) != n:
                    continue
                coeffs = {terms[kids[i]] for i in kids}
                if len(coeffs) != 1:
                    continue
                c = coeffs.pop()
                for key in kids.values():
                    del terms[key]
                acc = terms.get(parent)
                c = c if acc is None else acc + c
                if c.is_zero:
                    terms.pop(parent, None)
                else:
                    terms[parent] = c
                collapsed = parent
                break
            if collapsed is None:
                return Element(self.rank, terms)

    # -- equality --------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.rank == other.rank
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.rank, frozenset(self._terms.items())))

    def equals(self, other: "Element") -> bool:
        """Algebraic equality, decided per weight group.

        Each gauge-homogeneous part of the difference is rewritten to the
        group's maximal right-word length; the fixed-length words
        ``S_alpha S_beta*`` (|beta| = L, |alpha| = L + weight) are linearly
        independent, so the difference is zero iff every rewritten
        coefficient cancels.
        """
        _common_rank(self, other)
        diff = self - other
        for part in diff.weight_split().values():
            if not part.level_normalize(part.max_right_len()).is_zero:
                return False
        return True

    # -- text ----------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for term in self.terms():
            left, right = term.left, term.right
            if not left.letters and not right.letters:
                words = "1"
            else:
                words = ""
                if left.letters:
                    words += str(left)
                if right.letters:
                    words += str(right) + "'"
            c = term.coeff
            if c == as_scalar(1):
                chunks.append(words)
            elif words == "1":
                chunks.append(f"({c})*1")
            else:
                chunks.append(f"({c})*{words}")
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"<O{self.rank} element {self}>"


# -- enumeration and comparison helpers ---------------------------------------


def _words_upto(n: int, level: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    for k in range(level + 1):
        out.extend(itertools.product(range(1, n + 1), repeat=k))
    return out


def basis_words(n: int, level: int) -> Iterator[Element]:
    """All S_mu S_nu* with |mu|, |nu| <= level, in a fixed scan order.

    The order is deterministic (by length then lexicographically, mu outer,
    nu inner), which the witness-search routines rely on.
    """
    words = _words_upto(n, level)
    for mu in words:
        for nu in words:
            yield Element.term(n, 1, mu, nu)


def scalar_ratio(x: Element, y: Element):
    """The scalar ``lam`` with ``x = lam * y`` in the algebra, or None.

    The candidate is read off the first nonzero coordinate of ``y`` after
    rewriting both arguments to a common right-word length per weight group,
    then verified globally with :meth:`Element.equals`.  Returns None when
    ``y`` is zero (no unique ratio exists).
    """
    _common_rank(x, y)
    if y.is_zero:
        return None
    xg = x.weight_split()
    yg = y.weight_split()
    for w in sorted(set(xg) | set(yg)):
        xs = xg.get(w, Element.zero(x.rank))
        ys = yg.get(w, Element.zero(x.rank))
        level = max(xs.max_right_len(), ys.max_right_len())
        xs = xs.level_normalize(level)
        ys = ys.level_normalize(level)
        for key in sorted(ys._terms, key=_term_order):
            lam = xs._terms.get(key, ZERO) / ys._terms[key]
            return lam if x.equals(y.scale(lam)) else None
    return None
