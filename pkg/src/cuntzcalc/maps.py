"""Completely positive maps on the algebra, kept as printable ASTs.

A map is a small expression tree rather than a closure, so reports can name
exactly what was checked and the CLI can parse and print the same syntax:

* ``Identity``               — x -> x
* ``WeightedKraus``          — x -> sum_i w_i * a_i x a_i*   (w_i > 0 rational)
* ``Homomorphism``           — generator substitution S_i -> images[i],
                                accepted only if the images satisfy the
                                defining relations exactly
* ``Compose``                — outer after inner
* ``MapSum``                 — pointwise sum of maps

The two distinguished maps are built by :func:`canonical_endomorphism`
(``x -> sum_i S_i x S_i*``) and :func:`standard_left_inverse`
(``x -> (1/n) sum_i S_i* x S_i``).  The left inverse deliberately carries
its ``1/n`` as a *weight*, not as an amplitude ``S_i/sqrt(n)``: weights stay
rational, so every computation remains inside Q(i).

The second half of the module is the decomposition toolkit: operational
partitions of unity, convex combinations indexed by them, scalar-ratio and
commutant-factorization witness searches.  All verdicts are exact and the
searches scan basis words in a fixed order, so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, RankMismatchError, basis_words, scalar_ratio
from .matrices import Matrix, embed_balanced, is_psd
from .scalars import GaussianRational, format_rational

__all__ = [
    "MapExpr",
    "Identity",
    "WeightedKraus",
    "Homomorphism",
    "Compose",
    "MapSum",
    "apply",
    "canonical_endomorphism",
    "standard_left_inverse",
    "ad",
    "quasi_free",
    "OperationalPartition",
    "is_operational_partition",
    "operational_convex",
    "is_unital",
    "cuntz_relations_check",
    "find_scalar_ratio",
    "commutes_with_range",
    "check_component_factorization",
    "check_commutant_partition",
]


class MapExpr:
    """Base class; subclasses implement ``apply`` and carry a ``rank``."""

    rank: int

    def apply(self, x: Element) -> Element:
        raise NotImplementedError

    def _take(self, x: Element) -> Element:
        if x.rank != self.rank:
            raise RankMismatchError(f"map of rank {self.rank} applied to rank {x.rank}")
        return x


@dataclass(frozen=True)
class Identity(MapExpr):
    rank: int

    def apply(self, x: Element) -> Element:
        return self._take(x)

    def __str__(self) -> str:
        return "id"


def _as_weight(w) -> Fraction:
    if isinstance(w, GaussianRational):
        if not w.is_real:
            raise ValueError("Kraus weights must be rational (real)")
        w = w.re
    w = Fraction(w)
    if w <= 0:
        raise ValueError(f"Kraus weights must be positive, got {w}")
    return w


@dataclass(frozen=True)
class WeightedKraus(MapExpr):
    """x -> sum_i w_i * a_i x a_i*, with positive rational weights."""

    pairs: tuple

    def __post_init__(self):
        pairs = tuple((_as_weight(w), op) for w, op in self.pairs)
        if not pairs:
            raise ValueError("WeightedKraus needs at least one (weight, op) pair")
        ranks = {op.rank for _, op in pairs}
        if len(ranks) != 1:
            raise RankMismatchError("Kraus operators must share one rank")
        object.__setattr__(self, "pairs", pairs)

    @property
    def rank(self) -> int:
        return self.pairs[0][1].rank

    def apply(self, x: Element) -> Element:
        x = self._take(x)
        out = Element.zero(self.rank)
        for w, op in self.pairs:
            out = out + (op * x * op.adjoint()).scale(w)
        return out

    def __str__(self) -> str:
        if len(self.pairs) == 1 and self.pairs[0][0] == 1:
            return f"ad({self.pairs[0][1]})"
        body = ",".join(f"({format_rational(w)},{op})" for w, op in self.pairs)
        return f"kraus({body})"


@dataclass(frozen=True)
class Homomorphism(MapExpr):
    """Unital *-endomorphism determined by generator images.

    Construction fails unless the images satisfy the defining relations
    exactly (see :func:`cuntz_relations_check`), so an instance can always
    be applied safely.
    """

    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        if not images:
            raise ValueError("Homomorphism needs at least one image")
        ranks = {img.rank for img in images}
        if len(ranks) != 1:
            raise RankMismatchError("generator images must share one rank")
        rank = ranks.pop()
        if len(images) != rank:
            raise ValueError(
                f"need exactly {rank} generator images for rank {rank}, got {len(images)}"
            )
        if not cuntz_relations_check(list(images)):
            raise ValueError("generator images do not satisfy the defining relations")
        object.__setattr__(self, "images", images)

    @property
    def rank(self) -> int:
        return self.images[0].rank

    def apply(self, x: Element) -> Element:
        x = self._take(x)
        out = Element.zero(self.rank)
        unit = Element.unit(self.rank)
        for (mu, nu), c in x._terms.items():
            left = unit
            for a in mu:
                left = left * self.images[a - 1]
            right = unit
            for b in nu:
                right = right * self.images[b - 1]
            out = out + (left * right.adjoint()).scale(c)
        return out

    def __str__(self) -> str:
        return "hom(" + ",".join(str(img) for img in self.images) + ")"


@dataclass(frozen=True)
class Compose(MapExpr):
    outer: MapExpr
    inner: MapExpr

    def __post_init__(self):
        if self.outer.rank != self.inner.rank:
            raise RankMismatchError("composed maps must share one rank")

    @property
    def rank(self) -> int:
        return self.outer.rank

    def apply(self, x: Element) -> Element:
        return self.outer.apply(self.inner.apply(x))

    def __str__(self) -> str:
        return f"compose({self.outer},{self.inner})"


@dataclass(frozen=True)
class MapSum(MapExpr):
    """Pointwise sum; how operational convex combinations are represented."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("MapSum needs at least one part")
        if len({p.rank for p in parts}) != 1:
            raise RankMismatchError("summed maps must share one rank")
        object.__setattr__(self, "parts", parts)

    @property
    def rank(self) -> int:
        return self.parts[0].rank

    def apply(self, x: Element) -> Element:
        out = Element.zero(self.rank)
        for p in self.parts:
            out = out + p.apply(x)
        return out

    def __str__(self) -> str:
        return "sum(" + ",".join(str(p) for p in self.parts) + ")"


def apply(f: MapExpr, x: Element) -> Element:
    return f.apply(x)


# -- distinguished maps -------------------------------------------------------


def canonical_endomorphism(n: int) -> WeightedKraus:
    """x -> sum_i S_i x S_i* (weight-preserving unital *-endomorphism)."""
    return WeightedKraus(
        tuple((Fraction(1), Element.generator(n, i)) for i in range(1, n + 1))
    )


def standard_left_inverse(n: int) -> WeightedKraus:
    """x -> (1/n) sum_i S_i* x S_i; a left inverse of the canonical
    endomorphism and its adjoint for the canonical inner product."""
    return WeightedKraus(
        tuple(
            (Fraction(1, n), Element.generator(n, i).adjoint())
            for i in range(1, n + 1)
        )
    )


def ad(v: Element) -> WeightedKraus:
    """x -> v x v*."""
    return WeightedKraus(((Fraction(1), v),))


def quasi_free(u) -> Homomorphism:
    """The automorphism S_i -> sum_j u[j][i] S_j for an exactly unitary u.

    ``u`` is a square matrix of Gaussian rationals; unitarity is verified
    exactly and is what makes the images satisfy the defining relations.
    Its inverse (and adjoint for the canonical inner product) is
    ``quasi_free`` of the conjugate transpose.
    """
    m = Matrix(u)
    n = m.dim
    if n < 2:
        raise ValueError("need a matrix of size at least 2")
    eye = Matrix.identity(n)
    if m * m.dagger() != eye or m.dagger() * m != eye:
        raise ValueError("matrix is not exactly unitary")
    images = []
    for i in range(n):
        img = Element.zero(n)
        for j in range(n):
            img = img + Element.generator(n, j + 1).scale(m.rows[j][i])
        images.append(img)
    return Homomorphism(tuple(images))


# -- partitions and decompositions --------------------------------------------


def is_operational_partition(ops) -> bool:
    """Exact check of sum_i v_i v_i* = 1 for a nonempty family."""
    ops = list(ops)
    if not ops:
        raise ValueError("a partition needs at least one element")
    n = ops[0].rank
    total = Element.zero(n)
    for v in ops:
        total = total + v * v.adjoint()
    return total.equals(Element.unit(n))


@dataclass(frozen=True)
class OperationalPartition:
    """A family {v_i} with sum_i v_i v_i* = 1, validated at construction."""

    ops: tuple

    def __post_init__(self):
        ops = tuple(self.ops)
        if not is_operational_partition(ops):
            raise ValueError("not an operational partition of unity")
        object.__setattr__(self, "ops", ops)

    def __len__(self) -> int:
        return len(self.ops)


def operational_convex(partition, maps) -> MapSum:
    """The combination x -> sum_i v_i F_i(x) v_i*.

    ``partition`` may be an OperationalPartition or a raw list (validated on
    the way in); one map per partition element.  Built as a sum of
    ``Compose(ad(v_i), F_i)`` so the result stays printable.
    """
    if not isinstance(partition, OperationalPartition):
        partition = OperationalPartition(tuple(partition))
    maps = list(maps)
    if len(maps) != len(partition):
        raise ValueError(
            f"{len(partition)} partition elements but {len(maps)} maps"
        )
    return MapSum(tuple(Compose(ad(v), f) for v, f in zip(partition.ops, maps)))


def is_unital(f: MapExpr) -> bool:
    unit = Element.unit(f.rank)
    return f.apply(unit).equals(unit)


def cuntz_relations_check(images) -> bool:
    """Do the given elements satisfy the defining relations exactly?

    Checks v_i* v_j = delta_ij 1 for all pairs and sum_i v_i v_i* = 1.
    """
    images = list(images)
    if len(images) < 2:
        return False
    n = images[0].rank
    unit = Element.unit(n)
    zero = Element.zero(n)
    for i, vi in enumerate(images):
        for j, vj in enumerate(images):
            prod = vi.adjoint() * vj
            if not prod.equals(unit if i == j else zero):
                return False
    total = Element.zero(n)
    for v in images:
        total = total + v * v.adjoint()
    return total.equals(unit)


# -- witness searches ----------------------------------------------------------


def find_scalar_ratio(f: MapExpr, g: MapExpr, level: int):
    """The unique scalar ``lam`` with ``f = lam * g`` on all basis words
    up to ``level``, or None.

    The candidate is pinned at the first scanned word where ``g``'s image
    is (algebraically) nonzero, then verified on the whole sweep, so the
    outcome does not depend on scan order.  Returns None as well when every
    ``g`` image is zero — no unique ratio exists.
    """
    if f.rank != g.rank:
        raise RankMismatchError("maps must share one rank")
    images = [(f.apply(w), g.apply(w)) for w in basis_words(f.rank, level)]
    zero = Element.zero(f.rank)
    lam = None
    for fw, gw in images:
        if not gw.equals(zero):
            lam = scalar_ratio(fw, gw)
            break
    if lam is None:
        return None
    for fw, gw in images:
        if not fw.equals(gw.scale(lam)):
            return None
    return lam


def commutes_with_range(z: Element, f: MapExpr, level: int) -> bool:
    """Does ``z`` commute with every ``f(w)`` for basis words up to ``level``?"""
    for w in basis_words(f.rank, level):
        fw = f.apply(w)
        if not (z * fw).equals(fw * z):
            return False
    return True


def check_component_factorization(
    component: MapExpr, endo: MapExpr, z: Element, level: int
) -> bool:
    """Is ``component = z * endo(.)`` with ``z`` commuting with the range?

    This is the witness shape for a component of an operational convex
    combination: a range-commutant element ``z`` absorbing the component.
    """
    if not commutes_with_range(z, endo, level):
        return False
    for w in basis_words(endo.rank, level):
        if not component.apply(w).equals(z * endo.apply(w)):
            return False
    return True


def check_commutant_partition(zs, endo: MapExpr, level: int) -> bool:
    """Validate a family {z_i} as a commutant partition for ``endo``:
    the z_i sum to 1 exactly, each commutes with the range, and each is
    positive semidefinite via the matrix bridge.

    Positivity of an element with a nonzero-weight component cannot be
    decided on the balanced bridge; that raises rather than guesses.
    """
    zs = list(zs)
    if not zs:
        raise ValueError("a partition needs at least one element")
    for z in zs:
        if not z.is_balanced:
            raise ValueError(
                "positivity undecidable here: element has a nonzero-weight part"
            )
    n = endo.rank
    total = Element.zero(n)
    for z in zs:
        total = total + z
    if not total.equals(Element.unit(n)):
        return False
    for z in zs:
        if not commutes_with_range(z, endo, level):
            return False
        if not is_psd(embed_balanced(z, z.max_word_len())):
            return False
    return True
