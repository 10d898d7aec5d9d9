"""Executable checks for the structure results the engine mechanizes.

Each ``check_*`` function sweeps exact computations over basis words (and
seeded random elements where randomness is called for) and returns a
:class:`CheckReport` whose witnesses name the exact left- and right-hand
sides compared — a failure is immediately a printable counterexample.

The registry keys are short stable identifiers, used verbatim by the CLI:

* ``prop6``  — the canonical endomorphism preserves the canonical state,
  and the standard left inverse is both a left inverse and the adjoint
  for the induced inner product.
* ``prop8``  — the canonical endomorphism is not irreducible (each range
  projection S_i S_i* is a non-scalar range commutant), its Kraus
  components admit commutant factorizations but no scalar ones, and the
  left inverse is not a Jordan homomorphism.
* ``prop9``  — compression by a single isometry (x -> S_i* x S_i) is
  unital but not a Jordan homomorphism, witnessed on (S_i + S_i*)^2.
* ``prop10`` — the idempotent map x -> sum_i S_i S_1* x S_1 S_i* equals its
  own square, composes with Ad S_1 back to the canonical endomorphism,
  matches its closed case formula, satisfies the Kadison-Schwarz
  inequality on random balanced elements, and its components factor
  through range projections but never through scalars.
* ``lemma5`` — quasi-free automorphisms preserve the state, and the
  adjoint of each equals its inverse (conjugate-transpose matrix).

``run_all`` executes every check plus a seeded property suite; every
verdict is reproducible bit-for-bit from ``(n, level, seed)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Element, basis_words, scalar_ratio
from .maps import (
    Compose,
    WeightedKraus,
    ad,
    canonical_endomorphism,
    check_commutant_partition,
    check_component_factorization,
    commutes_with_range,
    cuntz_relations_check,
    find_scalar_ratio,
    is_operational_partition,
    is_unital,
    operational_convex,
    quasi_free,
    standard_left_inverse,
)
from .matrices import (
    Matrix,
    embed_balanced,
    is_psd,
    kadison_schwartz_check,
    trace_cross_check,
)
from .scalars import GaussianRational
from .state import inner, phi, phi_by_iteration, preserves_phi, verify_adjoint

__all__ = [
    "Witness",
    "CheckReport",
    "check_prop6",
    "check_prop8",
    "check_prop9",
    "check_prop10",
    "check_lemma5",
    "check_properties",
    "run_all",
    "default_level",
    "default_unitaries",
    "named_mutation",
    "summary_table",
    "random_element",
    "random_balanced",
    "random_hermitian",
]


@dataclass(frozen=True)
class Witness:
    """One compared claim; ``ok`` is the exact verdict for this claim."""

    claim: str
    lhs: str
    rhs: str
    ok: bool

    def line(self) -> str:
        mark = "ok  " if self.ok else "FAIL"
        return f"  [{mark}] {self.claim}\n         lhs: {self.lhs}\n         rhs: {self.rhs}"

    def to_dict(self) -> dict:
        return {"claim": self.claim, "lhs": self.lhs, "rhs": self.rhs, "ok": self.ok}


@dataclass
class CheckReport:
    name: str
    params: dict
    witnesses: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(w.ok for w in self.witnesses)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def failures(self) -> list:
        return [w for w in self.witnesses if not w.ok]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": dict(self.params),
            "verdict": self.verdict,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }

    def render(self) -> str:
        head = f"{self.name} ({_params_text(self.params)}): {self.verdict}"
        body = "\n".join(w.line() for w in self.witnesses)
        return head + ("\n" + body if body else "")


def _params_text(params: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


def _sweep(claim: str, mismatches: list, total: int) -> list[Witness]:
    """An aggregate witness for a sweep, plus one witness per failure."""
    out = [
        Witness(
            claim,
            f"{len(mismatches)} mismatches in {total} comparisons",
            "0 mismatches",
            not mismatches,
        )
    ]
    out.extend(
        Witness(f"{claim} — counterexample", m.line(), "equality", False)
        for m in mismatches
    )
    return out


def _bool_witness(claim: str, got: bool, want: bool = True) -> Witness:
    return Witness(claim, str(got), str(want), got == want)


def default_level(n: int) -> int:
    """Sweep depth keeping runtimes comfortable: 2 for rank 2, 1 above."""
    return 2 if n == 2 else 1


# -- the named checks ---------------------------------------------------------


def check_prop6(n: int, level: int, endo=None, left_inv=None) -> CheckReport:
    """State preservation and adjointness of the canonical pair of maps."""
    endo = endo if endo is not None else canonical_endomorphism(n)
    left_inv = left_inv if left_inv is not None else standard_left_inverse(n)
    words = list(basis_words(n, level))
    report = CheckReport("prop6", {"n": n, "level": level})

    pres = preserves_phi(endo, level)
    report.witnesses += _sweep(
        f"phi(endo(w)) = phi(w) on basis words, level {level}", pres, len(words)
    )

    adj = verify_adjoint(endo, left_inv, level)
    report.witnesses += _sweep(
        f"<endo(x), y> = <x, left_inv(y)> on basis pairs, level {level}",
        adj,
        len(words) ** 2,
    )

    bad_inverse = [w for w in words if not left_inv.apply(endo.apply(w)).equals(w)]
    report.witnesses.append(
        Witness(
            f"left_inv(endo(w)) = w on basis words, level {level}",
            f"{len(bad_inverse)} mismatches in {len(words)} words",
            "0 mismatches",
            not bad_inverse,
        )
    )

    p1 = Element.term(n, 1, (1,), (1,))
    image = left_inv.apply(p1)
    expected = Element.unit(n).scale(Fraction(1, n))
    report.witnesses.append(
        Witness(
            "left inverse sends the first range projection to (1/n)*1",
            str(image),
            str(expected),
            image.equals(expected),
        )
    )
    return report


def check_prop8(n: int, level: int, endo=None, left_inv=None) -> CheckReport:
    """Non-irreducibility and non-Jordan witnesses for the canonical pair."""
    endo = endo if endo is not None else canonical_endomorphism(n)
    left_inv = left_inv if left_inv is not None else standard_left_inverse(n)
    report = CheckReport("prop8", {"n": n, "level": level})
    unit = Element.unit(n)
    projections = [Element.term(n, 1, (i,), (i,)) for i in range(1, n + 1)]

    for i, p in enumerate(projections, start=1):
        report.witnesses.append(
            _bool_witness(
                f"S[{i}]S[{i}]' commutes with the endomorphism range (level {level})",
                commutes_with_range(p, endo, level),
            )
        )
        lam = scalar_ratio(p, unit)
        report.witnesses.append(
            Witness(
                f"S[{i}]S[{i}]' is not a scalar multiple of 1",
                "no scalar" if lam is None else f"lam={lam}",
                "no scalar",
                lam is None,
            )
        )

    for i in range(1, n + 1):
        component = ad(Element.generator(n, i))
        lam = find_scalar_ratio(component, endo, level)
        report.witnesses.append(
            Witness(
                f"no scalar lam with ad(S[{i}]) = lam*endo (level {level})",
                "none" if lam is None else f"lam={lam}",
                "none",
                lam is None,
            )
        )
        report.witnesses.append(
            _bool_witness(
                f"ad(S[{i}]) = S[{i}]S[{i}]' * endo(.) with range-commutant factor",
                check_component_factorization(
                    component, endo, projections[i - 1], level
                ),
            )
        )

    report.witnesses.append(
        _bool_witness(
            "range projections form a commutant partition (sum 1, commute, PSD)",
            check_commutant_partition(projections, endo, level),
        )
    )

    p1 = projections[0]
    image = left_inv.apply(p1)
    image_of_square = left_inv.apply(p1 * p1)
    square_of_image = image * image
    report.witnesses.append(
        Witness(
            "left_inv(p1) = (1/n)*1",
            str(image),
            str(unit.scale(Fraction(1, n))),
            image.equals(unit.scale(Fraction(1, n))),
        )
    )
    report.witnesses.append(
        Witness(
            "left_inv(p1)^2 = (1/n^2)*1",
            str(square_of_image),
            str(unit.scale(Fraction(1, n * n))),
            square_of_image.equals(unit.scale(Fraction(1, n * n))),
        )
    )
    report.witnesses.append(
        Witness(
            "left inverse is not Jordan: left_inv(p1^2) != left_inv(p1)^2",
            str(image_of_square),
            str(square_of_image),
            not image_of_square.equals(square_of_image),
        )
    )
    return report


def check_prop9(n: int, i: int = 1, level: int = 1) -> CheckReport:
    """Compression x -> S_i* x S_i is unital and completely positive but not
    Jordan: it fails multiplicativity of squares on S_i + S_i*."""
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    compression = ad(Element.generator(n, i).adjoint())
    report = CheckReport("prop9", {"n": n, "i": i, "level": level})

    report.witnesses.append(
        _bool_witness("compression is unital", is_unital(compression))
    )
    report.witnesses.append(
        _bool_witness(
            "the single co-isometry is an operational partition",
            is_operational_partition([Element.generator(n, i).adjoint()]),
        )
    )

    a = Element.generator(n, i) + Element.generator(n, i).adjoint()
    image_of_square = compression.apply(a * a)
    expected_square = (
        Element.term(n, 1, (i, i), ())
        + Element.term(n, 2, (), ())
        + Element.term(n, 1, (), (i, i))
    )
    report.witnesses.append(
        Witness(
            "F((S+S')^2) = S^2 + 2*1 + S'^2",
            str(image_of_square),
            str(expected_square),
            image_of_square.equals(expected_square),
        )
    )

    image = compression.apply(a)
    report.witnesses.append(
        Witness("F(S+S') = S+S'", str(image), str(a), image.equals(a))
    )
    square_of_image = image * image
    expected_fsq = (
        Element.term(n, 1, (i, i), ())
        + Element.term(n, 1, (i,), (i,))
        + Element.term(n, 1, (), ())
        + Element.term(n, 1, (), (i, i))
    )
    report.witnesses.append(
        Witness(
            "F(S+S')^2 = S^2 + SS' + 1 + S'^2",
            str(square_of_image),
            str(expected_fsq),
            square_of_image.equals(expected_fsq),
        )
    )

    gap = image_of_square - square_of_image
    expected_gap = Element.unit(n) - Element.term(n, 1, (i,), (i,))
    report.witnesses.append(
        Witness(
            "Jordan defect F(a^2) - F(a)^2 = 1 - SS' != 0",
            str(gap),
            str(expected_gap),
            gap.equals(expected_gap) and not gap.equals(Element.zero(n)),
        )
    )
    return report


def _case_formula(n: int, alpha: tuple, beta: tuple) -> Element:
    """Closed form for sum_i S_i S_1* (S_alpha S_beta*) S_1 S_i*, written
    out branch by branch as an independent recomputation."""
    if (alpha and alpha[0] != 1) or (beta and beta[0] != 1):
        return Element.zero(n)
    if alpha and beta:
        out = Element.term(n, 1, alpha, beta)
        for i in range(2, n + 1):
            out = out + Element.term(n, 1, (i,) + alpha[1:], (i,) + beta[1:])
        return out
    if alpha:
        out = Element.term(n, 1, alpha + (1,), (1,))
        for i in range(2, n + 1):
            out = out + Element.term(n, 1, (i,) + alpha[1:] + (1,), (i,))
        return out
    if beta:
        out = Element.term(n, 1, (1,), beta + (1,))
        for i in range(2, n + 1):
            out = out + Element.term(n, 1, (i,), (i,) + beta[1:] + (1,))
        return out
    out = Element.zero(n)
    for i in range(1, n + 1):
        out = out + Element.term(n, 1, (i,), (i,))
    return out


def check_prop10(
    n: int, level: int, seed: int = 0, ks_samples: int = 20, endo=None
) -> CheckReport:
    """The idempotent corner map built from the canonical endomorphism."""
    endo = endo if endo is not None else canonical_endomorphism(n)
    s1 = Element.generator(n, 1)
    corner = Compose(endo, ad(s1.adjoint()))
    words = list(basis_words(n, level))
    report = CheckReport(
        "prop10", {"n": n, "level": level, "seed": seed, "ks_samples": ks_samples}
    )

    report.witnesses.append(_bool_witness("corner map is unital", is_unital(corner)))

    bad_idem = [
        w for w in words if not corner.apply(corner.apply(w)).equals(corner.apply(w))
    ]
    report.witnesses.append(
        Witness(
            f"corner map is idempotent on basis words, level {level}",
            f"{len(bad_idem)} mismatches in {len(words)} words",
            "0 mismatches",
            not bad_idem,
        )
    )

    ad_s1 = ad(s1)
    bad_comp = [
        w
        for w in words
        if not corner.apply(ad_s1.apply(w)).equals(endo.apply(w))
    ]
    report.witnesses.append(
        Witness(
            f"corner ∘ ad(S[1]) = endo on basis words, level {level}",
            f"{len(bad_comp)} mismatches in {len(words)} words",
            "0 mismatches",
            not bad_comp,
        )
    )

    bad_formula = []
    for w in words:
        ((alpha, beta),) = w.term_keys()
        if not _case_formula(n, alpha, beta).equals(corner.apply(w)):
            bad_formula.append(w)
    report.witnesses.append(
        Witness(
            f"case formula matches direct application on all word pairs, level {level}",
            f"{len(bad_formula)} mismatches in {len(words)} pairs",
            "0 mismatches",
            not bad_formula,
        )
    )
    for w in bad_formula:
        ((alpha, beta),) = w.term_keys()
        report.witnesses.append(
            Witness(
                f"case formula counterexample at {w}",
                str(_case_formula(n, alpha, beta)),
                str(corner.apply(w)),
                False,
            )
        )

    rng = random.Random(seed)
    ks_bad = 0
    for _ in range(ks_samples):
        x = random_balanced(rng, n, k=2, terms=3)
        if not kadison_schwartz_check(corner, x, 2):
            ks_bad += 1
    report.witnesses.append(
        Witness(
            f"Kadison-Schwarz gap PSD on {ks_samples} random balanced elements (seed {seed})",
            f"{ks_bad} violations",
            "0 violations",
            ks_bad == 0,
        )
    )

    projections = [Element.term(n, 1, (i,), (i,)) for i in range(1, n + 1)]
    isometries = [Element.generator(n, i) for i in range(1, n + 1)]
    convex = operational_convex(isometries, [ad(s1.adjoint())] * n)
    bad_convex = [
        w for w in words if not convex.apply(w).equals(corner.apply(w))
    ]
    report.witnesses.append(
        Witness(
            "operational convex combination over {S_i} of ad(S[1]') reproduces the map",
            f"{len(bad_convex)} mismatches in {len(words)} words",
            "0 mismatches",
            not bad_convex,
        )
    )

    for i in range(1, n + 1):
        component = Compose(ad(isometries[i - 1]), ad(s1.adjoint()))
        lam = find_scalar_ratio(component, corner, level)
        report.witnesses.append(
            Witness(
                f"no scalar lam with component {i} = lam*(corner map) (level {level})",
                "none" if lam is None else f"lam={lam}",
                "none",
                lam is None,
            )
        )
        report.witnesses.append(
            _bool_witness(
                f"component {i} factors through S[{i}]S[{i}]' in the range commutant",
                check_component_factorization(
                    component, corner, projections[i - 1], level
                ),
            )
        )

    report.witnesses.append(
        _bool_witness(
            "range projections form a commutant partition for the corner map",
            check_commutant_partition(projections, corner, level),
        )
    )
    return report


def check_lemma5(u, level: int, name: str | None = None) -> CheckReport:
    """Quasi-free automorphisms: adjoint = inverse = conjugate transpose."""
    m = Matrix(u)
    theta = quasi_free(m.rows)
    theta_inv = quasi_free(m.dagger().rows)
    n = m.dim
    words = list(basis_words(n, level))
    params = {"n": n, "level": level, "u": str(m).replace("\n", " ; ")}
    if name:
        params["name"] = name
    report = CheckReport("lemma5", params)

    report.witnesses += _sweep(
        f"quasi-free map preserves phi on basis words, level {level}",
        preserves_phi(theta, level),
        len(words),
    )
    report.witnesses += _sweep(
        f"<theta(x), y> = <x, theta_inv(y)> on basis pairs, level {level}",
        verify_adjoint(theta, theta_inv, level),
        len(words) ** 2,
    )
    bad_inv = [
        w
        for w in words
        if not theta_inv.apply(theta.apply(w)).equals(w)
        or not theta.apply(theta_inv.apply(w)).equals(w)
    ]
    report.witnesses.append(
        Witness(
            f"conjugate-transpose matrix gives the two-sided inverse, level {level}",
            f"{len(bad_inv)} mismatches in {len(words)} words",
            "0 mismatches",
            not bad_inv,
        )
    )
    report.witnesses.append(
        _bool_witness(
            "generator images satisfy the defining relations",
            cuntz_relations_check(list(theta.images)),
        )
    )
    return report


# -- seeded random inputs -------------------------------------------------------


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-3, 3), rng.randint(1, 3))


def _random_scalar(rng: random.Random, allow_imaginary: bool = True) -> GaussianRational:
    re = _random_rational(rng)
    im = _random_rational(rng) if allow_imaginary and rng.random() < 0.4 else Fraction(0)
    return GaussianRational(re, im)


def _random_word(rng: random.Random, n: int, max_len: int) -> tuple:
    return tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_len)))


def random_element(
    rng: random.Random, n: int, max_len: int = 2, terms: int = 3
) -> Element:
    """A small random formal sum; deterministic given the Random instance."""
    out = Element.zero(n)
    for _ in range(terms):
        out = out + Element.term(
            n,
            _random_scalar(rng),
            _random_word(rng, n, max_len),
            _random_word(rng, n, max_len),
        )
    return out


def random_balanced(
    rng: random.Random, n: int, k: int = 2, terms: int = 3
) -> Element:
    """A random element of the level-k balanced span (every term |mu|=|nu|<=k)."""
    out = Element.zero(n)
    for _ in range(terms):
        length = rng.randint(0, k)
        mu = tuple(rng.randint(1, n) for _ in range(length))
        nu = tuple(rng.randint(1, n) for _ in range(length))
        out = out + Element.term(n, _random_scalar(rng), mu, nu)
    return out


def random_hermitian(rng: random.Random, dim: int) -> Matrix:
    """A random exact Hermitian matrix; mixes indefinite, PSD-by-build
    (A A*), and rank-deficient (v v*) shapes so both verdicts occur."""
    style = rng.randrange(3)
    if style == 2:
        v = [_random_scalar(rng) for _ in range(dim)]
        return Matrix([[a * b.conjugate() for b in v] for a in v])
    a = Matrix([[_random_scalar(rng) for _ in range(dim)] for _ in range(dim)])
    return a * a.dagger() if style == 1 else a + a.dagger()


# -- whole-suite driver -----------------------------------------------------------


def check_properties(n: int, level: int, seed: int, endo=None, left_inv=None) -> CheckReport:
    """Seeded algebraic-law spot checks across the modules."""
    endo = endo if endo is not None else canonical_endomorphism(n)
    left_inv = left_inv if left_inv is not None else standard_left_inverse(n)
    rng = random.Random(seed)
    report = CheckReport("properties", {"n": n, "level": level, "seed": seed})
    trials = 12

    def law(claim: str, run) -> None:
        bad = sum(0 if run() else 1 for _ in range(trials))
        report.witnesses.append(
            Witness(claim, f"{bad} violations in {trials} trials", "0 violations", bad == 0)
        )

    law(
        "multiplication is associative",
        lambda: (lambda x, y, z: ((x * y) * z).equals(x * (y * z)))(
            random_element(rng, n), random_element(rng, n), random_element(rng, n)
        ),
    )
    law(
        "multiplication distributes over addition",
        lambda: (lambda x, y, z: (x * (y + z)).equals(x * y + x * z))(
            random_element(rng, n), random_element(rng, n), random_element(rng, n)
        ),
    )
    law(
        "adjoint is an anti-homomorphism and an involution",
        lambda: (
            lambda x, y: (x * y).adjoint().equals(y.adjoint() * x.adjoint())
            and x.adjoint().adjoint() == x
        )(random_element(rng, n), random_element(rng, n)),
    )
    law(
        "rewriting preserves equality (level shift and sibling collapse)",
        lambda: (
            lambda x: x.level_normalize(x.max_right_len() + 1).equals(x)
            and x.canonical_reduce().equals(x)
        )(random_element(rng, n)),
    )
    law(
        "closed-form state matches the iteration oracle",
        lambda: (lambda x: phi(x) == phi_by_iteration(x))(random_element(rng, n)),
    )
    law(
        "Cauchy-Schwarz for the induced inner product",
        lambda: (
            lambda x, y: inner(x, y).norm_sq()
            <= inner(x, x).re * inner(y, y).re
        )(random_element(rng, n), random_element(rng, n)),
    )
    law(
        "endomorphism is multiplicative",
        lambda: (lambda x, y: endo.apply(x * y).equals(endo.apply(x) * endo.apply(y)))(
            random_element(rng, n), random_element(rng, n)
        ),
    )
    law(
        "left inverse undoes the endomorphism",
        lambda: (lambda x: left_inv.apply(endo.apply(x)).equals(x))(
            random_element(rng, n)
        ),
    )
    law(
        "embedding is multiplicative and intertwines adjoints at level 2",
        lambda: (
            lambda a, b: embed_balanced(a * b, 2) == embed_balanced(a, 2) * embed_balanced(b, 2)
            and embed_balanced(a.adjoint(), 2) == embed_balanced(a, 2).dagger()
        )(random_balanced(rng, n), random_balanced(rng, n)),
    )
    law(
        "state equals the normalized trace on the level-2 block",
        lambda: (lambda a: trace_cross_check(a, 2))(random_balanced(rng, n)),
    )
    law(
        "Gram elements embed to PSD matrices",
        lambda: (lambda a: is_psd(embed_balanced(a.adjoint() * a, 2)))(
            random_balanced(rng, n)
        ),
    )
    law(
        "Kadison-Schwarz holds for the endomorphism on balanced elements",
        lambda: (lambda a: kadison_schwartz_check(endo, a, 2))(
            random_balanced(rng, n)
        ),
    )

    report.witnesses.append(
        _bool_witness("endomorphism is unital", is_unital(endo))
    )
    report.witnesses.append(
        _bool_witness(
            "generators satisfy the defining relations",
            cuntz_relations_check(
                [Element.generator(n, i) for i in range(1, n + 1)]
            ),
        )
    )
    return report


def default_unitaries(n: int) -> list:
    """The named example matrices for quasi-free checks: the identity, a
    permutation, and an exactly unitary rational rotation block."""
    eye = Matrix.identity(n)
    perm = Matrix(
        [
            [1 if j == (i + 1) % n else 0 for j in range(n)]
            for i in range(n)
        ]
    )
    rot_rows = [
        [
            GaussianRational(Fraction(3, 5)) if (i, j) == (0, 0)
            else GaussianRational(Fraction(4, 5)) if (i, j) == (0, 1)
            else GaussianRational(Fraction(-4, 5)) if (i, j) == (1, 0)
            else GaussianRational(Fraction(3, 5)) if (i, j) == (1, 1)
            else (GaussianRational(Fraction(1)) if i == j else GaussianRational(Fraction(0)))
            for j in range(n)
        ]
        for i in range(n)
    ]
    label = "swap" if n == 2 else "cycle"
    return [("identity", eye), (label, Matrix(perm.rows)), ("rotation", Matrix(rot_rows))]


def named_mutation(n: int, name: str):
    """Deliberately broken builds of the canonical pair, for sensitivity
    tests: returns (endo, left_inv) with the named defect injected."""
    endo = canonical_endomorphism(n)
    left_inv = standard_left_inverse(n)
    if name == "psi-weight":
        left_inv = WeightedKraus(
            tuple(
                (Fraction(1, n + 1), Element.generator(n, i).adjoint())
                for i in range(1, n + 1)
            )
        )
    elif name == "phi-drop":
        endo = WeightedKraus(endo.pairs[:-1])
    else:
        raise ValueError(f"unknown mutation {name!r}")
    return endo, left_inv


def run_all(
    n: int, level: int | None = None, seed: int = 0, mutation: str | None = None
) -> list:
    """Every named check plus the property suite, as a list of reports."""
    if level is None:
        level = default_level(n)
    if mutation is None:
        endo = canonical_endomorphism(n)
        left_inv = standard_left_inverse(n)
    else:
        endo, left_inv = named_mutation(n, mutation)
    reports = [
        check_prop6(n, level, endo, left_inv),
        check_prop8(n, level, endo, left_inv),
        check_prop9(n, 1, level),
        check_prop10(n, level, seed=seed, endo=endo),
    ]
    for name, u in default_unitaries(n):
        reports.append(check_lemma5(u.rows, level, name=name))
    reports.append(check_properties(n, min(level, 2), seed, endo, left_inv))
    return reports


def summary_table(reports) -> str:
    """Fixed-width human summary, one line per check."""
    name_w = max(len(r.name) for r in reports)
    lines = [f"{'check'.ljust(name_w)}  verdict  claims  failures  parameters"]
    for r in reports:
        fails = len(r.failures())
        lines.append(
            f"{r.name.ljust(name_w)}  {r.verdict:7}  {len(r.witnesses):6}  "
            f"{fails:8}  {_params_text(r.params)}"
        )
    return "\n".join(lines)
