"""Acceptance gate: one test per shipping criterion, each with a hard wall-time
budget and a single printed pass/fail line (the suite is expected to run with
``pytest -v``, where every criterion also surfaces as its own result line).

Everything here is exact — any comparison failure is a real defect, never
rounding.
"""

import json
import random
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

import pytest

from test_matrices import psd_by_charpoly

from cuntzcalc import Element, GaussianRational
from cuntzcalc.algebra import basis_words
from cuntzcalc.maps import canonical_endomorphism, standard_left_inverse
from cuntzcalc.matrices import embed_balanced, is_psd, trace_cross_check
from cuntzcalc.parser import evaluate, parse
from cuntzcalc.state import phi, phi_by_iteration
from cuntzcalc.theorems import (
    check_lemma5,
    check_prop6,
    check_prop8,
    check_prop9,
    check_prop10,
    default_unitaries,
    named_mutation,
    random_balanced,
    random_hermitian,
    run_all,
)

CORPUS = Path(__file__).parent / "data" / "corpus.txt"
CLI = [sys.executable, "-m", "cuntzcalc.cli"]


@contextmanager
def criterion(num: int, label: str, budget: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        elapsed = time.perf_counter() - start
        print(f"[{num:2}] {label}: FAIL ({elapsed:.2f}s, budget {budget:g}s)")
        raise
    elapsed = time.perf_counter() - start
    print(f"[{num:2}] {label}: PASS ({elapsed:.2f}s, budget {budget:g}s)")
    assert elapsed < budget, f"criterion {num} exceeded its {budget:g}s budget: {elapsed:.2f}s"


def test_c01_defining_relations():
    with criterion(1, "defining relations, n = 2 and 3", 1.0):
        for n in (2, 3):
            unit = Element.unit(n)
            ss = [Element.generator(n, i) for i in range(1, n + 1)]
            total = Element.zero(n)
            for i, s in enumerate(ss):
                for j, t in enumerate(ss):
                    prod = s.adjoint() * t
                    if i == j:
                        assert prod.equals(unit)
                    else:
                        assert prod.is_zero
                total = total + s * s.adjoint()
            assert total.equals(unit)


def test_c02_state_closed_form_matches_iteration():
    with criterion(2, "canonical state: closed form vs averaging iteration", 5.0):
        checked = 0
        for n, level in ((2, 4), (3, 2)):
            for x in basis_words(n, level):
                assert phi(x) == phi_by_iteration(x)
                checked += 1
        assert checked == 31 * 31 + 13 * 13


def test_c03_endomorphism_state_and_adjointness():
    with criterion(3, "endomorphism preserves the state; left inverse is its adjoint", 10.0):
        for n, level in ((2, 2), (3, 1)):
            report = check_prop6(n, level)
            assert report.passed, report.render()


def test_c04_left_inverse_undoes_endomorphism():
    with criterion(4, "left inverse composed with endomorphism is the identity", 5.0):
        endo = canonical_endomorphism(2)
        psi = standard_left_inverse(2)
        for x in basis_words(2, 3):
            assert psi.apply(endo.apply(x)) == x


def test_c05_range_commutant_structure():
    with criterion(5, "compressions factor through the range commutant", 5.0):
        for n, level in ((2, 2), (3, 1)):
            report = check_prop8(n, level)
            assert report.passed, report.render()


def test_c06_coisometry_multiplicative_domain_witness():
    with criterion(6, "co-isometry compression: multiplicative but not Jordan", 1.0):
        report = check_prop9(2, 1, 1)
        assert report.passed, report.render()


def test_c07_idempotent_corner_map():
    with criterion(7, "idempotent corner map: case formula, positivity, structure", 30.0):
        report = check_prop10(2, 2, seed=0, ks_samples=20)
        assert report.passed, report.render()
        report3 = check_prop10(3, 1, seed=0, ks_samples=10)
        assert report3.passed, report3.render()


def test_c08_quasi_free_family():
    with criterion(8, "quasi-free automorphisms: state-preserving, adjoint = inverse", 10.0):
        for name, u in default_unitaries(2):
            report = check_lemma5(u.rows, 2, name=name)
            assert report.passed, report.render()


def test_c09_matrix_bridge():
    with criterion(9, "matrix bridge: embedding laws and exact positivity", 10.0):
        rng = random.Random(1234)
        k = 2
        for _ in range(50):
            x = random_balanced(rng, 2, k=k)
            y = random_balanced(rng, 2, k=k)
            assert embed_balanced(x * y, k) == embed_balanced(x, k) * embed_balanced(y, k)
            assert embed_balanced(x.adjoint(), k) == embed_balanced(x, k).dagger()
            assert trace_cross_check(x, k)
        for dim in (2, 3):
            for _ in range(50):
                h = random_hermitian(rng, dim)
                assert is_psd(h) is psd_by_charpoly(h)


def test_c10_mutation_sensitivity():
    with criterion(10, "named defects are caught by at least one check", 10.0):
        for mutation in ("psi-weight", "phi-drop"):
            reports = run_all(2, 1, mutation=mutation)
            assert any(not r.passed for r in reports), mutation


def test_c11_cli_round_trip_and_verdicts():
    with criterion(11, "CLI: corpus round-trip, clean build passes, broken build fails", 5.0):
        lines = [
            line.strip()
            for line in CORPUS.read_text().splitlines()
            if line.strip() and not line.startswith("#")
        ]
        assert len(lines) == 30
        for src in lines:
            value = evaluate(parse(src, 2), 2)
            text = str(value)
            again = evaluate(parse(text, 2), 2)
            first = value if isinstance(value, Element) else Element.unit(2).scale(value)
            second = again if isinstance(again, Element) else Element.unit(2).scale(again)
            assert second.equals(first), src
            # printing reaches a fixed point after one parse/print round
            third = evaluate(parse(str(again), 2), 2)
            assert str(third) == str(again), src

        clean = subprocess.run(
            CLI + ["check", "all", "--n", "2", "--level", "2"],
            capture_output=True,
            text=True,
            timeout=60,
        )
        assert clean.returncode == 0, clean.stdout + clean.stderr

        broken = subprocess.run(
            CLI + ["check", "all", "--n", "2", "--level", "1", "--mutate", "psi-weight"],
            capture_output=True,
            text=True,
            timeout=60,
        )
        assert broken.returncode == 1, broken.stdout + broken.stderr
