"""Acceptance criteria, one test per criterion, with a pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines inline.
"""

import math
from contextlib import contextmanager

import numpy as np
import pytest

from conftest import random_picture
from weylkit.catalog import all_entries, make
from weylkit.checker import (check_uwe_factorization, closure_hp_connectedness,
                             evaluate_properties, uwe_stable_under_compacts)
from weylkit.errors import PointOnCurve
from weylkit.geometry import winding_number, winding_sum
from weylkit.regions import Circle, Disk, SpectralPicture
from weylkit.toeplitz import (SymbolExpr, boundary_curve,
                              classify_compact_stability, eigenvalues,
                              entry_quadrature, fredholm_index,
                              is_constant_on_boundary, truncation_matrix)

PROPERTY_KEYS = ("weyl", "browder", "property_w", "uwe", "ve", "we")


@contextmanager
def criterion(number, name):
    try:
        yield
    except Exception:
        print(f"ACCEPTANCE {number:2d} {name}: FAIL")
        raise
    print(f"ACCEPTANCE {number:2d} {name}: PASS")


def test_c01_winding_exactness():
    with criterion(1, "winding exactness for monomials"):
        for m in (1, 2, 3):
            for sign, expected in ((1, m), (-1, -m)):
                curve = boundary_curve(SymbolExpr({sign * m: 1}), 4096)
                raw = winding_sum(curve, 0j)
                assert winding_number(curve, 0j) == expected
                assert abs(raw - expected) < 1e-6


def test_c02_index_law():
    with criterion(2, "Fredholm index equals minus winding"):
        assert fredholm_index(SymbolExpr({-1: 1}), 0j) == 1
        assert fredholm_index(SymbolExpr({1: 1}), 0j) == -1
        rng = np.random.default_rng(2024)
        failures = 0
        checked = 0
        while checked < 200:
            exponents = rng.choice(np.array([-4, -3, -2, -1, 1, 2, 3, 4]),
                                   size=rng.integers(1, 5), replace=False)
            symbol = SymbolExpr({int(m): complex(rng.normal(), rng.normal())
                                 for m in exponents})
            if is_constant_on_boundary(symbol):
                continue
            curve = boundary_curve(symbol, 4096)
            xmin, xmax, ymin, ymax = curve.bounding_box()
            lam = complex(rng.uniform(xmin - 0.5, xmax + 0.5),
                          rng.uniform(ymin - 0.5, ymax + 0.5))
            try:
                wind = winding_number(curve, lam)
            except PointOnCurve:
                continue
            if fredholm_index(symbol, lam) != -wind:
                failures += 1
            checked += 1
        assert failures == 0


def test_c03_stability_decision_table():
    with criterion(3, "compact-stability decision table"):
        def table(symbol):
            r = classify_compact_stability(symbol)
            return (r.uwe, r.weyl, r.a_weyl, r.browder, r.a_browder)

        assert table(SymbolExpr({-1: 1, 2: 1 / 3})) == (True, True, True, True, True)
        assert table(SymbolExpr({1: 1})) == (False, True, False, True, False)
        assert table(SymbolExpr({0: 5})) == (False, False, False, True, True)
        assert table(SymbolExpr({-1: 1})) == (True, True, True, True, True)
        for m in (3, 4, 5):
            report = classify_compact_stability(SymbolExpr({-1: 1, m - 1: 1 / m}))
            assert report.uwe is True
            assert report.a_weyl is True


def test_c04_indicator_truncation_coefficients():
    with criterion(4, "indicator symbol truncation coefficients"):
        symbol = SymbolExpr({}, indicator_j=2.0)
        matrix = truncation_matrix(symbol, 12).entries
        for n in range(1, 12):
            expected = math.sqrt(n * (n + 1)) / (2 * n + 1) * 4.0 ** (-n)
            got = matrix[n - 1, n]
            assert abs(got - expected) / expected <= 1e-12
            quad = entry_quadrature(symbol, n - 1, n, 64, 256)
            assert abs(got - quad) <= 1e-8


def test_c05_conjugate_truncation_coefficients():
    with criterion(5, "conjugate symbol truncation coefficients"):
        symbol = SymbolExpr({-1: 1})
        matrix = truncation_matrix(symbol, 12).entries
        for n in range(1, 12):
            expected = math.sqrt(n / (n + 1))
            got = matrix[n - 1, n]
            assert abs(got - expected) / expected <= 1e-12
            quad = entry_quadrature(symbol, n - 1, n, 64, 256)
            assert abs(got - quad) <= 1e-8


def test_c06_nilpotent_spectra_evidence():
    with criterion(6, "nilpotent truncation spectra"):
        symbols = (SymbolExpr({}, indicator_j=2.0), SymbolExpr({-1: 1}))
        for symbol in symbols:
            for size in (16, 64, 128):
                values = eigenvalues(truncation_matrix(symbol, size))
                assert max(abs(v) for v in values) <= 1e-10


def test_c07_golden_verdict_table():
    with criterion(7, "golden verdicts on all catalog entries"):
        entries = all_entries()
        assert len(entries) == 8
        mismatches = []
        for entry in entries:
            report = evaluate_properties(entry.picture)
            for key, expected in entry.verdicts.items():
                if key in PROPERTY_KEYS and getattr(report, key) != expected:
                    mismatches.append((entry.name, key))
        assert mismatches == []
        verdicts = {e.name: e.verdicts for e in entries}
        assert verdicts["exampleA"]["uwe"] is True
        assert verdicts["interleave"]["uwe"] is True
        assert verdicts["zeroInterleave"]["uwe"] is False
        assert verdicts["ex29"]["uwe"] is False
        assert verdicts["exampleV"]["ve"] is False
        for name in ("cho", "zbarPlusZsqOver3", "harmonicMonomial"):
            assert verdicts[name]["ve"] is True


def test_c08_compact_stability_on_fixtures():
    with criterion(8, "perturbation stability on fixtures"):
        ex29 = make("ex29", {"J": 2}).picture
        disk = Disk(0j, 1.0, closed=True)
        disk_picture = SpectralPicture("disk", disk, disk, Circle(0j, 1.0),
                                       disk, disk, disk)
        for resolution in (256, 512, 1024):
            assert uwe_stable_under_compacts(ex29, resolution) is False
            assert uwe_stable_under_compacts(disk_picture, resolution) is True


def test_c09_closure_criteria():
    with criterion(9, "hypercyclic-closure connectedness"):
        assert closure_hp_connectedness(make("exampleA").picture, 512) is False
        assert closure_hp_connectedness(make("exampleV").picture, 512) is True


def test_c10_property_suites():
    with criterion(10, "implication chain and factorization oracle"):
        for seed in range(200):
            report = evaluate_properties(random_picture(seed))
            assert (not report.uwe) or report.property_w
            assert (not report.property_w) or report.weyl
            assert (not report.weyl) or report.browder
        for entry in all_entries():
            assert check_uwe_factorization(entry.picture) is True, entry.name
