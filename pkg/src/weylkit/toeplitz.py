"""Bergman-space Toeplitz symbols: boundary curves, indices, spectra,
stability classification, and basis truncations.

Symbols are finite Laurent-style combinations of z^m and zbar^m plus an
optional scaled-indicator term supported on the disk of radius 1/J.  The
boundary curve drives everything spectral: the essential spectrum is the
symbol's image of the unit circle, the Fredholm index at an admissible
point is minus the winding number there, and compact-perturbation
stability of the Weyl-type properties reads off the hole windings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from . import geometry
from .errors import ConvergenceFailure, SizeOutOfRange
from .geometry import Curve, winding_number
from .regions import CurveRegion, FinitePoints, Region

DEFAULT_SAMPLES = 4096
MAX_TERMS = 64
MAX_EXPONENT = 32
MIN_TRUNCATION = 2
MAX_TRUNCATION = 512
RESIDUAL_TOL = 1e-8


@dataclass(frozen=True)
class SymbolExpr:
    """Parsed Toeplitz symbol.

    ``terms`` maps an integer exponent m to a complex coefficient, with
    m >= 0 meaning z^m and m < 0 meaning zbar^|m|.  ``indicator_j``, when
    set, adds the term chi_{(1/J) disk}(r e^{i theta}) e^{-i theta}.
    """

    terms: dict
    indicator_j: float | None = None

    def __post_init__(self):
        cleaned = {}
        for m, c in self.terms.items():
            m = int(m)
            c = complex(c)
            if abs(m) > MAX_EXPONENT:
                raise ValueError(f"exponent {m} exceeds |m| <= {MAX_EXPONENT}")
            if c != 0:
                cleaned[m] = c
        if len(cleaned) > MAX_TERMS:
            raise ValueError(f"more than {MAX_TERMS} nonzero terms")
        if self.indicator_j is not None and not self.indicator_j > 1.0:
            raise ValueError("indicator parameter must satisfy J > 1")
        object.__setattr__(self, "terms", cleaned)
        if self.indicator_j is not None:
            object.__setattr__(self, "indicator_j", float(self.indicator_j))

    def __eq__(self, other):
        if not isinstance(other, SymbolExpr):
            return NotImplemented
        return self.terms == other.terms and self.indicator_j == other.indicator_j


@dataclass(frozen=True)
class StabilityReport:
    """Compact-perturbation stability of the five Weyl-type properties."""

    uwe: bool
    weyl: bool
    a_weyl: bool
    browder: bool
    a_browder: bool
    constant_on_boundary: bool
    holes: tuple


@dataclass(frozen=True)
class TruncationMatrix:
    """n-by-n compression of the symbol in the normalized monomial basis.

    Basis: e_j(z) = sqrt(j+1) z^j, j = 0..n-1; entries[k, j] is the
    coefficient of e_k in the image of e_j.
    """

    n: int
    entries: np.ndarray
    symbol: SymbolExpr


def boundary_curve(symbol: SymbolExpr, n_samples: int = DEFAULT_SAMPLES) -> Curve:
    """Image of the unit circle under the symbol, sampled uniformly.

    The indicator term vanishes on the boundary (its support has radius
    1/J < 1), so only the Laurent terms contribute.
    """
    if n_samples < geometry.MIN_CURVE_SAMPLES:
        raise ValueError(f"need at least {geometry.MIN_CURVE_SAMPLES} samples")
    theta = 2.0 * math.pi * np.arange(n_samples) / n_samples
    w = np.zeros(n_samples, dtype=complex)
    for m, c in sorted(symbol.terms.items()):
        w += c * np.exp(1j * m * theta)
    return Curve(w)


def is_constant_on_boundary(symbol: SymbolExpr) -> bool:
    """Symbolic constancy: only the m=0 term and/or the indicator present."""
    return all(m == 0 for m in symbol.terms)


def boundary_constant(symbol: SymbolExpr) -> complex:
    """Boundary value of a symbol that is constant on the unit circle."""
    return symbol.terms.get(0, 0j)


def fredholm_index(symbol: SymbolExpr, lam: complex,
                   n_samples: int = DEFAULT_SAMPLES) -> int:
    """Index of the shifted Toeplitz operator: minus the winding at lam.

    Raises PointOnCurve when lam sits on the boundary curve (essential
    spectrum), where the index is undefined.
    """
    curve = boundary_curve(symbol, n_samples).translated(-complex(lam))
    return -winding_number(curve, 0j)


def weyl_spectra(symbol: SymbolExpr, n_samples: int = DEFAULT_SAMPLES,
                 grid_resolution: int = geometry.DEFAULT_GRID_RESOLUTION):
    """(weyl spectrum, upper semi-Weyl spectrum) as regions.

    Non-constant symbols give the boundary curve together with the holes
    of nonzero winding (Weyl) or negative winding (upper semi-Weyl).  A
    symbol constant on the boundary collapses both to that single value.
    """
    if is_constant_on_boundary(symbol):
        value = boundary_constant(symbol)
        point: Region = FinitePoints((value,))
        return point, point
    analysis = geometry.analyze_curve(boundary_curve(symbol, n_samples), grid_resolution)
    sigma_w = CurveRegion(analysis, {h.component_id: h.winding != 0 for h in analysis.holes})
    sigma_uw = CurveRegion(analysis, {h.component_id: h.winding < 0 for h in analysis.holes})
    return sigma_w, sigma_uw


def classify_compact_stability(symbol: SymbolExpr,
                               n_samples: int = DEFAULT_SAMPLES,
                               grid_resolution: int = geometry.DEFAULT_GRID_RESOLUTION
                               ) -> StabilityReport:
    """Five-way decision table over the hole windings of the symbol curve.

    With H the hole windings: uwe = a_weyl = non-constant and all of H
    negative; weyl = non-constant and all of H nonzero; browder = all of H
    nonzero; a_browder = all of H negative.  Empty H makes the universally
    quantified conditions vacuously true.
    """
    constant = is_constant_on_boundary(symbol)
    holes: tuple = ()
    if not constant:
        analysis = geometry.analyze_curve(boundary_curve(symbol, n_samples), grid_resolution)
        holes = tuple(analysis.holes)
    windings = [h.winding for h in holes]
    all_negative = all(w < 0 for w in windings)
    all_nonzero = all(w != 0 for w in windings)
    return StabilityReport(
        uwe=not constant and all_negative,
        weyl=not constant and all_nonzero,
        a_weyl=not constant and all_negative,
        browder=all_nonzero,
        a_browder=all_negative,
        constant_on_boundary=constant,
        holes=holes,
    )


def truncation_matrix(symbol: SymbolExpr, n: int) -> TruncationMatrix:
    """Closed-form truncation entries in the normalized monomial basis.

    z^m shifts e_j up with weight sqrt((j+1)/(j+m+1)); zbar^m shifts down
    with weight sqrt((j-m+1)/(j+1)); the indicator contributes
    sqrt(j(j+1))/(2j+1) * J^(-2j) on the first subdiagonal.
    """
    if not MIN_TRUNCATION <= n <= MAX_TRUNCATION:
        raise SizeOutOfRange(f"truncation size {n} outside [{MIN_TRUNCATION}, {MAX_TRUNCATION}]")
    entries = np.zeros((n, n), dtype=complex)
    for m, c in sorted(symbol.terms.items()):
        if m >= 0:
            for j in range(0, n - m):
                entries[j + m, j] += c * math.sqrt((j + 1) / (j + m + 1))
        else:
            q = -m
            for j in range(q, n):
                entries[j - q, j] += c * math.sqrt((j - q + 1) / (j + 1))
    if symbol.indicator_j is not None:
        jj = symbol.indicator_j
        for j in range(1, n):
            entries[j - 1, j] += math.sqrt(j * (j + 1)) / (2 * j + 1) * jj ** (-2 * j)
    return TruncationMatrix(n, entries, symbol)


def entry_quadrature(symbol: SymbolExpr, k: int, j: int,
                     radial_nodes: int = 64, angular_nodes: int = 256) -> complex:
    """Basis inner product by quadrature over the unit disk.

    Gauss-Legendre in the radius over each term's support ([0, 1], or
    [0, 1/J] for the indicator, summed additively), uniform trapezoid in
    the angle, with the area measure normalized so the disk has measure 1.
    """
    if radial_nodes < 16:
        raise ValueError("need at least 16 radial nodes")
    if angular_nodes < 64:
        raise ValueError("need at least 64 angular nodes")
    nodes, weights = np.polynomial.legendre.leggauss(radial_nodes)
    theta = 2.0 * math.pi * np.arange(angular_nodes) / angular_nodes
    w_theta = 2.0 * math.pi / angular_nodes
    norm = math.sqrt((j + 1) * (k + 1)) / math.pi

    def radial(power: int, upper: float) -> float:
        r = 0.5 * upper * (nodes + 1.0)
        return float(np.sum(weights * 0.5 * upper * r**power))

    def angular(freq: int) -> complex:
        return complex(w_theta * np.sum(np.exp(1j * freq * theta)))

    total = 0j
    for m, c in sorted(symbol.terms.items()):
        total += c * angular(m + j - k) * radial(abs(m) + j + k + 1, 1.0)
    if symbol.indicator_j is not None:
        total += angular(j - k - 1) * radial(j + k + 1, 1.0 / symbol.indicator_j)
    return norm * total


def eigenvalues(matrix) -> list:
    """All eigenvalues of a dense complex matrix, certified and ordered.

    Each returned pair must satisfy the backward-error residual
    ||(M - lam I) v|| / ||M|| <= 1e-8 or ConvergenceFailure is raised.
    Ordering: descending modulus, ties by ascending argument.
    """
    entries = np.asarray(getattr(matrix, "entries", matrix), dtype=complex)
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        raise ValueError("expected a square matrix")
    if entries.shape[0] > MAX_TRUNCATION:
        raise SizeOutOfRange(f"matrix larger than {MAX_TRUNCATION}")
    values, vectors = scipy.linalg.eig(entries)
    scale = float(np.linalg.norm(entries, 2))
    if scale > 0.0:
        residuals = np.linalg.norm(entries @ vectors - vectors * values[None, :], axis=0)
        worst = float(residuals.max()) / scale
        if worst > RESIDUAL_TOL:
            raise ConvergenceFailure(f"residual {worst:.3e} exceeds {RESIDUAL_TOL}")
    order = np.lexsort((np.angle(values), -np.abs(values)))
    return [complex(values[i]) for i in order]
