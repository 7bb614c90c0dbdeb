"""Shared helpers: curve builders, independent oracles, picture generator."""

from __future__ import annotations

import cmath
import math
from collections import deque

import numpy as np

from weylkit.geometry import Curve, analyze_curve
from weylkit.regions import (ALPHA_INF, Circle, CurveRegion, Disk,
                             FinitePoints, SpectralPicture, UnionRegion)


def curve_from(f, n: int) -> Curve:
    theta = 2.0 * math.pi * np.arange(n) / n
    return Curve(np.asarray(f(theta), dtype=complex))


def unit_circle(n: int = 4096) -> Curve:
    return curve_from(lambda t: np.exp(1j * t), n)


def conjugate_circle(n: int = 4096) -> Curve:
    return curve_from(lambda t: np.exp(-1j * t), n)


def doubled_circle(n: int = 4096) -> Curve:
    return curve_from(lambda t: np.exp(2j * t), n)


def deltoid_curve(n: int = 4096) -> Curve:
    """Image of zbar + z^2/3 on the unit circle."""
    return curve_from(lambda t: np.exp(-1j * t) + np.exp(2j * t) / 3.0, n)


def annulus_slit_curve(n_circ: int = 512, n_slit: int = 64) -> Curve:
    """Outer CCW circle, slit inward, inner CW circle, slit back out.

    The inner disk is a bounded complement component of winding zero
    (+1 from the outer loop, -1 from the inner); the cut annulus winds +1.
    """
    out_ang = 2.0 * math.pi * np.arange(n_circ) / n_circ
    outer = 3.0 * np.exp(1j * out_ang)
    slit_in = np.linspace(3.0, 1.0, n_slit, endpoint=False).astype(complex)
    inner = 1.0 * np.exp(-1j * out_ang)
    slit_out = np.linspace(1.0, 3.0, n_slit, endpoint=False).astype(complex)
    return Curve(np.concatenate([outer, slit_in, inner, slit_out]))


def log_winding(samples, point: complex) -> int:
    """Independent winding oracle: imaginary parts of segment log-ratios."""
    pts = [complex(p) for p in samples]
    total = 0.0
    for k in range(len(pts)):
        a = pts[k] - point
        b = pts[(k + 1) % len(pts)] - point
        total += cmath.log(b / a).imag
    return int(math.floor(0.5 + total / (2.0 * math.pi)))


def bfs_hole_count(samples, resolution: int = 160) -> int:
    """Independent flood-fill oracle: bounded components of the complement.

    Pure-python BFS over a coarse grid, thickening the curve onto cells it
    passes through plus their 8-neighborhood.
    """
    pts = np.asarray(samples, dtype=complex)
    xmin, xmax = float(pts.real.min()), float(pts.real.max())
    ymin, ymax = float(pts.imag.min()), float(pts.imag.max())
    pad = 0.1 * math.hypot(xmax - xmin, ymax - ymin)
    x0, y0 = xmin - pad, ymin - pad
    dx = ((xmax - xmin) + 2 * pad) / resolution
    dy = ((ymax - ymin) + 2 * pad) / resolution

    blocked = [[False] * resolution for _ in range(resolution)]
    a = pts
    b = np.roll(pts, -1)
    steps = max(3, int(math.ceil(float(np.abs(b - a).max()) / (0.25 * min(dx, dy)))))
    for t in np.linspace(0.0, 1.0, steps):
        for z in a * (1 - t) + b * t:
            col = int((z.real - x0) / dx)
            row = int((z.imag - y0) / dy)
            for rr in range(max(0, row - 1), min(resolution, row + 2)):
                for cc in range(max(0, col - 1), min(resolution, col + 2)):
                    blocked[rr][cc] = True

    seen = [[False] * resolution for _ in range(resolution)]

    def flood(r0, c0):
        queue = deque([(r0, c0)])
        seen[r0][c0] = True
        size = 0
        while queue:
            r, c = queue.popleft()
            size += 1
            for rr, cc in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if 0 <= rr < resolution and 0 <= cc < resolution \
                        and not seen[rr][cc] and not blocked[rr][cc]:
                    seen[rr][cc] = True
                    queue.append((rr, cc))
        return size

    # Flush the unbounded outside first from a frame corner.
    assert not blocked[0][0]
    flood(0, 0)
    holes = 0
    for r in range(resolution):
        for c in range(resolution):
            if not blocked[r][c] and not seen[r][c]:
                if flood(r, c) >= 4:  # ignore one-off raster slivers
                    holes += 1
    return holes


# --- randomized operator-realistic pictures ---------------------------
#
# Each atom is the exact picture of a concrete operator family (compact
# normal pieces, shifts, shift sums, Toeplitz-style curves), centered
# near the origin with footprint radius < 2.  Atoms placed at offsets
# spaced 5 apart have disjoint spectra, and for disjoint direct sums
# every listed spectrum is the union of the parts, so the implication
# chain proved per atom survives composition.

_GEN_CURVE_ANALYSIS = None


def _generator_curve_analysis():
    global _GEN_CURVE_ANALYSIS
    if _GEN_CURVE_ANALYSIS is None:
        _GEN_CURVE_ANALYSIS = analyze_curve(deltoid_curve(512), 128)
    return _GEN_CURVE_ANALYSIS


def _atom_normal_with_core(rng):
    count = int(rng.integers(1, 5))
    angles = 2 * math.pi * rng.random(count)
    radii = 0.6 + 0.9 * rng.random(count)
    points = tuple(complex(r * math.cos(a), r * math.sin(a))
                   for r, a in zip(radii, angles))
    core = 0j
    spectrum = FinitePoints((core,) + points)
    core_only = FinitePoints((core,))
    eigen = {p: int(rng.integers(1, 3)) for p in points}
    eigen[core] = ALPHA_INF
    return dict(sigma=spectrum, sigma_a=spectrum, sigma_e=core_only,
                sigma_w=core_only, sigma_uw=core_only, sigma_b=core_only,
                eigen=eigen)


def _atom_nilpotent(rng):
    point = FinitePoints((0j,))
    alpha = ALPHA_INF if rng.random() < 0.5 else 1
    return dict(sigma=point, sigma_a=point, sigma_e=point, sigma_w=point,
                sigma_uw=point, sigma_b=point, eigen={0j: alpha})


def _atom_shift(rng):
    radius = 0.5 + 1.0 * rng.random()
    disk = Disk(0j, radius, closed=True)
    circle = Circle(0j, radius)
    return dict(sigma=disk, sigma_a=circle, sigma_e=circle, sigma_w=disk,
                sigma_uw=circle, sigma_b=disk, eigen={})


def _atom_backshift(rng):
    radius = 0.5 + 1.0 * rng.random()
    disk = Disk(0j, radius, closed=True)
    circle = Circle(0j, radius)
    return dict(sigma=disk, sigma_a=disk, sigma_e=circle, sigma_w=disk,
                sigma_uw=disk, sigma_b=disk, eigen={})


def _atom_shift_sum(rng):
    radius = 0.5 + 1.0 * rng.random()
    disk = Disk(0j, radius, closed=True)
    circle = Circle(0j, radius)
    return dict(sigma=disk, sigma_a=disk, sigma_e=circle, sigma_w=circle,
                sigma_uw=circle, sigma_b=disk, eigen={})


def _atom_circle(rng):
    radius = 0.5 + 1.0 * rng.random()
    circle = Circle(0j, radius)
    return dict(sigma=circle, sigma_a=circle, sigma_e=circle, sigma_w=circle,
                sigma_uw=circle, sigma_b=circle, eigen={})


def _atom_toeplitz_curve(rng):
    analysis = _generator_curve_analysis()
    full = CurveRegion(analysis, {h.component_id: True for h in analysis.holes})
    shell = CurveRegion(analysis, {h.component_id: False for h in analysis.holes})
    return dict(sigma=full, sigma_a=full, sigma_e=shell, sigma_w=full,
                sigma_uw=full, sigma_b=full, eigen={})


_ATOMS = (_atom_normal_with_core, _atom_nilpotent, _atom_shift,
          _atom_backshift, _atom_shift_sum, _atom_circle, _atom_toeplitz_curve)

_REGION_FIELDS = ("sigma", "sigma_a", "sigma_e", "sigma_w", "sigma_uw", "sigma_b")


def random_picture(seed: int) -> SpectralPicture:
    """Operator-realistic random picture satisfying the containment chain."""
    rng = np.random.default_rng(seed)
    n_atoms = int(rng.integers(1, 4))
    offsets = rng.permutation(np.array([0.0, 5.0, -5.0]))[:n_atoms]
    parts = {field: [] for field in _REGION_FIELDS}
    eigen = {}
    for offset_real in offsets:
        offset = complex(offset_real, 0.0)
        atom = _ATOMS[int(rng.integers(0, len(_ATOMS)))](rng)
        for field in _REGION_FIELDS:
            parts[field].append(atom[field].translated(offset))
        eigen.update({p + offset: a for p, a in atom["eigen"].items()})
    regions = {field: (values[0] if len(values) == 1 else UnionRegion(tuple(values)))
               for field, values in parts.items()}
    return SpectralPicture(label=f"random-{seed}", eigen_multiplicity=eigen,
                           **regions)
