"""Numerical geometry of closed planar curves.

Winding numbers are computed as summed argument increments of sample
differences, so admissible queries snap exactly to an integer.  Holes
(bounded components of the curve complement) are found by flood filling a
rasterized grid, and connectedness of unions of planar sets is decided on
a shared grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

from .errors import DegenerateCurve, PointOnCurve, WindingUndefined

MIN_CURVE_SAMPLES = 16
MIN_GRID_RESOLUTION = 64
DEFAULT_GRID_RESOLUTION = 512

# Admissible winding queries must stay this many sampling gaps away from
# every curve sample; closer queries see unresolved argument increments.
DISTANCE_MARGIN_FACTOR = 10.0

# Raw winding sums farther than this from an integer are refused.
INTEGER_SNAP_TOL = 1e-6

# Bounding boxes are padded by this fraction of their diameter per side.
PAD_FRACTION = 0.1

_EIGHT_CONNECTED = np.ones((3, 3), dtype=bool)


@dataclass(frozen=True)
class Curve:
    """Closed, oriented planar curve given by ordered samples.

    The polyline closes implicitly: the successor of the last sample is
    the first.  Orientation is the orientation of increasing sample index.
    ``max_gap`` (largest consecutive-sample distance, closing segment
    included) is recorded so callers can enforce distance margins.
    """

    samples: np.ndarray
    max_gap: float = field(init=False)

    def __post_init__(self):
        arr = np.ascontiguousarray(np.asarray(self.samples, dtype=complex))
        if arr.ndim != 1 or arr.size < MIN_CURVE_SAMPLES:
            raise ValueError(f"curve needs at least {MIN_CURVE_SAMPLES} samples, got {arr.size}")
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise ValueError("curve samples must be finite")
        object.__setattr__(self, "samples", arr)
        gaps = np.abs(np.roll(arr, -1) - arr)
        object.__setattr__(self, "max_gap", float(gaps.max()))

    def __len__(self):
        return self.samples.size

    def bounding_box(self):
        xs, ys = self.samples.real, self.samples.imag
        return float(xs.min()), float(xs.max()), float(ys.min()), float(ys.max())

    def diameter(self) -> float:
        xmin, xmax, ymin, ymax = self.bounding_box()
        return math.hypot(xmax - xmin, ymax - ymin)

    def reversed(self) -> "Curve":
        return Curve(self.samples[::-1].copy())

    def translated(self, offset: complex) -> "Curve":
        return Curve(self.samples + offset)


@dataclass(frozen=True)
class Hole:
    """Bounded component of the complement of a curve.

    The representative is the deepest interior cell center of the
    rasterized component, which maximizes the margin available to the
    winding-number distance precondition.
    """

    representative: complex
    winding: int
    cell_count: int
    component_id: int


def winding_sum(curve: Curve, point: complex) -> float:
    """Raw winding total (argument increments over 2*pi) around ``point``.

    Raises PointOnCurve when the point is within DISTANCE_MARGIN_FACTOR
    sampling gaps of any curve sample.
    """
    rel = curve.samples - point
    margin = DISTANCE_MARGIN_FACTOR * curve.max_gap
    if float(np.abs(rel).min()) <= margin:
        raise PointOnCurve(f"point {point} within {margin:.3g} of curve samples")
    steps = np.angle(np.roll(rel, -1) / rel)
    return float(steps.sum()) / (2.0 * math.pi)


def winding_number(curve: Curve, point: complex) -> int:
    """Winding number of ``curve`` around ``point``.

    The raw argument sum must land within INTEGER_SNAP_TOL of an integer;
    anything farther is refused as WindingUndefined.
    """
    total = winding_sum(curve, point)
    nearest = round(total)
    if abs(total - nearest) >= INTEGER_SNAP_TOL:
        raise WindingUndefined(f"winding sum {total!r} did not snap to an integer")
    return int(nearest)


def nearest_polyline_point(samples: np.ndarray, point: complex):
    """(distance, closest point) from ``point`` to the closed polyline."""
    a = samples
    b = np.roll(samples, -1)
    seg = b - a
    seg_sq = seg.real**2 + seg.imag**2
    rel = point - a
    t = (rel.real * seg.real + rel.imag * seg.imag) / np.where(seg_sq == 0.0, 1.0, seg_sq)
    t = np.clip(t, 0.0, 1.0)
    closest = a + t * seg
    dists = np.abs(point - closest)
    idx = int(np.argmin(dists))
    return float(dists[idx]), complex(closest[idx])


def point_polyline_distance(samples: np.ndarray, point: complex) -> float:
    """Distance from ``point`` to the closed polyline through ``samples``."""
    return nearest_polyline_point(samples, point)[0]


class RasterGrid:
    """Uniform cell grid over a rectangle with an occupancy mask."""

    def __init__(self, x0, y0, width, height, nx, ny):
        self.x0 = float(x0)
        self.y0 = float(y0)
        self.nx = int(nx)
        self.ny = int(ny)
        self.dx = float(width) / self.nx
        self.dy = float(height) / self.ny
        self.mask = np.zeros((self.ny, self.nx), dtype=bool)

    def cell_of(self, z: complex):
        col = int(math.floor((z.real - self.x0) / self.dx))
        row = int(math.floor((z.imag - self.y0) / self.dy))
        if 0 <= row < self.ny and 0 <= col < self.nx:
            return row, col
        return None

    def cell_center(self, row: int, col: int) -> complex:
        return complex(self.x0 + (col + 0.5) * self.dx, self.y0 + (row + 0.5) * self.dy)

    def mark_point(self, z: complex) -> None:
        cell = self.cell_of(z)
        if cell is not None:
            self.mask[cell] = True

    def mark_points(self, zs) -> None:
        zs = np.asarray(zs, dtype=complex)
        if zs.size == 0:
            return
        cols = np.floor((zs.real - self.x0) / self.dx).astype(int)
        rows = np.floor((zs.imag - self.y0) / self.dy).astype(int)
        keep = (rows >= 0) & (rows < self.ny) & (cols >= 0) & (cols < self.nx)
        self.mask[rows[keep], cols[keep]] = True

    def mark_polyline(self, samples: np.ndarray, closed: bool = True) -> None:
        """Mark every cell the polyline passes through (sub-cell stepping)."""
        a = samples
        b = np.roll(samples, -1) if closed else samples[1:].copy()
        if not closed:
            a = samples[:-1]
        step = 0.5 * min(self.dx, self.dy)
        longest = float(np.abs(b - a).max()) if a.size else 0.0
        n_steps = max(2, int(math.ceil(longest / step)) + 1)
        ts = np.linspace(0.0, 1.0, n_steps)
        pts = a[None, :] * (1.0 - ts[:, None]) + b[None, :] * ts[:, None]
        self.mark_points(pts.ravel())

    def centers_x(self) -> np.ndarray:
        return self.x0 + (np.arange(self.nx) + 0.5) * self.dx

    def centers_y(self) -> np.ndarray:
        return self.y0 + (np.arange(self.ny) + 0.5) * self.dy


def _padded_grid(xmin, xmax, ymin, ymax, resolution) -> RasterGrid:
    diam = math.hypot(xmax - xmin, ymax - ymin)
    span = max(diam, 1e-6)
    pad = PAD_FRACTION * span
    return RasterGrid(xmin - pad, ymin - pad,
                      (xmax - xmin) + 2 * pad, (ymax - ymin) + 2 * pad,
                      resolution, resolution)


@dataclass
class CurveAnalysis:
    """Rasterization of a curve: boundary tube, complement labels, holes.

    ``labels`` assigns a positive component id to every non-tube cell;
    components touching the padded frame are the unbounded outside.
    """

    curve: Curve
    resolution: int
    grid: RasterGrid
    labels: np.ndarray
    outside_labels: frozenset
    holes: list
    hole_id_by_label: dict

    def hole_id_at(self, point: complex):
        """Hole id of the complement component containing ``point``.

        Points whose cell sits inside the boundary tube are pushed out of
        the tube along the local normal (away from the nearest polyline
        point) before classification; if that fails, the nearest labeled
        cell decides (scan-order tie-break).  Returns None for the
        unbounded component or points off the grid.
        """
        cell = self.grid.cell_of(point)
        if cell is None:
            return None
        lab = int(self.labels[cell])
        if lab == 0:
            lab = self._label_by_normal_step(point)
        if lab == 0:
            lab = self._nearest_label(*cell)
        if lab == 0:
            return None
        return self.hole_id_by_label.get(lab)

    def _label_by_normal_step(self, point: complex) -> int:
        dist, closest = nearest_polyline_point(self.curve.samples, point)
        if dist == 0.0:
            return 0
        direction = (point - closest) / dist
        diag = math.hypot(self.grid.dx, self.grid.dy)
        for factor in (1.5, 3.0, 6.0):
            probe = closest + direction * (factor * diag)
            cell = self.grid.cell_of(probe)
            if cell is None:
                continue
            lab = int(self.labels[cell])
            if lab != 0:
                return lab
        return 0

    def _nearest_label(self, row: int, col: int) -> int:
        labels = self.labels
        ny, nx = labels.shape
        best_lab = 0
        best_d2 = None
        for radius in range(1, max(nx, ny)):
            r0, r1 = max(0, row - radius), min(ny - 1, row + radius)
            c0, c1 = max(0, col - radius), min(nx - 1, col + radius)
            block = labels[r0:r1 + 1, c0:c1 + 1]
            rows, cols = np.nonzero(block)
            if rows.size:
                d2 = (rows + r0 - row) ** 2 + (cols + c0 - col) ** 2
                idx = int(np.argmin(d2))
                if best_d2 is None or d2[idx] < best_d2:
                    best_d2 = int(d2[idx])
                    best_lab = int(block[rows[idx], cols[idx]])
                # A ring one step wider cannot beat a hit strictly inside
                # the current block.
                if best_d2 <= radius * radius:
                    return best_lab
        return best_lab

    def translated(self, offset: complex) -> "CurveAnalysis":
        grid = RasterGrid(self.grid.x0 + offset.real, self.grid.y0 + offset.imag,
                          self.grid.dx * self.grid.nx, self.grid.dy * self.grid.ny,
                          self.grid.nx, self.grid.ny)
        grid.mask = self.grid.mask
        holes = [Hole(h.representative + offset, h.winding, h.cell_count, h.component_id)
                 for h in self.holes]
        return CurveAnalysis(self.curve.translated(offset), self.resolution, grid,
                             self.labels, self.outside_labels, holes,
                             dict(self.hole_id_by_label))


def _mark_boundary_tube(grid: RasterGrid, samples: np.ndarray) -> np.ndarray:
    """Cells within one cell-diagonal of the polyline (supersampled)."""
    diag = math.hypot(grid.dx, grid.dy)
    a = samples
    b = np.roll(samples, -1)
    longest = float(np.abs(b - a).max())
    n_steps = max(2, int(math.ceil(longest / (0.5 * diag))) + 1)
    ts = np.linspace(0.0, 1.0, n_steps)
    pts = (a[None, :] * (1.0 - ts[:, None]) + b[None, :] * ts[:, None]).ravel()

    cols = np.floor((pts.real - grid.x0) / grid.dx).astype(int)
    rows = np.floor((pts.imag - grid.y0) / grid.dy).astype(int)
    tube = np.zeros((grid.ny, grid.nx), dtype=bool)
    reach_c = int(math.ceil(diag / grid.dx)) + 1
    reach_r = int(math.ceil(diag / grid.dy)) + 1
    cx = grid.centers_x()
    cy = grid.centers_y()
    for dr in range(-reach_r, reach_r + 1):
        rr = rows + dr
        ok_r = (rr >= 0) & (rr < grid.ny)
        for dc in range(-reach_c, reach_c + 1):
            cc = cols + dc
            ok = ok_r & (cc >= 0) & (cc < grid.nx)
            if not ok.any():
                continue
            d = np.abs(cx[cc[ok]] + 1j * cy[rr[ok]] - pts[ok])
            hit = d <= diag
            if hit.any():
                tube[rr[ok][hit], cc[ok][hit]] = True
    return tube


def analyze_curve(curve: Curve, resolution: int = DEFAULT_GRID_RESOLUTION) -> CurveAnalysis:
    """Rasterize a curve and classify the components of its complement."""
    if resolution < MIN_GRID_RESOLUTION:
        raise ValueError(f"grid resolution must be >= {MIN_GRID_RESOLUTION}")
    if curve.diameter() < 1e-12:
        raise DegenerateCurve("curve bounding box has zero diameter; holes undefined")

    xmin, xmax, ymin, ymax = curve.bounding_box()
    grid = _padded_grid(xmin, xmax, ymin, ymax, resolution)
    tube = _mark_boundary_tube(grid, curve.samples)
    grid.mask = tube

    free = ~tube
    labels, _ = ndimage.label(free)
    outside = set()
    for strip in (labels[0, :], labels[-1, :], labels[:, 0], labels[:, -1]):
        outside.update(int(v) for v in np.unique(strip) if v != 0)

    depth = ndimage.distance_transform_edt(free, sampling=(grid.dy, grid.dx))
    diag = math.hypot(grid.dx, grid.dy)

    holes = []
    hole_id_by_label = {}
    for lab in np.unique(labels):
        lab = int(lab)
        if lab == 0 or lab in outside:
            continue
        component = labels == lab
        cell_count = int(component.sum())
        masked = np.where(component, depth, -1.0)
        flat = int(np.argmax(masked))
        row, col = divmod(flat, grid.nx)
        rep = grid.cell_center(row, col)
        # Raster slivers one cell thin cannot host a trustworthy
        # representative; skip them.
        if point_polyline_distance(curve.samples, rep) <= diag:
            continue
        hole_id = len(holes)
        holes.append(Hole(rep, winding_number(curve, rep), cell_count, hole_id))
        hole_id_by_label[lab] = hole_id

    return CurveAnalysis(curve, resolution, grid, labels, frozenset(outside),
                         holes, hole_id_by_label)


def find_holes(curve: Curve, grid_resolution: int = DEFAULT_GRID_RESOLUTION) -> list:
    """Holes (bounded complement components) of the curve, with windings."""
    return analyze_curve(curve, grid_resolution).holes


def _joint_grid(regions, grid_resolution) -> RasterGrid | None:
    boxes = [r.bounding_box() for r in regions]
    boxes = [b for b in boxes if b is not None]
    if not boxes:
        return None
    xmin = min(b[0] for b in boxes)
    xmax = max(b[1] for b in boxes)
    ymin = min(b[2] for b in boxes)
    ymax = max(b[3] for b in boxes)
    return _padded_grid(xmin, xmax, ymin, ymax, grid_resolution)


def union_is_connected(regions, grid_resolution: int = DEFAULT_GRID_RESOLUTION) -> bool:
    """Whether the union of the regions is one 8-connected raster component.

    Regions are rasterized onto a common padded grid and thickened by one
    cell (a resolution-dependent approximation).  The union of no sets, or
    of only empty sets, is connected by convention.
    """
    if grid_resolution < MIN_GRID_RESOLUTION:
        raise ValueError(f"grid resolution must be >= {MIN_GRID_RESOLUTION}")
    grid = _joint_grid(regions, grid_resolution)
    if grid is None:
        return True
    for region in regions:
        region.rasterize(grid)
    if not grid.mask.any():
        return True
    thick = ndimage.binary_dilation(grid.mask, structure=_EIGHT_CONNECTED)
    _, count = ndimage.label(thick, structure=_EIGHT_CONNECTED)
    return count == 1


def complement_is_connected(region, grid_resolution: int = DEFAULT_GRID_RESOLUTION) -> bool:
    """Whether the plane minus the region is connected.

    Decided on a padded grid whose frame stands in for the unbounded
    component: complement cells must form one 8-connected component.
    The complement of the empty set is connected.
    """
    if grid_resolution < MIN_GRID_RESOLUTION:
        raise ValueError(f"grid resolution must be >= {MIN_GRID_RESOLUTION}")
    grid = _joint_grid([region], grid_resolution)
    if grid is None:
        return True
    region.rasterize(grid)
    thick = ndimage.binary_dilation(grid.mask, structure=_EIGHT_CONNECTED)
    _, count = ndimage.label(~thick, structure=_EIGHT_CONNECTED)
    return count == 1
