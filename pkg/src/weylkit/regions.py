"""Spectral sets as queryable planar regions, and full spectral pictures.

Regions form a small tagged grammar: finite point sets, convergent
sequences described by a prefix plus a generating rule, circles, disks,
curve-with-holes regions, and unions.  Countable sets keep their rule tag
so membership extends past the stored prefix.  Set identities between
regions are decided by membership agreement on a deterministic probe set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import geometry
from .errors import MissingMultiplicity

DEFAULT_TOL = 1e-9
BOUNDARY_PROBES = 64
SEQUENCE_PREFIX_CAP = 64
RULE_INDEX_CAP = 10**6

ALPHA_INF = math.inf


@dataclass(frozen=True)
class SequenceRule:
    """Generator for the tail of a countable spectral sequence."""

    name: str
    value: object          # callable: index (1-based) -> complex
    locate: object         # callable: (point, tol) -> bool, or None

    def probe_indices(self, prefix_len: int):
        raw = (prefix_len + 1, prefix_len + 2, 2 * prefix_len, 16 * prefix_len)
        return tuple(sorted({i for i in raw if 1 <= i <= RULE_INDEX_CAP}))


def _one_over_n_locate(point: complex, tol: float) -> bool:
    if abs(point.imag) > tol or point.real <= 0:
        return False
    guess = int(round(1.0 / point.real))
    for n in (guess - 1, guess, guess + 1):
        if 1 <= n <= RULE_INDEX_CAP and abs(1.0 / n - point.real) <= tol:
            return True
    return False


SEQUENCE_RULES = {
    "1/n": SequenceRule("1/n", lambda n: complex(1.0 / n), _one_over_n_locate),
    "": SequenceRule("", None, None),  # prefix-only, no extension
}


def _as_complex_tuple(points):
    return tuple(complex(p) for p in points)


class Region:
    """Base class for spectral-set regions."""

    def contains(self, point: complex, tol: float = DEFAULT_TOL) -> bool:
        raise NotImplementedError

    def isolated_points(self, tol: float = DEFAULT_TOL) -> list:
        raise NotImplementedError

    def bounding_box(self):
        """(xmin, xmax, ymin, ymax), or None for an empty region."""
        raise NotImplementedError

    def probe_points(self) -> list:
        """Deterministic membership probes covering this region's features."""
        raise NotImplementedError

    def rasterize(self, grid) -> None:
        raise NotImplementedError

    def covers_neighborhood(self, point: complex, tol: float = DEFAULT_TOL) -> bool:
        """Whether the region accumulates at ``point`` (kills isolation)."""
        return False

    def translated(self, offset: complex) -> "Region":
        raise NotImplementedError

    def is_empty(self) -> bool:
        return False


@dataclass(frozen=True)
class EmptyRegion(Region):
    def contains(self, point, tol=DEFAULT_TOL):
        return False

    def isolated_points(self, tol=DEFAULT_TOL):
        return []

    def bounding_box(self):
        return None

    def probe_points(self):
        return []

    def rasterize(self, grid):
        return None

    def translated(self, offset):
        return self

    def is_empty(self):
        return True


@dataclass(frozen=True)
class FinitePoints(Region):
    points: tuple

    def __post_init__(self):
        pts = _as_complex_tuple(self.points)
        for i in range(len(pts)):
            for k in range(i + 1, len(pts)):
                if abs(pts[i] - pts[k]) <= 1e-12:
                    raise ValueError(f"points {pts[i]} and {pts[k]} coincide at 1e-12")
        object.__setattr__(self, "points", pts)

    def contains(self, point, tol=DEFAULT_TOL):
        return any(abs(point - p) <= tol for p in self.points)

    def isolated_points(self, tol=DEFAULT_TOL):
        return list(self.points)

    def bounding_box(self):
        if not self.points:
            return None
        xs = [p.real for p in self.points]
        ys = [p.imag for p in self.points]
        return min(xs), max(xs), min(ys), max(ys)

    def probe_points(self):
        return list(self.points)

    def rasterize(self, grid):
        grid.mark_points(np.array(self.points, dtype=complex))

    def translated(self, offset):
        return FinitePoints(tuple(p + offset for p in self.points))

    def is_empty(self):
        return not self.points


@dataclass(frozen=True)
class SequenceWithLimits(Region):
    """Countable set: stored prefix, optional generating rule, limit points.

    The rule extends membership beyond the prefix (indices up to 10**6);
    limit points belong to the set (spectra are closed).
    """

    prefix: tuple
    rule_tag: str = ""
    limits: tuple = ()

    def __post_init__(self):
        prefix = _as_complex_tuple(self.prefix)
        limits = _as_complex_tuple(self.limits)
        if len(prefix) > SEQUENCE_PREFIX_CAP:
            raise ValueError(f"sequence prefix limited to {SEQUENCE_PREFIX_CAP} stored terms")
        if self.rule_tag not in SEQUENCE_RULES:
            raise ValueError(f"unknown sequence rule {self.rule_tag!r}")
        for lim in limits:
            if any(abs(lim - p) <= 1e-12 for p in prefix):
                raise ValueError(f"limit {lim} duplicated in prefix")
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "limits", limits)

    @property
    def rule(self) -> SequenceRule:
        return SEQUENCE_RULES[self.rule_tag]

    def _rule_probe_values(self):
        rule = self.rule
        if rule.value is None:
            return []
        return [rule.value(i) for i in rule.probe_indices(len(self.prefix))]

    def contains(self, point, tol=DEFAULT_TOL):
        if any(abs(point - p) <= tol for p in self.prefix):
            return True
        if any(abs(point - p) <= tol for p in self.limits):
            return True
        rule = self.rule
        if rule.locate is not None:
            return rule.locate(point, tol)
        return False

    def isolated_points(self, tol=DEFAULT_TOL):
        return [p for p in self.prefix
                if all(abs(p - lim) > tol for lim in self.limits)]

    def bounding_box(self):
        pts = list(self.prefix) + list(self.limits) + self._rule_probe_values()
        if not pts:
            return None
        xs = [p.real for p in pts]
        ys = [p.imag for p in pts]
        return min(xs), max(xs), min(ys), max(ys)

    def probe_points(self):
        return list(self.prefix) + list(self.limits) + self._rule_probe_values()

    def rasterize(self, grid):
        grid.mark_points(np.array(self.prefix + self.limits, dtype=complex))
        rule = self.rule
        if rule.value is None:
            return
        half_cell = 0.5 * min(grid.dx, grid.dy)
        n = len(self.prefix) + 1
        while n <= RULE_INDEX_CAP:
            value = rule.value(n)
            grid.mark_point(value)
            if self.limits and min(abs(value - lim) for lim in self.limits) < half_cell:
                break
            if n > len(self.prefix) + 100_000:
                break
            n += 1

    def covers_neighborhood(self, point, tol=DEFAULT_TOL):
        return any(abs(point - lim) <= tol for lim in self.limits)

    def translated(self, offset):
        if self.rule_tag and self.rule.value is not None and offset != 0:
            raise ValueError("cannot translate a rule-generated sequence")
        return SequenceWithLimits(tuple(p + offset for p in self.prefix),
                                  self.rule_tag,
                                  tuple(p + offset for p in self.limits))

    def is_empty(self):
        return not self.prefix and not self.limits


@dataclass(frozen=True)
class Circle(Region):
    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        if self.radius < 0:
            raise ValueError("circle radius must be >= 0")
        object.__setattr__(self, "radius", float(self.radius))

    def contains(self, point, tol=DEFAULT_TOL):
        return abs(abs(point - self.center) - self.radius) <= tol

    def isolated_points(self, tol=DEFAULT_TOL):
        return [self.center] if self.radius == 0.0 else []

    def bounding_box(self):
        c, r = self.center, self.radius
        return c.real - r, c.real + r, c.imag - r, c.imag + r

    def probe_points(self):
        pts = [self.center]
        for k in range(BOUNDARY_PROBES):
            ang = 2.0 * math.pi * k / BOUNDARY_PROBES
            pts.append(self.center + self.radius * complex(math.cos(ang), math.sin(ang)))
        return pts

    def rasterize(self, grid):
        if self.radius == 0.0:
            grid.mark_point(self.center)
            return
        n = max(512, 4 * max(grid.nx, grid.ny))
        ang = 2.0 * math.pi * np.arange(n) / n
        grid.mark_points(self.center + self.radius * np.exp(1j * ang))

    def covers_neighborhood(self, point, tol=DEFAULT_TOL):
        if self.radius == 0.0:
            return False
        return abs(abs(point - self.center) - self.radius) <= tol

    def translated(self, offset):
        return Circle(self.center + offset, self.radius)


@dataclass(frozen=True)
class Disk(Region):
    center: complex
    radius: float
    closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        if self.radius < 0:
            raise ValueError("disk radius must be >= 0")
        object.__setattr__(self, "radius", float(self.radius))

    def contains(self, point, tol=DEFAULT_TOL):
        dist = abs(point - self.center)
        if self.closed:
            return dist <= self.radius + tol
        return dist <= self.radius - tol

    def isolated_points(self, tol=DEFAULT_TOL):
        return [self.center] if self.radius == 0.0 else []

    def bounding_box(self):
        c, r = self.center, self.radius
        return c.real - r, c.real + r, c.imag - r, c.imag + r

    def probe_points(self):
        pts = [self.center]
        for k in range(BOUNDARY_PROBES):
            ang = 2.0 * math.pi * k / BOUNDARY_PROBES
            pts.append(self.center + self.radius * complex(math.cos(ang), math.sin(ang)))
        return pts

    def rasterize(self, grid):
        if self.radius == 0.0:
            grid.mark_point(self.center)
            return
        xs = grid.centers_x() - self.center.real
        ys = grid.centers_y() - self.center.imag
        inside = (xs[None, :] ** 2 + ys[:, None] ** 2) <= self.radius**2
        grid.mask |= inside
        # Rim samples keep thin shells visible even when no center lands inside.
        n = max(512, 4 * max(grid.nx, grid.ny))
        ang = 2.0 * math.pi * np.arange(n) / n
        grid.mark_points(self.center + self.radius * np.exp(1j * ang))

    def covers_neighborhood(self, point, tol=DEFAULT_TOL):
        if self.radius == 0.0:
            return False
        return abs(point - self.center) <= self.radius + tol

    def translated(self, offset):
        return Disk(self.center + offset, self.radius, self.closed)


@dataclass(frozen=True)
class CurveRegion(Region):
    """A sampled curve together with a chosen subset of its holes.

    ``include_hole`` maps hole ids (from the region's own curve analysis)
    to whether that bounded component belongs to the set.
    """

    analysis: geometry.CurveAnalysis
    include_hole: dict

    def __post_init__(self):
        known = {h.component_id for h in self.analysis.holes}
        unknown = set(self.include_hole) - known
        if unknown:
            raise ValueError(f"unknown hole ids {sorted(unknown)}")
        object.__setattr__(self, "include_hole",
                           {int(k): bool(v) for k, v in self.include_hole.items()})

    @property
    def curve(self) -> geometry.Curve:
        return self.analysis.curve

    def included_holes(self):
        return [h for h in self.analysis.holes if self.include_hole.get(h.component_id)]

    def contains(self, point, tol=DEFAULT_TOL):
        if geometry.point_polyline_distance(self.curve.samples, point) <= tol:
            return True
        hole_id = self.analysis.hole_id_at(point)
        if hole_id is None:
            return False
        return bool(self.include_hole.get(hole_id, False))

    def isolated_points(self, tol=DEFAULT_TOL):
        return []

    def bounding_box(self):
        return self.curve.bounding_box()

    def probe_points(self):
        samples = self.curve.samples
        stride = max(1, len(samples) // BOUNDARY_PROBES)
        pts = list(samples[::stride][:BOUNDARY_PROBES])
        pts.extend(h.representative for h in self.analysis.holes)
        return pts

    def rasterize(self, grid):
        grid.mark_polyline(self.curve.samples, closed=True)
        included = {h.component_id for h in self.included_holes()}
        if not included:
            return
        # Target cells are classified through this region's own raster.
        src = self.analysis
        cx = grid.centers_x()
        cy = grid.centers_y()
        cols = np.floor((cx - src.grid.x0) / src.grid.dx).astype(int)
        rows = np.floor((cy - src.grid.y0) / src.grid.dy).astype(int)
        ok_c = (cols >= 0) & (cols < src.grid.nx)
        ok_r = (rows >= 0) & (rows < src.grid.ny)
        labels = np.zeros((grid.ny, grid.nx), dtype=src.labels.dtype)
        sub = src.labels[np.clip(rows, 0, src.grid.ny - 1)[:, None],
                         np.clip(cols, 0, src.grid.nx - 1)[None, :]]
        valid = ok_r[:, None] & ok_c[None, :]
        labels[valid] = sub[valid]
        wanted = {lab for lab, hid in src.hole_id_by_label.items() if hid in included}
        if wanted:
            grid.mask |= np.isin(labels, sorted(wanted))

    def covers_neighborhood(self, point, tol=DEFAULT_TOL):
        return self.contains(point, tol)

    def translated(self, offset):
        return CurveRegion(self.analysis.translated(offset), dict(self.include_hole))


@dataclass(frozen=True)
class UnionRegion(Region):
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))

    def contains(self, point, tol=DEFAULT_TOL):
        return any(part.contains(point, tol) for part in self.parts)

    def isolated_points(self, tol=DEFAULT_TOL):
        seen = []
        for part in self.parts:
            for p in part.isolated_points(tol):
                if any(abs(p - q) <= 1e-12 for q in seen):
                    continue
                if any(other.covers_neighborhood(p, tol) for other in self.parts):
                    continue
                seen.append(p)
        return seen

    def bounding_box(self):
        boxes = [part.bounding_box() for part in self.parts]
        boxes = [b for b in boxes if b is not None]
        if not boxes:
            return None
        return (min(b[0] for b in boxes), max(b[1] for b in boxes),
                min(b[2] for b in boxes), max(b[3] for b in boxes))

    def probe_points(self):
        pts = []
        for part in self.parts:
            pts.extend(part.probe_points())
        return pts

    def rasterize(self, grid):
        for part in self.parts:
            part.rasterize(grid)

    def covers_neighborhood(self, point, tol=DEFAULT_TOL):
        return any(part.covers_neighborhood(point, tol) for part in self.parts)

    def translated(self, offset):
        return UnionRegion(tuple(part.translated(offset) for part in self.parts))

    def is_empty(self):
        return all(part.is_empty() for part in self.parts)


def merge_probes(*regions) -> list:
    """Deduplicated, deterministically ordered probe points of the regions."""
    pts = []
    for region in regions:
        pts.extend(region.probe_points())
    pts.sort(key=lambda p: (p.real, p.imag))
    merged = []
    for p in pts:
        if merged and abs(p - merged[-1]) <= 1e-12:
            continue
        merged.append(p)
    return merged


def region_subset(a: Region, b: Region, tol: float = DEFAULT_TOL):
    """(holds, witness): every probe of ``a`` in the set is also in ``b``."""
    for p in merge_probes(a):
        if a.contains(p, tol) and not b.contains(p, tol):
            return False, p
    return True, None


def regions_equal(a: Region, b: Region, tol: float = DEFAULT_TOL):
    """(equal, witness) by mutual membership over both probe sets."""
    for p in merge_probes(a, b):
        if a.contains(p, tol) != b.contains(p, tol):
            return False, p
    return True, None


def difference_matches(a: Region, b: Region, target: Region, tol: float = DEFAULT_TOL):
    """(holds, witness) for the set identity a \\ b == target."""
    for p in merge_probes(a, b, target):
        if (a.contains(p, tol) and not b.contains(p, tol)) != target.contains(p, tol):
            return False, p
    return True, None


def differences_match(a1, b1, a2, b2, tol: float = DEFAULT_TOL):
    """(holds, witness) for the set identity a1 \\ b1 == a2 \\ b2."""
    for p in merge_probes(a1, b1, a2, b2):
        lhs = a1.contains(p, tol) and not b1.contains(p, tol)
        rhs = a2.contains(p, tol) and not b2.contains(p, tol)
        if lhs != rhs:
            return False, p
    return True, None


# Module-level forms of the membership queries, matching the operations
# the rest of the toolkit documents.

def contains(region: Region, point: complex, tol: float = DEFAULT_TOL) -> bool:
    return region.contains(point, tol)


def isolated_points(region: Region, tol: float = DEFAULT_TOL) -> list:
    return region.isolated_points(tol)


@dataclass
class SpectralPicture:
    """Named spectra of one operator plus eigenvalue multiplicity data.

    ``sigma_e`` stores the semi-Fredholm (Wolf) essential spectrum where
    that convention differs from the Fredholm one, so the containment
    chain sigma_e <= sigma_uw <= sigma_w <= sigma_b <= sigma is sound.
    ``eigen_multiplicity`` maps isolated spectral points to their
    eigenvalue multiplicity (math.inf is legal).  ``flags`` carries
    operator metadata such as is_hypercyclic / is_supercyclic /
    is_hyponormal; absent keys mean "unknown".
    """

    label: str
    sigma: Region
    sigma_a: Region
    sigma_e: Region
    sigma_w: Region
    sigma_uw: Region
    sigma_b: Region
    eigen_multiplicity: dict = field(default_factory=dict)
    flags: dict = field(default_factory=dict)

    def __post_init__(self):
        self.eigen_multiplicity = {complex(k): v for k, v in self.eigen_multiplicity.items()}

    def alpha_at(self, point: complex, tol: float = DEFAULT_TOL):
        for key, alpha in self.eigen_multiplicity.items():
            if abs(key - point) <= tol:
                return alpha
        return None


@dataclass
class EigenSets:
    """Derived eigenvalue sets of a picture.

    ``isolated_eigenvalues`` are isolated spectral points with positive
    multiplicity; ``finite_isolated_eigenvalues`` restricts to finite
    multiplicity; ``browder_points`` are spectral points off sigma_b.
    """

    isolated_eigenvalues: Region
    finite_isolated_eigenvalues: Region
    browder_points: Region


_CHAIN = (("sigma_e", "sigma_uw"), ("sigma_uw", "sigma_w"),
          ("sigma_w", "sigma_b"), ("sigma_b", "sigma"),
          ("sigma_uw", "sigma_a"), ("sigma_a", "sigma"))


def validate_picture(picture: SpectralPicture, tol: float = DEFAULT_TOL) -> list:
    """Containment violations of the picture (empty list means valid)."""
    violations = []
    for small, big in _CHAIN:
        ok, witness = region_subset(getattr(picture, small), getattr(picture, big), tol)
        if not ok:
            violations.append(f"{small} not within {big} (witness {witness})")
    for point in picture.eigen_multiplicity:
        if not picture.sigma.contains(point, tol):
            violations.append(f"eigenvalue {point} outside sigma")
    return violations


def _sequence_parts(region: Region):
    if isinstance(region, SequenceWithLimits):
        return [region]
    if isinstance(region, UnionRegion):
        out = []
        for part in region.parts:
            out.extend(_sequence_parts(part))
        return out
    return []


def _assemble_region(parts, loose):
    pieces = list(parts)
    if loose:
        pieces.append(FinitePoints(tuple(loose)))
    if not pieces:
        return EmptyRegion()
    if len(pieces) == 1:
        return pieces[0]
    return UnionRegion(tuple(pieces))


def isolated_eigenvalue_region(picture: "SpectralPicture", base: Region,
                               tol: float = DEFAULT_TOL,
                               finite_only: bool = False,
                               strict: bool = True) -> Region:
    """Isolated points of ``base`` that are recorded eigenvalues.

    Multiplicity recorded for every stored point of a rule sequence is
    taken to hold along the whole rule extension, so countable spectra
    yield countable eigenvalue sets.  ``finite_only`` drops infinite
    multiplicities.  ``strict`` raises MissingMultiplicity for isolated
    points without an entry; otherwise they count as non-eigenvalues.
    """
    iso = base.isolated_points(tol)
    alphas = {}
    for p in iso:
        alpha = picture.alpha_at(p, tol)
        if alpha is None:
            if strict:
                raise MissingMultiplicity(
                    f"isolated point {p} of {type(base).__name__} has no multiplicity entry")
            alpha = 0
        alphas[(p.real, p.imag)] = alpha

    def qualifies(alpha):
        return alpha > 0 and (alpha < ALPHA_INF or not finite_only)

    covered = set()
    parts = []
    for seq in _sequence_parts(base):
        if seq.rule.value is None:
            continue
        members = [p for p in seq.prefix if (p.real, p.imag) in alphas]
        if not members or not all(qualifies(alphas[(p.real, p.imag)]) for p in members):
            continue
        parts.append(SequenceWithLimits(tuple(members), seq.rule_tag, ()))
        covered.update((p.real, p.imag) for p in members)

    loose = [p for p in iso
             if qualifies(alphas[(p.real, p.imag)]) and (p.real, p.imag) not in covered]
    return _assemble_region(parts, loose)


def eigen_sets(picture: "SpectralPicture", tol: float = DEFAULT_TOL) -> EigenSets:
    """E / E0 / Browder-point sets derived from the picture."""
    e_region = isolated_eigenvalue_region(picture, picture.sigma, tol, finite_only=False)
    e0_region = isolated_eigenvalue_region(picture, picture.sigma, tol, finite_only=True)

    # Browder points: spectral probes outside sigma_b, with rule sequences
    # kept whole when their sampled extension also stays outside.
    p00_parts, p00_loose = [], []
    seen = set()
    for seq in _sequence_parts(picture.sigma):
        outside = [p for p in seq.prefix if not picture.sigma_b.contains(p, tol)]
        if outside and len(outside) == len(seq.prefix) and seq.rule.value is not None:
            probes_out = all(not picture.sigma_b.contains(v, tol)
                             for v in seq._rule_probe_values())
            if probes_out:
                p00_parts.append(SequenceWithLimits(tuple(outside), seq.rule_tag, ()))
                seen.update((p.real, p.imag) for p in outside)
                continue
        for p in outside:
            if (p.real, p.imag) not in seen:
                seen.add((p.real, p.imag))
                p00_loose.append(p)
    for p in merge_probes(picture.sigma):
        if (p.real, p.imag) in seen:
            continue
        if picture.sigma.contains(p, tol) and not picture.sigma_b.contains(p, tol):
            seen.add((p.real, p.imag))
            p00_loose.append(p)
    p00_region = _assemble_region(p00_parts, p00_loose)

    return EigenSets(e_region, e0_region, p00_region)


# --- JSON wire format -------------------------------------------------

def _point_json(p: complex):
    return [float(p.real), float(p.imag)]


def region_to_json(region: Region) -> dict:
    if isinstance(region, EmptyRegion):
        return {"type": "points", "points": []}
    if isinstance(region, FinitePoints):
        return {"type": "points", "points": [_point_json(p) for p in region.points]}
    if isinstance(region, SequenceWithLimits):
        return {"type": "seq",
                "prefix": [_point_json(p) for p in region.prefix],
                "rule": region.rule_tag,
                "limits": [_point_json(p) for p in region.limits]}
    if isinstance(region, Circle):
        return {"type": "circle", "center": _point_json(region.center),
                "radius": region.radius}
    if isinstance(region, Disk):
        return {"type": "disk", "center": _point_json(region.center),
                "radius": region.radius, "closed": region.closed}
    if isinstance(region, CurveRegion):
        return {"type": "curve",
                "samples": [_point_json(p) for p in region.curve.samples],
                "grid": region.analysis.resolution,
                "include_holes": {str(k): v for k, v in sorted(region.include_hole.items())}}
    if isinstance(region, UnionRegion):
        return {"type": "union", "parts": [region_to_json(p) for p in region.parts]}
    raise TypeError(f"unsupported region {type(region).__name__}")


def _point_from_json(obj) -> complex:
    return complex(float(obj[0]), float(obj[1]))


def region_from_json(obj: dict) -> Region:
    kind = obj.get("type")
    if kind == "points":
        pts = [_point_from_json(p) for p in obj["points"]]
        return FinitePoints(tuple(pts)) if pts else EmptyRegion()
    if kind == "seq":
        return SequenceWithLimits(tuple(_point_from_json(p) for p in obj["prefix"]),
                                  obj.get("rule", ""),
                                  tuple(_point_from_json(p) for p in obj.get("limits", [])))
    if kind == "circle":
        return Circle(_point_from_json(obj["center"]), float(obj["radius"]))
    if kind == "disk":
        return Disk(_point_from_json(obj["center"]), float(obj["radius"]),
                    bool(obj.get("closed", True)))
    if kind == "curve":
        samples = np.array([_point_from_json(p) for p in obj["samples"]], dtype=complex)
        analysis = geometry.analyze_curve(geometry.Curve(samples),
                                          int(obj.get("grid", geometry.DEFAULT_GRID_RESOLUTION)))
        include = {int(k): bool(v) for k, v in obj.get("include_holes", {}).items()}
        return CurveRegion(analysis, include)
    if kind == "union":
        return UnionRegion(tuple(region_from_json(p) for p in obj["parts"]))
    raise ValueError(f"unknown region type {kind!r}")


_REGION_KEYS = ("sigma", "sigma_a", "sigma_e", "sigma_w", "sigma_uw", "sigma_b")


def picture_to_json(picture: SpectralPicture) -> dict:
    eigen = []
    for point in sorted(picture.eigen_multiplicity, key=lambda p: (p.real, p.imag)):
        alpha = picture.eigen_multiplicity[point]
        eigen.append({"point": _point_json(point),
                      "alpha": "inf" if alpha == ALPHA_INF else int(alpha)})
    out = {"label": picture.label}
    for key in _REGION_KEYS:
        out[key] = region_to_json(getattr(picture, key))
    out["eigen"] = eigen
    out["flags"] = {k: v for k, v in sorted(picture.flags.items()) if v is not None}
    return out


def picture_from_json(obj: dict) -> SpectralPicture:
    regions = {key: region_from_json(obj[key]) for key in _REGION_KEYS}
    eigen = {}
    for item in obj.get("eigen", []):
        alpha = item["alpha"]
        eigen[_point_from_json(item["point"])] = ALPHA_INF if alpha == "inf" else int(alpha)
    return SpectralPicture(label=str(obj.get("label", "")),
                           eigen_multiplicity=eigen,
                           flags=dict(obj.get("flags", {})),
                           **regions)
