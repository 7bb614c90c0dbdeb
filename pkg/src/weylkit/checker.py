"""Weyl-type property evaluation on spectral pictures.

Each property is the truth of its defining set identity, decided by the
region machinery: Weyl's theorem is sigma \\ sigma_w == E0, Browder's is
sigma_w == sigma_b, property (w) is sigma_a \\ sigma_uw == E0, (UW_E) is
sigma_a \\ sigma_uw == E, (V_E) is sigma \\ sigma_uw == E, and (W_E) is
sigma \\ sigma_w == E.  Compact-perturbation stability and the
hypercyclic / supercyclic closure criteria are decided on the rasterized
geometry of the picture.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import geometry
from .errors import FlagMissing, InternalConsistencyError
from .regions import (Circle, Disk, EmptyRegion, FinitePoints, Region,
                      SequenceWithLimits, SpectralPicture, UnionRegion,
                      DEFAULT_TOL, difference_matches, differences_match,
                      eigen_sets, isolated_eigenvalue_region, merge_probes,
                      regions_equal, validate_picture)


@dataclass(frozen=True)
class PropertyReport:
    """Truth values of the Weyl-type identities, with counterexamples.

    ``a_weyl_note`` evaluates the approximate-point variant built from the
    isolated points of sigma_a; it is informational only (the identity is
    not part of the implication chain and is not serialized as a verdict).
    ``witnesses`` maps each false property to one point breaking it.
    """

    weyl: bool
    browder: bool
    property_w: bool
    uwe: bool
    ve: bool
    we: bool
    a_weyl_note: bool
    factorization_consistent: bool
    witnesses: dict


def _require_valid(picture: SpectralPicture, tol: float) -> None:
    violations = validate_picture(picture, tol)
    if violations:
        raise ValueError("invalid picture: " + "; ".join(violations))


def _a_isolated_finite_eigenvalues(picture: SpectralPicture, tol: float) -> Region:
    # Isolated points of sigma_a without a multiplicity entry count as
    # non-eigenvalues here; the strict check belongs to sigma.
    return isolated_eigenvalue_region(picture, picture.sigma_a, tol,
                                      finite_only=True, strict=False)


def _factorization_consistent(picture, uwe, weyl, e_region, e0_region, tol):
    swap_ok, _ = differences_match(picture.sigma_w, picture.sigma_uw,
                                   picture.sigma, picture.sigma_a, tol)
    e_match, _ = regions_equal(e_region, e0_region, tol)
    return uwe == (weyl and swap_ok and e_match)


def evaluate_properties(picture: SpectralPicture, tol: float = DEFAULT_TOL) -> PropertyReport:
    """Evaluate all Weyl-type identities on a validated picture."""
    _require_valid(picture, tol)
    sets = eigen_sets(picture, tol)
    e_region = sets.isolated_eigenvalues
    e0_region = sets.finite_isolated_eigenvalues

    witnesses = {}

    def record(name, result):
        ok, witness = result
        if not ok:
            witnesses[name] = witness
        return ok

    weyl = record("weyl", difference_matches(picture.sigma, picture.sigma_w, e0_region, tol))
    browder = record("browder", regions_equal(picture.sigma_w, picture.sigma_b, tol))
    property_w = record("property_w",
                        difference_matches(picture.sigma_a, picture.sigma_uw, e0_region, tol))
    uwe = record("uwe", difference_matches(picture.sigma_a, picture.sigma_uw, e_region, tol))
    ve = record("ve", difference_matches(picture.sigma, picture.sigma_uw, e_region, tol))
    we = record("we", difference_matches(picture.sigma, picture.sigma_w, e_region, tol))
    a_weyl_note = record("a_weyl_note",
                         difference_matches(picture.sigma_a, picture.sigma_uw,
                                            _a_isolated_finite_eigenvalues(picture, tol), tol))

    for stronger, weaker in (("uwe", "property_w"), ("property_w", "weyl"),
                             ("weyl", "browder")):
        values = {"uwe": uwe, "property_w": property_w, "weyl": weyl, "browder": browder}
        if values[stronger] and not values[weaker]:
            raise InternalConsistencyError(
                f"{stronger} holds but {weaker} fails on {picture.label!r}")

    r1 = _factorization_consistent(picture, uwe, weyl, e_region, e0_region, tol)
    return PropertyReport(weyl=weyl, browder=browder, property_w=property_w,
                          uwe=uwe, ve=ve, we=we, a_weyl_note=a_weyl_note,
                          factorization_consistent=r1, witnesses=witnesses)


def check_uwe_factorization(picture: SpectralPicture, tol: float = DEFAULT_TOL) -> bool:
    """Cross-validation oracle for the (UW_E) factorization.

    True iff (UW_E) holds exactly when Weyl's theorem holds, the Weyl /
    upper-semi-Weyl gap equals the sigma / sigma_a gap, and E == E0.
    A false return flags a bad picture or a checker bug.
    """
    _require_valid(picture, tol)
    sets = eigen_sets(picture, tol)
    weyl, _ = difference_matches(picture.sigma, picture.sigma_w,
                                 sets.finite_isolated_eigenvalues, tol)
    uwe, _ = difference_matches(picture.sigma_a, picture.sigma_uw,
                                sets.isolated_eigenvalues, tol)
    return _factorization_consistent(picture, uwe, weyl, sets.isolated_eigenvalues,
                          sets.finite_isolated_eigenvalues, tol)


def uwe_stable_under_compacts(picture: SpectralPicture,
                              grid_resolution: int = geometry.DEFAULT_GRID_RESOLUTION,
                              tol: float = DEFAULT_TOL) -> bool:
    """Whether (UW_E) survives every compact perturbation.

    Requires no isolated points in the Weyl spectrum and a connected
    complement of the upper semi-Weyl spectrum (the plane minus the set,
    unbounded component included via the padded frame).
    """
    _require_valid(picture, tol)
    if picture.sigma_w.isolated_points(tol):
        return False
    return geometry.complement_is_connected(picture.sigma_uw, grid_resolution)


def closure_hp_connectedness(picture: SpectralPicture,
                             grid_resolution: int = geometry.DEFAULT_GRID_RESOLUTION,
                             tol: float = DEFAULT_TOL) -> bool:
    """Connectedness of sigma with the unit circle.

    Under (UW_E) this is the membership criterion for the closure of the
    hypercyclic class; see the catalog notes for the known tension with
    the supercyclic analogue.
    """
    _require_valid(picture, tol)
    return geometry.union_is_connected([picture.sigma, Circle(0j, 1.0)], grid_resolution)


def _radius_candidates(region: Region) -> list:
    moduli = []

    def walk(r):
        if isinstance(r, FinitePoints):
            moduli.extend(abs(p) for p in r.points)
        elif isinstance(r, SequenceWithLimits):
            moduli.extend(abs(p) for p in r.prefix)
            moduli.extend(abs(p) for p in r.limits)
        elif isinstance(r, (Circle, Disk)):
            moduli.append(abs(abs(r.center) - r.radius))
            moduli.append(abs(r.center) + r.radius)
        elif isinstance(r, UnionRegion):
            for part in r.parts:
                walk(part)

    walk(region)
    probe_moduli = [abs(p) for p in merge_probes(region)]
    candidates = {0.0}
    candidates.update(moduli)
    if probe_moduli:
        lo, hi = min(probe_moduli), max(probe_moduli)
        candidates.update(lo + (hi - lo) * k / 31 for k in range(32))
    return sorted({round(c, 12) for c in candidates if c >= 0.0})


def closure_sp_connectedness(picture: SpectralPicture,
                             grid_resolution: int = geometry.DEFAULT_GRID_RESOLUTION,
                             tol: float = DEFAULT_TOL):
    """(connected, radius): sigma with some origin-centered circle.

    Scans a deterministic candidate list (0, stored-point moduli, circle
    and disk extremal moduli, 32 radii across the bounding annulus) and
    returns the first radius whose circle makes the union connected.
    """
    _require_valid(picture, tol)
    for radius in _radius_candidates(picture.sigma):
        if geometry.union_is_connected([picture.sigma, Circle(0j, radius)],
                                       grid_resolution):
            return True, radius
    return False, None


@dataclass(frozen=True)
class HypercyclicVerdict:
    consistent: bool
    detail: str


@dataclass(frozen=True)
class SupercyclicVerdict:
    consistent: bool
    alpha: complex | None


def _region_point_list(region: Region):
    """Points of a region known to be finite, or None when infinite."""
    if isinstance(region, EmptyRegion):
        return []
    if isinstance(region, FinitePoints):
        return list(region.points)
    if isinstance(region, UnionRegion):
        out = []
        for part in region.parts:
            sub = _region_point_list(part)
            if sub is None:
                return None
            out.extend(sub)
        return out
    return None


def check_hypercyclic_criterion(picture: SpectralPicture, tol: float = DEFAULT_TOL) -> HypercyclicVerdict:
    """Consistency of a hypercyclic picture with the (UW_E) criterion.

    For hypercyclic operators (flag required), (UW_E) must hold exactly
    when the isolated-eigenvalue set E is empty.
    """
    if picture.flags.get("is_hypercyclic") is not True:
        raise FlagMissing("picture is not flagged is_hypercyclic")
    _require_valid(picture, tol)
    report = evaluate_properties(picture, tol)
    e_region = eigen_sets(picture, tol).isolated_eigenvalues
    e_empty = e_region.is_empty()
    consistent = report.uwe == e_empty
    detail = (f"uwe={report.uwe}, E {'empty' if e_empty else 'nonempty'}; "
              f"{'consistent' if consistent else 'theorem violated: bad fixture'}")
    return HypercyclicVerdict(consistent, detail)


def check_supercyclic_criterion(picture: SpectralPicture, tol: float = DEFAULT_TOL,
                          adjoint_condition: bool = True) -> SupercyclicVerdict:
    """Consistency of a supercyclic picture with the (UW_E) criterion.

    ``adjoint_condition`` asserts the hypothesis that E lies inside the
    finite isolated eigenvalues of the adjoint, which a picture cannot
    carry.  (UW_E) must hold exactly when E is empty or a single point
    off the Browder spectrum.
    """
    if picture.flags.get("is_supercyclic") is not True:
        raise FlagMissing("picture is not flagged is_supercyclic")
    if not adjoint_condition:
        raise FlagMissing("adjoint eigenvalue hypothesis not asserted")
    _require_valid(picture, tol)
    report = evaluate_properties(picture, tol)
    points = _region_point_list(eigen_sets(picture, tol).isolated_eigenvalues)
    alpha = None
    if points is None:
        allowed = False            # E infinite: never within a singleton
    elif not points:
        allowed = True
    elif len(points) == 1 and not picture.sigma_b.contains(points[0], tol):
        allowed = True
        alpha = points[0]
    else:
        allowed = False
    return SupercyclicVerdict(report.uwe == allowed, alpha)
