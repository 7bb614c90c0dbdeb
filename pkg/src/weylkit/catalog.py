"""Named operator fixtures with exact spectral pictures and verdicts.

Each entry records the spectra of one concretely defined operator (diag
and shift constructions on l2, Toeplitz operators on the Bergman and
harmonic Bergman spaces), the known true/false verdicts for the
Weyl-type properties, and, where the operator is symbol-driven, a
truncation generator.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import toeplitz
from .errors import UnknownName
from .regions import (ALPHA_INF, Circle, CurveRegion, Disk, FinitePoints,
                      SequenceWithLimits, SpectralPicture, picture_to_json)

CATALOG_NAMES = ("exampleA", "exampleV", "zeroInterleave", "interleave",
                 "ex29", "cho", "zbarPlusZsqOver3", "harmonicMonomial")

VERDICT_KEYS = ("weyl", "browder", "property_w", "uwe", "ve", "we",
                "in_HP_closure", "in_SP_closure")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    picture: SpectralPicture
    verdicts: dict
    truncation: object          # callable size -> TruncationMatrix, or None
    notes: str


def _origin():
    return FinitePoints((0j,))


def _reciprocal_sequence():
    return SequenceWithLimits(tuple(1.0 / n + 0j for n in range(1, 65)), "1/n", (0j,))


def _example_a() -> CatalogEntry:
    spectrum = _reciprocal_sequence()
    origin = _origin()
    eigen = {1.0 / n + 0j: 1 for n in range(1, 65)}
    eigen[0j] = ALPHA_INF
    picture = SpectralPicture(
        label="exampleA",
        sigma=spectrum, sigma_a=spectrum,
        sigma_e=origin, sigma_w=origin, sigma_uw=origin, sigma_b=origin,
        eigen_multiplicity=eigen,
    )
    notes = ("Direct sum of the diagonal operator with entries 1/n and the "
             "weighted shift (x1,x2,...) -> (0,0,x2/2,x3/3,...) on l2. Both "
             "summands are compact, so every essential-type spectrum is {0}; "
             "each 1/n is an isolated eigenvalue of multiplicity 1 (the "
             "multiplicity at the accumulation point 0 is recorded as "
             "infinite). The spectrum union the unit circle is disconnected, "
             "so the operator is outside the hypercyclic closure.")
    return CatalogEntry("exampleA", picture,
                        {"uwe": True, "in_HP_closure": False}, None, notes)


def _example_v() -> CatalogEntry:
    disk = Disk(0j, 1.0, closed=True)
    circle = Circle(0j, 1.0)
    picture = SpectralPicture(
        label="exampleV",
        sigma=disk, sigma_a=disk,
        sigma_e=circle, sigma_w=circle, sigma_uw=circle, sigma_b=disk,
    )
    notes = ("Forward shift plus backward shift as a direct sum on l2+l2. "
             "Standard direct-sum theory fixes the full picture: the two "
             "index contributions cancel inside the disk, so the Weyl and "
             "upper semi-Weyl spectra are the unit circle, while the "
             "spectrum, approximate point spectrum (the backward summand "
             "has the whole open disk as eigenvalues) and Browder spectrum "
             "are the closed disk. No isolated points, so (V_E) fails at "
             "interior points such as 0; the operator lies in the "
             "hypercyclic closure.")
    return CatalogEntry("exampleV", picture,
                        {"ve": False, "in_HP_closure": True}, None, notes)


def _zero_interleave() -> CatalogEntry:
    origin = _origin()
    picture = SpectralPicture(
        label="zeroInterleave",
        sigma=origin, sigma_a=origin,
        sigma_e=origin, sigma_w=origin, sigma_uw=origin, sigma_b=origin,
        eigen_multiplicity={0j: ALPHA_INF},
    )
    notes = ("Weighted interleaving shift (x1,x2,x3,x4,x5,...) -> "
             "(0,x1,0,x3/3,0,x5/5,...): square zero, compact, every listed "
             "spectrum equals {0} and the kernel is infinite dimensional. "
             "E = {0} while the approximate-point gap is empty, so (UW_E) "
             "fails; {0} union the unit circle is disconnected, so the "
             "operator is outside the hypercyclic closure.")
    return CatalogEntry("zeroInterleave", picture,
                        {"uwe": False, "in_HP_closure": False}, None, notes)


def _interleave() -> CatalogEntry:
    disk = Disk(0j, 1.0, closed=True)
    circle = Circle(0j, 1.0)
    picture = SpectralPicture(
        label="interleave",
        sigma=disk, sigma_a=circle,
        sigma_e=circle, sigma_w=disk, sigma_uw=circle, sigma_b=disk,
    )
    notes = ("Isometric interleaving shift (x1,x2,x3,...) -> "
             "(0,x1,0,x2,0,x3,...): spectrum the closed disk, approximate "
             "point and upper semi-Weyl spectra the unit circle, no "
             "eigenvalues. The stored sigma_e is the semi-Fredholm (Wolf) "
             "essential set; the operator is not Fredholm anywhere inside "
             "the disk, which is why sigma_w fills the disk. Recorded "
             "verdict: outside the supercyclic closure (negative-index "
             "points exist), even though the circle-union connectedness "
             "test on sigma alone succeeds for any radius at most 1; the "
             "connectedness criterion is necessary, not sufficient, for "
             "this operator.")
    return CatalogEntry("interleave", picture,
                        {"uwe": True, "in_SP_closure": False}, None, notes)


def _ex29(j_param: float) -> CatalogEntry:
    origin = _origin()
    picture = SpectralPicture(
        label=f"ex29(J={j_param:g})",
        sigma=origin, sigma_a=origin,
        sigma_e=origin, sigma_w=origin, sigma_uw=origin, sigma_b=origin,
        eigen_multiplicity={0j: 1},
    )
    symbol = toeplitz.SymbolExpr({}, indicator_j=j_param)
    notes = ("Bergman Toeplitz operator with the scaled indicator symbol "
             f"supported on the disk of radius 1/{j_param:g}: a compact "
             "backward weighted shift whose weights decay like J^(-2n). "
             "All spectra are {0} with a one-dimensional kernel, so E = E0 "
             "= {0} but the approximate-point gap is empty: (UW_E) and "
             "Weyl's theorem both fail. Truncations are strictly upper "
             "triangular, hence nilpotent.")
    return CatalogEntry("ex29", picture, {"uwe": False, "weyl": False},
                        lambda size: toeplitz.truncation_matrix(symbol, size), notes)


def _symbol_fixture(name: str, symbol: toeplitz.SymbolExpr, label: str,
                    notes: str, flags: dict) -> CatalogEntry:
    sigma_w, sigma_uw = toeplitz.weyl_spectra(symbol)
    analysis = sigma_w.analysis
    sigma_e = CurveRegion(analysis, {h.component_id: False for h in analysis.holes})
    picture = SpectralPicture(
        label=label,
        sigma=sigma_w, sigma_a=sigma_w,
        sigma_e=sigma_e, sigma_w=sigma_w, sigma_uw=sigma_uw, sigma_b=sigma_w,
        flags=flags,
    )
    return CatalogEntry(name, picture, {"ve": True},
                        lambda size: toeplitz.truncation_matrix(symbol, size), notes)


def _cho() -> CatalogEntry:
    notes = ("Bergman Toeplitz operator with symbol zbar: the boundary "
             "curve is the clockwise unit circle, its single hole has "
             "winding -1, so the Weyl and upper semi-Weyl spectra fill the "
             "closed disk and no positive-winding region exists. No "
             "isolated spectral points, so (V_E) holds with E empty. The "
             "truncation is the backward weighted shift with weights "
             "sqrt(n/(n+1)).")
    return _symbol_fixture("cho", toeplitz.SymbolExpr({-1: 1}), "cho", notes, {})


def _zbar_plus_zsq_over3() -> CatalogEntry:
    notes = ("Bergman Toeplitz operator with symbol zbar + z^2/3. The "
             "boundary curve is traced clockwise, every hole winding is "
             "negative, and the positive-winding set is empty, so the "
             "spectrum equals the upper semi-Weyl spectrum and (V_E) "
             "holds. Not hyponormal (the analytic part's boundary "
             "derivative is smaller than the conjugate part's). Interior "
             "point-spectrum contributions are not enumerable from the "
             "symbol; truncation eigenvalues serve as evidence only.")
    return _symbol_fixture("zbarPlusZsqOver3",
                           toeplitz.SymbolExpr({-1: 1, 2: 1 / 3}),
                           "zbarPlusZsqOver3", notes, {"is_hyponormal": False})


def _harmonic_monomial(degree: int) -> CatalogEntry:
    circle = Circle(0j, 1.0)
    picture = SpectralPicture(
        label=f"harmonicMonomial(n={degree})",
        sigma=circle, sigma_a=circle,
        sigma_e=circle, sigma_w=circle, sigma_uw=circle, sigma_b=circle,
        flags={"is_hyponormal": False},
    )
    notes = (f"Toeplitz operator with symbol z^{degree} on the harmonic "
             "Bergman space. There the operator is Fredholm of index zero "
             "off the boundary image, so every listed spectrum collapses "
             "to the unit circle (the image of the boundary as a set, for "
             "any degree) and the interior point spectrum is empty: (V_E) "
             "holds. Known not to be hyponormal.")
    return CatalogEntry("harmonicMonomial", picture, {"ve": True}, None, notes)


def make(name: str, params: dict | None = None) -> CatalogEntry:
    """Build a catalog entry by name.

    ``params`` supplies J (> 1) for ex29 and n (>= 1) for
    harmonicMonomial; other entries take no parameters.
    """
    params = dict(params or {})
    if name == "exampleA":
        return _example_a()
    if name == "exampleV":
        return _example_v()
    if name == "zeroInterleave":
        return _zero_interleave()
    if name == "interleave":
        return _interleave()
    if name == "ex29":
        return _ex29(float(params.get("J", 2.0)))
    if name == "cho":
        return _cho()
    if name == "zbarPlusZsqOver3":
        return _zbar_plus_zsq_over3()
    if name == "harmonicMonomial":
        return _harmonic_monomial(int(params.get("n", 1)))
    raise UnknownName(f"no catalog entry named {name!r}")


def all_entries() -> list:
    return [make(name) for name in CATALOG_NAMES]


def entry_to_json(entry: CatalogEntry) -> dict:
    out = picture_to_json(entry.picture)
    out["verdicts"] = dict(sorted(entry.verdicts.items()))
    out["notes"] = entry.notes
    return out
