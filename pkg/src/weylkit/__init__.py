"""Weyl-type theorem checking and Toeplitz symbol classification.

The toolkit decides the classical Weyl-type spectral identities on
concretely represented spectral pictures, and classifies Bergman-space
Toeplitz operators' stability under compact perturbations through the
winding-number geometry of their symbol curves.
"""

from .catalog import CATALOG_NAMES, CatalogEntry, all_entries, entry_to_json, make
from .checker import (HypercyclicVerdict, PropertyReport, SupercyclicVerdict,
                      check_uwe_factorization, check_hypercyclic_criterion, check_supercyclic_criterion,
                      closure_hp_connectedness, closure_sp_connectedness,
                      evaluate_properties, uwe_stable_under_compacts)
from .geometry import (Curve, Hole, analyze_curve, complement_is_connected,
                       find_holes, union_is_connected, winding_number,
                       winding_sum)
from .parsing import format_symbol, parse_symbol
from .regions import (ALPHA_INF, Circle, CurveRegion, Disk, EigenSets,
                      EmptyRegion, FinitePoints, Region, SequenceWithLimits,
                      SpectralPicture, UnionRegion, contains, eigen_sets,
                      isolated_points, picture_from_json, picture_to_json,
                      region_from_json, region_to_json, validate_picture)
from .toeplitz import (StabilityReport, SymbolExpr, TruncationMatrix,
                       boundary_curve, classify_compact_stability, eigenvalues,
                       entry_quadrature, fredholm_index,
                       is_constant_on_boundary, truncation_matrix, weyl_spectra)

__version__ = "0.1.0"
