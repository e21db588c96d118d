"""Additive actions and Euler-symmetry of complete toric varieties.

Fans and lattice polytopes are handled in exact integer arithmetic; see the
submodules ``lattice``, ``fan``, ``polytope``, ``classgroup`` and ``euler``.
"""
from pathlib import Path

from .classgroup import (
    ClassElement,
    ClassGroup,
    ClassMonoid,
    OrbitEquivalenceWitness,
    bazhov_equivalent,
    class_group,
    gamma_monoid,
    monoid_contains,
    monoids_equal,
    orbit_classes,
    upsilon,
)
from .euler import (
    EulerAction,
    EulerOrbitReport,
    MonomialSymbolSystem,
    classify_euler_orbits,
    euler_action,
    fundamental_form,
    is_euler_symmetric,
    is_symbol_system,
)
from .fan import (
    CompleteCollection,
    DemazureRoot,
    Fan,
    admits_additive_action,
    all_cones,
    complete_collections,
    demazure_roots,
    smooth_max_cones,
    validate_fan,
)
from .formats import load_fan, load_polytope
from .polytope import (
    FacetInequality,
    LatticePolytope,
    RectangleWitness,
    facets,
    is_inscribed_in_rectangle,
    is_very_ample,
    lattice_points,
    normal_fan,
    vertex_edges,
)

__version__ = "0.1.0"

DATA_DIR = Path(__file__).parent / "data"


def data_path(name: str) -> Path:
    """Path of a bundled example document, e.g. ``data_path("p2.json")``."""
    return DATA_DIR / name
