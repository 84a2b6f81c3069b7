"""Thin position, width and PL geodesics of triangulated 2-spheres.

The package works entirely combinatorially: a sphere is a list of vertex
triples, a curve is an embedded cycle in the 1-skeleton, and all searches
are exact.
"""

from .triangulation import (
    Cycle,
    DiskRegion,
    Triangulation,
    TriangulationError,
    ValidationReport,
    embedded_cycle,
    enumerate_cycles,
    normalize,
    parse_triangulation,
    serialize_triangulation,
    two_sides,
    validate_sphere,
    vertex_link,
)
from .moves import (
    CycleClass,
    LocalMove,
    apply_move,
    classify_cycle,
    greedy_shorten,
    inverse_move,
    local_moves,
)
from .shelling import (
    BoundExceeded,
    ExtremaReport,
    NotGoodOrdering,
    compare_width,
    is_bridge,
    is_good_ordering,
    local_extrema,
    prefix_boundaries,
    profile,
    reorder_delay,
    thin_position,
    width_of_ordering,
)
from .analysis import (
    GeodesicReport,
    Provenance,
    RegionClass,
    StableGeodesicsReport,
    VerificationError,
    bridge_from_hamiltonian,
    check_thin_equals_bridge,
    classify_region,
    every_3cycle_bounds,
    extract_geodesics,
    hamiltonian_cycle,
    hamiltonian_from_bridge,
    run_checks,
    three_geodesics,
    three_stable_geodesics,
    verify_region_structure,
)

__version__ = "0.1.0"
