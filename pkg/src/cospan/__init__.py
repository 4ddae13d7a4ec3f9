"""Set operators over finite ground sets: violator and closure spaces,
cospanning partitions of the Boolean hypercube, and the correspondences
among greedoids, antimatroids, matroids, and convex geometries."""

from .setcore import (
    CapacityError,
    CospanError,
    GroundMismatchError,
    GroundSet,
    InputError,
    PropertyReport,
    SetFamily,
    Subset,
    complement_family,
    enumerate_subsets,
    family_predicate,
    max_dense_n,
    subset_algebra,
)
from .operators import (
    BasisIntersection,
    SetOperator,
    SpaceClassification,
    basis_by_intersection,
    check_axiom,
    classify_space,
    dual_interior,
    extreme_points,
    generators_and_bases,
    is_uniquely_generated,
)
from .cospanning import (
    CospanningPartition,
    IntervalPartition,
    check_relation_property,
    complement_partition,
    extremal_sets,
    interval_form,
    operator_from_partition,
    partition_dot,
    partition_from_operator,
)
from .structures import (
    ConvexGeometry,
    ConvexGeometryReport,
    FamilyClassification,
    Greedoid,
    antimatroid_basis,
    build_convex_geometry,
    build_greedoid,
    check_convex_geometry,
    check_greedoid,
    classify_family,
    closed_sets,
    closure_from_closed_sets,
    duality_suite,
    feasible_from_operator,
    rank_table,
)
from .instances import (
    PointSet2D,
    builtin_instance,
    chain_antimatroid,
    convex_hull_geometry,
    enumerate_spaces,
    poset_antimatroid,
    random_hypercube_partition,
    seb_violator,
    uniform_matroid,
)
from .verify import OracleResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "BasisIntersection",
    "CapacityError",
    "ConvexGeometry",
    "ConvexGeometryReport",
    "CospanError",
    "CospanningPartition",
    "FamilyClassification",
    "Greedoid",
    "GroundMismatchError",
    "GroundSet",
    "InputError",
    "IntervalPartition",
    "OracleResult",
    "PointSet2D",
    "PropertyReport",
    "SetFamily",
    "SetOperator",
    "SpaceClassification",
    "Subset",
    "antimatroid_basis",
    "basis_by_intersection",
    "build_convex_geometry",
    "build_greedoid",
    "builtin_instance",
    "chain_antimatroid",
    "check_axiom",
    "check_convex_geometry",
    "check_greedoid",
    "check_relation_property",
    "classify_family",
    "classify_space",
    "closed_sets",
    "closure_from_closed_sets",
    "complement_family",
    "complement_partition",
    "convex_hull_geometry",
    "duality_suite",
    "dual_interior",
    "enumerate_spaces",
    "enumerate_subsets",
    "extremal_sets",
    "extreme_points",
    "family_predicate",
    "feasible_from_operator",
    "generators_and_bases",
    "interval_form",
    "is_uniquely_generated",
    "max_dense_n",
    "operator_from_partition",
    "partition_dot",
    "partition_from_operator",
    "poset_antimatroid",
    "random_hypercube_partition",
    "rank_table",
    "run_suite",
    "seb_violator",
    "subset_algebra",
    "uniform_matroid",
]
