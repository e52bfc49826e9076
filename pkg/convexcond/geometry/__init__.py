from convexcond.geometry.primitives import (  # noqa: F401
    ConvexGeometry,
    Poset,
    Worlds,
    bits,
    submasks,
)
from convexcond.geometry.helpers import (  # noqa: F401
    discrete_geometry,
    extreme_points,
    extreme_points_by_generators,
    feasible_sets,
    find_violation,
    hull,
    impossible_worlds,
    is_convex,
    join,
    minimal_elements,
    relative_convexity,
    restrict_mask,
    upset_convexity,
    upsets,
    upward_closure,
    validate,
)
from convexcond.geometry.enumeration import (  # noqa: F401
    count_geometries,
    enumerate_geometries,
    geometries_up_to,
)
