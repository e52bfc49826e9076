from convexcond.planar.primitives import (  # noqa: F401
    ORIGIN,
    Embedding,
    LineModel,
    PlaneModel,
    Point,
)
from convexcond.planar.hull import (  # noqa: F401
    convex_hull,
    orientation,
    point_in_hull,
)
from convexcond.planar.helpers import (  # noqa: F401
    eval_line,
    eval_plane,
    eval_plane_clause,
    hull_trace,
    line_extreme_points,
    plane_extreme_points,
    plane_geometry,
)
from convexcond.planar.embedding import (  # noqa: F401
    choose_directions,
    embed,
    find_embedding_failure,
    safety_margin,
    verify_embedding,
)
from convexcond.planar.pipeline import Certificate, run_pipeline  # noqa: F401
from convexcond.planar.svg import render_svg, write_svg  # noqa: F401
