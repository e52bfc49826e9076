from convexcond.solver.primitives import (  # noqa: F401
    ModelClass,
    ModelClassKind,
    Verdict,
    VerdictStatus,
)
from convexcond.solver.search import (  # noqa: F401
    decide_class_validity,
    decide_validity_small,
    find_countermodel,
    natural_posets,
)
