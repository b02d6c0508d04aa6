"""Intersection theory on blow-ups of the plane and dimensions of spaces of
rational curves in each divisor class."""

from .classifier import (
    ClassReport,
    Reason,
    Verdict,
    enumerate_by_self_intersection,
    has_smooth_rational_representative,
    report,
)
from .errors import (
    ClassParseError,
    DimensionMismatchError,
    InconsistentClassError,
    NotSmoothRationalError,
    OrbitOverflowError,
    UnsupportedRangeError,
)
from .lattice import (
    DivisorClass,
    Surface,
    anticanonical_degree,
    arithmetic_genus,
    canonical_class,
    dim_linear_system,
    dim_mor,
    format_class,
    intersect,
    parse_class,
    self_intersection,
)
from .table import AffineForm, TableRow, generate_table
from .weyl import (
    OrbitResult,
    Root,
    enumerate_conic_classes,
    enumerate_minus_one_classes,
    orbit,
    reflect,
    simple_roots,
)

__version__ = "0.1.0"
