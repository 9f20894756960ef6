"""Exact generalized barycentric coordinates on convex polygons."""

from .algebra import (
    Distribution,
    as_rational,
    complement,
    distribution_from_operators,
    dual_product,
    format_rational,
    open_weight,
    weight,
    weighted_mean,
)
from .coords import (
    CartographicSystem,
    ChordalSystem,
    CoordinateSystem,
    MixtureSystem,
    VerificationReport,
    cartographic_eval,
    chordal_eval,
    chordal_eval_recursive,
    interpolate,
    mix_systems,
    verify_system,
)
from .decomposition import (
    Chord,
    ChordalDecomposition,
    DihedralElement,
    cds,
    chords_cross,
    dihedral_apply,
    enumerate_decompositions,
    orbit,
    reflection,
    rotation,
    validate_decomposition,
)
from .errors import (
    InvalidDecompositionError,
    InvalidPolygonError,
    InvalidWeightError,
    PointOutsideError,
    PolyCoordsError,
)
from .geometry import (
    OrientedSegment,
    OrientedTriangle,
    Point2,
    Polygon,
    areal_value,
    point,
    side_of,
    signed_area,
    standard_order,
    triangle_coords,
    validate_polygon,
)
from .locator import Locator, build_parsing_tree, locate, regions, select_apex, sign_code_table

__version__ = "0.1.0"
