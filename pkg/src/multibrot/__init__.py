"""Escape-time sets of z -> z**p + c beyond the complex plane.

The iteration runs over real, complex, hyperbolic, bicomplex, and
tricomplex coefficients. Closed forms pin the real-axis intervals, the
hyperbolic squares, and the perplex octahedra; rasterizers, self-check
suites, and file writers sit on top.
"""

from .analytic import (
    MAX_DEGREE,
    LimitShape,
    RealInterval,
    SquareParams,
    hausdorff_analytic,
    hyperbrot_contains,
    perplexbrot_contains,
    perplexbrot_slab,
    real_interval,
    square_params,
)
from .dynamics import (
    EscapeParams,
    OrbitResult,
    bounded_orbits_complex,
    bounded_orbits_real,
    default_radius,
    escape_bound,
    fixed_point_member_test,
    hyperbolic_member_via_split,
    is_member,
    orbit,
    perplexbrot_member,
    real_endpoint_bisection,
    step,
)
from .geometry import (
    AgreementReport,
    Box3D,
    OctahedronMesh,
    RasterGrid,
    VoxelGrid,
    Window2D,
    agreement_report,
    discrete_hausdorff,
    octahedron_mesh,
    raster_hyperbrot,
    raster_multibrot,
    rasterize_membership,
    read_pgm,
    square_boundary,
    thread_count,
    voxelize_perplexbrot,
    write_csv,
    write_obj,
    write_pgm,
)
from .multicomplex import (
    UNITS,
    Bicomplex,
    Hyperbolic,
    IdempotentPair,
    Tricomplex,
    embed_slice,
    unit_product,
)
from .verify import SUITES, UNIT_TABLE, Check, SuiteReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "AgreementReport", "Bicomplex", "Box3D", "Check", "EscapeParams",
    "Hyperbolic", "IdempotentPair", "LimitShape", "MAX_DEGREE",
    "OctahedronMesh", "OrbitResult", "RasterGrid", "RealInterval",
    "SUITES", "SquareParams", "SuiteReport", "Tricomplex", "UNITS",
    "UNIT_TABLE", "VoxelGrid", "Window2D", "agreement_report",
    "bounded_orbits_complex", "bounded_orbits_real", "default_radius",
    "discrete_hausdorff", "embed_slice", "escape_bound",
    "fixed_point_member_test", "hausdorff_analytic", "hyperbolic_member_via_split",
    "hyperbrot_contains", "is_member", "octahedron_mesh", "orbit",
    "perplexbrot_contains", "perplexbrot_member", "perplexbrot_slab",
    "raster_hyperbrot", "raster_multibrot", "rasterize_membership",
    "read_pgm", "real_endpoint_bisection", "real_interval", "run_suite",
    "square_boundary", "square_params", "step", "thread_count", "unit_product",
    "voxelize_perplexbrot", "write_csv", "write_obj", "write_pgm",
]
