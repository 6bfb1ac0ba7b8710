"""Named self-check suites pairing closed forms with independent routes.

Each suite cross-validates one capability two different ways (iterative
oracle vs formula, direct product vs idempotent route, discrete distance vs
corner formula, sampled grid vs analytic set) and reports per-check rows
with values and thresholds. The suites back ``multibrot verify`` and the
acceptance tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analytic import (
    hausdorff_analytic,
    perplexbrot_contains,
    real_interval,
    square_params,
)
from .dynamics import EscapeParams, real_endpoint_bisection
from .geometry import (
    Box3D,
    Window2D,
    agreement_report,
    discrete_hausdorff,
    octahedron_mesh,
    raster_hyperbrot,
    square_boundary,
    voxelize_perplexbrot,
)
from .multicomplex import Tricomplex, unit_product

__all__ = ["Check", "SuiteReport", "SUITES", "run_suite",
           "verify_algebra", "verify_hausdorff", "verify_interval",
           "verify_octahedron", "verify_square", "UNIT_TABLE"]

# Published multiplication table of the eight basis units, rows x columns in
# the order (1, i1, i2, i3, i4, j1, j2, j3); "-tag" encodes a -1 sign.
_TABLE_ROWS: dict[str, tuple[str, ...]] = {
    "1":  ("1", "i1", "i2", "i3", "i4", "j1", "j2", "j3"),
    "i1": ("i1", "-1", "j1", "j2", "-j3", "-i2", "-i3", "i4"),
    "i2": ("i2", "j1", "-1", "j3", "-j2", "-i1", "i4", "-i3"),
    "i3": ("i3", "j2", "j3", "-1", "-j1", "i4", "-i1", "-i2"),
    "i4": ("i4", "-j3", "-j2", "-j1", "-1", "i3", "i2", "i1"),
    "j1": ("j1", "-i2", "-i1", "i4", "i3", "1", "-j3", "-j2"),
    "j2": ("j2", "-i3", "i4", "-i1", "i2", "-j3", "1", "-j1"),
    "j3": ("j3", "i4", "-i3", "-i2", "i1", "-j2", "-j1", "1"),
}

_ORDER = ("1", "i1", "i2", "i3", "i4", "j1", "j2", "j3")


def _signed(entry: str) -> tuple[int, str]:
    return (-1, entry[1:]) if entry.startswith("-") else (1, entry)


#: ``UNIT_TABLE[(a, b)] == (sign, tag)`` for all 64 basis products.
UNIT_TABLE: dict[tuple[str, str], tuple[int, str]] = {
    (row, _ORDER[k]): _signed(entry)
    for row, entries in _TABLE_ROWS.items()
    for k, entry in enumerate(entries)
}


@dataclass(frozen=True)
class Check:
    """One named comparison: ``value`` against ``threshold`` (when bounded)."""

    name: str
    passed: bool
    value: float
    threshold: float | None
    detail: str = ""

    def as_row(self) -> dict:
        return {"check": self.name, "passed": self.passed, "value": self.value,
                "threshold": self.threshold, "detail": self.detail}


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def rows(self) -> list[dict]:
        return [{"suite": self.suite, **c.as_row()} for c in self.checks]


def verify_interval(ps: tuple[int, ...] = (2, 3, 4, 6, 8),
                    max_iter: int = 10 ** 5) -> SuiteReport:
    """Bisection on the iterative oracle vs the closed-form interval.

    Tolerances: 1e-6 at abrupt endpoints (left end, even degree) and 5e-3 at
    endpoints where escape slows down parabolically (right end; both ends
    for odd degree).
    """
    checks = []
    for p in ps:
        interval = real_interval(p)
        params = EscapeParams(p=p, max_iter=max_iter)
        for side, formula in (("left", interval.lo), ("right", interval.hi)):
            tol = 1e-6 if (side == "left" and p % 2 == 0) else 5e-3
            located = real_endpoint_bisection(p, side, params)
            err = abs(located - formula)
            checks.append(Check(f"p{p}_{side}_endpoint", err <= tol, err, tol,
                                f"bisection {located:.9f} vs formula {formula:.9f}"))
    return SuiteReport("interval", tuple(checks))


def verify_square(ps: tuple[int, ...] = (2, 4, 8), res: int = 512,
                  max_iter: int = 10 ** 4) -> SuiteReport:
    """Exact degree-2 square constants plus raster-vs-formula agreement."""
    checks = []
    sq2 = square_params(2)
    checks.append(Check("p2_center_exact", sq2.t == -0.875, sq2.t, None,
                        "center must equal -7/8 exactly"))
    checks.append(Check("p2_diagonal_exact", sq2.l == 2.25, sq2.l, None,
                        "diagonal must equal 9/4 exactly"))
    side_err = abs(sq2.side - 9.0 * math.sqrt(2.0) / 8.0)
    checks.append(Check("p2_side_closed_form", side_err <= 1e-15, side_err, 1e-15,
                        "edge length vs 9*sqrt(2)/8"))
    window = Window2D(-2.0, 1.0, -1.5, 1.5, res, res)
    for p in ps:
        sq = square_params(p)
        grid = raster_hyperbrot(window, EscapeParams(p=p, max_iter=max_iter))
        report = agreement_report(grid, sq.contains, sq.boundary_l1)
        band = report.band_width if report.band_width is not None else 0.0
        checks.append(Check(f"p{p}_raster_band", band <= 0.01, band, 0.01,
                            f"{report.disagreements} of {report.cells} cells disagree"))
    return SuiteReport("square", tuple(checks))


def verify_octahedron(p: int = 2, res: int = 64,
                      max_iter: int = 10 ** 4) -> SuiteReport:
    """Mesh geometry, voxel agreement, and voxel-count volume for one degree."""
    checks = []
    sq = square_params(p)
    mesh = octahedron_mesh(sq.t, sq.l)
    target = math.sqrt(2.0) / 2.0 * sq.l
    edge_err = float(np.abs(mesh.edge_lengths() - target).max())
    checks.append(Check("mesh_edges_equal", edge_err <= 1e-12, edge_err, 1e-12,
                        f"12 edges vs sqrt(2)/2*l = {target:.12f}"))
    incidence: dict[tuple[int, int], int] = {}
    for face in mesh.faces:
        for k in range(3):
            pair = tuple(sorted((int(face[k]), int(face[(k + 1) % 3]))))
            incidence[pair] = incidence.get(pair, 0) + 1
    closed = len(incidence) == 12 and set(incidence.values()) == {2}
    checks.append(Check("mesh_closed", closed, float(len(incidence)), None,
                        "12 unique edges, each on exactly 2 of the 8 faces"))
    box = Box3D(-2.0, 2.0, -2.0, 2.0, -2.0, 2.0, res, res, res)
    grid = voxelize_perplexbrot(box, EscapeParams(p=p, max_iter=max_iter))
    report = agreement_report(
        grid,
        lambda x, y, z: perplexbrot_contains(x, y, z, p),
        lambda x, y, z: np.abs(np.abs(x - sq.t) + np.abs(y) + np.abs(z) - sq.l / 2.0),
    )
    band = report.band_width if report.band_width is not None else 0.0
    checks.append(Check("voxel_band", band <= 0.07, band, 0.07,
                        f"{report.disagreements} of {report.cells} voxels disagree"))
    expected = (sq.l ** 3 / 6.0) / grid.voxel_volume
    rel = abs(grid.member_count - expected) / expected
    checks.append(Check("voxel_count", rel <= 0.05, rel, 0.05,
                        f"{grid.member_count} voxels vs analytic {expected:.1f}"))
    return SuiteReport("octahedron", tuple(checks))


def verify_hausdorff(per_side: int = 256) -> SuiteReport:
    """Monotone convergence table plus discrete-vs-analytic spot checks."""
    checks = []
    evens = range(2, 65, 2)
    values = [hausdorff_analytic(p) for p in evens]
    drops = [a - b for a, b in zip(values, values[1:])]
    checks.append(Check("monotone_decreasing", min(drops) > 0.0, min(drops), None,
                        "smallest consecutive decrease over even degrees 2..64"))
    checks.append(Check("p2_value_exact", values[0] == 1.0, values[0], None,
                        "analytic distance at degree 2"))
    checks.append(Check("p64_value", True, values[-1], None,
                        "analytic distance at the degree cap (reported)"))
    limit = square_boundary(0.0, 1.0, per_side)
    for p in (2, 4, 8, 14, 20, 30):
        sq = square_params(p)
        sample = square_boundary(sq.t, sq.l / 2.0, per_side)
        spacing = max(1.0, sq.l / 2.0) * math.sqrt(2.0) / per_side
        err = abs(discrete_hausdorff(sample, limit) - hausdorff_analytic(p))
        checks.append(Check(f"p{p}_discrete_match", err <= 2.0 * spacing, err,
                            2.0 * spacing, f"boundary samples {4 * per_side} per set"))
    return SuiteReport("hausdorff", tuple(checks))


def verify_algebra(samples: int = 10 ** 4, seed: int = 20260818) -> SuiteReport:
    """Unit table, idempotent-route products, annihilation, norm identity."""
    checks = []
    bad = sum(1 for pair, expected in UNIT_TABLE.items()
              if unit_product(*pair) != expected)
    checks.append(Check("unit_table", bad == 0, float(bad), None,
                        "all 64 basis products vs the published table"))

    rng = np.random.default_rng(seed)
    coeffs = rng.uniform(-2.0, 2.0, size=(samples, 2, 8))
    worst = 0.0
    for ca, cb in coeffs:
        a, b = Tricomplex(*ca), Tricomplex(*cb)
        direct = a * b
        pa, pb = a.idempotent(), b.idempotent()
        routed = Tricomplex.from_idempotent(pa.plus * pb.plus, pa.minus * pb.minus)
        scale = max(1.0, direct.norm())
        worst = max(worst, (direct - routed).norm() / scale)
    checks.append(Check("idempotent_product_route", worst <= 1e-10, worst, 1e-10,
                        f"direct vs componentwise product on {samples} pairs"))

    plus = Tricomplex(0.5, 0, 0, 0, 0, 0, 0, 0.5)
    minus = Tricomplex(0.5, 0, 0, 0, 0, 0, 0, -0.5)
    residue = max((plus * plus - plus).norm(), (minus * minus - minus).norm(),
                  (plus * minus).norm())
    checks.append(Check("idempotency_annihilation", residue == 0.0, residue, 0.0,
                        "e*e == e and e+*e- == 0 exactly"))

    worst_norm = 0.0
    for ca in rng.uniform(-2.0, 2.0, size=(samples, 8)):
        v = Tricomplex(*ca)
        z1, z2 = v.bicomplex_view
        alt = math.sqrt(z1.norm() ** 2 + z2.norm() ** 2)
        worst_norm = max(worst_norm, abs(v.norm() - alt) / max(1.0, v.norm()))
    checks.append(Check("norm_identity", worst_norm <= 1e-14, worst_norm, 1e-14,
                        f"coefficient norm vs bicomplex-pair norm on {samples} samples"))
    return SuiteReport("algebra", tuple(checks))


SUITES = {
    "interval": verify_interval,
    "square": verify_square,
    "octahedron": verify_octahedron,
    "hausdorff": verify_hausdorff,
    "algebra": verify_algebra,
}


def run_suite(name: str, **overrides) -> SuiteReport:
    """Run one named suite; unknown names raise ValueError."""
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; expected one of {sorted(SUITES)}") from None
    return suite(**overrides)
