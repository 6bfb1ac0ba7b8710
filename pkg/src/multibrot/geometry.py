"""Rasters, voxel grids, meshes, and set-distance tools.

Grids sample membership at cell centers: cell ``i`` of an axis spanning
``[lo, hi]`` with ``n`` cells is evaluated at ``lo + (i + 0.5)*(hi - lo)/n``.
Raster rows follow the mathematical y order (row 0 is the lowest y); the PGM
writer flips rows so images come out with y increasing upward.

Rendering is deterministic: the complex-plane raster is split into
fixed-size row chunks whose results are written to disjoint slices of the
output, so the bits are identical whether chunks run serially or on a thread
pool. The ``MULTIBROT_THREADS`` environment variable caps the pool
(``0`` or unset means all cores); it affects speed only, never output.

The hyperbolic raster and the octahedron voxelizer exploit the decoupling of
membership into real orbits at ``x -+ y`` (and ``x +- y +- z``): the distinct
real parameter values on a grid are deduplicated, decided once each, and
scattered back, which collapses aligned windows to a few thousand orbits.
"""

from __future__ import annotations

import csv
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product

import numpy as np

from .dynamics import EscapeParams, bounded_orbits_complex, bounded_orbits_real

__all__ = [
    "AgreementReport",
    "Box3D",
    "OctahedronMesh",
    "RasterGrid",
    "VoxelGrid",
    "Window2D",
    "agreement_report",
    "discrete_hausdorff",
    "octahedron_mesh",
    "raster_hyperbrot",
    "raster_multibrot",
    "rasterize_membership",
    "read_pgm",
    "square_boundary",
    "voxelize_perplexbrot",
    "write_csv",
    "write_obj",
    "write_pgm",
]

#: Rows per work unit for the threaded raster; fixed so chunk boundaries do
#: not depend on the thread count.
CHUNK_ROWS = 64


def thread_count() -> int:
    """Worker count from ``MULTIBROT_THREADS`` (0 or unset: all cores)."""
    raw = os.environ.get("MULTIBROT_THREADS", "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"MULTIBROT_THREADS must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError(f"MULTIBROT_THREADS must be >= 0, got {n}")
    return n if n > 0 else (os.cpu_count() or 1)


def _axis_centers(lo: float, hi: float, n: int) -> np.ndarray:
    return lo + (np.arange(n) + 0.5) * ((hi - lo) / n)


def _check_axis(name: str, lo: float, hi: float, n: int) -> None:
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise ValueError(f"{name} range must be finite with lo < hi, got [{lo}, {hi}]")
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"{name} resolution must be an integer >= 2, got {n!r}")


@dataclass(frozen=True)
class Window2D:
    """Axis-aligned sampling window with per-axis resolution."""

    x_lo: float
    x_hi: float
    y_lo: float
    y_hi: float
    nx: int
    ny: int

    def __post_init__(self) -> None:
        _check_axis("x", self.x_lo, self.x_hi, self.nx)
        _check_axis("y", self.y_lo, self.y_hi, self.ny)

    def x_centers(self) -> np.ndarray:
        return _axis_centers(self.x_lo, self.x_hi, self.nx)

    def y_centers(self) -> np.ndarray:
        return _axis_centers(self.y_lo, self.y_hi, self.ny)


@dataclass(frozen=True)
class Box3D:
    """Axis-aligned sampling box with per-axis resolution."""

    x_lo: float
    x_hi: float
    y_lo: float
    y_hi: float
    z_lo: float
    z_hi: float
    nx: int
    ny: int
    nz: int

    def __post_init__(self) -> None:
        _check_axis("x", self.x_lo, self.x_hi, self.nx)
        _check_axis("y", self.y_lo, self.y_hi, self.ny)
        _check_axis("z", self.z_lo, self.z_hi, self.nz)

    def x_centers(self) -> np.ndarray:
        return _axis_centers(self.x_lo, self.x_hi, self.nx)

    def y_centers(self) -> np.ndarray:
        return _axis_centers(self.y_lo, self.y_hi, self.ny)

    def z_centers(self) -> np.ndarray:
        return _axis_centers(self.z_lo, self.z_hi, self.nz)


@dataclass
class RasterGrid:
    """Membership bits over a window; ``bits[iy, ix]`` at the cell centers."""

    bits: np.ndarray
    window: Window2D
    params: EscapeParams | None

    def __post_init__(self) -> None:
        if self.bits.shape != (self.window.ny, self.window.nx):
            raise ValueError(f"bits shape {self.bits.shape} does not match window "
                             f"({self.window.ny}, {self.window.nx})")

    @property
    def member_count(self) -> int:
        return int(self.bits.sum())

    @property
    def member_fraction(self) -> float:
        return self.member_count / self.bits.size


@dataclass
class VoxelGrid:
    """Membership bits over a box; ``bits[iz, iy, ix]``, x fastest."""

    bits: np.ndarray
    box: Box3D
    params: EscapeParams | None

    def __post_init__(self) -> None:
        shape = (self.box.nz, self.box.ny, self.box.nx)
        if self.bits.shape != shape:
            raise ValueError(f"bits shape {self.bits.shape} does not match box {shape}")

    @property
    def member_count(self) -> int:
        return int(self.bits.sum())

    @property
    def member_fraction(self) -> float:
        return self.member_count / self.bits.size

    @property
    def voxel_volume(self) -> float:
        b = self.box
        return ((b.x_hi - b.x_lo) / b.nx) * ((b.y_hi - b.y_lo) / b.ny) \
            * ((b.z_hi - b.z_lo) / b.nz)


# -- rasterizers -------------------------------------------------------------


def raster_multibrot(window: Window2D, params: EscapeParams,
                     threads: int | None = None) -> RasterGrid:
    """Complex-plane membership raster of ``z -> z**p + c`` at cell centers."""
    cx = window.x_centers()
    cy = window.y_centers()
    bits = np.empty((window.ny, window.nx), dtype=bool)

    def run_rows(a: int, b: int) -> None:
        c = cx[None, :] + 1j * cy[a:b, None]
        bits[a:b] = bounded_orbits_complex(c, params).reshape(b - a, window.nx)

    spans = [(a, min(a + CHUNK_ROWS, window.ny)) for a in range(0, window.ny, CHUNK_ROWS)]
    workers = thread_count() if threads is None else threads
    if workers <= 1 or len(spans) == 1:
        for a, b in spans:
            run_rows(a, b)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for _ in pool.map(lambda span: run_rows(*span), spans):
                pass
    return RasterGrid(bits, window, params)


def _deduped_member_lookup(combos: list[np.ndarray], params: EscapeParams) -> list[np.ndarray]:
    """Decide real membership for each combo array via shared unique values."""
    uniq = np.unique(np.concatenate([c.ravel() for c in combos]))
    member = bounded_orbits_real(uniq, params)
    return [member[np.searchsorted(uniq, c)] for c in combos]


def raster_hyperbrot(window: Window2D, params: EscapeParams) -> RasterGrid:
    """Hyperbolic-plane membership raster via the two-real-orbit split."""
    x = window.x_centers()[None, :]
    y = window.y_centers()[:, None]
    minus, plus = _deduped_member_lookup([x - y, x + y], params)
    return RasterGrid(minus & plus, window, params)


def voxelize_perplexbrot(box: Box3D, params: EscapeParams) -> VoxelGrid:
    """Voxel membership of the ``(1, j1, j2)`` slice via four real orbits."""
    x = box.x_centers()[None, None, :]
    y = box.y_centers()[None, :, None]
    z = box.z_centers()[:, None, None]
    combos = [(x + y) + z, (x + y) - z, (x - y) + z, (x - y) - z]
    members = _deduped_member_lookup(combos, params)
    bits = members[0] & members[1] & members[2] & members[3]
    return VoxelGrid(bits, box, params)


def rasterize_membership(window: Window2D, membership) -> RasterGrid:
    """Raster an arbitrary vectorized membership function ``f(x, y) -> bool``."""
    x = window.x_centers()[None, :]
    y = window.y_centers()[:, None]
    bits = np.broadcast_to(np.asarray(membership(x, y), dtype=bool),
                           (window.ny, window.nx)).copy()
    return RasterGrid(bits, window, None)


# -- agreement ----------------------------------------------------------------


@dataclass(frozen=True)
class AgreementReport:
    """Cellwise comparison of a sampled grid against an analytic test."""

    cells: int
    agreements: int
    disagreements: int
    band_width: float | None

    @property
    def agreement_fraction(self) -> float:
        return self.agreements / self.cells

    def as_row(self) -> dict:
        return {"cells": self.cells, "agreements": self.agreements,
                "disagreements": self.disagreements,
                "band_width": self.band_width}


def _grid_coords(grid) -> tuple[np.ndarray, ...]:
    if isinstance(grid, RasterGrid):
        w = grid.window
        return (w.x_centers()[None, :], w.y_centers()[:, None])
    if isinstance(grid, VoxelGrid):
        b = grid.box
        return (b.x_centers()[None, None, :], b.y_centers()[None, :, None],
                b.z_centers()[:, None, None])
    raise TypeError(f"expected RasterGrid or VoxelGrid, got {type(grid).__name__}")


def agreement_report(grid, analytic, boundary_distance=None) -> AgreementReport:
    """Compare grid bits against an analytic membership rule.

    ``analytic`` is either a vectorized callable on the grid's cell-center
    coordinates or another grid of identical shape. With ``boundary_distance``
    (same call signature, returning L1 distance to the analytic boundary)
    the report's ``band_width`` is the largest such distance among
    disagreeing cells, i.e. every disagreement lies within that band of the
    boundary; it is 0.0 when the grids agree everywhere and None when no
    distance function is supplied.
    """
    coords = _grid_coords(grid)
    if isinstance(analytic, (RasterGrid, VoxelGrid)):
        if analytic.bits.shape != grid.bits.shape:
            raise ValueError(f"dimension mismatch: {grid.bits.shape} vs {analytic.bits.shape}")
        expected = analytic.bits
    else:
        expected = np.broadcast_to(np.asarray(analytic(*coords), dtype=bool),
                                   grid.bits.shape)
        if expected.shape != grid.bits.shape:
            raise ValueError(f"dimension mismatch: membership returned {expected.shape}, "
                             f"grid is {grid.bits.shape}")
    disagree = grid.bits != expected
    n_bad = int(disagree.sum())
    band: float | None = None
    if boundary_distance is not None:
        band = 0.0
        if n_bad:
            dist = np.broadcast_to(np.asarray(boundary_distance(*coords), dtype=float),
                                   grid.bits.shape)
            band = float(dist[disagree].max())
    return AgreementReport(grid.bits.size, grid.bits.size - n_bad, n_bad, band)


# -- point sets and distances -------------------------------------------------


def square_boundary(center_x: float, half_diagonal: float,
                    per_side: int) -> np.ndarray:
    """Points on the boundary of ``|x - center_x| + |y| <= half_diagonal``.

    Walks the four edges corner to corner with ``per_side`` points each
    (corners included once), returning an ``(4*per_side, 2)`` array. Sample
    spacing along each edge is ``half_diagonal*sqrt(2)/per_side``.
    """
    if per_side < 1:
        raise ValueError(f"per_side must be >= 1, got {per_side}")
    if half_diagonal < 0.0:
        raise ValueError(f"half_diagonal must be >= 0, got {half_diagonal}")
    corners = np.array([(center_x + half_diagonal, 0.0),
                        (center_x, half_diagonal),
                        (center_x - half_diagonal, 0.0),
                        (center_x, -half_diagonal)])
    t = (np.arange(per_side) / per_side)[:, None]
    sides = [corners[i] * (1.0 - t) + corners[(i + 1) % 4] * t for i in range(4)]
    return np.concatenate(sides, axis=0)


def discrete_hausdorff(a, b) -> float:
    """Hausdorff distance between two finite point sets.

    Exact ``max(max-min, max-min)`` over Euclidean distances, brute force in
    O(|a|*|b|) time with chunking to bound memory.
    """
    pa = np.atleast_2d(np.asarray(a, dtype=float))
    pb = np.atleast_2d(np.asarray(b, dtype=float))
    if pa.size == 0 or pb.size == 0:
        raise ValueError("point sets must be non-empty")
    if pa.shape[1] != pb.shape[1]:
        raise ValueError(f"dimension mismatch: {pa.shape[1]} vs {pb.shape[1]}")

    def directed_sq(src: np.ndarray, dst: np.ndarray) -> float:
        worst = 0.0
        chunk = max(1, 2 ** 22 // max(dst.shape[0], 1))
        for start in range(0, src.shape[0], chunk):
            part = src[start:start + chunk]
            d2 = ((part[:, None, :] - dst[None, :, :]) ** 2).sum(axis=2)
            worst = max(worst, float(d2.min(axis=1).max()))
        return worst

    return math.sqrt(max(directed_sq(pa, pb), directed_sq(pb, pa)))


# -- octahedron mesh ----------------------------------------------------------


@dataclass(frozen=True)
class OctahedronMesh:
    """Triangulated regular octahedron: 6 vertices, 8 faces (0-based)."""

    vertices: np.ndarray
    faces: np.ndarray

    def edges(self) -> np.ndarray:
        """Unique undirected edges as sorted index pairs, shape (12, 2)."""
        pairs = set()
        for f in self.faces:
            i, j, k = (int(v) for v in f)
            pairs.update({tuple(sorted((i, j))), tuple(sorted((j, k))),
                          tuple(sorted((k, i)))})
        return np.array(sorted(pairs), dtype=int)

    def edge_lengths(self) -> np.ndarray:
        e = self.edges()
        d = self.vertices[e[:, 0]] - self.vertices[e[:, 1]]
        return np.sqrt((d ** 2).sum(axis=1))


def octahedron_mesh(t: float, l: float) -> OctahedronMesh:
    """Mesh of ``|x - t| + |y| + |z| <= l/2`` with outward-facing triangles.

    Every edge has Euclidean length ``l*sqrt(2)/2``.
    """
    if not (math.isfinite(t) and math.isfinite(l) and l > 0.0):
        raise ValueError(f"need finite t and l > 0, got t={t}, l={l}")
    a = l / 2.0
    vertices = np.array([(t + a, 0.0, 0.0), (t - a, 0.0, 0.0),
                         (t, a, 0.0), (t, -a, 0.0),
                         (t, 0.0, a), (t, 0.0, -a)])
    faces = []
    for sx, sy, sz in product((1, -1), repeat=3):
        ix, iy, iz = (0 if sx > 0 else 1), (2 if sy > 0 else 3), (4 if sz > 0 else 5)
        # orientation flip keeps the normal pointing out of the octant
        faces.append((ix, iy, iz) if sx * sy * sz > 0 else (ix, iz, iy))
    return OctahedronMesh(vertices, np.array(faces, dtype=int))


# -- file formats ---------------------------------------------------------------


def write_pgm(grid: RasterGrid, path) -> None:
    """Binary PGM (P5, maxval 255): members black (0), non-members white (255)."""
    shade = np.where(grid.bits, 0, 255).astype(np.uint8)[::-1]  # y up
    header = f"P5\n{grid.window.nx} {grid.window.ny}\n255\n".encode("ascii")
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(shade.tobytes())


def read_pgm(path) -> np.ndarray:
    """Read a binary P5 PGM written by :func:`write_pgm` (maxval <= 255)."""
    with open(path, "rb") as fh:
        data = fh.read()
    fields: list[bytes] = []
    pos = 0
    while len(fields) < 4:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if data[pos : pos + 1] == b"#":
            while pos < len(data) and data[pos] != 0x0A:
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        fields.append(data[start:pos])
    if fields[0] != b"P5":
        raise ValueError(f"not a binary PGM: magic {fields[0]!r}")
    width, height, maxval = (int(f) for f in fields[1:])
    if maxval > 255:
        raise ValueError(f"unsupported maxval {maxval}")
    pos += 1  # single whitespace after maxval
    raster = np.frombuffer(data, dtype=np.uint8, count=width * height, offset=pos)
    return raster.reshape(height, width)


def write_obj(mesh: OctahedronMesh, path) -> None:
    """ASCII OBJ with ``v`` and 1-based triangulated ``f`` records."""
    lines = [f"v {v[0]:.17g} {v[1]:.17g} {v[2]:.17g}" for v in mesh.vertices]
    lines += [f"f {f[0] + 1} {f[1] + 1} {f[2] + 1}" for f in mesh.faces]
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_csv(path, rows: list[dict], fieldnames: list[str] | None = None) -> None:
    """CSV with a header row, one dict per data row."""
    if not rows:
        raise ValueError("rows must be non-empty")
    names = fieldnames if fieldnames is not None else list(rows[0])
    with open(path, "w", encoding="ascii", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=names)
        writer.writeheader()
        writer.writerows(rows)
