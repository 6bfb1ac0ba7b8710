"""Closed forms for the real, hyperbolic, and perplex parameter sets.

For the family ``z -> z**p + c`` with integer degree ``p >= 2``:

* The real parameters with bounded critical orbit form a closed interval:
  ``[-2**(1/(p-1)), (p-1)/p**(p/(p-1))]`` for even ``p`` and the symmetric
  interval ``[-(p-1)/p**(p/(p-1)), (p-1)/p**(p/(p-1))]`` for odd ``p``.
* Over the hyperbolic plane the bounded set is the filled square (an L1 ball)
  ``|x - t_p| + |y| <= l_p/2`` whose center and full diagonal are

  ::

      t_p = (-p*((2p)**(1/(p-1)) - 1) - 1) / (2*p**(p/(p-1)))
      l_p = ( p*((2p)**(1/(p-1)) + 1) - 1) /    p**(p/(p-1))

  with ``t_p - l_p/2`` and ``t_p + l_p/2`` landing exactly on the real
  interval endpoints.
* The three-dimensional slice spanned by ``(1, j1, j2)`` is the regular
  octahedron ``|x - t_p| + |y| + |z| <= l_p/2``.

As ``p`` grows (even ``p``), the square converges to the L1 unit ball
``|x| + |y| <= 1``; :func:`hausdorff_analytic` gives the exact Hausdorff
distance between the two squares from their aligned corners.

Degrees are capped at 64 throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "MAX_DEGREE",
    "LimitShape",
    "RealInterval",
    "SquareParams",
    "hausdorff_analytic",
    "hyperbrot_contains",
    "perplexbrot_contains",
    "perplexbrot_slab",
    "real_interval",
    "square_params",
]

MAX_DEGREE = 64


def _check_degree(p: int, *, even_only: bool = False) -> int:
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"degree must be an integer, got {p!r}")
    if not 2 <= p <= MAX_DEGREE:
        raise ValueError(f"degree must satisfy 2 <= p <= {MAX_DEGREE}, got {p}")
    if even_only and p % 2:
        raise ValueError(f"degree must be even, got {p}")
    return p


@dataclass(frozen=True)
class RealInterval:
    """Closed interval ``[lo, hi]`` on the real parameter axis."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def contains(self, x):
        return (self.lo <= x) & (x <= self.hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class SquareParams:
    """L1 ball ``|x - t| + |y| <= l/2``: center ``(t, 0)``, full diagonal ``l``.

    ``l == 0`` describes the degenerate single point ``(t, 0)`` (it occurs as
    the tip of a slab through an octahedron); actual parameter squares always
    have ``l > 0``.
    """

    t: float
    l: float

    def __post_init__(self) -> None:
        if self.l < 0.0:
            raise ValueError(f"diagonal must be >= 0, got {self.l}")

    @property
    def half_diagonal(self) -> float:
        return self.l / 2.0

    @property
    def side(self) -> float:
        """Euclidean edge length, ``l / sqrt(2)``."""
        return self.l / 2.0 ** 0.5

    def contains(self, x, y):
        """Boundary included; accepts scalars or numpy arrays."""
        return abs(x - self.t) + abs(y) <= self.l / 2.0

    def boundary_l1(self, x, y):
        """L1 distance from ``(x, y)`` to the square's boundary."""
        return abs(abs(x - self.t) + abs(y) - self.l / 2.0)


@dataclass(frozen=True)
class LimitShape:
    """Unit L1 ball ``|x1| + ... + |xd| <= 1``, the large-degree limit."""

    dimension: int = 2

    def __post_init__(self) -> None:
        if self.dimension not in (2, 3):
            raise ValueError(f"dimension must be 2 or 3, got {self.dimension}")

    def contains(self, *coords):
        if len(coords) != self.dimension:
            raise ValueError(f"expected {self.dimension} coordinates, got {len(coords)}")
        total = abs(coords[0])
        for c in coords[1:]:
            total = total + abs(c)
        return total <= 1.0


def real_interval(p: int) -> RealInterval:
    """Real parameters with bounded critical orbit for ``z -> z**p + c``."""
    _check_degree(p)
    hi = (p - 1) / p ** (p / (p - 1))
    lo = -(2.0 ** (1.0 / (p - 1))) if p % 2 == 0 else -hi
    return RealInterval(lo, hi)


def square_params(p: int) -> SquareParams:
    """Center and diagonal of the hyperbolic parameter square (even ``p``)."""
    _check_degree(p, even_only=True)
    root = (2.0 * p) ** (1.0 / (p - 1))
    scale = p ** (p / (p - 1))
    t = (-p * (root - 1.0) - 1.0) / (2.0 * scale)
    l = (p * (root + 1.0) - 1.0) / scale
    return SquareParams(t, l)


def hyperbrot_contains(x, y, p: int):
    """Membership of ``x + y*j`` in the degree-``p`` parameter square."""
    return square_params(p).contains(x, y)


def perplexbrot_contains(x, y, z, p: int):
    """Membership of ``x + y*j1 + z*j2`` in the degree-``p`` octahedron."""
    sq = square_params(p)
    return abs(x - sq.t) + abs(y) + abs(z) <= sq.l / 2.0


def perplexbrot_slab(y: float, p: int) -> SquareParams | None:
    """Cross-section of the octahedron at height ``y``.

    Returns the L1 ball ``|x - t_p| + |z| <= l_p/2 - |y|`` in the ``(x, z)``
    plane, the single point ``(t_p, 0)`` (diagonal 0) at ``|y| == l_p/2``,
    and ``None`` when the slab misses the octahedron entirely.
    """
    sq = square_params(p)
    rest = sq.l - 2.0 * abs(float(y))
    if rest < 0.0:
        return None
    return SquareParams(sq.t, rest)


def hausdorff_analytic(p: int, kind: str = "square") -> float:
    """Hausdorff distance between the degree-``p`` set and its limit shape.

    Both the square (2D) and the octahedron (3D) are L1 balls whose corners
    align with the unit L1 ball's corners along the x axis, so the distance
    is attained at those corners:

    ``max(|t_p + l_p/2 - 1|, |t_p - l_p/2 + 1|)``.
    """
    if kind not in ("square", "octahedron"):
        raise ValueError(f"kind must be 'square' or 'octahedron', got {kind!r}")
    sq = square_params(p)
    return max(abs(sq.t + sq.l / 2.0 - 1.0), abs(sq.t - sq.l / 2.0 + 1.0))
