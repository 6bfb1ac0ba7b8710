"""Escape-time iteration ``z -> z**p + c`` across the number systems.

The critical orbit (seed 0) of ``z -> z**p + c`` is iterated until its norm
exceeds an escape radius or an iteration budget runs out. The default radius
for a scalar real or complex parameter is ``max(2**(1/(p-1)), |c|) + 1e-9``:
once the orbit's modulus crosses that value it is strictly increasing and
provably divergent, so a bounded orbit is never misclassified and the margin
only guards exact-boundary ties.

Membership for the multi-unit systems is defined per idempotent component:

* hyperbolic ``x + y*j``: the orbit decouples into the two real orbits at
  parameters ``x - y`` and ``x + y``; membership requires both bounded.
* bicomplex: two complex component orbits, each judged against its own
  default radius.
* tricomplex: the idempotent split reduces the orbit to two bicomplex
  orbits, and applying the split once more inside each of those reduces it
  to four complex orbits. Membership requires all four bounded.

:func:`orbit` also exposes the native iteration for each system, judged by a
ball in the system's own norm; for bicomplex and tricomplex values that ball
(radius ``sqrt(2)`` times the largest per-component radius) is a lagging
approximation of the per-component rule and exists for rendering and
diagnostics, not as the membership definition.

Vectorized kernels (:func:`bounded_orbits_real`,
:func:`bounded_orbits_complex`) decide whole parameter arrays at once. With
the default radius policy they check escapes on a checkpoint schedule, which
gives decisions identical to per-step checking because the norm is monotone
once past the radius; a user-supplied radius forces per-step checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analytic import _check_degree, real_interval
from .multicomplex import Bicomplex, Hyperbolic, Tricomplex, _powi, embed_slice

__all__ = [
    "EscapeParams",
    "OrbitResult",
    "bounded_orbits_complex",
    "bounded_orbits_real",
    "default_radius",
    "escape_bound",
    "fixed_point_member_test",
    "hyperbolic_member_via_split",
    "is_member",
    "orbit",
    "perplexbrot_member",
    "real_endpoint_bisection",
    "step",
]

#: Additive safety margin on default escape radii; keeps exact-boundary
#: parameters (whose orbit touches the radius without crossing) classified
#: as members.
RADIUS_MARGIN = 1e-9

#: Bracket half-width around the analytic endpoint when seeding bisection.
_BRACKET_OFFSET = 0.5

#: Bisection terminates when the bracket is narrower than this.
BISECTION_WIDTH = 1e-9

_BALL_FACTOR = math.sqrt(2.0)

# Radii are compared through their squares, which must not overflow. Any
# parameter needing a larger radius than this is divergent outright (the
# bounded set lives inside |c| <= 2), so capping cannot misclassify.
_RADIUS_CAP = 1e150


def escape_bound(p: int) -> float:
    """Universal escape threshold ``2**(1/(p-1))`` for degree ``p``."""
    _check_degree(p)
    return 2.0 ** (1.0 / (p - 1))


def default_radius(p: int, magnitude: float) -> float:
    """Escape radius for a single orbit: ``max(bound, |c|) + margin``."""
    return max(escape_bound(p), magnitude) + RADIUS_MARGIN


@dataclass(frozen=True)
class EscapeParams:
    """Iteration policy: degree ``p``, budget, optional radius override.

    ``escape_radius=None`` selects the per-parameter default policy. An
    explicit radius (must exceed 1) is applied to every component orbit and
    to the native orbit ball as given.
    """

    p: int
    max_iter: int = 1000
    escape_radius: float | None = None

    def __post_init__(self) -> None:
        _check_degree(self.p)
        if not isinstance(self.max_iter, int) or self.max_iter < 1:
            raise ValueError(f"max_iter must be a positive integer, got {self.max_iter!r}")
        if self.escape_radius is not None:
            r = float(self.escape_radius)
            if not (math.isfinite(r) and r > 1.0):
                raise ValueError(f"escape_radius must be a finite value > 1, got {r!r}")

    def component_radius(self, magnitude: float) -> float:
        if self.escape_radius is not None:
            return self.escape_radius
        return default_radius(self.p, magnitude)


@dataclass(frozen=True)
class OrbitResult:
    """Outcome of one critical-orbit run.

    ``iterations_used`` is the step index at which escape was detected, or
    ``max_iter`` for a bounded run. ``final_norm`` is the orbit's norm at
    that step (non-finite values report as ``inf``); when ``escaped`` it
    always exceeds ``radius_used``.
    """

    escaped: bool
    iterations_used: int
    final_norm: float
    radius_used: float


def step(z, c, p: int):
    """One iteration ``z**p + c``; ``z`` and ``c`` from the same system."""
    _check_degree(p)
    for cls in (Tricomplex, Bicomplex, Hyperbolic):
        if isinstance(z, cls) or isinstance(c, cls):
            if not (isinstance(z, cls) and isinstance(c, cls)):
                raise TypeError(f"mixed operands: {type(z).__name__} and {type(c).__name__}")
            return _powi(z, p) + c
    return _powi(z, p) + c


# -- scalar orbits ---------------------------------------------------------


def _finite_norm(norm_sq: float) -> float:
    root = math.sqrt(norm_sq) if norm_sq == norm_sq else math.nan
    return root if root == root else math.inf


def _orbit_real(c: float, p: int, max_iter: int, radius: float) -> OrbitResult:
    radius = min(radius, _RADIUS_CAP)
    r2 = radius * radius
    x = 0.0
    nsq = 0.0
    for it in range(1, max_iter + 1):
        x = _powi(x, p) + c
        nsq = x * x
        if not (nsq <= r2):
            return OrbitResult(True, it, _finite_norm(nsq), radius)
    return OrbitResult(False, max_iter, _finite_norm(nsq), radius)


def _orbit_components(cs: tuple[complex, ...], p: int, max_iter: int,
                      radius: float, denom: float) -> OrbitResult:
    """Iterate complex component orbits jointly; norm**2 = sum(|w|**2)/denom."""
    radius = min(radius, _RADIUS_CAP)
    r2 = radius * radius
    ws = tuple(0j for _ in cs)
    nsq = 0.0
    for it in range(1, max_iter + 1):
        ws = tuple(_powi(w, p) + c for w, c in zip(ws, cs))
        s = 0.0
        for w in ws:
            s += w.real * w.real + w.imag * w.imag
        nsq = s / denom
        if not (nsq <= r2):
            return OrbitResult(True, it, _finite_norm(nsq), radius)
    return OrbitResult(False, max_iter, _finite_norm(nsq), radius)


def _require_finite_scalar(c) -> None:
    if isinstance(c, complex):
        ok = math.isfinite(c.real) and math.isfinite(c.imag)
    else:
        ok = math.isfinite(c)
    if not ok:
        raise ValueError(f"parameter must be finite, got {c!r}")


def orbit(c, params: EscapeParams) -> OrbitResult:
    """Run the critical orbit of ``c`` under its system's native norm."""
    p, mi = params.p, params.max_iter
    if isinstance(c, Tricomplex):
        plus, minus = c.idempotent()
        comps = (*plus.idempotent(), *minus.idempotent())
        radius = params.escape_radius
        if radius is None:
            radius = _BALL_FACTOR * max(default_radius(p, abs(w)) for w in comps)
        return _orbit_components(comps, p, mi, radius, 4.0)
    if isinstance(c, Bicomplex):
        comps = c.idempotent()
        radius = params.escape_radius
        if radius is None:
            radius = _BALL_FACTOR * max(default_radius(p, abs(w)) for w in comps)
        return _orbit_components(comps, p, mi, radius, 2.0)
    if isinstance(c, Hyperbolic):
        comps = tuple(complex(u) for u in c.split())
        radius = params.escape_radius
        if radius is None:
            radius = max(default_radius(p, abs(u)) for u in comps)
        return _orbit_components(comps, p, mi, radius, 2.0)
    if isinstance(c, complex):
        _require_finite_scalar(c)
        return _orbit_components((c,), p, mi, params.component_radius(abs(c)), 1.0)
    c = float(c)
    _require_finite_scalar(c)
    return _orbit_real(c, p, mi, params.component_radius(abs(c)))


# -- membership ------------------------------------------------------------


def _real_bounded(c: float, params: EscapeParams) -> bool:
    return not _orbit_real(c, params.p, params.max_iter,
                           params.component_radius(abs(c))).escaped


def _complex_bounded(c: complex, params: EscapeParams) -> bool:
    return not _orbit_components((c,), params.p, params.max_iter,
                                 params.component_radius(abs(c)), 1.0).escaped


def is_member(c, params: EscapeParams) -> bool:
    """Bounded-orbit membership; per idempotent component for multi-unit systems."""
    if isinstance(c, Tricomplex):
        plus, minus = c.idempotent()
        return all(_complex_bounded(w, params)
                   for w in (*plus.idempotent(), *minus.idempotent()))
    if isinstance(c, Bicomplex):
        return all(_complex_bounded(w, params) for w in c.idempotent())
    if isinstance(c, Hyperbolic):
        return hyperbolic_member_via_split(c, params)
    if isinstance(c, complex):
        _require_finite_scalar(c)
        return _complex_bounded(c, params)
    c = float(c)
    _require_finite_scalar(c)
    return _real_bounded(c, params)


def hyperbolic_member_via_split(c: Hyperbolic, params: EscapeParams) -> bool:
    """True iff both real orbits, at ``x - y`` and ``x + y``, stay bounded."""
    minus, plus = c.split()
    return _real_bounded(minus, params) and _real_bounded(plus, params)


def perplexbrot_member(x: float, y: float, z: float, params: EscapeParams) -> bool:
    """Membership of ``x + y*j1 + z*j2`` embedded in the tricomplex space."""
    return is_member(embed_slice(x, y, z, ("1", "j1", "j2")), params)


# -- vectorized kernels ----------------------------------------------------


def _next_block(done: int, per_step: bool) -> int:
    if per_step:
        return 1
    # geometric warmup so fast escapers leave early, then fixed blocks
    return min(max(done, 4), 64)


def _bounded_orbits(values: np.ndarray, params: EscapeParams) -> np.ndarray:
    v = np.ravel(values)
    out = np.ones(v.size, dtype=bool)
    if v.size == 0:
        return out
    per_step = params.escape_radius is not None
    if per_step:
        r2 = np.full(v.size, min(float(params.escape_radius), _RADIUS_CAP) ** 2)
    else:
        radius = np.maximum(escape_bound(params.p), np.abs(v)) + RADIUS_MARGIN
        r2 = np.minimum(radius, _RADIUS_CAP) ** 2
    idx = np.arange(v.size)
    z = np.zeros_like(v)
    va, r2a = v, r2
    is_complex = np.iscomplexobj(v)
    it = 0
    with np.errstate(over="ignore", invalid="ignore"):
        while it < params.max_iter and idx.size:
            block = min(_next_block(it, per_step), params.max_iter - it)
            for _ in range(block):
                z = _powi(z, params.p)
                z += va
            it += block
            if is_complex:
                nsq = z.real * z.real + z.imag * z.imag
            else:
                nsq = z * z
            escaped = ~(nsq <= r2a)  # non-finite counts as escaped
            if escaped.any():
                out[idx[escaped]] = False
                keep = ~escaped
                idx, z, va, r2a = idx[keep], z[keep], va[keep], r2a[keep]
    return out


def bounded_orbits_real(values, params: EscapeParams) -> np.ndarray:
    """Boolean array: which real parameters have a bounded critical orbit.

    Decision-identical to :func:`is_member` on each element; flattens the
    input and returns a 1-D array of the same size.
    """
    v = np.asarray(values, dtype=np.float64)
    if not np.all(np.isfinite(v)):
        raise ValueError("parameters must be finite")
    return _bounded_orbits(v, params)


def bounded_orbits_complex(values, params: EscapeParams) -> np.ndarray:
    """Boolean array: which complex parameters have a bounded critical orbit."""
    v = np.asarray(values, dtype=np.complex128)
    if not np.all(np.isfinite(v)):
        raise ValueError("parameters must be finite")
    return _bounded_orbits(v, params)


# -- analysis on the real axis ---------------------------------------------


def real_endpoint_bisection(p: int, side: str,
                            params: EscapeParams | None = None) -> float:
    """Locate one endpoint of the real bounded-parameter interval by bisection.

    The bracket is seeded half a unit inside and outside the closed-form
    endpoint and verified against the iterative membership oracle before
    bisecting on that oracle alone; the formula contributes nothing beyond
    the starting bracket. Bisection stops when the bracket is narrower than
    ``BISECTION_WIDTH``.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if params is None:
        params = EscapeParams(p=p, max_iter=10 ** 5)
    elif params.p != p:
        raise ValueError(f"params.p == {params.p} does not match p == {p}")
    interval = real_interval(p)
    endpoint = interval.lo if side == "left" else interval.hi
    sign = 1.0 if side == "left" else -1.0
    inside = endpoint + sign * _BRACKET_OFFSET
    outside = endpoint - sign * _BRACKET_OFFSET
    if not _real_bounded(inside, params):
        raise ValueError(f"bracket seed {inside} is not a member; cannot bisect")
    if _real_bounded(outside, params):
        raise ValueError(f"bracket seed {outside} is unexpectedly a member; cannot bisect")
    while abs(inside - outside) >= BISECTION_WIDTH:
        mid = 0.5 * (inside + outside)
        if _real_bounded(mid, params):
            inside = mid
        else:
            outside = mid
    return 0.5 * (inside + outside)


def fixed_point_member_test(c: float, p: int) -> bool:
    """Closed-form membership of a real parameter, even degree only.

    For ``c >= 0`` the orbit is bounded iff ``g(x) = x**p - x + c`` has a
    root, i.e. iff its minimum over ``x >= 0`` (at ``x = (1/p)**(1/(p-1))``)
    is non-positive. For ``c < 0`` membership reduces to
    ``c >= -2**(1/(p-1))``.
    """
    _check_degree(p, even_only=True)
    c = float(c)
    if not math.isfinite(c):
        raise ValueError(f"parameter must be finite, got {c!r}")
    if c < 0.0:
        return c >= -escape_bound(p)
    x_min = (1.0 / p) ** (1.0 / (p - 1))
    return _powi(x_min, p) - x_min + c <= 0.0
