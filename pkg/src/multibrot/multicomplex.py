"""Commutative hypercomplex arithmetic on one, two, and three imaginary units.

Three number systems built over the reals by adjoining commuting units:

* ``complex`` (the builtin): one unit ``i`` with ``i**2 == -1``.
* :class:`Hyperbolic`: one unit ``j`` with ``j**2 == +1``.
* :class:`Bicomplex`: two imaginary units ``i1, i2``; elements ``z1 + z2*i2``
  with complex ``z1, z2``.
* :class:`Tricomplex`: three imaginary units ``i1, i2, i3``. The product of a
  pair of distinct units is a hyperbolic unit (``j1 = i1*i2``, ``j2 = i1*i3``,
  ``j3 = i2*i3``) and the product of all three is a fourth imaginary unit
  ``i4 = i1*i2*i3``, giving the eight-dimensional real basis
  ``(1, i1, i2, i3, i4, j1, j2, j3)``.

Tricomplex values are stored canonically as their eight real coefficients in
that basis order. The bicomplex-pair and four-complex views are pure
re-indexings of the same numbers.

Because ``j3**2 == 1``, the elements ``(1 + j3)/2`` and ``(1 - j3)/2`` are
complementary idempotents that annihilate each other. Every tricomplex number
splits uniquely into a pair of bicomplex components carried by those
idempotents, and addition, multiplication, and integer powers all act
componentwise on the pair. Powering is implemented through that split.

All components must be finite floats; constructors reject NaN and infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

__all__ = [
    "UNITS",
    "Bicomplex",
    "Hyperbolic",
    "IdempotentPair",
    "Tricomplex",
    "embed_slice",
    "unit_product",
]

#: Basis unit tags in canonical coefficient order.
UNITS = ("1", "i1", "i2", "i3", "i4", "j1", "j2", "j3")

# Each unit is a product of a subset of the generators {i1, i2, i3}; the
# subset is encoded as a 3-bit mask (bit 0 = i1, bit 1 = i2, bit 2 = i3).
_MASK = {"1": 0b000, "i1": 0b001, "i2": 0b010, "j1": 0b011,
         "i3": 0b100, "j2": 0b101, "j3": 0b110, "i4": 0b111}
_TAG_BY_MASK = ("1", "i1", "i2", "j1", "i3", "j2", "j3", "i4")
_COEFF_INDEX = {tag: k for k, tag in enumerate(UNITS)}


def unit_product(a: str, b: str) -> tuple[int, str]:
    """Multiply two basis units.

    Args:
        a, b: unit tags from :data:`UNITS`.

    Returns:
        ``(sign, tag)`` with ``sign`` in ``{-1, +1}`` such that
        ``a * b == sign * tag``.

    The rule follows from the generators alone: writing each unit as a
    subset of ``{i1, i2, i3}``, the product unit is the symmetric difference
    of the subsets and every shared generator contributes a factor
    ``i_k**2 == -1``.
    """
    try:
        ma, mb = _MASK[a], _MASK[b]
    except KeyError as exc:
        raise ValueError(f"unknown unit tag {exc.args[0]!r}; expected one of {UNITS}") from None
    shared = ma & mb
    sign = -1 if bin(shared).count("1") % 2 else 1
    return sign, _TAG_BY_MASK[ma ^ mb]


def _powi(value, exponent: int):
    """``value`` raised to a positive integer power by binary exponentiation.

    Uses only the value's own ``*``, so it applies uniformly to floats,
    complex numbers, numpy arrays, and the algebra classes in this module,
    and performs the identical multiplication sequence for all of them.
    """
    n = int(exponent)
    if n < 1:
        raise ValueError(f"exponent must be a positive integer, got {exponent!r}")
    result = None
    base = value
    while True:
        if n & 1:
            result = base if result is None else result * base
        n >>= 1
        if not n:
            return result
        base = base * base


def _require_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"components must be finite, got {v!r}")


def _finite_complex(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"components must be finite, got {z!r}")
    return z


@dataclass(frozen=True)
class Hyperbolic:
    """Number ``x + y*j`` with ``j**2 == +1``.

    The coordinates ``(x - y, x + y)`` diagonalize the algebra: they sit on
    the complementary idempotents ``(1 - j)/2`` and ``(1 + j)/2``, and all
    ring operations act componentwise there.
    """

    x: float = 0.0
    y: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        _require_finite(self.x, self.y)

    def split(self) -> tuple[float, float]:
        """Idempotent coordinates ``(x - y, x + y)``."""
        return self.x - self.y, self.x + self.y

    @classmethod
    def from_split(cls, minus: float, plus: float) -> "Hyperbolic":
        return cls((plus + minus) / 2.0, (plus - minus) / 2.0)

    def norm(self) -> float:
        """Euclidean length ``sqrt(x**2 + y**2)``."""
        return math.hypot(self.x, self.y)

    def __add__(self, other: "Hyperbolic") -> "Hyperbolic":
        if not isinstance(other, Hyperbolic):
            return NotImplemented
        return Hyperbolic(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Hyperbolic") -> "Hyperbolic":
        if not isinstance(other, Hyperbolic):
            return NotImplemented
        return Hyperbolic(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Hyperbolic":
        return Hyperbolic(-self.x, -self.y)

    def __mul__(self, other: "Hyperbolic") -> "Hyperbolic":
        if not isinstance(other, Hyperbolic):
            return NotImplemented
        return Hyperbolic(self.x * other.x + self.y * other.y,
                          self.x * other.y + self.y * other.x)

    def __pow__(self, exponent: int) -> "Hyperbolic":
        minus, plus = self.split()
        return Hyperbolic.from_split(_powi(minus, exponent), _powi(plus, exponent))


@dataclass(frozen=True)
class Bicomplex:
    """Number ``z1 + z2*i2`` with complex ``z1, z2`` sharing the unit ``i1``."""

    z1: complex = 0j
    z2: complex = 0j

    def __post_init__(self) -> None:
        object.__setattr__(self, "z1", _finite_complex(self.z1))
        object.__setattr__(self, "z2", _finite_complex(self.z2))

    def idempotent(self) -> tuple[complex, complex]:
        """Complex components on ``(1 + j1)/2`` and ``(1 - j1)/2``.

        ``z1 + z2*i2 == (z1 - z2*i1)*(1 + j1)/2 + (z1 + z2*i1)*(1 - j1)/2``.
        """
        return self.z1 - self.z2 * 1j, self.z1 + self.z2 * 1j

    @classmethod
    def from_idempotent(cls, plus: complex, minus: complex) -> "Bicomplex":
        # z2 = (minus - plus)/(2*i1); dividing by i1 is multiplying by -i1
        return cls((plus + minus) / 2.0, (plus - minus) / 2.0 * 1j)

    def norm(self) -> float:
        """``sqrt(|z1|**2 + |z2|**2)``."""
        return math.sqrt(abs(self.z1) ** 2 + abs(self.z2) ** 2)

    def __add__(self, other: "Bicomplex") -> "Bicomplex":
        if not isinstance(other, Bicomplex):
            return NotImplemented
        return Bicomplex(self.z1 + other.z1, self.z2 + other.z2)

    def __sub__(self, other: "Bicomplex") -> "Bicomplex":
        if not isinstance(other, Bicomplex):
            return NotImplemented
        return Bicomplex(self.z1 - other.z1, self.z2 - other.z2)

    def __neg__(self) -> "Bicomplex":
        return Bicomplex(-self.z1, -self.z2)

    def __mul__(self, other: "Bicomplex") -> "Bicomplex":
        if not isinstance(other, Bicomplex):
            return NotImplemented
        return Bicomplex(self.z1 * other.z1 - self.z2 * other.z2,
                         self.z1 * other.z2 + self.z2 * other.z1)

    def __pow__(self, exponent: int) -> "Bicomplex":
        plus, minus = self.idempotent()
        return Bicomplex.from_idempotent(_powi(plus, exponent), _powi(minus, exponent))


class IdempotentPair(NamedTuple):
    """Bicomplex components of a tricomplex number on ``(1 +/- j3)/2``."""

    plus: Bicomplex
    minus: Bicomplex

    def join(self) -> "Tricomplex":
        return Tricomplex.from_idempotent(self.plus, self.minus)


class Tricomplex:
    """Eight-dimensional commutative hypercomplex number.

    Canonical storage is the tuple of eight real coefficients in the basis
    order ``(1, i1, i2, i3, i4, j1, j2, j3)``. The two other views:

    * four complex numbers ``(z1, z2, z3, z4)`` over the unit ``i1`` with
      ``value == z1 + z2*i2 + z3*i3 + z4*j3``;
    * a pair of bicomplex numbers ``(zeta1, zeta2) == (z1 + z2*i2, z3 + z4*i2)``
      with ``value == zeta1 + zeta2*i3``.

    Multiplication follows the bicomplex-pair rule
    ``(a1 + a2*i3)(b1 + b2*i3) == (a1*b1 - a2*b2) + (a1*b2 + a2*b1)*i3``;
    integer powers go through the idempotent split, where they act
    componentwise.
    """

    __slots__ = ("_c",)

    def __init__(self, x0: float = 0.0, x1: float = 0.0, x2: float = 0.0,
                 x3: float = 0.0, x4: float = 0.0, x5: float = 0.0,
                 x6: float = 0.0, x7: float = 0.0) -> None:
        coeffs = (float(x0), float(x1), float(x2), float(x3),
                  float(x4), float(x5), float(x6), float(x7))
        _require_finite(*coeffs)
        object.__setattr__(self, "_c", coeffs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[float]) -> "Tricomplex":
        c = tuple(coeffs)
        if len(c) != 8:
            raise ValueError(f"expected 8 coefficients, got {len(c)}")
        return cls(*c)

    @classmethod
    def from_real(cls, x: float) -> "Tricomplex":
        return cls(x)

    @classmethod
    def from_complex(cls, z1: complex, z2: complex = 0j, z3: complex = 0j,
                     z4: complex = 0j) -> "Tricomplex":
        z1, z2, z3, z4 = complex(z1), complex(z2), complex(z3), complex(z4)
        return cls(z1.real, z1.imag, z2.real, z3.real,
                   z4.imag, z2.imag, z3.imag, z4.real)

    @classmethod
    def from_bicomplex(cls, zeta1: Bicomplex, zeta2: Bicomplex) -> "Tricomplex":
        return cls.from_complex(zeta1.z1, zeta1.z2, zeta2.z1, zeta2.z2)

    @classmethod
    def from_idempotent(cls, plus: Bicomplex, minus: Bicomplex) -> "Tricomplex":
        """Inverse of :meth:`idempotent`."""
        half1 = Bicomplex((plus.z1 + minus.z1) / 2.0, (plus.z2 + minus.z2) / 2.0)
        d1 = (minus.z1 - plus.z1) / 2.0
        d2 = (minus.z2 - plus.z2) / 2.0
        # (d1 + d2*i2) * (-i2) undoes the i2 factor: zeta2 = d2 - d1*i2.
        return cls.from_bicomplex(half1, Bicomplex(d2, -d1))

    @classmethod
    def unit(cls, tag: str) -> "Tricomplex":
        if tag not in _COEFF_INDEX:
            raise ValueError(f"unknown unit tag {tag!r}; expected one of {UNITS}")
        coeffs = [0.0] * 8
        coeffs[_COEFF_INDEX[tag]] = 1.0
        return cls(*coeffs)

    # -- views -------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[float, ...]:
        """Coefficients in the order ``(1, i1, i2, i3, i4, j1, j2, j3)``."""
        return self._c

    @property
    def complex_view(self) -> tuple[complex, complex, complex, complex]:
        c = self._c
        return (complex(c[0], c[1]), complex(c[2], c[5]),
                complex(c[3], c[6]), complex(c[7], c[4]))

    @property
    def bicomplex_view(self) -> tuple[Bicomplex, Bicomplex]:
        z1, z2, z3, z4 = self.complex_view
        return Bicomplex(z1, z2), Bicomplex(z3, z4)

    def idempotent(self) -> IdempotentPair:
        """Split into bicomplex components on ``(1 + j3)/2`` and ``(1 - j3)/2``.

        ``value == pair.plus*(1 + j3)/2 + pair.minus*(1 - j3)/2`` and every
        ring operation acts componentwise on the pair.
        """
        z1, z2, z3, z4 = self.complex_view
        return IdempotentPair(Bicomplex(z1 + z4, z2 - z3),
                              Bicomplex(z1 - z4, z2 + z3))

    # -- arithmetic --------------------------------------------------------

    def norm(self) -> float:
        """Euclidean length of the eight real coefficients.

        Identical (up to rounding) to ``sqrt(zeta1.norm()**2 + zeta2.norm()**2)``
        over the bicomplex view.
        """
        return math.sqrt(math.fsum(x * x for x in self._c))

    def __add__(self, other: "Tricomplex") -> "Tricomplex":
        if not isinstance(other, Tricomplex):
            return NotImplemented
        return Tricomplex(*(a + b for a, b in zip(self._c, other._c)))

    def __sub__(self, other: "Tricomplex") -> "Tricomplex":
        if not isinstance(other, Tricomplex):
            return NotImplemented
        return Tricomplex(*(a - b for a, b in zip(self._c, other._c)))

    def __neg__(self) -> "Tricomplex":
        return Tricomplex(*(-a for a in self._c))

    def __mul__(self, other: "Tricomplex") -> "Tricomplex":
        if not isinstance(other, Tricomplex):
            return NotImplemented
        a1, a2, a3, a4 = self.complex_view
        b1, b2, b3, b4 = other.complex_view
        # bicomplex products of the pair views, written out on complex parts
        p1 = (a1 * b1 - a2 * b2, a1 * b2 + a2 * b1)    # zeta1 * eta1
        p2 = (a3 * b3 - a4 * b4, a3 * b4 + a4 * b3)    # zeta2 * eta2
        q1 = (a1 * b3 - a2 * b4, a1 * b4 + a2 * b3)    # zeta1 * eta2
        q2 = (a3 * b1 - a4 * b2, a3 * b2 + a4 * b1)    # zeta2 * eta1
        return Tricomplex.from_complex(p1[0] - p2[0], p1[1] - p2[1],
                                       q1[0] + q2[0], q1[1] + q2[1])

    def __pow__(self, exponent: int) -> "Tricomplex":
        plus, minus = self.idempotent()
        return Tricomplex.from_idempotent(_powi(plus, exponent),
                                          _powi(minus, exponent))

    # -- plumbing ----------------------------------------------------------

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("Tricomplex is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tricomplex):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        terms = []
        for tag, x in zip(UNITS, self._c):
            if x == 0.0:
                continue
            terms.append(f"{x!r}" if tag == "1" else f"{x!r}*{tag}")
        return f"Tricomplex({' + '.join(terms) if terms else '0.0'})"


def embed_slice(x1: float, x2: float, x3: float,
                units: tuple[str, str, str]) -> Tricomplex:
    """Tricomplex number ``x1*units[0] + x2*units[1] + x3*units[2]``.

    The three unit tags must be distinct members of :data:`UNITS`. This is
    how a 3D parameter slice, e.g. ``(x, y, z) -> x + y*j1 + z*j2``, is
    embedded into the full eight-dimensional space.
    """
    if len(units) != 3 or len(set(units)) != 3:
        raise ValueError(f"units must be three distinct tags, got {units!r}")
    coeffs = [0.0] * 8
    for value, tag in zip((x1, x2, x3), units):
        if tag not in _COEFF_INDEX:
            raise ValueError(f"unknown unit tag {tag!r}; expected one of {UNITS}")
        coeffs[_COEFF_INDEX[tag]] = float(value)
    return Tricomplex(*coeffs)
