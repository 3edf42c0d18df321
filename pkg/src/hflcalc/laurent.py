"""Laurent polynomials with half-integer exponents and integer coefficients.

Every exponent is stored doubled, so ``t^(3/2)`` has key ``3``. The parity
of a doubled exponent tells which lattice (integral or half-integral) it
lives on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import EmptyPolytope, HalfIntegralExponent, NonUnitAugmentation, ParityError
from .geometry import Polygon

_HALF_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


@dataclass(frozen=True, order=True)
class HalfInt:
    """An element of (1/2)Z, stored as twice its value."""

    doubled: int

    @classmethod
    def of(cls, value) -> "HalfInt":
        """Coerce an int, Fraction, HalfInt or ``"p/2"`` string."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a lattice coordinate")
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, str):
            m = _HALF_RE.match(value)
            if not m:
                raise ValueError(f"not a half-integer: {value!r}")
            value = Fraction(int(m.group(1)), int(m.group(2) or 1))
        frac = Fraction(value)
        twice = 2 * frac
        if twice.denominator != 1:
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(int(twice))

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.doubled + HalfInt.of(other).doubled)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.doubled - HalfInt.of(other).doubled)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.doubled)

    @property
    def is_integral(self) -> bool:
        return self.doubled % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def __str__(self) -> str:
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"


def half_str(doubled: int) -> str:
    return str(HalfInt(doubled))


def _doubled(e) -> int:
    return HalfInt.of(e).doubled


class Laurent1:
    """One-variable Laurent polynomial, keys are doubled exponents."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {int(e): int(c) for e, c in (terms or {}).items() if c}
        if len({e % 2 for e in clean}) > 1:
            raise ParityError("exponents mix integral and half-integral values")
        self._terms = clean

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple]) -> "Laurent1":
        """Build from ``(exponent, coefficient)`` pairs with ordinary exponents."""
        acc: dict[int, int] = {}
        for e, c in pairs:
            d = _doubled(e)
            acc[d] = acc.get(d, 0) + int(c)
        return cls(acc)

    @classmethod
    def monomial(cls, exponent, coefficient: int = 1) -> "Laurent1":
        return cls({_doubled(exponent): coefficient})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Laurent1):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "Laurent1(0)"
        parts = [f"{c}*t^{half_str(e)}" for e, c in sorted(self._terms.items(), reverse=True)]
        return "Laurent1(" + " + ".join(parts) + ")"

    def __neg__(self) -> "Laurent1":
        return Laurent1({e: -c for e, c in self._terms.items()})

    def __add__(self, other: "Laurent1") -> "Laurent1":
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return Laurent1(acc)

    def __sub__(self, other: "Laurent1") -> "Laurent1":
        return self + (-other)

    def __mul__(self, other) -> "Laurent1":
        if isinstance(other, int):
            return Laurent1({e: c * other for e, c in self._terms.items()})
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return Laurent1(acc)

    __rmul__ = __mul__

    def shift(self, doubled: int) -> "Laurent1":
        return Laurent1({e + doubled: c for e, c in self._terms.items()})

    def mirror(self) -> "Laurent1":
        """p(t^-1)."""
        return Laurent1({-e: c for e, c in self._terms.items()})

    def augmentation(self) -> int:
        return sum(self._terms.values())

    def coefficient(self, exponent) -> int:
        return self._terms.get(_doubled(exponent), 0)

    def min_exponent(self) -> int:
        return min(self._terms)

    def max_exponent(self) -> int:
        return max(self._terms)

    def leading_coefficient(self) -> int:
        return self._terms[max(self._terms)] if self._terms else 0

    def unit_ratio(self, other: "Laurent1") -> tuple[int, int] | None:
        """``(sign, doubled_shift)`` with ``self == sign * t^shift * other``, else None."""
        if not self._terms or not other._terms:
            return (1, 0) if self._terms == other._terms else None
        shift = self.max_exponent() - other.max_exponent()
        sign = 1 if self.leading_coefficient() == other.leading_coefficient() else -1
        if self == other.shift(shift) * sign:
            return sign, shift
        return None


class Laurent2:
    """Two-variable Laurent polynomial keyed by doubled exponent pairs."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {(int(i), int(j)): int(c) for (i, j), c in (terms or {}).items() if c}
        if len({i % 2 for i, _ in clean}) > 1 or len({j % 2 for _, j in clean}) > 1:
            raise ParityError("exponents mix integral and half-integral values")
        self._terms = clean

    @classmethod
    def from_terms(cls, triples: Iterable[tuple]) -> "Laurent2":
        """Build from ``(e1, e2, coefficient)`` with ordinary exponents."""
        acc: dict[tuple[int, int], int] = {}
        for e1, e2, c in triples:
            key = (_doubled(e1), _doubled(e2))
            acc[key] = acc.get(key, 0) + int(c)
        return cls(acc)

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Laurent2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "Laurent2(0)"
        parts = [
            f"{c}*t1^{half_str(i)}*t2^{half_str(j)}"
            for (i, j), c in sorted(self._terms.items(), reverse=True)
        ]
        return "Laurent2(" + " + ".join(parts) + ")"

    def __neg__(self) -> "Laurent2":
        return Laurent2({k: -c for k, c in self._terms.items()})

    def __add__(self, other: "Laurent2") -> "Laurent2":
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return Laurent2(acc)

    def __sub__(self, other: "Laurent2") -> "Laurent2":
        return self + (-other)

    def __mul__(self, other) -> "Laurent2":
        if isinstance(other, int):
            return Laurent2({k: c * other for k, c in self._terms.items()})
        acc: dict[tuple[int, int], int] = {}
        for (a1, a2), c1 in self._terms.items():
            for (b1, b2), c2 in other._terms.items():
                key = (a1 + b1, a2 + b2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return Laurent2(acc)

    __rmul__ = __mul__

    def coefficient(self, e1, e2) -> int:
        return self._terms.get((_doubled(e1), _doubled(e2)), 0)

    def coefficient_doubled(self, d1: int, d2: int) -> int:
        return self._terms.get((d1, d2), 0)

    def shift(self, d1: int, d2: int) -> "Laurent2":
        return Laurent2({(i + d1, j + d2): c for (i, j), c in self._terms.items()})

    def mirror(self) -> "Laurent2":
        """p(t1^-1, t2^-1)."""
        return Laurent2({(-i, -j): c for (i, j), c in self._terms.items()})

    def exponent_parities(self) -> tuple[int, int] | None:
        if not self._terms:
            return None
        i, j = next(iter(self._terms))
        return i % 2, j % 2


class TorsionSeries:
    """Coefficients a_k of t/(t-1) * Delta(t).

    ``a_k`` is stored for ``window_lo <= k <= window_hi``; above the window
    it is 0 and below it is 1.
    """

    __slots__ = ("window_lo", "window_hi", "coeffs")

    def __init__(self, window_lo: int, window_hi: int, coeffs: Iterable[int]):
        self.window_lo = int(window_lo)
        self.window_hi = int(window_hi)
        self.coeffs = tuple(int(c) for c in coeffs)
        if len(self.coeffs) != self.window_hi - self.window_lo + 1:
            raise ValueError("coefficient count does not match the window")

    def __getitem__(self, k: int) -> int:
        if k > self.window_hi:
            return 0
        if k < self.window_lo:
            return 1
        return self.coeffs[k - self.window_lo]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorsionSeries):
            return NotImplemented
        return (self.window_lo, self.window_hi, self.coeffs) == (
            other.window_lo,
            other.window_hi,
            other.coeffs,
        )

    def __repr__(self) -> str:
        return f"TorsionSeries(lo={self.window_lo}, hi={self.window_hi}, coeffs={self.coeffs})"


def torsion_series(delta: Laurent1) -> TorsionSeries:
    """Expand ``Delta * (1 + t^-1 + t^-2 + ...)``; ``a_k`` is the tail sum of coefficients from k up."""
    if any(e % 2 for e in delta.terms):
        raise HalfIntegralExponent("knot Alexander polynomial must have integer exponents")
    if delta.augmentation() != 1:
        raise NonUnitAugmentation(f"Delta(1) = {delta.augmentation()}, expected 1")
    lo = delta.min_exponent() // 2
    hi = delta.max_exponent() // 2
    coeffs = []
    running = 0
    for k in range(hi, lo - 1, -1):
        running += delta.terms.get(2 * k, 0)
        coeffs.append(running)
    coeffs.reverse()
    return TorsionSeries(lo, hi, coeffs)


def substitute_unit(p: Laurent2, variable: int = 2) -> Laurent1:
    """Set ``t_variable = 1``; the other variable becomes t."""
    acc: dict[int, int] = {}
    for (i, j), c in p.terms.items():
        e = i if variable == 2 else j
        acc[e] = acc.get(e, 0) + c
    return Laurent1(acc)


def apply_unit(p: Laurent2, unit: tuple[int, HalfInt, HalfInt]) -> Laurent2:
    """``sign * t1^a * t2^b * p(t1^-1, t2^-1)``."""
    sign, a, b = unit
    return p.mirror().shift(HalfInt.of(a).doubled, HalfInt.of(b).doubled) * sign


def symmetry_defect(p: Laurent2) -> tuple[bool, tuple[int, HalfInt, HalfInt]]:
    """Whether ``p`` equals a unit times ``p(t1^-1, t2^-1)``, and the best such unit.

    The shift is the one that matches exponent ranges; the sign matches the
    coefficient at the largest exponent.
    """
    if p.is_zero():
        return True, (1, HalfInt(0), HalfInt(0))
    terms = p.terms
    is_ = [i for i, _ in terms]
    js = [j for _, j in terms]
    a, b = min(is_) + max(is_), min(js) + max(js)
    top = max(terms)
    mirrored = p.mirror().shift(a, b)
    sign = 1 if mirrored.terms.get(top, 0) == terms[top] else -1
    unit = (sign, HalfInt(a), HalfInt(b))
    return apply_unit(p, unit) == p, unit


def newton_polytope(p: Laurent2) -> Polygon:
    if p.is_zero():
        raise EmptyPolytope("the zero polynomial has no Newton polytope")
    return Polygon((Fraction(i, 2), Fraction(j, 2)) for i, j in p.terms)
