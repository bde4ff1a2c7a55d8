"""Exact scalars and sparse univariate polynomials in ``u``.

Rationals are plain :class:`fractions.Fraction` values (always reduced,
positive denominator, unbounded precision).  :class:`UPoly` is an immutable
sparse polynomial with rational coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


def format_rational(q) -> str:
    """Serialize a rational as ``"p/q"`` in lowest terms, or ``"p"`` when q = 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    num, sep, den = s.strip().partition("/")
    if not sep:
        return Fraction(int(num))
    return Fraction(int(num), int(den))


class UPoly:
    """Polynomial in one variable ``u`` over the rationals.

    Stored as ``{exponent: coefficient}`` with no zero coefficients, so two
    equal polynomials always have identical internal dicts.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, Fraction] = {}
        for e, c in items:
            e = int(e)
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
        self._coeffs = {e: c for e, c in sorted(acc.items()) if c != 0}

    @classmethod
    def monomial(cls, coefficient: Scalar, exponent: int) -> "UPoly":
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c: Scalar) -> "UPoly":
        return cls({0: c})

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    def terms(self):
        return self._coeffs.items()

    @property
    def degree(self) -> int | None:
        """Highest exponent, or ``None`` for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    def coefficient(self, e: int) -> Fraction:
        return self._coeffs.get(e, Fraction(0))

    def canonical(self) -> "UPoly":
        return UPoly(self._coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return UPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = UPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def truncate(self, d: int) -> "UPoly":
        """Drop every term of exponent >= d."""
        return UPoly({e: c for e, c in self._coeffs.items() if e < d})

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    def to_json(self) -> list:
        return [[e, format_rational(c)] for e, c in self._coeffs.items()]

    @classmethod
    def from_json(cls, data) -> "UPoly":
        return cls((int(e), parse_rational(c)) for e, c in data)

    def __repr__(self):
        return f"UPoly({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in reversed(list(self._coeffs.items())):
            cs = format_rational(c)
            if e == 0:
                parts.append(cs)
            else:
                mono = "u" if e == 1 else f"u^{e}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(x):
    if isinstance(x, UPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return UPoly.constant(x)
    return NotImplemented


def poly_add(a: UPoly, b: UPoly) -> UPoly:
    return a + b


def poly_mul(a: UPoly, b: UPoly) -> UPoly:
    return a * b


U = UPoly.monomial(1, 1)
ZERO = UPoly()
ONE = UPoly.constant(1)
