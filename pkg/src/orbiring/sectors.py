"""Circle-weight systems and the combinatorics of their twisted sectors.

A circle acts diagonally on ``C^{n+1}`` with weights ``b_0..b_n``
(SYMPLECTIC mode) or on ``T*C^{n+1} = C^{n+1} + C^{n+1}`` with weights ``b``
on the base and ``-b`` on the fiber (HYPER mode).  Sectors are indexed by
residues ``g`` in ``Z/mZ``, where ``g`` stands for the element
``exp(2 pi i g / m)`` of the circle.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import OrderMismatch, PositivityRequired


class Mode(enum.Enum):
    SYMPLECTIC = "symplectic"
    HYPER = "hyper"

    @classmethod
    def parse(cls, s: "str | Mode") -> "Mode":
        if isinstance(s, Mode):
            return s
        return cls(s.strip().lower())


def default_order(weights) -> int:
    """lcm of the absolute values of the nonzero weights (1 if there are none)."""
    return math.lcm(*(abs(b) for b in weights if b)) if any(weights) else 1


def logweight(w: int, g: int, m: int) -> Fraction:
    """Rotation number in [0, 1) of ``exp(2 pi i g/m)`` on a line of weight ``w``."""
    if m < 1:
        raise ValueError("order must be positive")
    return Fraction((w * g) % m, m)


def parse_weights(text: str) -> tuple[int, ...]:
    """Parse ``"b0,b1,...,bn"``; the empty string gives the empty tuple."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


@dataclass(frozen=True)
class Sector:
    g: int
    fixed: tuple[int, ...]
    age: Fraction

    @property
    def degree(self) -> Fraction:
        return 2 * self.age


@dataclass(frozen=True)
class CircleWeightSystem:
    weights: tuple[int, ...]
    mode: Mode = Mode.SYMPLECTIC
    order: int = field(default=0)

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(b) for b in self.weights))
        object.__setattr__(self, "mode", Mode.parse(self.mode))
        if not self.weights:
            raise ValueError("a weight system needs at least one weight")
        if self.order == 0:
            object.__setattr__(self, "order", default_order(self.weights))
        if self.order < 1:
            raise ValueError(f"sector order must be positive, got {self.order}")

    @classmethod
    def parse(cls, text: str, mode="symplectic", order: int | None = None):
        return cls(parse_weights(text), Mode.parse(mode), order or 0)

    @property
    def n(self) -> int:
        return len(self.weights) - 1

    @property
    def ell(self) -> int:
        return default_order(self.weights)

    @property
    def hyper(self) -> bool:
        return self.mode is Mode.HYPER

    def residues(self) -> range:
        return range(self.order)

    def with_zeros(self, k: int) -> "CircleWeightSystem":
        """Same system with ``k`` trivial summands appended (order kept)."""
        return CircleWeightSystem(self.weights + (0,) * k, self.mode, self.order)

    def require_quotient(self):
        """Preconditions shared by every quotient-ring operation."""
        if any(b <= 0 for b in self.weights):
            raise PositivityRequired(f"quotients need all weights >= 1, got {self.weights}")
        if self.order != self.ell:
            raise OrderMismatch(f"quotients need order = lcm = {self.ell}, got {self.order}")

    def sector(self, g: int) -> Sector:
        return self._sectors[g % self.order]

    @cached_property
    def _sectors(self) -> list[Sector]:
        return [sector_data(self, g) for g in self.residues()]

    def sectors(self) -> list[Sector]:
        return list(self._sectors)

    def label(self) -> str:
        return ",".join(map(str, self.weights))


def sector_data(ws: CircleWeightSystem, g: int) -> Sector:
    m = ws.order
    g %= m
    fixed = tuple(i for i, b in enumerate(ws.weights) if (b * g) % m == 0)
    age = sum((logweight(b, g, m) for b in ws.weights), Fraction(0))
    if ws.hyper:
        age += sum((logweight(-b, g, m) for b in ws.weights), Fraction(0))
    return Sector(g, fixed, age)
