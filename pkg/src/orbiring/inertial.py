"""Sector products in the inertial cohomology of a linear circle action.

Each sector ``g`` contributes a free ``Z[u]``-module with generator
``a_g`` (the unit class of ``H_{S^1}(Y^g)``).  The product of two sector units
is a single monomial ``c u^e a_{g+h}``, computed two independent ways:

* :func:`obstruction_data_oracle` classifies every coordinate line directly
  from logweight sums (obstruction lines, pushforward planes) and multiplies
  the corresponding equivariant Euler classes;
* :func:`sector_unit_product_closed_form` evaluates the exponent formula of the
  integral presentation with bracket arithmetic modulo ``l = lcm(b)``.

The oracle path is the default; the closed form only applies to nonnegative
weights with ``order == lcm``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

import numpy as np

from .errors import ClosedFormInapplicable
from .kernel import UPoly, format_rational
from .sectors import CircleWeightSystem, logweight


@dataclass(frozen=True)
class ObstructionData:
    R: frozenset
    Rprime: frozenset
    Rdoubleprime: frozenset
    euler_coefficient: int
    u_exponent: int

    @property
    def euler(self) -> UPoly:
        return UPoly.monomial(self.euler_coefficient, self.u_exponent)


@dataclass(frozen=True)
class ProductMonomial:
    target: int
    coefficient: int
    u_exponent: int

    def __str__(self):
        return f"{self.coefficient} u^{self.u_exponent} a{self.target}"

    def as_poly(self) -> UPoly:
        return UPoly.monomial(self.coefficient, self.u_exponent)


def obstruction_data_oracle(ws: CircleWeightSystem, g: int, h: int) -> ObstructionData:
    """Classify each coordinate for the pair (g, h) from the logweight definitions.

    A base line of weight b is an obstruction line when the logweights of
    g, h and (gh)^-1 sum to 2; a fiber line (weight -b, HYPER only) likewise.
    Coordinates fixed by g+h but moved by both g and h are pushforward
    planes (lines in SYMPLECTIC mode).
    """
    m = ws.order
    g, h = g % m, h % m
    k = (g + h) % m
    inv = (-k) % m
    R, Rp, Rpp = set(), set(), set()
    coeff, exp = 1, 0
    for i, b in enumerate(ws.weights):
        if logweight(b, g, m) + logweight(b, h, m) + logweight(b, inv, m) == 2:
            R.add(i)
            coeff *= b
            exp += 1
        if ws.hyper and logweight(-b, g, m) + logweight(-b, h, m) + logweight(-b, inv, m) == 2:
            Rp.add(i)
            coeff *= -b
            exp += 1
        if logweight(b, g, m) != 0 and logweight(b, h, m) != 0 and logweight(b, k, m) == 0:
            Rpp.add(i)
            if ws.hyper:
                coeff *= -b * b
                exp += 2
            else:
                coeff *= b
                exp += 1
    return ObstructionData(frozenset(R), frozenset(Rp), frozenset(Rpp), coeff, exp)


def closed_form_applicable(ws: CircleWeightSystem) -> bool:
    return all(b >= 0 for b in ws.weights) and ws.order == ws.ell


def closed_form_exponents(ws: CircleWeightSystem, g: int, h: int) -> list[tuple[Fraction, Fraction]]:
    """Per-coordinate exponents of the (b u) and (-b u) factors.

    Returned as exact fractions so callers can check integrality; the fiber
    exponent is reported as 0 in SYMPLECTIC mode.
    """
    if not closed_form_applicable(ws):
        raise ClosedFormInapplicable(
            f"closed form needs weights >= 0 and order = lcm; got {ws.weights}, order {ws.order}")
    l = ws.order
    out = []
    for b in ws.weights:
        e1 = Fraction((b * g) % l + (b * h) % l - (b * (g + h)) % l, l)
        e2 = Fraction((-b * g) % l + (-b * h) % l - (-b * (g + h)) % l, l)
        out.append((e1, e2 if ws.hyper else Fraction(0)))
    return out


def sector_unit_product_closed_form(ws: CircleWeightSystem, g: int, h: int) -> ProductMonomial:
    coeff, exp = 1, 0
    for b, (e1, e2) in zip(ws.weights, closed_form_exponents(ws, g, h)):
        if e1.denominator != 1 or e2.denominator != 1:
            raise ArithmeticError(f"non-integral exponent for weight {b}: {e1}, {e2}")
        coeff *= b ** int(e1) * (-b) ** int(e2)
        exp += int(e1) + int(e2)
    return ProductMonomial((g + h) % ws.order, coeff, exp)


@lru_cache(maxsize=1 << 16)
def sector_unit_product(ws: CircleWeightSystem, g: int, h: int, path: str = "oracle") -> ProductMonomial:
    """``a_g * a_h`` as a monomial in the target sector."""
    g, h = g % ws.order, h % ws.order
    if path == "closed":
        return sector_unit_product_closed_form(ws, g, h)
    if path != "oracle":
        raise ValueError(f"unknown path {path!r}")
    ob = obstruction_data_oracle(ws, g, h)
    return ProductMonomial((g + h) % ws.order, ob.euler_coefficient, ob.u_exponent)


class InertialElement:
    """Finite sum of ``p_g(u) a_g`` over sectors; absent sectors are zero."""

    __slots__ = ("_sectors",)

    def __init__(self, sectors: Mapping[int, UPoly] = ()):
        items = sectors.items() if isinstance(sectors, Mapping) else sectors
        acc: dict[int, UPoly] = {}
        for g, p in items:
            acc[g] = acc.get(g, UPoly()) + p
        self._sectors = {g: p for g, p in sorted(acc.items()) if p}

    @classmethod
    def unit(cls, g: int, poly: UPoly | None = None) -> "InertialElement":
        return cls({g: poly if poly is not None else UPoly.constant(1)})

    @property
    def sectors(self) -> dict[int, UPoly]:
        return dict(self._sectors)

    def __getitem__(self, g: int) -> UPoly:
        return self._sectors.get(g, UPoly())

    def __add__(self, other: "InertialElement") -> "InertialElement":
        return InertialElement(list(self._sectors.items()) + list(other._sectors.items()))

    def __eq__(self, other):
        return isinstance(other, InertialElement) and self._sectors == other._sectors

    def __hash__(self):
        return hash(tuple(self._sectors.items()))

    def __repr__(self):
        if not self._sectors:
            return "InertialElement(0)"
        return "InertialElement(" + " + ".join(f"({p}) a{g}" for g, p in self._sectors.items()) + ")"


def inertial_product(x: InertialElement, y: InertialElement, ws: CircleWeightSystem,
                     path: str = "oracle") -> InertialElement:
    terms = []
    for g, p in x.sectors.items():
        for h, q in y.sectors.items():
            mono = sector_unit_product(ws, g, h, path)
            terms.append((mono.target, p * q * mono.as_poly()))
    return InertialElement(terms)


@dataclass(frozen=True)
class InertialPresentation:
    ws: CircleWeightSystem
    relations: tuple  # ((g, h, ProductMonomial), ...) with g <= h
    coefficient_ring: str = "Z"

    @property
    def generators(self) -> list[tuple[str, Fraction]]:
        gens = [("u", Fraction(2))]
        gens += [(f"a{s.g}", s.degree) for s in self.ws.sectors()]
        return gens

    def relation_set(self) -> set:
        return {(g, h, p.target, p.coefficient, p.u_exponent) for g, h, p in self.relations}

    def header(self) -> str:
        ws = self.ws
        return (f"ring {self.coefficient_ring}[u, a0..a{ws.order - 1}] mode={ws.mode.name} "
                f"weights={ws.label()} order={ws.order}")

    def to_text(self) -> str:
        lines = [self.header()]
        lines += [f"a{g}*a{h} = {p}" for g, h, p in self.relations]
        return "\n".join(lines) + "\n"

    def to_latex(self) -> str:
        m = self.ws.order
        rels = []
        for g, h, p in self.relations:
            rhs = _latex_monomial(p.coefficient, p.u_exponent)
            rels.append(rf"\alpha_{{{g}}}\smile\alpha_{{{h}}} = {rhs}\alpha_{{{p.target}}}")
        gens = r"\alpha_0" if m == 1 else rf"\alpha_0,\dots,\alpha_{{{m - 1}}}"
        return (rf"\mathbb{{{self.coefficient_ring}}}[u,{gens}]/\langle "
                + r",\ ".join(rels) + r"\rangle" + "\n")

    def to_json(self) -> str:
        data = {
            "weights": list(self.ws.weights),
            "mode": self.ws.mode.name,
            "order": self.ws.order,
            "coefficients": self.coefficient_ring,
            "generators": [{"name": n, "degree": format_rational(d)} for n, d in self.generators],
            "relations": [
                {"g": g, "h": h, "target": p.target, "coefficient": p.coefficient,
                 "u_exponent": p.u_exponent}
                for g, h, p in self.relations
            ],
        }
        return json.dumps(data, indent=2) + "\n"


def _latex_monomial(c: int, e: int) -> str:
    """Coefficient times a power of u, written to sit in front of a generator."""
    u = "" if e == 0 else "u" if e == 1 else f"u^{{{e}}}"
    if c == 1:
        return u
    if c == -1:
        return "-" + u
    return f"{c}{u}"


def inertial_presentation(ws: CircleWeightSystem, path: str = "oracle",
                          cross_check: bool = True) -> InertialPresentation:
    """One relation ``a_g a_h = c u^e a_{g+h}`` per unordered pair, sorted by (g, h).

    With ``cross_check`` the oracle result is compared against the closed form
    wherever the latter applies.
    """
    table = product_table(ws, path)
    if cross_check and path == "oracle" and closed_form_applicable(ws):
        other = product_table(ws, "closed")
        bad = table.first_mismatch(other)
        if bad is not None:
            g, h = bad
            raise AssertionError(f"oracle {table.monomial(g, h)} != closed form "
                                 f"{other.monomial(g, h)} for {ws}, g={g}, h={h}")
    relations = tuple((g, h, table.monomial(g, h))
                      for g in ws.residues() for h in range(g, ws.order))
    return InertialPresentation(ws, relations)


# --- whole-group product tables -------------------------------------------------

@dataclass(frozen=True, eq=False)
class ProductTable:
    """``a_g a_h = coef[g, h] u^{exp[g, h]} a_{(g+h) mod m}`` for every pair."""

    ws: CircleWeightSystem
    coef: np.ndarray
    exp: np.ndarray

    def monomial(self, g: int, h: int) -> ProductMonomial:
        return ProductMonomial((g + h) % self.ws.order, int(self.coef[g, h]), int(self.exp[g, h]))

    def first_mismatch(self, other: "ProductTable"):
        bad = np.argwhere((self.coef != other.coef) | (self.exp != other.exp))
        return None if len(bad) == 0 else tuple(int(x) for x in bad[0])



def coefficient_bound(ws: CircleWeightSystem) -> int:
    """Upper bound on |coefficient| of any sector-unit product."""
    return math.prod(max(1, b * b) for b in ws.weights)


def _coef_dtype(ws):
    return np.int64 if coefficient_bound(ws) < 2 ** 62 else object


def coordinate_block(b: int, m: int, hyper: bool, g, h, path: str = "oracle"):
    """Contribution of one coordinate of weight ``b`` to ``a_g a_h``.

    ``g`` and ``h`` are broadcastable integer arrays.  Returns ``(factor, exp)``:
    the coordinate multiplies the product coefficient by ``factor`` and adds
    ``exp`` to the power of u.  Depends on g, h only modulo m / gcd(b, m).
    """
    # residues of b*g, b*h, b*(g+h) and of their negatives, all in [0, m)
    A, B = (b * g) % m, (b * h) % m
    K = (b * (g + h)) % m
    An, Bn, Kn = (-b * g) % m, (-b * h) % m, (-b * (g + h)) % m
    if path == "oracle":
        r = (A + B + Kn) == 2 * m
        rpp = (A != 0) & (B != 0) & (K == 0)
        if hyper:
            rp = (An + Bn + K) == 2 * m
            factor = np.where(r, b, 1) * np.where(rp, -b, 1) * np.where(rpp, -b * b, 1)
            exp = r.astype(np.int64) + rp + 2 * rpp
        else:
            factor = np.where(r, b, 1) * np.where(rpp, b, 1)
            exp = r.astype(np.int64) + rpp
        return factor, exp
    if path != "closed":
        raise ValueError(f"unknown path {path!r}")
    num1 = A + B - K
    if np.any(num1 % m):
        raise ArithmeticError(f"non-integral closed-form exponent for weight {b}")
    e1 = num1 // m
    if np.any(e1 > 1):
        raise ArithmeticError(f"closed-form exponent above 1 for weight {b}")
    factor = np.where(e1 == 1, b, 1)
    exp = e1
    if hyper:
        num2 = An + Bn - Kn
        if np.any(num2 % m):
            raise ArithmeticError(f"non-integral closed-form exponent for weight {-b}")
        e2 = num2 // m
        if np.any(e2 > 1):
            raise ArithmeticError(f"closed-form exponent above 1 for weight {-b}")
        factor = factor * np.where(e2 == 1, -b, 1)
        exp = exp + e2
    return factor, exp


def reduced_grid(b: int, m: int) -> np.ndarray:
    """Sector residues ``g[x]`` such that ``b * g[x] = gcd(b, m) * x (mod m)``.

    Coordinate ``b`` sees a sector only through ``b * g mod m``, which takes
    q = m / gcd(b, m) values; ``g[x]`` realises the x-th of them, so that
    ``g[x] + g[y]`` realises ``x + y mod q``.
    """
    d = math.gcd(b, m)
    q = m // d
    if q == 1:
        return np.zeros(1, dtype=np.int64)
    unit_inverse = pow((b // d) % q, -1, q)
    return (unit_inverse * np.arange(q, dtype=np.int64)) % q


def coordinate_table(b: int, m: int, hyper: bool, path: str = "oracle"):
    """:func:`coordinate_block` over the reduced grid, indexed by ``x, y`` in Z/q."""
    gx = reduced_grid(b, m)
    q = len(gx)
    factor = np.empty((q, q), dtype=np.int64)
    exp = np.empty((q, q), dtype=np.int8)
    step = max(1, BLOCK_CELLS // q)
    for x0 in range(0, q, step):
        f, e = coordinate_block(b, m, hyper, gx[x0:x0 + step, None], gx[None, :], path)
        factor[x0:x0 + step] = f
        exp[x0:x0 + step] = e
    return gx, factor, exp


def product_block(ws: CircleWeightSystem, rows, path: str = "oracle", cols=None):
    """Products ``a_g a_h`` for ``g`` in ``rows`` and ``h`` in ``cols`` (default: all).

    Returns ``(coef, exp)`` arrays of shape (len(rows), len(cols)), the
    coordinatewise product of :func:`coordinate_block` contributions.
    """
    if path == "closed" and not closed_form_applicable(ws):
        raise ClosedFormInapplicable(
            f"closed form needs weights >= 0 and order = lcm; got {ws.weights}, order {ws.order}")
    m = ws.order
    g = np.asarray(rows, dtype=np.int64)[:, None]
    h = np.asarray(range(m) if cols is None else cols, dtype=np.int64)[None, :]
    dtype = _coef_dtype(ws)
    shape = (g.shape[0], h.shape[1])
    coef = np.ones(shape, dtype=dtype)
    exp = np.zeros(shape, dtype=np.int64)
    for b in ws.weights:
        factor, e = coordinate_block(b, m, ws.hyper, g, h, path)
        coef = coef * factor.astype(dtype)
        exp = exp + e
    return coef, exp


BLOCK_CELLS = 1 << 21


def iter_product_blocks(ws: CircleWeightSystem, path: str = "oracle"):
    """Yield ``(g0, coef, exp)`` row blocks covering the whole product table."""
    m = ws.order
    step = max(1, BLOCK_CELLS // m)
    for g0 in range(0, m, step):
        coef, exp = product_block(ws, range(g0, min(m, g0 + step)), path)
        yield g0, coef, exp


def first_path_mismatch(ws: CircleWeightSystem, other: CircleWeightSystem | None = None,
                        path: str = "oracle", other_path: str = "closed"):
    """First (g, h) where two product tables differ, streaming in row blocks.

    Compares ``ws`` by ``path`` against ``other`` (default ``ws``) by
    ``other_path``; both must share the same order.
    """
    other = other or ws
    if other.order != ws.order:
        raise ValueError("tables of different order")
    for (g0, c1, e1), (_, c2, e2) in zip(iter_product_blocks(ws, path),
                                         iter_product_blocks(other, other_path)):
        bad = np.argwhere((c1 != c2) | (e1 != e2))
        if len(bad):
            return g0 + int(bad[0][0]), int(bad[0][1])
    return None


def product_table(ws: CircleWeightSystem, path: str = "oracle") -> ProductTable:
    """Full m x m table; memory grows as m^2, so prefer the block iterators for big m."""
    coef, exp = product_block(ws, range(ws.order), path)
    return ProductTable(ws, coef, exp)
