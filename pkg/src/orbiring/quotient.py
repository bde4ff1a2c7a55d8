"""Chen-Ruan rings of weighted projective and hyperprojective spaces.

The rational Chen-Ruan ring is the inertial ring modulo one truncation per
sector: ``u^{d_g} a_g = 0`` with ``d_g = |S_g|``.  The result is stored as a
finite-dimensional graded algebra on the monomial basis ``u^k a_g``,
``0 <= k < d_g``.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import DegenerateWeights
from .inertial import coordinate_table, iter_product_blocks, sector_unit_product
from .kernel import format_rational, parse_rational
from .sectors import CircleWeightSystem, Mode


# --- integer lattice ---------------------------------------------------------

def hermite_normal_form(rows: list[list[int]]) -> list[list[int]]:
    """Row-style HNF: positive pivots, entries above each pivot reduced into [0, pivot)."""
    A = [list(r) for r in rows]
    if not A:
        return []
    ncols = len(A[0])
    piv = 0
    for j in range(ncols):
        if piv == len(A):
            break
        while True:
            nz = [i for i in range(piv, len(A)) if A[i][j] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(A[i][j]))
            A[piv], A[i0] = A[i0], A[piv]
            done = True
            for i in range(piv + 1, len(A)):
                if A[i][j]:
                    q = A[i][j] // A[piv][j]
                    A[i] = [x - q * y for x, y in zip(A[i], A[piv])]
                    if A[i][j]:
                        done = False
            if done:
                break
        if not any(A[i][j] for i in range(piv, len(A))):
            continue
        if A[piv][j] < 0:
            A[piv] = [-x for x in A[piv]]
        for i in range(piv):
            q = A[i][j] // A[piv][j]
            A[i] = [x - q * y for x, y in zip(A[i], A[piv])]
        piv += 1
    return [r for r in A if any(r)]


def integer_kernel(b: tuple[int, ...]) -> list[list[int]]:
    """Z-basis of {x in Z^n : sum b_i x_i = 0}.

    Euclid on the augmented rows ``[b_i | e_i]`` is unimodular, so once only
    one row keeps a nonzero lead, the tails of the others span the kernel.
    """
    n = len(b)
    rows = [[b[i]] + [int(i == j) for j in range(n)] for i in range(n)]
    while True:
        nz = [r for r in rows if r[0] != 0]
        if len(nz) <= 1:
            break
        p = min(nz, key=lambda r: abs(r[0]))
        for k, r in enumerate(rows):
            if r is not p and r[0]:
                q = r[0] // p[0]
                rows[k] = [x - q * y for x, y in zip(r, p)]
    return [r[1:] for r in rows if r[0] == 0]


@dataclass(frozen=True)
class LatticeMaps:
    iota: tuple[int, ...]
    j_generators: tuple[tuple[int, ...], ...]
    per_sector_iota: dict = field(hash=False, compare=False)


def lattice_maps(ws: CircleWeightSystem) -> LatticeMaps:
    if not any(ws.weights):
        raise DegenerateWeights("all weights are zero")
    gens = sorted(tuple(r) for r in hermite_normal_form(integer_kernel(ws.weights)))
    per_sector = {s.g: tuple(ws.weights[i] for i in s.fixed) for s in ws.sectors()}
    return LatticeMaps(ws.weights, tuple(gens), per_sector)


# --- kernel ideal -------------------------------------------------------------

@dataclass(frozen=True)
class KernelIdeal:
    generators: tuple[tuple[int, int], ...]  # (sector g, d_g): a_g u^{d_g}

    def truncation(self) -> dict[int, int]:
        return dict(self.generators)


def truncation_exponents(ws: CircleWeightSystem) -> KernelIdeal:
    """Per-sector truncation ``d_g = |S_g|``.

    The Kirwan-kernel generator in sector g is the product of ``b_j u_j`` over
    a support set of coordinates whose vectors sum to a nonzero multiple of the
    inclusion restricted to S_g.  With all weights positive the only such
    support is S_g itself, and substituting ``u_j -> b_j u`` leaves a nonzero
    multiple of ``u^{|S_g|}``.
    """
    ws.require_quotient()
    return KernelIdeal(tuple((s.g, len(s.fixed)) for s in ws.sectors()))


def kernel_is_ideal(ws: CircleWeightSystem) -> bool:
    """Check that ``a_h * (u^{d_g} a_g)`` always lands at or past the truncation.

    ``d_g`` counts the coordinates fixed by ``g``, so the inequality
    ``d_g + e(g, h) >= d_{g+h}`` is a sum over coordinates; when it holds
    coordinate by coordinate (on reduced grids) no full table is needed.
    """
    trunc = truncation_exponents(ws).truncation()
    m = ws.order
    if all(_coordinate_ideal(b, m, ws.hyper) for b in set(ws.weights)):
        return True
    d = np.array([trunc[g] for g in ws.residues()], dtype=np.int64)
    for g0, coef, exp in iter_product_blocks(ws):
        rows = np.arange(g0, g0 + coef.shape[0])
        target = (rows[:, None] + np.arange(m)[None, :]) % m
        if np.any((coef != 0) & (d[rows][:, None] + exp < d[target])):
            return False
    return True


@lru_cache(maxsize=1024)
def _coordinate_ideal(b: int, m: int, hyper: bool) -> bool:
    gx, _, exp = coordinate_table(b, m, hyper)
    q = len(gx)
    fixed = (b * gx) % m == 0
    idx = np.arange(q)
    target = fixed[(idx[:, None] + idx[None, :]) % q]
    return not np.any(fixed[:, None] + exp < target)


# --- finite graded algebras -----------------------------------------------------

_LABEL = re.compile(r"u\^(\d+)\*a(\d+)$")


@dataclass(frozen=True)
class BasisElement:
    label: str
    g: int
    k: int
    degree: Fraction


class FiniteGradedAlgebra:
    """Commutative graded algebra given by a basis and sparse structure constants.

    ``constants[(i, j)]`` (stored for ``i <= j``) is a dict ``k -> c`` meaning
    ``e_i e_j = sum_k c e_k``.
    """

    def __init__(self, basis, constants, coefficients="Q", ws=None, sectors=None,
                 integral_kernel=None):
        self.basis: list[BasisElement] = list(basis)
        self.coefficients = coefficients
        self.ws = ws
        self.sectors = sectors or []
        self.integral_kernel = integral_kernel
        raw = {ij: {k: Fraction(c) for k, c in dict(t).items() if c != 0}
               for ij, t in constants.items()}
        self._c: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), terms in raw.items():
            if (j, i) in raw and raw[(j, i)] != terms:
                raise ValueError(f"asymmetric structure constants at {(i, j)}")
            if terms:
                self._c[(min(i, j), max(i, j))] = terms

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def conjectural(self) -> bool:
        return self.coefficients != "Q"

    def index(self, g: int, k: int) -> int | None:
        for i, e in enumerate(self.basis):
            if e.g == g and e.k == k:
                return i
        return None

    def mul_basis(self, i: int, j: int) -> dict[int, Fraction]:
        return dict(self._c.get((min(i, j), max(i, j)), {}))

    def constants(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        return {k: dict(v) for k, v in sorted(self._c.items())}

    def mul(self, x: dict[int, Fraction], y: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.mul_basis(i, j).items():
                    out[k] = out.get(k, Fraction(0)) + a * b * c
        return {k: v for k, v in out.items() if v != 0}

    def hilbert(self) -> dict[Fraction, int]:
        h: dict[Fraction, int] = {}
        for e in self.basis:
            h[e.degree] = h.get(e.degree, 0) + 1
        return dict(sorted(h.items()))

    def unit_index(self) -> int | None:
        for u in range(self.dim):
            if all(self.mul_basis(u, j) == {j: 1} for j in range(self.dim)):
                return u
        return None

    def is_commutative(self) -> bool:
        # asymmetric input is already rejected by __init__
        return all(self.mul({i: 1}, {j: 1}) == self.mul({j: 1}, {i: 1})
                   for i in range(self.dim) for j in range(self.dim))

    def is_degree_additive(self) -> bool:
        deg = [e.degree for e in self.basis]
        return all(deg[i] + deg[j] == deg[k]
                   for (i, j), terms in self._c.items() for k in terms)

    def is_associative(self) -> bool:
        r = range(self.dim)
        table = [[self.mul_basis(i, j) for j in r] for i in r]

        def apply(x: dict, rows) -> dict:
            out: dict[int, Fraction] = {}
            for t, c in x.items():
                for v, d in rows[t].items():
                    out[v] = out.get(v, 0) + c * d
            return {v: c for v, c in out.items() if c != 0}

        columns = [[row[k] for row in table] for k in r]
        for i, j, k in product(r, r, r):
            # (e_i e_j) e_k against e_i (e_j e_k)
            left = apply(table[i][j], columns[k])
            right = apply(table[j][k], table[i])
            if left != right:
                return False
        return True

    # -- serialization --

    def to_dict(self) -> dict:
        data = {
            "weights": list(self.ws.weights) if self.ws else [],
            "mode": self.ws.mode.name if self.ws else "",
            "order": self.ws.order if self.ws else 1,
            "sectors": self.sectors,
            "basis": [{"label": e.label, "degree": format_rational(e.degree)} for e in self.basis],
            "structure_constants": [
                [i, j, [[k, format_rational(c)] for k, c in sorted(terms.items())]]
                for (i, j), terms in sorted(self._c.items())
            ],
            "hilbert": {format_rational(d): n for d, n in self.hilbert().items()},
            "coefficients": self.coefficients,
        }
        if self.integral_kernel is not None:
            data["integral_kernel"] = self.integral_kernel
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "FiniteGradedAlgebra":
        data = json.loads(text)
        basis = []
        for e in data["basis"]:
            k, g = map(int, _LABEL.match(e["label"]).groups())
            basis.append(BasisElement(e["label"], g, k, parse_rational(e["degree"])))
        constants = {(i, j): {k: parse_rational(c) for k, c in terms}
                     for i, j, terms in data["structure_constants"]}
        ws = None
        if data.get("weights"):
            ws = CircleWeightSystem(tuple(data["weights"]), Mode[data["mode"]], data["order"])
        return cls(basis, constants, data["coefficients"], ws, data.get("sectors"),
                   data.get("integral_kernel"))

    # -- presentations --

    def relations(self) -> list[tuple[str, str]]:
        """Ring relations in the generators u and a_g (a_0 = 1), as (lhs, rhs) strings."""
        if self.ws is None:
            raise ValueError("relations need the originating weight system")
        ws = self.ws
        d = {s["g"]: s["truncation"] for s in self.sectors}
        lead = {t["g"]: t["coefficient"] for t in self.integral_kernel or ()}
        rels = []
        for g in ws.residues():
            rels.append((_mono(lead.get(g, 1), d[g], g), "0"))
        for g in range(1, ws.order):
            for h in range(g, ws.order):
                p = sector_unit_product(ws, g, h)
                lhs = f"a{g}^2" if g == h else f"a{g}*a{h}"
                rhs = "0" if p.u_exponent >= d[p.target] else _mono(p.coefficient, p.u_exponent, p.target)
                rels.append((lhs, rhs))
        return rels

    def to_text(self) -> str:
        ws = self.ws
        tag = " CONJECTURAL" if self.conjectural else ""
        lines = [f"ring {self.coefficients} mode={ws.mode.name} weights={ws.label()} "
                 f"order={ws.order} dim={self.dim}{tag}"]
        for s in self.sectors:
            fixed = ",".join(map(str, s["fixed"])) or "-"
            lines.append(f"sector a{s['g']}: fixed={fixed} age={s['age']} degree={s['degree']} "
                         f"truncation={s['truncation']}")
        lines.append("basis: " + " ".join(f"{e.label}[{format_rational(e.degree)}]" for e in self.basis))
        lines.append("relations:")
        lines += [f"  {lhs} = {rhs}" for lhs, rhs in self.relations()]
        lines.append("products:")
        for (i, j), terms in sorted(self._c.items()):
            rhs = " + ".join(f"{format_rational(c)}*{self.basis[k].label}" for k, c in sorted(terms.items()))
            lines.append(f"  {self.basis[i].label} * {self.basis[j].label} = {rhs}")
        lines.append("hilbert: " + " ".join(f"{format_rational(d)}:{n}" for d, n in self.hilbert().items()))
        return "\n".join(lines) + "\n"

    def to_latex(self) -> str:
        ws = self.ws
        gens = ["u"] + [rf"\alpha_{{{g}}}" for g in range(1, ws.order)]
        rels = []
        for lhs, rhs in self.relations():
            lhs_tex, rhs_tex = _tex(lhs), _tex(rhs)
            rels.append(lhs_tex if rhs_tex == "0" else f"{lhs_tex} - {rhs_tex}")
        field_ = r"\mathbb{Q}" if not self.conjectural else r"\mathbb{Z}"
        return f"{field_}[{', '.join(gens)}]/\\langle " + ", ".join(rels) + "\\rangle\n"


def _mono(c: int, e: int, g: int) -> str:
    parts = []
    if c != 1:
        parts.append(str(c))
    if e:
        parts.append("u" if e == 1 else f"u^{e}")
    if g:
        parts.append(f"a{g}")
    return "*".join(parts) or "1"


def _tex(s: str) -> str:
    s = re.sub(r"u\^(\d+)", r"u^{\1}", s)
    s = re.sub(r"a(\d+)", r"\\alpha_{\1}", s)
    return s.replace("*", "")


def _sector_records(ws: CircleWeightSystem, d: dict[int, int]) -> list[dict]:
    return [{"g": s.g, "fixed": list(s.fixed), "age": format_rational(s.age),
             "degree": format_rational(s.degree), "truncation": d[s.g]}
            for s in ws.sectors()]


def _truncated_algebra(ws: CircleWeightSystem, coefficients: str, integral: bool):
    d = truncation_exponents(ws).truncation()
    basis = [BasisElement(f"u^{k}*a{s.g}", s.g, k, 2 * k + s.degree)
             for s in ws.sectors() for k in range(d[s.g])]
    index = {(e.g, e.k): i for i, e in enumerate(basis)}
    constants = {}
    for i, ei in enumerate(basis):
        for j, ej in enumerate(basis):
            # (u^k a_g)(u^l a_h) = u^(k+l) (a_g a_h), then truncate in the target sector
            p = sector_unit_product(ws, ei.g, ej.g)
            e = ei.k + ej.k + p.u_exponent
            if p.coefficient == 0 or e >= d[p.target]:
                continue
            c = Fraction(p.coefficient)
            if integral and c.denominator != 1:
                raise ArithmeticError(f"non-integral structure constant {c}")
            constants[(i, j)] = {index[(p.target, e)]: c}
    return FiniteGradedAlgebra(basis, constants, coefficients, ws, _sector_records(ws, d))


def cr_algebra(ws: CircleWeightSystem) -> FiniteGradedAlgebra:
    """Rational Chen-Ruan ring of the (hyper)projective quotient of ``ws``."""
    A = _truncated_algebra(ws, "Q", integral=False)
    _sanity(A, ws)
    return A


def _sanity(A: FiniteGradedAlgebra, ws: CircleWeightSystem):
    # commutativity is enforced by the constructor
    expected = sum(len(s.fixed) for s in ws.sectors())
    if A.dim != expected:
        raise AssertionError(f"dimension {A.dim} != sum |S_g| = {expected}")
    if A.unit_index() != 0:
        raise AssertionError("u^0*a0 is not the unit")
    if not A.is_degree_additive():
        raise AssertionError("structure constants are not degree additive")
    if not kernel_is_ideal(ws):
        raise AssertionError("truncation kernel is not an ideal")


def conjectural_integral_algebra(ws: CircleWeightSystem) -> FiniteGradedAlgebra:
    """Integral version that keeps the weight factors in the truncation relations.

    Not a verified computation: over Z the truncation in sector g becomes
    ``(prod_{j in S_g} b_j) u^{d_g} a_g = 0`` and the structure constants are
    those of the free part.  Output is tagged ``Z-conjectural``.
    """
    A = _truncated_algebra(ws, "Z-conjectural", integral=True)
    _sanity(A, ws)
    A.integral_kernel = [
        {"g": s.g, "coefficient": math.prod(ws.weights[j] for j in s.fixed),
         "u_exponent": len(s.fixed)}
        for s in ws.sectors()
    ]
    return A


# --- multivariable presentation -------------------------------------------------

def _linear_form(row) -> str:
    out = ""
    for i, c in enumerate(row):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        if not out:
            out = ("-" if c < 0 else "") + f"{mag}u{i}"
        else:
            out += (" - " if c < 0 else " + ") + f"{mag}u{i}"
    return out


@dataclass(frozen=True)
class MultivariablePresentation:
    """Generators of the ideals I, J, K in the variables u_0..u_n and a_0..a_{m-1}."""

    ws: CircleWeightSystem
    I: list
    J: list
    K: list
    K_reduced: list

    def header(self) -> str:
        ws = self.ws
        return (f"ring Q[u0..u{ws.n}, a0..a{ws.order - 1}] mode={ws.mode.name} "
                f"weights={ws.label()} order={ws.order}")

    def to_text(self) -> str:
        lines = [self.header(), "I:", *self.I, "J:", *self.J, "K:", *self.K,
                 "K reduced over Q (u_i -> b_i u):", *self.K_reduced]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = {"weights": list(self.ws.weights), "mode": self.ws.mode.name, "order": self.ws.order,
                "I": self.I, "J": self.J, "K": self.K, "K_reduced": self.K_reduced}
        return json.dumps(data, indent=2) + "\n"

    def to_latex(self) -> str:
        def ideal(name, gens):
            body = ", ".join(_tex(re.sub(r"u(\d+)", r"u_{\1}", x)) for x in gens)
            return f"{name} = \\langle {body} \\rangle"
        return "\n".join([ideal("I", self.I), ideal("J", self.J), ideal("K", self.K),
                          ideal(r"K_{\mathbb{Q}}", self.K_reduced)]) + "\n"


def multivariable_presentation(ws: CircleWeightSystem) -> MultivariablePresentation:
    """The ideals I, J, K of the multivariable presentation, as generator strings."""
    d = truncation_exponents(ws).truncation()
    lm = lattice_maps(ws)
    m = ws.order
    I = []
    for g in ws.residues():
        for h in range(g, m):
            factors = ""
            for i, b in enumerate(ws.weights):
                e1 = ((b * g) % m + (b * h) % m - (b * (g + h)) % m) // m
                factors += f"({b} u{i})" * e1
                if ws.hyper:
                    e2 = ((-b * g) % m + (-b * h) % m - (-b * (g + h)) % m) // m
                    factors += f"({-b} u{i})" * e2
            k = (g + h) % m
            I.append(f"a{g}*a{h} - a{k}" + (f"*{factors}" if factors else ""))
    J = [_linear_form(r) for r in lm.j_generators]
    K = [f"a{s.g}*" + "".join(f"({ws.weights[j]} u{j})" for j in s.fixed) for s in ws.sectors()]
    K_reduced = [f"u^{d[s.g]}*a{s.g}" for s in ws.sectors()]
    return MultivariablePresentation(ws, I, J, K, K_reduced)
