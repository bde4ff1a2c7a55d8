"""Invariants that tell graded algebras apart, and representation homotopy.

:func:`distinguish` is sound but incomplete: a DISTINGUISHED verdict always
comes with a witness invariant whose values differ, while INDISTINGUISHABLE
makes no isomorphism claim.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .inertial import coordinate_table, first_path_mismatch
from .kernel import format_rational
from .quotient import FiniteGradedAlgebra
from .sectors import CircleWeightSystem

#: orders up to which homotopy checks compare full tables
LITERAL_CAP = 600


def exact_rank(rows: list[list[Fraction]]) -> int:
    """Rank over Q by fraction-exact Gaussian elimination."""
    M = [[Fraction(x) for x in r] for r in rows if any(r)]
    rank = 0
    ncols = len(M[0]) if M else 0
    for j in range(ncols):
        pivot = next((i for i in range(rank, len(M)) if M[i][j] != 0), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        for i in range(rank + 1, len(M)):
            if M[i][j]:
                f = M[i][j] / M[rank][j]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class Fingerprint:
    hilbert: dict
    pairing_ranks: dict  # (deg a, deg b) -> rank, both orders present


def fingerprint(A: FiniteGradedAlgebra) -> Fingerprint:
    hilbert = A.hilbert()
    by_degree: dict[Fraction, list[int]] = {}
    for i, e in enumerate(A.basis):
        by_degree.setdefault(e.degree, []).append(i)
    degrees = sorted(by_degree)
    ranks = {}
    for x, a in enumerate(degrees):
        for b in degrees[x:]:
            target = by_degree.get(a + b, [])
            rows = []
            for i in by_degree[a]:
                for j in by_degree[b]:
                    prod = A.mul_basis(i, j)
                    rows.append([prod.get(k, Fraction(0)) for k in target])
            r = exact_rank(rows) if target else 0
            ranks[(a, b)] = ranks[(b, a)] = r
    return Fingerprint(hilbert, ranks)


@dataclass(frozen=True)
class DistinguishResult:
    verdict: str
    witness: dict | None = None

    @property
    def distinguished(self) -> bool:
        return self.verdict == "DISTINGUISHED"

    def to_json(self) -> str:
        return json.dumps({"verdict": self.verdict, "witness": self.witness}) + "\n"

    def to_text(self) -> str:
        if self.witness is None:
            return f"{self.verdict}\n"
        w = self.witness
        at = w["at"] if isinstance(w["at"], str) else "x".join(w["at"])
        return f"{self.verdict} {w['invariant']} at degree {at}: {w['values'][0]} vs {w['values'][1]}\n"


def distinguish(A: FiniteGradedAlgebra, B: FiniteGradedAlgebra) -> DistinguishResult:
    """Compare Hilbert functions, then multiplication-pairing ranks."""
    if A.coefficients != B.coefficients:
        raise ValueError(f"coefficient mismatch: {A.coefficients} vs {B.coefficients}")
    fa, fb = fingerprint(A), fingerprint(B)
    for d in sorted(set(fa.hilbert) | set(fb.hilbert)):
        va, vb = fa.hilbert.get(d, 0), fb.hilbert.get(d, 0)
        if va != vb:
            return DistinguishResult("DISTINGUISHED", {
                "invariant": "hilbert", "at": format_rational(d), "values": [va, vb]})
    # Hilbert functions agree, so both algebras have the same degree pairs
    for (a, b) in sorted(k for k in fa.pairing_ranks if k[0] <= k[1]):
        va, vb = fa.pairing_ranks[(a, b)], fb.pairing_ranks[(a, b)]
        if va != vb:
            return DistinguishResult("DISTINGUISHED", {
                "invariant": "pairing_rank", "at": [format_rational(a), format_rational(b)],
                "values": [va, vb]})
    return DistinguishResult("INDISTINGUISHABLE")


def rep_homotopy_equivalent(weights_a, weights_b) -> bool:
    """Diagonal circle representations agree up to trivial summands."""
    return Counter(b for b in weights_a if b) == Counter(b for b in weights_b if b)


def check_homotopy_theorem(ws: CircleWeightSystem, extra_zeros: int) -> bool:
    """Appending trivial summands must leave every inertial relation unchanged.

    Product tables are coordinatewise products, so the padded table equals the
    original one exactly when each appended coordinate contributes the
    neutral factor ``1 u^0`` on its whole reduced grid.  Small orders are also
    compared table against table.
    """
    padded = ws.with_zeros(extra_zeros)
    if ws.order <= LITERAL_CAP:
        return first_path_mismatch(ws, padded, "oracle", "oracle") is None
    for b in padded.weights[len(ws.weights):]:
        _, factor, exp = coordinate_table(b, ws.order, ws.hyper)
        if np.any(factor != 1) or np.any(exp != 0):
            return False
    return True
