"""Acceptance criteria 1-10, each at its stated tolerance and time budget.

Every test logs one line ``PASS criterion N: ...`` or ``FAIL criterion N: ...``;
the lines are repeated in the pytest terminal summary.  Criterion 10 is
informational and never gates.
"""
import json
import time
from fractions import Fraction

import pytest

from orbiring.checks import (random_weights, suite_axioms, suite_combinatorics, suite_homotopy,
                             suite_oracle, suite_smooth)
from orbiring.cli import main
from orbiring.comparator import check_homotopy_theorem, rep_homotopy_equivalent
from orbiring.quotient import FiniteGradedAlgebra, conjectural_integral_algebra
from orbiring.sectors import CircleWeightSystem, Mode

SEED = 20261016
TRIALS = 200


@pytest.fixture(scope="module")
def sweep():
    # n+1 <= 5, weights 0..12, m = lcm; both modes are added by the suites
    return random_weights(SEED, TRIALS, max_n=5, max_weight=12)


def _cli_json(capsys, *argv):
    assert main(list(argv)) == 0
    return capsys.readouterr().out


def _verdict(log, n, ok, elapsed, limit, detail):
    ok = ok and (limit is None or elapsed < limit)
    budget = "" if limit is None else f" (limit {limit:g} s)"
    log(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail} [{elapsed:.2f} s{budget}]")
    return ok


def _ring(out):
    A = FiniteGradedAlgebra.from_json(out)
    idx = {e.label: i for i, e in enumerate(A.basis)}
    return A, idx


def _mul(A, idx, x, y):
    return {A.basis[k].label: c for k, c in A.mul_basis(idx[x], idx[y]).items()}


def test_criterion_01_projective_ring(capsys, acceptance_log):
    t = time.perf_counter()
    A, idx = _ring(_cli_json(capsys, "cr", "--weights", "2,1,1", "--mode", "symplectic", "--format", "json"))
    u, uu, a = "u^1*a0", "u^2*a0", "u^0*a1"
    ok = (A.dim == 4 and A.coefficients == "Q"
          and A.basis[idx[u]].degree == 2 and A.basis[idx[a]].degree == 2
          and _mul(A, idx, a, a) == {uu: 1}
          and _mul(A, idx, u, a) == {}
          and _mul(A, idx, u, uu) == {}
          and _mul(A, idx, u, u) == {uu: 1}
          and A.unit_index() == idx["u^0*a0"] and A.is_associative())
    elapsed = time.perf_counter() - t
    assert _verdict(acceptance_log, 1, ok, elapsed, 1.0,
                    "cr (2,1,1) symplectic = Q[u,a]/<u^3, ua, a^2-u^2>, deg u = deg a = 2")


def test_criterion_02_hyperprojective_ring(capsys, acceptance_log):
    t = time.perf_counter()
    A, idx = _ring(_cli_json(capsys, "cr", "--weights", "2,1,1", "--mode", "hyper", "--format", "json"))
    u, uu, c = "u^1*a0", "u^2*a0", "u^0*a1"
    ok = (A.dim == 4
          and A.basis[idx[u]].degree == 2 and A.basis[idx[c]].degree == 4
          and _mul(A, idx, c, c) == {}
          and _mul(A, idx, u, c) == {}
          and _mul(A, idx, u, uu) == {}
          and _mul(A, idx, u, u) == {uu: 1}
          and A.is_associative())
    elapsed = time.perf_counter() - t
    assert _verdict(acceptance_log, 2, ok, elapsed, 1.0,
                    "cr (2,1,1) hyper = Q[u,c]/<u^3, c^2, uc>, deg c = 4")


def test_criterion_03_distinguished(capsys, acceptance_log):
    t = time.perf_counter()
    out = _cli_json(capsys, "compare", "--weights", "2,1,1", "--mode", "symplectic",
                    "--weights-b", "2,1,1", "--mode-b", "hyper", "--format", "json")
    res = json.loads(out)
    ok = res == {"verdict": "DISTINGUISHED", "witness": {"invariant": "hilbert", "at": "2", "values": [2, 1]}}
    elapsed = time.perf_counter() - t
    assert _verdict(acceptance_log, 3, ok, elapsed, 1.0, "compare: DISTINGUISHED, hilbert(2) = 2 vs 1")


def test_criterion_04_functoriality_example(capsys, acceptance_log):
    t = time.perf_counter()
    out = _cli_json(capsys, "inertial", "--weights", "2", "--mode", "symplectic", "--order", "3",
                    "--product", "1,1")
    ok = out == "2 u^1 a2\n"
    elapsed = time.perf_counter() - t
    assert _verdict(acceptance_log, 4, ok, elapsed, 1.0, f"(2) order 3: a1*a1 = {out.strip()}")


def test_criterion_05_oracle_equivalence(sweep, acceptance_log):
    t = time.perf_counter()
    res = suite_oracle(sweep, SEED)
    elapsed = time.perf_counter() - t
    assert _verdict(acceptance_log, 5, res.passed, elapsed, 60.0,
                    f"closed form == oracle on {len(sweep)} systems x 2 modes, "
                    f"{res.checked} sector pairs" + ("" if res.passed else f"; {res.counterexample}"))


def test_criterion_06_ring_axioms(sweep, acceptance_log):
    t = time.perf_counter()
    res = suite_axioms(sweep)
    elapsed = time.perf_counter() - t
    assert _verdict(acceptance_log, 6, res.passed, elapsed, 60.0,
                    f"unit, commutativity, degree additivity, associativity over {res.checked} pairs"
                    + ("" if res.passed else f"; {res.counterexample}"))


def test_criterion_07_combinatorics(sweep, acceptance_log):
    t = time.perf_counter()
    res = suite_combinatorics(sweep)
    elapsed = time.perf_counter() - t
    assert _verdict(acceptance_log, 7, res.passed, elapsed, None,
                    f"exponents in {{0,1}}, exclusivity, disjointness, complements, HYPER ages "
                    f"over {res.checked} pairs" + ("" if res.passed else f"; {res.counterexample}"))


def test_criterion_08_smooth_case(acceptance_log):
    t = time.perf_counter()
    res = suite_smooth(max_len=6)
    elapsed = time.perf_counter() - t
    assert _verdict(acceptance_log, 8, res.passed, elapsed, None,
                    "weights (1,...,1), length <= 6: Q[u]/u^(n+1), modes INDISTINGUISHABLE"
                    + ("" if res.passed else f"; {res.counterexample}"))


def test_criterion_09_rep_homotopy(sweep, acceptance_log):
    t = time.perf_counter()
    ok = (rep_homotopy_equivalent((2,), ()) is False
          and rep_homotopy_equivalent((1,), (1, 0, 0)) is True
          and check_homotopy_theorem(CircleWeightSystem((2,), Mode.SYMPLECTIC, 3), 1))
    res = suite_homotopy(sweep, SEED)
    elapsed = time.perf_counter() - t
    assert _verdict(acceptance_log, 9, ok and res.passed, elapsed, None,
                    f"(2) vs () false, (1) vs (1,0,0) true, zero padding stable on {res.checked} systems"
                    + ("" if res.passed else f"; {res.counterexample}"))


def test_criterion_10_conjectural_integral(capsys, acceptance_log):
    # informational: the integral mode must run and serialize, its values are not gated
    t = time.perf_counter()
    out = _cli_json(capsys, "cr", "--weights", "2,1,1", "--integral", "--format", "json")
    A = FiniteGradedAlgebra.from_json(out)
    again = conjectural_integral_algebra(CircleWeightSystem((2, 1, 1)))
    runs = A.conjectural and A.constants() == again.constants()
    elapsed = time.perf_counter() - t
    lead = ", ".join(f"a{k['g']}: {Fraction(k['coefficient'])}" for k in A.integral_kernel)
    acceptance_log(f"{'PASS' if runs else 'FAIL'} criterion 10: conjectural integral mode runs and "
                   f"serializes (tag {A.coefficients}, truncation leads {lead}); not gated "
                   f"[{elapsed:.2f} s]")
    assert runs
