"""End-to-end acceptance checks, one test per criterion.

Each test records a single PASS/FAIL line that the terminal summary prints
after the run; the assertion is made after recording so that a failing
criterion still shows up in the summary.
"""

import random
import time
from fractions import Fraction

import pytest

from monodefect import (
    Closure,
    ClosureOf,
    MonomialIdeal,
    Ordinary,
    RingContext,
    Saturation,
    Scaled,
    Symbolic,
    closure_power,
    coefficient_report,
    defect_series,
    growth_report,
    ideal_leq,
    module_mu,
    product,
    qp_detect,
    realize,
)
from monodefect.catalog import EXAMPLES
from monodefect.filtration import clear_cache

import conftest
from conftest import RINGS
from oracles import closure_oracle, gens_of, module_mu_oracle

R3 = RINGS[3]
TRI = R3.ideal("x1*x2, x2*x3, x3*x1")
P23 = R3.ideal("x2, x3")
RXYZ = RingContext(("x", "y", "z"))

GOLDEN = {
    "triangle": TRI,
    "mm412": RINGS[4].ideal("x1*x2, x2*x3, x3*x1, x1*x4"),
    "pentagon": RINGS[5].ideal("x1*x2, x2*x3, x3*x4, x4*x5, x5*x1"),
    "bcmm612": RXYZ.ideal("x*y*z, x^2*z, y^3*x, z^4*y"),
}


def record(number: int, ok: bool, detail: str) -> None:
    conftest.ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {number}. {detail}")
    assert ok, detail


def timed_series(key: str, n_max: int):
    ex = EXAMPLES[key]
    clear_cache()
    start = time.perf_counter()
    series = defect_series(ex.spec_i, ex.spec_j, ex.n_min, n_max)
    return series, time.perf_counter() - start


def closed(key: str, ns) -> list[int]:
    return [int(EXAMPLES[key].closed_form(n)) for n in ns]


def test_criterion_1_triangle_ceiling():
    series, elapsed = timed_series("triangle", 15)
    expected = [-(-n // 2) for n in range(1, 16)]
    ok = series.values == expected and elapsed < 5
    record(1, ok, f"triangle def = ceil(n/2), n = 1..15 ({elapsed:.2f} s, limit 5 s)")


def test_criterion_2_saturated_generators():
    bad = []
    for n in range(1, 11):
        got = set(gens_of(realize(Saturation(TRI, P23), n)))
        want = {(n - i, i, i) for i in range(n + 1)}
        if got != want:
            bad.append(n)
    record(2, not bad, f"saturation generators x1^(n-i) x2^i x3^i, n = 1..10 (bad n: {bad})")


def test_criterion_3_mm412():
    clear_cache()
    start = time.perf_counter()
    series, _ = timed_series("mm412", 14)
    qp = qp_detect(series.values, 2, 6, 5)
    rep = coefficient_report(qp)
    elapsed = time.perf_counter() - start
    ok = (
        series.values == closed("mm412", range(2, 15))
        and (qp.period, qp.degree) == (2, 2)
        and rep.leading_constant
        and rep.leading == (Fraction(1, 2),) * 2
        and elapsed < 60
    )
    record(3, ok, f"mm412 branches n = 2..14, period {qp.period}, degree {qp.degree}, "
                  f"a2 = {rep.leading[0]} ({elapsed:.2f} s, limit 60 s)")


@pytest.mark.slow
def test_criterion_4_pentagon():
    # Values are matched on n = 2..11. A period-3 cubic needs 4 points per
    # residue class plus 2 validation points each, so detection runs on the
    # extension n = 2..20 computed in the same timed run.
    clear_cache()
    start = time.perf_counter()
    series, _ = timed_series("mm411", 20)
    qp = qp_detect(series.values, 2, 6, 5)
    rep = coefficient_report(qp)
    elapsed = time.perf_counter() - start
    ok = (
        series.values[:10] == closed("mm411", range(2, 12))
        and series.values == closed("mm411", range(2, 21))
        and (qp.period, qp.degree) == (3, 3)
        and rep.leading_constant
        and elapsed < 600
    )
    record(4, ok, f"5-cycle cubic branches n = 2..11, period {qp.period}, degree {qp.degree} "
                  f"on n = 2..20 ({elapsed:.1f} s, limit 600 s)")


def test_criterion_5_bcmm612():
    # n = 2..15 gives fewer than 4 points per class for a period-5 line with
    # margin 2, so detection uses the extension n = 1..22.
    clear_cache()
    start = time.perf_counter()
    series, _ = timed_series("bcmm612", 22)
    qp = qp_detect(series.values, 1, 6, 5)
    rep = coefficient_report(qp)
    elapsed = time.perf_counter() - start
    constants = [p[0] if p else Fraction(0) for p in qp.polys]
    ok = (
        series.values[0] == 0
        and series.values[1:15] == closed("bcmm612", range(2, 16))
        and (qp.period, qp.degree) == (5, 1)
        and rep.leading == (Fraction(11, 5),) * 5
        and all(c != 0 for c in constants)
        and elapsed < 120
    )
    record(5, ok, f"bcmm612 linear branches n = 2..15, 0 at n = 1, period {qp.period}, "
                  f"a1 = {rep.leading[0]} in every class, a0 = {[str(c) for c in constants]} "
                  f"({elapsed:.2f} s, limit 120 s)")


def _random_ideal(rng: random.Random, ring: RingContext) -> MonomialIdeal:
    k = rng.randint(0, 4)
    rows = [tuple(rng.randint(0, 3) for _ in range(ring.num_vars)) for _ in range(k)]
    return MonomialIdeal(ring, rows) if rows else MonomialIdeal.zero(ring)


def test_criterion_6_nakayama_oracle():
    rng = random.Random(20240601)
    pairs = []
    for _ in range(200):
        ring = RINGS[rng.randint(1, 3)]
        pairs.append((_random_ideal(rng, ring), _random_ideal(rng, ring)))
    for key in ("triangle", "mm412", "bcmm612"):
        ex = EXAMPLES[key]
        for n in range(ex.n_min, ex.n_min + 4):
            pairs.append((realize(ex.spec_i, n), realize(ex.spec_j, n)))
    ex = EXAMPLES["mm411"]
    for n in range(2, 5):
        pairs.append((realize(ex.spec_i, n), realize(ex.spec_j, n)))
    bad = sum(module_mu(a, b) != module_mu_oracle(a, b) for a, b in pairs)
    record(6, bad == 0, f"module_mu vs enumeration oracle on {len(pairs)} pairs, {bad} mismatches")


def test_criterion_7_closure_oracle():
    rng = random.Random(7)
    bad = 0
    cases = 0
    while cases < 50:
        ring = RINGS[rng.randint(1, 3)]
        I = _random_ideal(rng, ring)
        if I.is_zero() or I.is_unit():
            continue
        n = rng.randint(1, 3)
        cases += 1
        C = closure_power(I, n)
        if set(gens_of(C)) != closure_oracle(I, n) or closure_power(C, 1) != C:
            bad += 1
    record(7, bad == 0, f"closure_power vs convex-combination oracle and idempotence on "
                        f"{cases} ideals, {bad} mismatches")


def _builtin_specs(I: MonomialIdeal):
    first_two = MonomialIdeal(I.ring, [
        tuple(int(j == i) for j in range(I.ring.num_vars)) for i in range(2)
    ])
    return [
        Ordinary(I),
        Symbolic(I),
        Saturation(I, first_two),
        Closure(I),
        ClosureOf(Symbolic(I)),
        Scaled(Ordinary(I), 2),
    ]


def test_criterion_8_filtration_axioms():
    violations = []
    checked = 0
    for name, I in GOLDEN.items():
        for spec in _builtin_specs(I):
            ideals = [realize(spec, n) for n in range(7)]
            for n in range(6):
                checked += 1
                if not ideal_leq(ideals[n + 1], ideals[n]):
                    violations.append((name, str(spec), "descending", n))
            for a in range(1, 6):
                for b in range(1, 7 - a):
                    checked += 1
                    if not ideal_leq(product(ideals[a], ideals[b]), ideals[a + b]):
                        violations.append((name, str(spec), "product", a, b))
    record(8, not violations, f"filtration axioms, {checked} checks over "
                              f"{len(GOLDEN)} golden ideals, {len(violations)} violations")


def test_criterion_9_snake_inequality():
    rows = growth_report(Symbolic(TRI), Ordinary(TRI), 2, 5)
    bad = [r.n for r in rows if r.defect > r.defect_bar + r.mu_s]
    ok = len(rows) == 4 and not bad
    record(9, ok, f"def <= def_bar + mu(S_n) on triangle growth rows n = 2..5 (bad n: {bad})")
