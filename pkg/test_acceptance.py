"""Acceptance criteria, one check per criterion.

Run directly (``python test_acceptance.py``) for one PASS/FAIL line per
criterion, or through pytest.
"""

from __future__ import annotations

import math
import random
import sys
import time
from fractions import Fraction as F
from itertools import product

import pytest

from contyoung import diagrams as dg
from contyoung import graded as gr
from contyoung import montecarlo as mc
from contyoung import simplex as sx
from contyoung import verify as vf
from contyoung import volume as vo
from contyoung import zvolume as zv
from contyoung.polynomial import RationalPolynomial
from contyoung.quadrature import adaptive_simpson, integrate_2d

MC_N = 1_000_000


def _best_time(fn, repeat=20):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def c01_golden_values():
    def body():
        p = dg.path_new(F("3.1"), F("2.5"), (F("1.3"), F("1.5"), F("1.9")), (F("0.5"), F("0.7"), F("2.3")))
        d = dg.dual(p)
        lam = (6, 5, 3, 3, 1)
        y = dg.young_path(lam)
        return (
            dg.area(p) == F("4.61")
            and d.xs == (F("0.2"), F("1.8"), 2)
            and d.ys == (F("1.2"), F("1.6"), F("1.8"))
            and dg.area(y) == 18
            and dg.conjugate(lam) == (5, 4, 4, 2, 2, 1)
            and len(dg.path_points(y)) - 1 == 8
        )

    ok = body()
    t = _best_time(body)
    return ok and t < 1e-3, f"exact values {'match' if ok else 'differ'}; {t * 1e3:.3f} ms"


def c02_integral_oracles():
    t0 = time.perf_counter()
    bad = 0
    for k in range(1, 5):
        for a in product(range(7), repeat=k):
            if sum(a) <= 6:
                bad += sx.monomial_integral_coeff(a) != sx.monomial_integral_oracle(a)
                bad += sx.gap_integral_coeff(a) != sx.gap_integral_oracle(a)
    zs = []
    for i, a in enumerate([(1, 1), (2, 3), (0, 1, 2)]):
        est = mc.mc_monomial_integral(a, 1.0, MC_N, mc.RngStream(100 + i))
        zs.append(est.z_score(float(sx.monomial_integral_coeff(a))))
    t = time.perf_counter() - t0
    ok = bad == 0 and max(zs) < 3 and t < 10
    return ok, f"{bad} exact mismatches; MC z-scores {[round(z, 2) for z in zs]}; {t:.2f} s"


def c03_recursion_oracles():
    t0 = time.perf_counter()
    bad = 0
    for k in range(1, 6):
        for n in range(k + 1, 13):
            bad += sx.t_number(k, n) != sx.t_number_oracle(k, n)
            bad += sx.u_number(k, n) != sx.u_number_oracle(k, n)
    v = RationalPolynomial.monomial(1)
    for k in range(1, 7):
        v = sx.v_recursion_step(v)
        bad += v != sx.v_polynomial(k)
    t = time.perf_counter() - t0
    return bad == 0 and t < 5, f"{bad} mismatches; {t:.2f} s"


def c04_bessel_identity():
    t0 = time.perf_counter()
    grid = [2.0 * i for i in range(1, 6)]
    worst_bound, worst_rep = 0.0, 0.0
    for x, y in product(grid, grid):
        s = vo.rho(x, y)
        b = vo.bessel_i(0, 2 * math.sqrt(x * y))
        worst_bound = max(worst_bound, abs(s.value - b.value) / (s.error_bound + b.error_bound))
        # relative: I_0 reaches 4e7 on this grid, below double resolution at 1e-10 absolute
        worst_rep = max(worst_rep, abs(vo.integral_rep(0, x, y) - s.value) / s.value)
    t = time.perf_counter() - t0
    ok = worst_bound <= 1.0 and worst_rep <= 1e-10 and t < 2
    return ok, f"max |diff|/bound = {worst_bound:.3g}; integral_rep rel err {worst_rep:.2g}; {t:.2f} s"


def c05_pde_shift():
    t0 = time.perf_counter()
    c = vo.rho_coeffs(41)
    termwise = all(c[n + 1] == c[n] / (n + 1) ** 2 for n in range(41))
    res = max(max(abs(r) for r in vo.pde_residual(x, y, 1e-4)) for x, y in [(1.0, 1.0), (2.0, 0.5), (3.0, 2.0)])
    worst = 0.0
    h = 1e-4
    for x, y in [(1.0, 1.0), (0.5, 2.0), (3.0, 1.5)]:
        fs = vo.f_shift(1, x, y).value
        quad, _ = adaptive_simpson(lambda s: vo.rho(s, y).value, 0.0, x, tol=1e-12)
        fd = (vo.rho(x, y + h).value - vo.rho(x, y - h).value) / (2 * h)
        worst = max(worst, abs(fs - quad), abs(fs - fd))
    t = time.perf_counter() - t0
    ok = termwise and res < 1e-6 and worst < 1e-7 and t < 5
    return ok, f"termwise={termwise}; FD residual {res:.2g}; f_shift diff {worst:.2g}; {t:.2f} s"


def c06_region_volumes():
    worst, worst3 = 0.0, 0.0
    for x, y in [(1.0, 1.0), (0.5, 2.0), (2.0, 1.5)]:
        q1, _ = adaptive_simpson(lambda s: vo.rho(s, y).value, 0.0, x, tol=1e-12)
        q2, _ = adaptive_simpson(lambda s: vo.rho(x, s).value, 0.0, y, tol=1e-12)
        q3 = integrate_2d(lambda s, u: vo.rho(s, u).value, 0.0, x, 0.0, y, tol=1e-11)
        d1, d2, d3 = (vo.vol_region(k, x, y).value for k in ("D1", "D2", "D3"))
        worst = max(worst, abs(d1 - q1), abs(d2 - q2), abs(d3 - q3))
        worst3 = max(worst3, abs(d3 - (vo.rho(x, y).value - 1)))
    return worst < 1e-8 and worst3 < 1e-12, f"closed form vs quadrature {worst:.2g}; D3 vs rho-1 {worst3:.2g}"


def c07_series_algebra():
    sq = vo.power_series_coeffs(2, 20)
    a = all(sq[n] * math.factorial(n) ** 2 == math.comb(2 * n, n) for n in range(21))
    inv, rc = vo.reciprocal_series_coeffs(20), vo.rho_coeffs(20)
    b = [sum(inv[i] * rc[n - i] for i in range(n + 1)) for n in range(21)] == [1] + [0] * 20
    c = vo.reciprocal_series_coeffs(8) == vo.reciprocal_series_oracle(8)
    return a and b and c, f"central binomial={a}; unit series={b}; signed sum={c}"


def c08_continuous_binomial():
    rng = random.Random(8)
    worst = 0.0
    for _ in range(10):
        x, y = 3.0 * (1.0 - rng.random()), 3.0 * (1.0 - rng.random())  # in (0, 3]
        r = (x + y) * vo.rho_dx(1, x, y).value + 2 * y * vo.rho(x, y).value - y * vo.cont_binomial(x + y, x)
        worst = max(worst, abs(r))
    return worst < 1e-12, f"max residual {worst:.3g}"


def c09_qz():
    t0 = time.perf_counter()
    a = all(gr.q_factorial(n) == gr.perm_inv_qcard(n) for n in range(1, 8))
    b = c = d = True
    for m, n in product(range(1, 9), repeat=2):
        P = gr.young_qcard(m, n)
        b &= P == gr.young_qcard_oracle(m, n)
        c &= P == gr.young_qcard(n, m)
        d &= (P.low_degree, P.degree) == (m + n - 1, m * n)
    t = time.perf_counter() - t0
    return a and b and c and d and t < 5, f"factorial={a}; enumeration={b}; symmetry={c}; span={d}; {t:.2f} s"


def c10_d_coefficients():
    a = all(zv.d_coeff(n, l) == zv.d_coeff_direct(n, l) for n in range(1, 7) for l in range(9))
    b = all(zv.d_coeff(n, l) <= zv.d_bound(n, l) for n in range(1, 13) for l in range(13))
    c = all(zv.d_coeff(n, 1) == F(n, 2 * math.factorial(n)) for n in range(1, 13))
    return a and b and c, f"direct={a}; bound={b}; d_(n,1) closed form={c}"


def c11_zvolume():
    t0 = time.perf_counter()
    ulp_ok = all(
        abs(zv.vol_z_dn(n, x, y, 0.0).value - vo.vol_dn(n, x, y)) <= math.ulp(vo.vol_dn(n, x, y))
        for n in range(1, 10)
        for x, y in [(0.5, 0.5), (1.0, 1.0), (2.0, 1.5)]
    )
    total = math.fsum(zv.vol_z_dn(n, 1.0, 1.0, 1.0).value for n in range(1, 40))
    sum_diff = abs(zv.vol_z_d(1.0, 1.0, 1.0).value - total)
    le = True
    for x, y in product([0.5, 1.0, 2.0], repeat=2):
        i0 = vo.bessel_i(0, 2 * math.sqrt(x * y))
        for z in (0.0, 0.5, 1.0, 2.0):
            v = zv.vol_z_d(x, y, z)
            le &= v.value <= i0.value + v.error_bound + i0.error_bound
    zs = []
    for i, (n, z) in enumerate([(2, 1.0), (3, 1.0), (5, 0.5)]):
        est = mc.mc_vol_z(n, 1.0, 1.0, z, MC_N, mc.RngStream(200 + i))
        zs.append(est.z_score(zv.vol_z_dn(n, 1.0, 1.0, z).value))
    t = time.perf_counter() - t0
    ok = ulp_ok and sum_diff < 1e-10 and le and max(zs) < 3 and t < 60
    return ok, f"1 ulp={ulp_ok}; double sum diff {sum_diff:.2g}; <= I_0: {le}; MC z {[round(z, 2) for z in zs]}; {t:.1f} s"


def c12_mean_area():
    zs = []
    for n in (2, 5, 10):
        est = mc.mc_mean_area(n, 1.0, 1.0, MC_N, mc.RngStream(300 + n))
        zs.append(est.z_score(zv.mean_area(n, 1.0, 1.0)))
    return max(zs) < 3, f"z-scores {[round(z, 2) for z in zs]}"


def c13_asymptotics():
    bounds = {400: 0.01, 2500: 0.003}
    notes, ok = [], True
    for k in range(3):
        for u, tol in bounds.items():
            r = math.sqrt(u)
            err = abs(vo.asymptote(k, r, r) / vo.f_shift(k, r, r).value - 1)
            ok &= err < tol
            notes.append(f"k={k},xy={u}:{err * 100:.3g}%")
    return ok, "; ".join(notes)


def c14_property_suites():
    seed = 2024
    reports = [vf.run_suite(s, seed) for s in ("duality", "monoid", "poset", "gradient")]
    failed = sum(r["failed"] for r in reports)
    return failed == 0, f"{sum(r['passed'] for r in reports)} checks passed, {failed} failed ({vf.TRIALS} trials each)"


CRITERIA = [
    (1, "golden values", c01_golden_values),
    (2, "simplex integral oracles", c02_integral_oracles),
    (3, "recursion oracles", c03_recursion_oracles),
    (4, "Bessel identity", c04_bessel_identity),
    (5, "PDE / shifted series", c05_pde_shift),
    (6, "region volumes", c06_region_volumes),
    (7, "series algebra", c07_series_algebra),
    (8, "continuous binomial", c08_continuous_binomial),
    (9, "q/z cardinalities", c09_qz),
    (10, "d-coefficients", c10_d_coefficients),
    (11, "z-volume", c11_zvolume),
    (12, "mean area", c12_mean_area),
    (13, "asymptotics", c13_asymptotics),
    (14, "property suites", c14_property_suites),
]


@pytest.mark.parametrize("num, name, fn", CRITERIA, ids=[f"{n:02d}-{name.replace(' ', '_')}" for n, name, _ in CRITERIA])
def test_criterion(num, name, fn):
    ok, detail = fn()
    print(f"[{'PASS' if ok else 'FAIL'}] {num:2d} {name}: {detail}")
    assert ok, detail


def main() -> int:
    failures = 0
    for num, name, fn in CRITERIA:
        ok, detail = fn()
        failures += not ok
        print(f"[{'PASS' if ok else 'FAIL'}] {num:2d} {name}: {detail}", flush=True)
    print(f"{len(CRITERIA) - failures}/{len(CRITERIA)} criteria passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
