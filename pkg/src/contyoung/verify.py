"""Named verification suites run by ``contyoung verify``.

Each suite returns ``{suite, checks, passed, failed, details}``; ``details``
lists every check with its outcome and a short note.  Randomized checks
draw from ``random.Random(seed)``, so a report is a pure function of the
seed.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import product

from . import diagrams as dg
from . import graded as gr
from . import montecarlo as mc
from . import simplex as sx
from . import volume as vo
from . import zvolume as zv
from .quadrature import adaptive_simpson, integrate_2d

__all__ = ["SUITES", "run_suite", "run_all", "random_path"]

DEFAULT_SEED = 0
TRIALS = 1000


class _Report:
    def __init__(self, suite: str):
        self.suite = suite
        self.details: list[dict] = []

    def check(self, name: str, ok: bool, note: str = "") -> bool:
        self.details.append({"check": name, "ok": bool(ok), "note": note})
        return ok

    def trials(self, name: str, failures: list, total: int) -> bool:
        note = f"{total - len(failures)}/{total} trials"
        if failures:
            note += f"; first failure: {failures[0]}"
        return self.check(name, not failures, note)

    def result(self) -> dict:
        passed = sum(d["ok"] for d in self.details)
        return {
            "suite": self.suite,
            "checks": len(self.details),
            "passed": passed,
            "failed": len(self.details) - passed,
            "details": self.details,
        }


# --- random diagrams -----------------------------------------------------


def _chain(rng: random.Random, m: int, top: Fraction, den: int) -> tuple:
    steps = int(top * den)
    return tuple(Fraction(v, den) for v in sorted(rng.randint(0, steps) for _ in range(m)))


def random_path(rng: random.Random, n_max: int = 5, size: int = 4, den: int = 4) -> dg.DirectedPath:
    """Random Fraction path on a coarse grid (so coincidences and ties occur)."""
    n = rng.randint(1, n_max)
    x = Fraction(rng.randint(1, size * den), den)
    y = Fraction(rng.randint(1, size * den), den)
    return dg.path_new(x, y, _chain(rng, n - 1, x, den), _chain(rng, n - 1, y, den))


def _fixed_corner_path(rng, n, x, y, den):
    return dg.path_new(x, y, _chain(rng, n - 1, x, den), _chain(rng, n - 1, y, den))


def _below(rng: random.Random, q: dg.DirectedPath, den: int = 4) -> dg.DirectedPath:
    """A path ``p`` with ``p <= q``: shrink widths and cut off a bottom slab."""
    c = Fraction(rng.randint(0, den), den)
    cut = Fraction(rng.randint(0, int(q.y * den)), den)
    blocks = [(w * c, top) for w, top in zip(q.widths, q.levels[1:]) if top > cut]
    if not blocks or blocks[-1][0] == 0:
        return _tiny()
    xs = tuple(w for w, _ in blocks[:-1])
    ys = tuple(top - cut for _, top in blocks[:-1])
    return dg.path_new(blocks[-1][0], q.y - cut, xs, ys)


def _tiny() -> dg.DirectedPath:
    # zero-area one-block path at the top-left corner fits in anything
    return dg.DirectedPath(Fraction(0), Fraction(0), (), ())


# --- suites ----------------------------------------------------------------


def suite_lemma1(seed: int = DEFAULT_SEED) -> dict:
    r = _Report("lemma1")
    bad, bad_dp, count = [], [], 0
    for k in range(1, 5):
        for a in product(range(7), repeat=k):
            if sum(a) > 6:
                continue
            count += 1
            c = sx.monomial_integral_coeff(a)
            if c != sx.monomial_integral_oracle(a):
                bad.append(a)
            fact = math.prod(math.factorial(ai) for ai in a)
            if Fraction(sx.divided_power_integral_coeff(a), math.factorial(sum(a) + k)) != c / fact:
                bad_dp.append(a)
    r.trials("coefficient = iterated integration (k<=4, |a|<=6)", bad, count)
    r.trials("divided-power form consistent", bad_dp, count)
    bad = [n for n in range(1, 31) if sum(sx.composition_count(n, p) for p in range(1, n + 1)) != 2 ** (n - 1)]
    r.trials("compositions of n total 2**(n-1) (n<=30)", bad, 30)
    bad = [(n, p) for n in range(1, 11) for p in range(1, n + 1) if sx.composition_count(n, p) != sx.composition_count_oracle(n, p)]
    r.trials("composition_count = enumeration (n<=10)", bad, 55)
    partial = math.fsum(float(sx.monomial_integral_coeff((1,) * k)) for k in range(1, 21))
    err = abs(partial - (math.exp(0.5) - 1.0))
    r.check("sum of (1,..,1) coefficients at x=1, K=20", err < 1e-12, f"|err|={err:.3g}")
    sv = vo.composition_volume_sum(1.0)
    err = abs(sv.value - math.expm1(0.5))
    r.check("composition_volume_sum(1) = e**0.5 - 1", err <= sv.error_bound + 1e-15, f"|err|={err:.3g}")
    return r.result()


def suite_lemma5(seed: int = DEFAULT_SEED) -> dict:
    r = _Report("lemma5")
    bad, count = [], 0
    for length in range(1, 5):
        for a in product(range(7), repeat=length):
            if sum(a) > 6:
                continue
            count += 1
            if sx.gap_integral_coeff(a) != sx.gap_integral_oracle(a):
                bad.append(a)
    r.trials("gap coefficient = iterated integration (k<=3, |a|<=6)", bad, count)
    bad = []
    for a1, a2 in product(range(5), repeat=2):
        # expand (x - x_1)**a2 and integrate each monomial with the k=1 coefficient
        expanded = sum(
            math.comb(a2, j) * (-1) ** j * sx.monomial_integral_coeff((a1 + j,)) for j in range(a2 + 1)
        )
        if expanded != sx.gap_integral_coeff((a1, a2)):
            bad.append((a1, a2))
    r.trials("k=1 gap coefficient via binomial expansion (a<=(4,4))", bad, 25)
    return r.result()


def suite_examples3(seed: int = DEFAULT_SEED) -> dict:
    r = _Report("examples3")
    pairs = [(k, n) for k in range(1, 6) for n in range(k + 1, 13)]
    bad = [(k, n) for k, n in pairs if sx.t_number(k, n) != sx.t_number_oracle(k, n)]
    r.trials("T recursion = brute force (k<=5, n<=12)", bad, len(pairs))
    bad = [(k, n) for k, n in pairs if sx.u_number(k, n) != sx.u_number_oracle(k, n)]
    r.trials("U recursion = brute force (k<=5, n<=12)", bad, len(pairs))
    v = sx.RationalPolynomial.monomial(1)
    bad = []
    for k in range(1, 7):
        v = sx.v_recursion_step(v)
        if v != sx.v_polynomial(k):
            bad.append(k)
    r.trials("V_k closed form satisfies the integral recursion (k<=6)", bad, 6)
    kv = sx.kappa(1.0)
    err = abs(kv.value - math.expm1(1.0))
    r.check("kappa(1) = e - 1", err <= kv.error_bound + 1e-16, f"|err|={err:.3g}")
    return r.result()


def suite_duality(seed: int = DEFAULT_SEED) -> dict:
    r = _Report("duality")
    rng = random.Random(seed)
    inv, ar, dom = [], [], []
    for _ in range(TRIALS):
        p = random_path(rng)
        d = dg.dual(p)
        if dg.dual(d) != p:
            inv.append(dg.path_to_json(p))
        if dg.area(d) != dg.area(p):
            ar.append(dg.path_to_json(p))
        if (d.x, d.y, d.n) != (p.y, p.x, p.n):
            dom.append(dg.path_to_json(p))
    r.trials("dual is an involution", inv, TRIALS)
    r.trials("dual preserves area", ar, TRIALS)
    r.trials("dual maps P_n(x,y) to P_n(y,x)", dom, TRIALS)
    bad = []
    for n in range(1, 13):
        det = dg.integer_determinant(dg.dual_linear_matrix(n))
        if (det == 1) != (n % 2 == 1) or abs(det) != 1:
            bad.append((n, det))
    r.trials("determinant of linear part is +1 iff n odd (n<=12)", bad, 12)
    bad, count = [], 0
    for m in range(1, 7):
        for lam in dg.enumerate_young(6, m):
            count += 1
            if dg.dual(dg.young_path(lam)) != dg.young_path(dg.conjugate(lam)):
                bad.append(lam)
    r.trials("young_path of conjugate is the dual (<=6 parts, parts<=6)", bad, count)
    return r.result()


def suite_monoid(seed: int = DEFAULT_SEED) -> dict:
    r = _Report("monoid")
    rng = random.Random(seed)
    assoc, unit, grade, law, bij = [], [], [], [], []
    for _ in range(TRIALS):
        p, q, s = (random_path(rng) for _ in range(3))
        if dg.concat(dg.concat(p, q), s) != dg.concat(p, dg.concat(q, s)):
            assoc.append((p, q, s))
        if dg.concat(p, dg.DIAMOND) != p or dg.concat(dg.DIAMOND, p) != p:
            unit.append(p)
        pq = dg.concat(p, q)
        if (pq.n, pq.x, pq.y) != (p.n + q.n, p.x + q.x, p.y + q.y):
            grade.append((p, q))
        if dg.area(pq) != dg.area(p) + dg.area(q) + p.x * q.y:
            law.append((p, q))
        if dg.path_from_points(dg.path_points(p)) != p:
            bij.append(p)
    r.trials("concat is associative", assoc, TRIALS)
    r.trials("diamond is a two-sided unit", unit, TRIALS)
    r.trials("concat grading P_n x P_m -> P_{n+m}", grade, TRIALS)
    r.trials("area(p*q) = area(p) + area(q) + x z", law, TRIALS)
    r.trials("path_from_points inverts path_points", bij, TRIALS)
    return r.result()


def suite_poset(seed: int = DEFAULT_SEED) -> dict:
    r = _Report("poset")
    rng = random.Random(seed)
    refl, anti, trans, mono, fixed = [], [], [], [], []
    comparable = 0
    for _ in range(TRIALS):
        p = dg.canonicalize(random_path(rng, size=2, den=2))
        q = dg.canonicalize(random_path(rng, size=2, den=2))
        if not dg.leq(p, p):
            refl.append(p)
        pq, qp = dg.leq(p, q), dg.leq(q, p)
        comparable += pq or qp
        if pq and qp and p != q:
            anti.append((p, q))
        if pq and dg.area(p) > dg.area(q):
            mono.append((p, q))
        # chains built to be comparable
        c = random_path(rng)
        b = _below(rng, c)
        a = _below(rng, b)
        if not (dg.leq(b, c) and dg.leq(a, b) and dg.leq(a, c)):
            trans.append((a, b, c))
        if dg.area(a) > dg.area(b) or dg.area(b) > dg.area(c):
            mono.append((a, b, c))
        # fixed corners: p <= q in D_n(x, y), any r
        n = rng.randint(1, 3)
        x, y = Fraction(rng.randint(1, 4), 2), Fraction(rng.randint(1, 4), 2)
        f1, f2 = _fixed_corner_path(rng, n, x, y, 2), _fixed_corner_path(rng, n, x, y, 2)
        s = random_path(rng, n_max=3)
        if dg.leq(f1, f2) and not (dg.leq(dg.concat(f1, s), dg.concat(f2, s)) and dg.leq(dg.concat(s, f1), dg.concat(s, f2))):
            fixed.append((f1, f2, s))
    r.trials("leq is reflexive", refl, TRIALS)
    r.trials("leq is antisymmetric on canonical paths", anti, TRIALS)
    r.check("random pairs include comparable ones", comparable > 0, f"{comparable} comparable pairs")
    r.trials("leq is transitive on constructed chains", trans, TRIALS)
    r.trials("leq implies area <=", mono, TRIALS)
    r.trials("concat with fixed corners preserves order", fixed, TRIALS)
    return r.result()


def suite_t2(seed: int = DEFAULT_SEED) -> dict:
    r = _Report("t2")
    c = vo.rho_coeffs(41)
    bad = [n for n in range(41) if c[n + 1] != c[n] / (n + 1) ** 2]
    r.trials("termwise c_{n+1} = c_n/(n+1)**2 (n<=40)", bad, 41)
    bad = [n for n in range(41) if math.factorial(n + 1) ** 2 * c[n + 1] != math.factorial(n) ** 2 * c[n]]
    r.trials("termwise (n+1)!**2 c_{n+1} = n!**2 c_n (n<=40)", bad, 41)
    for x, y in ((1.0, 1.0), (2.0, 0.5), (3.0, 2.0)):
        r1, r2 = vo.pde_residual(x, y, 1e-4)
        r.check(f"finite-difference residuals at ({x}, {y})", abs(r1) < 1e-6 and abs(r2) < 1e-6, f"r1={r1:.3g} r2={r2:.3g}")
    return r.result()


def suite_t3(seed: int = DEFAULT_SEED) -> dict:
    r = _Report("t3")
    grid = [2.0 * i for i in range(1, 6)]
    bad = []
    for x, y in product(grid, grid):
        s = vo.rho(x, y)
        ref = vo.bessel_i(0, 2.0 * math.sqrt(x * y))
        if abs(s.value - ref.value) > s.error_bound + ref.error_bound:
            bad.append((x, y))
    r.trials("rho = I_0(2 sqrt(xy)) within combined bounds (5x5 grid)", bad, 25)
    bad = []
    for k in range(3):
        for x, y in product(grid, grid):
            ref = vo.f_shift(k, y, x).value  # k-th x-derivative of rho
            rel = abs(vo.integral_rep(k, x, y) - ref) / ref
            if rel > 1e-10:
                bad.append((k, x, y, rel))
    r.trials("integral representation = series (k<=2, relative 1e-10)", bad, 75)
    bad = []
    for x, y in ((0.5, 0.5), (1.0, 2.0), (3.0, 1.5)):
        fs = vo.f_shift(1, x, y).value
        quad, _ = adaptive_simpson(lambda s: vo.rho(s, y).value, 0.0, x, tol=1e-12)
        h = 1e-4
        fd = (vo.rho(x, y + h).value - vo.rho(x, y - h).value) / (2 * h)
        if abs(fs - quad) > 1e-7 or abs(fs - fd) > 1e-7:
            bad.append((x, y, fs - quad, fs - fd))
    r.trials("f_shift(1) = x-antiderivative = y-derivative (1e-7)", bad, 3)
    return r.result()


def suite_yc(seed: int = DEFAULT_SEED) -> dict:
    r = _Report("yc")
    points = ((1.0, 1.0), (0.5, 2.0), (2.0, 1.5))
    for x, y in points:
        d1 = vo.vol_region("D1", x, y).value
        d2 = vo.vol_region("D2", x, y).value
        d3 = vo.vol_region("D3", x, y).value
        q1, _ = adaptive_simpson(lambda s: vo.rho(s, y).value, 0.0, x, tol=1e-12)
        q2, _ = adaptive_simpson(lambda t: vo.rho(x, t).value, 0.0, y, tol=1e-12)
        q3 = integrate_2d(lambda s, t: vo.rho(s, t).value, 0.0, x, 0.0, y, tol=1e-11)
        r.check(f"D1({x}, {y}) = quadrature", abs(d1 - q1) < 1e-8, f"diff={d1 - q1:.3g}")
        r.check(f"D2({x}, {y}) = quadrature", abs(d2 - q2) < 1e-8, f"diff={d2 - q2:.3g}")
        r.check(f"D3({x}, {y}) = quadrature", abs(d3 - q3) < 1e-8, f"diff={d3 - q3:.3g}")
        diff = d3 - (vo.rho(x, y).value - 1.0)
        r.check(f"D3({x}, {y}) = rho - 1", abs(diff) < 1e-12, f"diff={diff:.3g}")
        i1 = vo.bessel_i(1, 2.0 * math.sqrt(x * y)).value
        r.check(f"D1 D2 = I_1**2 at ({x}, {y})", math.isclose(d1 * d2, i1 * i1, rel_tol=1e-13))
    d1 = vo.vol_region("D1", 1.0, 1.0).value
    r.check("D1(1, 1) = I_1(2)", math.isclose(d1, vo.bessel_i(1, 2.0).value, rel_tol=1e-15))
    return r.result()


def suite_asym(seed: int = DEFAULT_SEED) -> dict:
    r = _Report("asym")

    def rel_err(k, u):
        x = y = math.sqrt(u)
        return abs(vo.asymptote(k, x, y) / vo.f_shift(k, y, x).value - 1.0)

    r.check("k=0, xy=400: |ratio - 1| < 0.01", rel_err(0, 400) < 0.01, f"{rel_err(0, 400):.4g}")
    r.check("k=0, xy=2500: |ratio - 1| < 0.003", rel_err(0, 2500) < 0.003, f"{rel_err(0, 2500):.4g}")
    r.check("k=1, xy=400: |ratio - 1| < 0.02", rel_err(1, 400) < 0.02, f"{rel_err(1, 400):.4g}")
    for k in range(3):
        errs = [rel_err(k, u) for u in (100, 400, 2500)]
        r.check(f"k={k}: ratio approaches 1 monotonically", errs[0] > errs[1] > errs[2], str([f"{e:.3g}" for e in errs]))
    return r.result()


def suite_binom(seed: int = DEFAULT_SEED) -> dict:
    r = _Report("binom")
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(10):
        x, y = rng.uniform(1e-3, 3.0), rng.uniform(1e-3, 3.0)
        dx = vo.rho_dx(1, x, y).value
        res = (x + y) * dx + 2 * y * vo.rho(x, y).value - y * vo.cont_binomial(x + y, x)
        worst = max(worst, abs(res))
    r.check("continuous binomial ODE residual < 1e-12 (10 points)", worst < 1e-12, f"max={worst:.3g}")
    r.check("{x brace 0} = 2 + x", vo.cont_binomial(1.5, 0.0) == 3.5)
    ref = 2 * vo.bessel_i(0, 2.0).value + 2 * vo.bessel_i(1, 2.0).value
    r.check("{2 brace 1} = 2 I_0(2) + 2 I_1(2)", math.isclose(vo.cont_binomial(2.0, 1.0), ref, rel_tol=1e-14))
    sq = vo.power_series_coeffs(2, 20)
    bad = [n for n in range(21) if sq[n] * math.factorial(n) ** 2 != math.comb(2 * n, n)]
    r.trials("rho**2 coefficients times n!**2 = C(2n, n) (n<=20)", bad, 21)
    bad = [k for k in range(1, 5) if vo.power_series_coeffs(k, 8) != vo.power_series_coeffs_oracle(k, 8)]
    r.trials("rho**k convolution = multinomial sum (k<=4, n<=8)", bad, 4)
    inv, rc = vo.reciprocal_series_coeffs(20), vo.rho_coeffs(20)
    prod_ = [sum(inv[i] * rc[n - i] for i in range(n + 1)) for n in range(21)]
    r.check("(1/rho) rho = 1 through degree 20", prod_ == [1] + [0] * 20)
    r.check("reciprocal = signed composition sum (n<=8)", vo.reciprocal_series_coeffs(8) == vo.reciprocal_series_oracle(8))
    return r.result()


def suite_qz(seed: int = DEFAULT_SEED) -> dict:
    r = _Report("qz")
    bad = [n for n in range(1, 8) if gr.q_factorial(n) != gr.perm_inv_qcard(n)]
    r.trials("[n]_q! = inversion enumeration (n<=7)", bad, 7)
    pairs = list(product(range(1, 9), repeat=2))
    bad = [(m, n) for m, n in pairs if gr.young_qcard(m, n) != gr.young_qcard_oracle(m, n)]
    r.trials("Young q-cardinality recursion = enumeration (m,n<=8)", bad, 64)
    bad = [(m, n) for m, n in pairs if gr.young_qcard(m, n) != gr.young_qcard(n, m)]
    r.trials("symmetry in (m, n)", bad, 64)
    bad = [
        (m, n)
        for m, n in pairs
        if (gr.young_qcard(m, n).low_degree, gr.young_qcard(m, n).degree) != (m + n - 1, m * n)
    ]
    r.trials("degree span [m+n-1, mn]", bad, 64)
    bad = []
    for n in range(1, 11):
        for z in (0.1, 1.0):
            ref = -math.expm1(-z * n) / -math.expm1(-z)
            if abs(gr.z_cardinality(gr.q_integer(n), z) - ref) > 1e-12:
                bad.append((n, z))
    r.trials("z-cardinality of [n]_q = (1-e^{-zn})/(1-e^{-z})", bad, 20)
    bad = []
    P = gr.young_qcard(3, 3)
    for z in (-1.0, -0.3, 0.2, 0.5, 1.0):
        val, bound = gr.z_cardinality_taylor(P, z, 60)
        if abs(val - gr.z_cardinality(P, z)) > bound + 1e-9 * abs(val):
            bad.append(z)
    r.trials("Taylor partial sums within remainder bound (|z|<=1)", bad, 5)
    bad = []
    for l in range(1, 9):
        for q in (0.1, 0.5, 0.9):
            got = gr.q_card_multiples_ratio(l, q)
            ref = 1.0 / math.fsum(q**i for i in range(l))
            if abs(got - ref) > 4 * math.ulp(ref):
                bad.append((l, q, got, ref))
    r.trials("|lN|_q / |N|_q = 1/[l]_q to 4 ulps", bad, 24)
    return r.result()


def suite_dnl(seed: int = DEFAULT_SEED) -> dict:
    r = _Report("dnl")
    pairs = [(n, l) for n in range(1, 7) for l in range(9)]
    bad = [(n, l) for n, l in pairs if zv.d_coeff(n, l) != zv.d_coeff_direct(n, l)]
    r.trials("recursion = direct composition sum (n<=6, l<=8)", bad, len(pairs))
    wide = [(n, l) for n in range(1, 13) for l in range(13)]
    bad = [(n, l) for n, l in wide if zv.d_coeff(n, l) > zv.d_bound(n, l)]
    r.trials("d_{n,l} <= C(l+n-1, n-1)/n! (n,l<=12)", bad, len(wide))
    bad = [n for n in range(1, 13) if zv.d_coeff(n, 1) != Fraction(n, 2 * math.factorial(n))]
    r.trials("d_{n,1} = n/(2 n!) (n<=12)", bad, 12)
    bad = [n for n in range(1, 13) if zv.d_coeff(n, 0) != Fraction(1, math.factorial(n))]
    r.trials("d_{n,0} = 1/n! (n<=12)", bad, 12)
    return r.result()


def suite_volz(seed: int = DEFAULT_SEED, samples: int = 200_000) -> dict:
    r = _Report("volz")
    grid = [0.5, 1.0, 2.0]
    bad = []
    for n in range(1, 9):
        for x, y in product(grid, grid):
            a, b = zv.vol_z_dn(n, x, y, 0.0).value, vo.vol_dn(n, x, y)
            if abs(a - b) > math.ulp(b):
                bad.append((n, x, y, a, b))
    r.trials("vol_z_dn(n, x, y, 0) = vol_dn to 1 ulp", bad, 72)
    total = math.fsum(zv.vol_z_dn(n, 1.0, 1.0, 1.0).value for n in range(1, 40))
    dd = zv.vol_z_d(1.0, 1.0, 1.0).value
    r.check("vol_z_d(1,1,1) = sum_n vol_z_dn", abs(dd - total) < 1e-10, f"diff={dd - total:.3g}")
    bad_le, bad_mono = [], []
    for x, y in product(grid, grid):
        prev = math.inf
        i0 = vo.bessel_i(0, 2.0 * math.sqrt(x * y))
        for z in (0.0, 0.5, 1.0, 2.0):
            v = zv.vol_z_d(x, y, z)
            if v.value > i0.value + v.error_bound + i0.error_bound:
                bad_le.append((x, y, z))
            if v.value > prev + v.error_bound:
                bad_mono.append((x, y, z))
            prev = v.value
    r.trials("vol_z_d <= I_0(2 sqrt(xy))", bad_le, 36)
    r.trials("vol_z_d nonincreasing in z", bad_mono, 9)
    bad = []
    for n in range(2, 7):
        for x, y, z in ((1.0, 1.0, 1.0), (0.5, 1.0, 1.5), (1.0, 0.5, 0.4)):
            u = x * y * z
            terms = [
                float((l + n) * zv.d_coeff(n, l) / math.factorial(l + n - 1)) * u**l for l in range(30)
            ]
            l0 = math.ceil(u)
            if any(terms[l + 1] > terms[l] for l in range(l0, 29)):
                bad.append((n, x, y, z, "not decreasing"))
            # truncating after l = 3 is within the first omitted term
            part = (x * y) ** (n - 1) * math.fsum((-1) ** l * terms[l] for l in range(4))
            full = zv.vol_z_dn(n, x, y, z).value
            if abs(full - part) > (x * y) ** (n - 1) * terms[4] * (1 + 1e-12):
                bad.append((n, x, y, z, "truncation"))
    r.trials("alternating l-terms decrease; truncation within first omitted term", bad, 15)
    for n, z in ((2, 1.0), (3, 1.0), (5, 0.5)):
        est = mc.mc_vol_z(n, 1.0, 1.0, z, samples, seed)
        ref = zv.vol_z_dn(n, 1.0, 1.0, z).value
        zs = est.z_score(ref)
        r.check(f"Monte Carlo vol_z (n={n}, z={z}) within 3 SE", zs < 3.0, f"{zs:.2f} SE")
    for n in (2, 5):
        est = mc.mc_mean_area(n, 1.0, 1.0, samples, seed)
        zs = est.z_score(zv.mean_area(n, 1.0, 1.0))
        r.check(f"Monte Carlo mean area (n={n}) within 3 SE", zs < 3.0, f"{zs:.2f} SE")
    bad = [n for n in range(1, 13) if zv.mean_area_coeff(n) != Fraction(n + 1, 2 * n)]
    r.trials("first z-coefficient gives mean area (n+1)/(2n)", bad, 12)
    est = mc.mc_vol_hat(2, 1.0, 1.0, 0.75, samples, seed)
    ref = mc.vhat_reference(2, 1.0, 1.0, 0.75)
    r.check("Monte Carlo truncated volume (n=2, w=0.75) within 3 SE", est.z_score(ref) < 3.0, f"{est.z_score(ref):.2f} SE")
    return r.result()


def suite_gradient(seed: int = DEFAULT_SEED) -> dict:
    r = _Report("gradient")
    rng = random.Random(seed)
    exact_bad, float_bad = [], []
    h_exact, h = Fraction(1, 1000), 1e-6
    for _ in range(TRIALS):
        p = random_path(rng)
        if p.n < 2:
            p = dg.concat(p, random_path(rng))
        grad = dg.area_gradient(p)
        m = p.n - 1
        coords = list(p.xs) + list(p.ys)
        for i in range(2 * m):
            # area is polynomial in the coordinates, so evaluate off the polytope too
            def at(delta, cs=coords, i=i):
                c = list(cs)
                c[i] += delta
                return dg.area_from_coords(c[:m], c[m:], p.x, p.y)

            fd = (at(h_exact) - at(-h_exact)) / (2 * h_exact)
            if fd != grad[i]:
                exact_bad.append((dg.path_to_json(p), i))
            fcoords = [float(v) for v in coords]
            fd = (at(h, fcoords) - at(-h, fcoords)) / (2 * h)
            if abs(fd - float(grad[i])) > 1e-6:
                float_bad.append((dg.path_to_json(p), i, fd - float(grad[i])))
    r.trials("gradient = exact central differences (Fraction paths)", exact_bad, TRIALS)
    r.trials("gradient = float central differences, h=1e-6, 1e-6 abs", float_bad, TRIALS)
    crit = dg.path_new(2, 3, (2, 2), (0, 0))
    r.check("gradient vanishes at (x,..,x ; 0,..,0)", all(g == 0 for g in dg.area_gradient(crit)))
    r.check("n=1 gives an empty gradient", dg.area_gradient(dg.one_block(1, 1)) == [])
    return r.result()


SUITES = {
    "lemma1": suite_lemma1,
    "lemma5": suite_lemma5,
    "examples3": suite_examples3,
    "duality": suite_duality,
    "monoid": suite_monoid,
    "poset": suite_poset,
    "t2": suite_t2,
    "t3": suite_t3,
    "yc": suite_yc,
    "asym": suite_asym,
    "binom": suite_binom,
    "qz": suite_qz,
    "dnl": suite_dnl,
    "volz": suite_volz,
    "gradient": suite_gradient,
}


def run_suite(name: str, seed: int = DEFAULT_SEED) -> dict:
    if name == "all":
        return run_all(seed)
    return SUITES[name](seed)


def run_all(seed: int = DEFAULT_SEED) -> dict:
    reports = [fn(seed) for fn in SUITES.values()]
    checks = sum(rep["checks"] for rep in reports)
    passed = sum(rep["passed"] for rep in reports)
    return {"suite": "all", "checks": checks, "passed": passed, "failed": checks - passed, "details": reports}
