"""Seeded self-verification suites over the package invariants.

Each suite replays a battery of randomised identity checks with a SplitMix64
stream, so a (suite, seed) pair is fully reproducible and its report
serialises to identical bytes.  Residuals are absolute unless a check says
otherwise; a check fails when its residual exceeds its tolerance or a
predicate is false.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import angles as ang
from . import bivar, hypergeom, kernels, obstruction, zeros
from .errors import DomainError
from .params import AlphaParam
from .rng import SplitMix64

SUITES = ("hypergeom", "poly-kernel", "pullback", "obstruction", "zeros", "angles")
_DETAIL_CAP = 25


@dataclass
class RunReport:
    suite: str
    cases: int = 0
    failures: int = 0
    max_residual: float = 0.0
    seed: int = 0
    details: list[str] = field(default_factory=list)

    def check(self, name: str, residual: float, tol: float) -> None:
        self.cases += 1
        self.max_residual = max(self.max_residual, residual)
        if not residual <= tol:
            self.failures += 1
            if len(self.details) < _DETAIL_CAP:
                self.details.append(f"{name}: residual {residual:.3e} > {tol:.1e}")

    def expect(self, name: str, condition: bool) -> None:
        self.cases += 1
        if not condition:
            self.failures += 1
            if len(self.details) < _DETAIL_CAP:
                self.details.append(name)

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failures,
            "max_residual": self.max_residual,
            "seed": self.seed,
            "details": list(self.details),
        }


def _random_alpha(rng: SplitMix64, lo: float = -0.95, hi: float = 3.5) -> float:
    return rng.uniform(lo, hi)


def _suite_hypergeom(seed: int, tol: float | None) -> RunReport:
    rep = RunReport(suite="hypergeom", seed=seed)
    rng = SplitMix64(seed)
    t = tol if tol is not None else 1e-10

    # Euler transformation as an identity between two independent evaluations
    for i in range(60):
        a = rng.uniform(-1.5, 1.5)
        b = rng.uniform(-1.5, 1.5)
        c = rng.uniform(1.0, 3.0)
        x = rng.uniform(-0.85, 0.85)
        lhs = hypergeom.hyp2f1(a, b, c, x, transform="direct")
        rhs = (1.0 - x) ** (c - a - b) * hypergeom.hyp2f1(c - a, c - b, c, x, transform="direct")
        rep.check(f"euler[{i}]", abs(lhs - rhs), t * max(1.0, abs(lhs)))

    # the x -> 1 limit against the closed ratio-of-factorials form
    for i in range(12):
        alpha = _random_alpha(rng)
        k = rng.randint(1, 9)
        target = hypergeom.gauss_limit(alpha, k)
        prev_gap = None
        monotone = True
        for x in (0.9, 0.99, 0.999, 0.9999):
            gap = abs(hypergeom.f_factor(alpha, k, x) - target)
            if prev_gap is not None and gap > prev_gap * 1.001 + 1e-13:
                monotone = False
            prev_gap = gap
        # the gap closes like (1-x)^min(1, alpha+1); allow a generous constant
        rate = (1e-4) ** min(1.0, alpha + 1.0)
        rep.expect(f"gauss-limit-approach[{i}]",
                   monotone and prev_gap < 100.0 * rate * max(1.0, abs(target)))

    # series route against adaptive quadrature of the integral form
    for i in range(18):
        alpha = _random_alpha(rng, -0.95, 2.5)
        k = rng.randint(1, 6)
        x = rng.uniform(0.05, 0.95)
        s = hypergeom.f_factor(alpha, k, x)
        q = hypergeom.f_factor_integral(alpha, k, x)
        rep.check(f"series-vs-quad[{i}]", abs(s - q), t * max(1.0, abs(s)))

    # backward recurrence sweep against per-index direct sums
    for i in range(6):
        alpha = _random_alpha(rng, -0.95, 3.0)
        x = rng.uniform(0.1, 0.97)
        kmax = rng.randint(5, 40)
        seq = hypergeom.f_factor_sequence(alpha, kmax, x)
        for k in (1, kmax // 2 + 1, kmax):
            direct = hypergeom.f_factor(alpha, k, x)
            rep.check(f"recurrence[{i},k={k}]", abs(seq[k] - direct), 1e-8 * max(1.0, abs(direct)))

    # majorants keep nonnegative slack
    for i in range(25):
        k = rng.randint(1, 12)
        x = rng.uniform(0.02, 0.98)
        val = hypergeom.f_factor(-1.0, k, x)
        rep.expect(f"log-bound[{i}]", abs(val) <= hypergeom.bound_log(k, x) * (1 + 1e-12))
    for i in range(25):
        alpha = rng.uniform(-4.0, -1.05)
        k = rng.randint(1, 12)
        x = rng.uniform(0.02, 0.98)
        val = hypergeom.f_factor(alpha, k, x)
        bound = hypergeom.bound_below_minus1(alpha, k, x)
        rep.expect(f"neg-bound[{i}]", abs(val) <= bound * (1 + 1e-12))

    # exact rational limit agrees with the float route
    for i in range(10):
        num = rng.randint(-7, 24)
        den = rng.randint(1, 8)
        alpha = Fraction(num, den)
        if alpha <= -1 and alpha.denominator == 1:
            continue
        k = rng.randint(1, 8)
        try:
            exact = hypergeom.gauss_limit(alpha, k)
        except DomainError:
            continue
        lg = hypergeom.gauss_limit(float(alpha) + 1e-13, k)
        rep.check(f"gauss-exact-vs-float[{i}]", abs(float(exact) - lg), 1e-9 * max(1.0, abs(lg)))
    return rep


def _suite_poly_kernel(seed: int, tol: float | None) -> RunReport:
    rep = RunReport(suite="poly-kernel", seed=seed)
    rng = SplitMix64(seed)
    t = tol if tol is not None else 1e-11

    # exact annihilation and one-dimensional kernels
    for i in range(8):
        alpha = Fraction(rng.randint(-19, 50), rng.randint(1, 10))
        k = rng.randint(1, 10)
        a = AlphaParam.coerce(alpha)
        p = bivar.p_poly(a, k)
        rep.expect(f"annihilate[{i}]", bivar.d_alpha(a, p) == bivar.BivarPoly.zero())
        if k <= 5:
            basis = bivar.nullspace_homogeneous(a, k)
            rep.expect(f"nullspace-dim[{i}]", len(basis) == 1)

    # rotation generator powers decompose over the kernel polynomials
    for i in range(6):
        alpha = Fraction(rng.randint(-9, 30), rng.randint(1, 6))
        k = rng.randint(1, 8)
        a = AlphaParam.coerce(alpha)
        try:
            bs = bivar.decompose_h_over_p(a, k)
        except DomainError:
            continue
        h = bivar.h_poly(a, k)
        rebuilt = bivar.BivarPoly.zero()
        for m, b in enumerate(bs):
            if b:
                rebuilt = rebuilt + bivar.p_poly(a, m) * b
        rep.expect(f"h-decomposition[{i}]", rebuilt == h)

    # float shadow against exact evaluation
    for i in range(40):
        alpha = _random_alpha(rng)
        k = rng.randint(0, 12)
        z = rng.complex_in_disc(1.5)
        if z == 0:
            z = 0.3 + 0.2j
        a = AlphaParam.coerce(alpha)
        exact = complex(bivar.p_poly(a, k).evaluate(z))
        fast = bivar.p_value(alpha, k, z)
        rep.check(f"p-shadow[{i}]", abs(exact - fast), t * max(1.0, abs(exact)))

    # homogeneity: p(t z) = t^k p(z)
    for i in range(20):
        alpha = _random_alpha(rng)
        k = rng.randint(0, 9)
        z = rng.complex_in_disc(1.2)
        if z == 0:
            continue
        s = rng.uniform(0.3, 2.5)
        lhs = bivar.p_value(alpha, k, s * z)
        rhs = s ** k * bivar.p_value(alpha, k, z)
        rep.check(f"homogeneous[{i}]", abs(lhs - rhs), 1e-10 * max(1.0, abs(rhs)))
    return rep


def _suite_pullback(seed: int, tol: float | None) -> RunReport:
    rep = RunReport(suite="pullback", seed=seed)
    rng = SplitMix64(seed)
    t = tol if tol is not None else 1e-10

    # closed form vs Fourier series of the kernel
    for i in range(40):
        alpha = _random_alpha(rng)
        z = rng.complex_in_disc(0.9)
        closed = kernels.poisson_kernel(alpha, z)
        series = kernels.poisson_kernel_series(alpha, z)
        rep.check(f"kernel-two-routes[{i}]", abs(closed - series), t * max(1.0, abs(closed)))

    # rotation-generator powers against Dirac-derivative extensions
    for i in range(10):
        alpha = rng.choice([-0.5, 0.5, 1.0, 2.0])
        k = rng.randint(1, 4)
        z = rng.complex_in_disc(0.75)
        lhs = kernels.ia_power_kernel(alpha, k, z)
        dist = kernels.ToroidalDistribution.dirac(order=k)
        rhs = kernels.poisson_integral(alpha, dist, z)
        rep.check(f"generator-power[{i}]", abs(lhs - rhs), 1e-8 * max(1.0, abs(lhs)))

    # pinned pullback branch sends the half-plane weight to the kernel over c
    for i in range(15):
        alpha = _random_alpha(rng)
        z = rng.complex_in_disc(0.85)
        c = kernels.pullback_constant(alpha)
        lhs = kernels.weighted_pullback(alpha, lambda w: complex(w.imag) ** (alpha + 1.0), z)
        rhs = kernels.poisson_kernel(alpha, z)
        rep.check(f"pullback-branch[{i}]", abs(c * lhs - rhs), 1e-9 * max(1.0, abs(rhs)))

    # the composed disc operator annihilates the kernel numerically
    for i in range(8):
        alpha = rng.choice([-0.5, 0.5, 1.0, 1.5])
        z = rng.complex_in_disc(0.6)
        resid = kernels.alpha_laplacian_fd(alpha, lambda w: kernels.poisson_kernel(alpha, w), z)
        rep.check(f"kernel-harmonic-fd[{i}]", abs(resid), 1e-4)

    # spectra: negative integer weights truncate to a half line
    rep.expect("spectrum-all", kernels.spectrum(0.5).kind == "all")
    s = kernels.spectrum(-3)
    rep.expect("spectrum-halfline", s.kind == "half_line" and s.start == -2)
    return rep


def _suite_obstruction(seed: int, tol: float | None) -> RunReport:
    rep = RunReport(suite="obstruction", seed=seed)
    rng = SplitMix64(seed)
    t = tol if tol is not None else 1e-6

    # coefficient recovery round trip
    for i in range(8):
        alpha = rng.choice([-0.5, 0.0, 0.5, 1.0, 2.5])
        n = rng.randint(0, 5)
        coeffs = tuple(complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(n + 1))
        u = obstruction.ObstructionFunction(AlphaParam.coerce(alpha), coeffs)
        res = obstruction.recover_coefficients(alpha, u.eval, n)
        worst = max(abs(x - y) for x, y in zip(res.coeffs, u.coeffs + (0j,) * len(res.coeffs)))
        rep.check(f"recover[{i}]", worst, t)

    # growth envelope on far samples
    for i in range(6):
        alpha = _random_alpha(rng)
        n = rng.randint(0, 4)
        coeffs = tuple(complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(n + 1))
        u = obstruction.ObstructionFunction(AlphaParam.coerce(alpha), coeffs)
        gb = obstruction.growth_bound(u)
        ok = True
        for _ in range(200):
            r = rng.uniform(1.0, 25.0)
            th = rng.uniform(1e-3, math.pi - 1e-3)
            z = r * cmath.exp(1j * th)
            if abs(u.eval(z)) > gb.envelope(z) * (1 + 1e-9):
                ok = False
                break
        rep.expect(f"growth-envelope[{i}]", ok)

    # ray limits against direct far samples
    for i in range(10):
        alpha = _random_alpha(rng)
        n = rng.randint(0, 4)
        coeffs = [0j] * (n + 1)
        coeffs[n] = complex(rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0))
        u = obstruction.ObstructionFunction(AlphaParam.coerce(alpha), tuple(coeffs))
        theta = rng.uniform(0.2, math.pi - 0.2)
        lim = obstruction.ray_limit(u, theta)
        tt = 1e5
        approx = u.eval(tt * cmath.exp(1j * theta)) / tt ** (n + alpha + 1.0)
        rep.check(f"ray-limit[{i}]", abs(lim - approx), 1e-4 * max(1.0, abs(lim)))

    # uniqueness verdicts: zero accepted, nonzero rejected
    for i in range(6):
        alpha = rng.choice([-0.5, 0.5, 1.5])
        zs = [cmath.exp(1j * rng.uniform(0.3, 2.8)) * (50.0 * 2 ** j) for j in range(3)]
        coeffs = tuple(complex(rng.uniform(0.5, 2.0)) for _ in range(rng.randint(1, 3)))
        u = obstruction.ObstructionFunction(AlphaParam.coerce(alpha), coeffs)
        rep.expect(f"seq-zero[{i}]",
                   obstruction.uniqueness_test_sequence([(z, 0j) for z in zs], alpha) is True)
        rep.expect(f"seq-nonzero[{i}]",
                   obstruction.uniqueness_test_sequence([(z, u.eval(z)) for z in zs], alpha) is False)

    # the one-geodesic trap and its two-geodesic repair
    u_bad = obstruction.from_v0_coefficients({1: -2 + 0j, 2: 1 + 0j})
    rep.expect("geodesic-trap", obstruction.geodesic_vanishes(u_bad.eval, 1.0) is True)
    rep.expect("geodesic-repair",
               obstruction.uniqueness_test_geodesics(u_bad.eval, 1.0, 2.0) is False)
    rep.expect("geodesic-zero",
               obstruction.uniqueness_test_geodesics(lambda z: 0j, 1.0, 2.0) is True)

    # ray test against a constructed admissible family
    fam = ang.construct_finite(
        [ang.Angle.rational(1, 2), ang.Angle.rational(1, 3), ang.Angle.rational(1, 5)],
        ang.Angle.irrational("probe", 1.2345678901234567))
    rep.expect("rays-zero", obstruction.uniqueness_test_rays(lambda z: 0j, fam) is True)
    for i in range(5):
        k = rng.randint(1, 8)
        u = obstruction.from_v0_coefficients({k: complex(rng.uniform(0.5, 2.0))})
        rep.expect(f"rays-nonzero[{i}]",
                   obstruction.uniqueness_test_rays(u.eval, fam, n_max=8) is False)
    return rep


def _suite_zeros(seed: int, tol: float | None) -> RunReport:
    rep = RunReport(suite="zeros", seed=seed)
    rng = SplitMix64(seed)

    for i in range(12):
        alpha = _random_alpha(rng, -0.95, 3.5)
        if abs(alpha) < 0.05:
            alpha = 0.5
        k = rng.randint(1, 12)
        cert = zeros.certify_p_circle_free(alpha, k)
        expected = zeros.INSIDE if alpha > 0 else zeros.OUTSIDE
        rep.expect(f"certificate[{i}]", cert.verdict == expected)
        rts = zeros.kernel_profile_roots(alpha, k)
        inside = all(cert.r * (1 - 1e-9) <= abs(w) <= cert.R * (1 + 1e-9) for w in rts)
        rep.expect(f"annulus-contains-roots[{i}]", inside and len(rts) == k)

    for k in range(1, 9):
        rts = zeros.kernel_profile_roots(0, k)
        expected = [cmath.exp(2j * math.pi * m / (k + 1)) for m in range(1, k + 1)]
        worst = max(min(abs(x - y) for x in rts) for y in expected)
        rep.check(f"unit-roots[k={k}]", worst, 1e-9)

    # minimum modulus scan against a blunt dense grid
    for i in range(5):
        alpha = rng.choice([-0.9, -0.5, 0.5, 1.0, 3.0])
        k = rng.randint(1, 10)
        fine = zeros.min_modulus_on_circle(alpha, k)
        blunt = min(abs(bivar.p_value(alpha, k, cmath.exp(1j * th)))
                    for th in [j * math.pi / 2000.0 for j in range(1, 2000)])
        rep.expect(f"min-modulus[{i}]", fine <= blunt + 1e-12)
    return rep


def _suite_angles(seed: int, tol: float | None) -> RunReport:
    rep = RunReport(suite="angles", seed=seed)
    rng = SplitMix64(seed)

    def random_family():
        k = rng.randint(1, 5)
        entries, used = [], set()
        while len(entries) < k:
            if rng.random() < 0.2:
                a = ang.Angle.irrational(f"r{rng.randint(0, 10 ** 6)}", rng.uniform(0.1, 3.0))
            else:
                n = rng.randint(2, 12)
                a = ang.Angle.rational(rng.randint(1, n - 1), n)
            if a in used:
                continue
            used.add(a)
            entries.append((a, rng.randint(1, 9)))
        return ang.FunctionOfAngles(entries=entries)

    def random_constructed(tag: str):
        prefix, running, used = [], 1, set()
        for _ in range(rng.randint(1, 4)):
            for _ in range(60):
                n = rng.randint(2, 13)
                a = ang.Angle.rational(rng.randint(1, n - 1), n)
                if a not in used and (not prefix or running % a.denominator != 0):
                    prefix.append(a)
                    used.add(a)
                    running = math.lcm(running, a.denominator)
                    break
        return ang.construct_finite(prefix, ang.Angle.irrational(tag, rng.uniform(0.1, 3.0)))

    limit = 2000
    for i in range(200):
        fam = random_family()
        e = ang.is_admissible(fam)
        b = ang.is_admissible(fam, mode="brute", limit=limit)
        if not e.admissible and e.witness <= limit:
            agree = (not b.admissible) and b.witness == e.witness
        else:
            agree = b.admissible
        rep.expect(f"exact-vs-brute[{i}]", agree)

    for i in range(40):
        fam = random_constructed(f"w{i}")
        rep.expect(f"constructed-admissible[{i}]", ang.is_admissible(fam).admissible)
        rep.expect(f"constructed-minimal[{i}]", ang.is_minimal(fam))
        entries = list(fam.entries)
        weakened_ok = True
        for j in range(len(entries)):
            dropped = entries[:j] + entries[j + 1:]
            if dropped and ang.is_admissible(ang.FunctionOfAngles(entries=dropped)).admissible:
                weakened_ok = False
            raised = [(a, e + 1 if idx == j else e) for idx, (a, e) in enumerate(entries)]
            if ang.is_admissible(ang.FunctionOfAngles(entries=raised)).admissible:
                weakened_ok = False
        rep.expect(f"perturbation-minimal[{i}]", weakened_ok)

    for i in range(40):
        base = random_constructed(f"v{i}")
        entries = [(a, max(1, e - rng.randint(0, e - 1)) if e > 1 else e) for a, e in base.entries]
        for _ in range(rng.randint(0, 2)):
            n = rng.randint(2, 9)
            a = ang.Angle.rational(rng.randint(1, n - 1), n)
            if all(a != b_ for b_, _ in entries):
                entries.append((a, rng.randint(1, 8)))
        fam = ang.FunctionOfAngles(entries=entries)
        lb = ang.lower_bound(fam)
        rep.expect(f"lower-bound-minimal[{i}]", ang.is_minimal(lb))
        rep.expect(f"lower-bound-leq[{i}]", ang.leq(lb, fam))
    return rep


_SUITE_FUNCS = {
    "hypergeom": _suite_hypergeom,
    "poly-kernel": _suite_poly_kernel,
    "pullback": _suite_pullback,
    "obstruction": _suite_obstruction,
    "zeros": _suite_zeros,
    "angles": _suite_angles,
}


def run_suite(suite: str, seed: int = 0, tol: float | None = None) -> RunReport:
    """Run one named suite, or "all" for the aggregate across every suite."""
    if suite == "all":
        total = RunReport(suite="all", seed=seed)
        for name in SUITES:
            sub = _SUITE_FUNCS[name](seed, tol)
            total.cases += sub.cases
            total.failures += sub.failures
            total.max_residual = max(total.max_residual, sub.max_residual)
            for d in sub.details:
                if len(total.details) < _DETAIL_CAP:
                    total.details.append(f"{name}: {d}")
        return total
    if suite not in _SUITE_FUNCS:
        raise DomainError(f"unknown suite {suite!r}; pick from {', '.join(SUITES)} or all")
    return _SUITE_FUNCS[suite](seed, tol)
