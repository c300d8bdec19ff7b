"""Acceptance battery: one test per shipped guarantee, at its stated tolerance.

Run with `pytest tests/test_acceptance.py -v` to get one pass/fail line per
criterion; each test also prints a one-line summary with the measured margin.
"""

import cmath
import math
import time
from fractions import Fraction

from alphaharm.angles import (Angle, FunctionOfAngles, construct_finite,
                              construct_infinite, d_of, is_admissible, is_minimal,
                              leq, lower_bound)
from alphaharm.bivar import (BivarPoly, d_alpha, decompose_h_over_p, h_poly,
                             nullspace_homogeneous, p_poly)
from alphaharm.errors import EmptyFamily
from alphaharm.hypergeom import (bound_below_minus1, bound_log, f_factor,
                                 f_factor_integral, gauss_limit, hyp2f1)
from alphaharm.kernels import (ToroidalDistribution, ia_power_kernel, poisson_integral,
                               poisson_kernel, poisson_kernel_series)
from alphaharm.obstruction import (ObstructionFunction, from_v0_coefficients,
                                   geodesic_vanishes, growth_bound, recover_coefficients,
                                   uniqueness_test_geodesics, uniqueness_test_rays,
                                   uniqueness_test_sequence)
from alphaharm.rng import SplitMix64
from alphaharm.verify import run_suite
from alphaharm.zeros import (UNDECIDED, certify_p_circle_free, kernel_profile_roots,
                             min_modulus_on_circle)

ALPHAS_EXACT = (Fraction(-9, 10), Fraction(-1, 2), Fraction(0),
                Fraction(1, 2), Fraction(1), Fraction(7, 2))


def _passed(tag: str, detail: str) -> None:
    print(f"PASS  {tag}: {detail}")


def _random_constructed(rng: SplitMix64, min_prefix: int = 1):
    """Random lcm-rule family: rational prefix with fresh denominators plus an
    irrational closing angle."""
    prefix = []
    running = 1
    want = min_prefix + int(rng.random() * (4 - min_prefix + 1))
    guard = 0
    while len(prefix) < want and guard < 200:
        guard += 1
        n = 2 + int(rng.random() * 12)
        m = 1 + int(rng.random() * (n - 1))
        a = Angle.rational(m, n)
        if any(a == b for b in prefix):
            continue
        if prefix and running % d_of(a) == 0:
            continue
        prefix.append(a)
        running = math.lcm(running, d_of(a))
    tail = Angle.irrational(f"w{rng.randint(0, 10 ** 6)}", 0.1 + 2.9 * rng.random())
    return construct_finite(prefix, tail)


def test_c01_exact_kernel_annihilation():
    start = time.monotonic()
    for a in ALPHAS_EXACT:
        for k in range(21):
            assert not d_alpha(a, p_poly(a, k)), f"alpha={a}, k={k}"
    elapsed = time.monotonic() - start
    assert elapsed < 5.0, f"took {elapsed:.2f}s"
    _passed("c01 exact-kernel-annihilation",
            f"126 exact zero residuals in {elapsed:.2f}s")


def test_c02_nullspace_dimension_one():
    for a in ALPHAS_EXACT:
        for k in range(7):
            basis = nullspace_homogeneous(a, k)
            assert len(basis) == 1, f"alpha={a}, k={k}: dim {len(basis)}"
            v = basis[0]
            scale = v.coefficient(k, 0)
            assert scale != 0
            assert not (v - p_poly(a, k) * scale), f"alpha={a}, k={k}: not proportional"
    _passed("c02 nullspace-dimension-one", "42 exact rank checks, all dim 1")


def test_c03_h_over_p_decomposition():
    for a in ALPHAS_EXACT:
        for k in range(13):
            coeffs = decompose_h_over_p(a, k)
            rebuilt = BivarPoly.zero()
            for m, b in enumerate(coeffs):
                rebuilt = rebuilt + p_poly(a, m) * b
            assert not (h_poly(a, k) - rebuilt), f"alpha={a}, k={k}"
    _passed("c03 h-over-p-decomposition", "78 exact reconstructions")


def test_c04_rotational_derivative_extensions():
    start = time.monotonic()
    rng = SplitMix64(2024)
    pts = [rng.complex_in_disc(0.8) for _ in range(100)]
    worst = 0.0
    for alpha in (-0.5, 0.5, 1.0):
        for k in range(6):
            dist = ToroidalDistribution.dirac(order=k)
            for z in pts:
                lhs = ia_power_kernel(alpha, k, z)
                rhs = poisson_integral(alpha, dist, z)
                worst = max(worst, abs(lhs - rhs))
    elapsed = time.monotonic() - start
    assert worst < 1e-8, f"worst |(iA)^k P - P[dirac^(k)]| = {worst:.3e}"
    assert elapsed < 30.0, f"took {elapsed:.2f}s"
    _passed("c04 rotational-derivative-extensions",
            f"worst residual {worst:.3e} over 1800 point checks in {elapsed:.2f}s")


def test_c05_kernel_closed_vs_series():
    worst = 0.0
    for a in ALPHAS_EXACT:
        alpha = float(a)
        for i in range(20):
            r = 0.9 * (i + 1) / 20.0
            for j in range(20):
                z = r * cmath.exp(2j * math.pi * j / 20.0)
                closed = poisson_kernel(alpha, z)
                series = poisson_kernel_series(alpha, z)
                worst = max(worst, abs(closed - series) / max(1.0, abs(closed)))
    assert worst < 1e-10, f"worst relative gap {worst:.3e}"
    _passed("c05 kernel-closed-vs-series",
            f"worst relative gap {worst:.3e} on 6 x 400-point polar grids")


def test_c06_hypergeometric_suite():
    rng = SplitMix64(606)
    worst_euler = 0.0
    for _ in range(100):
        a = rng.uniform(-1.5, 1.5)
        b = rng.uniform(-1.5, 1.5)
        c = rng.uniform(1.0, 3.0)
        x = rng.uniform(-0.85, 0.85)
        lhs = hyp2f1(a, b, c, x, transform="direct")
        rhs = (1.0 - x) ** (c - a - b) * hyp2f1(c - a, c - b, c, x, transform="direct")
        worst_euler = max(worst_euler, abs(lhs - rhs) / max(1.0, abs(lhs)))
    assert worst_euler < 1e-10, f"Euler transformation residual {worst_euler:.3e}"

    for a in ALPHAS_EXACT:
        for k in (1, 4, 9):
            target = gauss_limit(a, k)
            gaps = [abs(f_factor(a, k, 1.0 - 2.0 ** -j) - target) for j in range(1, 15)]
            assert all(g2 <= g1 + 1e-13 for g1, g2 in zip(gaps, gaps[1:])), \
                f"alpha={a}, k={k}: approach not monotone"

    worst_quad = 0.0
    for alpha in (-0.9, -0.5, 0.5, 1.0, 3.5):
        for k in (1, 2, 5, 10):
            for x in (0.05, 0.25, 0.45, 0.65, 0.85):
                s = f_factor(alpha, k, x)
                q = f_factor_integral(alpha, k, x)
                worst_quad = max(worst_quad, abs(s - q) / max(1.0, abs(s)))
    assert worst_quad < 1e-10, f"series vs quadrature gap {worst_quad:.3e}"

    # the log majorant is an equality at k = 1, so exact-zero slack is the
    # correct answer there; allow rounding at the scale of the bound itself
    min_slack = math.inf
    xs = [0.01 * i for i in range(1, 100)]
    for k in (1, 2, 5, 12):
        for x in xs:
            bound = bound_log(k, x)
            slack = (bound - abs(f_factor(-1.0, k, x))) / max(1.0, bound)
            min_slack = min(min_slack, slack)
    for alpha in (-1.5, -2.5, -4.0):
        for k in (1, 5, 12):
            for x in xs:
                bound = bound_below_minus1(alpha, k, x)
                slack = (bound - abs(f_factor(alpha, k, x))) / max(1.0, bound)
                min_slack = min(min_slack, slack)
    assert min_slack >= -1e-12, f"a majorant dips below the factor by {-min_slack:.3e}"
    _passed("c06 hypergeometric-suite",
            f"euler {worst_euler:.2e}, quad {worst_quad:.2e}, "
            f"monotone approach, bound slack >= {min_slack:.2e}")


def test_c07_circle_zero_freeness():
    worst_min = math.inf
    for alpha in ("1/2", "-1/2", "9/10", "-9/10", "1", "3"):
        for k in range(1, 16):
            cert = certify_p_circle_free(alpha, k)
            assert cert.verdict != UNDECIDED, f"alpha={alpha}, k={k} undecided"
            worst_min = min(worst_min, min_modulus_on_circle(alpha, k))
    assert worst_min >= 1e-3, f"smallest circle modulus {worst_min:.3e}"

    worst_root = 0.0
    for k in range(1, 16):
        expected = [cmath.exp(2j * math.pi * j / (k + 1)) for j in range(1, k + 1)]
        got = kernel_profile_roots(0, k)
        assert len(got) == k
        worst_root = max(worst_root,
                         max(min(abs(w - e) for w in got) for e in expected))
    assert worst_root < 1e-9, f"alpha=0 roots off by {worst_root:.3e}"
    _passed("c07 circle-zero-freeness",
            f"90 certificates decisive, min |p_k| {worst_min:.3e}, "
            f"alpha=0 roots within {worst_root:.3e} of roots of unity")


def test_c08_uniqueness_round_trips():
    rng = SplitMix64(88)

    # (a) sequence test away from alpha = 0
    for alpha in (-0.5, 1.0):
        for _ in range(10):
            u = ObstructionFunction(alpha, tuple(rng.complex_in_disc(2.0)
                                                 for _ in range(6)))
            for _ in range(5):
                theta = rng.uniform(0.3, math.pi - 0.3)
                t0 = 1e3 * (1.0 + rng.random())
                zs = [t0 * 2.0 ** j * cmath.exp(1j * theta) for j in range(4)]
                samples = [(z, u(z)) for z in zs]
                assert not uniqueness_test_sequence(samples, alpha)
        zero = ObstructionFunction(alpha, ())
        samples = [(t * 1j, zero(t * 1j)) for t in (1e3, 2e3, 4e3)]
        assert uniqueness_test_sequence(samples, alpha)

    # (b) two vertical geodesics at alpha = 0, and the one-geodesic trap
    for _ in range(100):
        u = from_v0_coefficients({m + 1: rng.complex_in_disc(2.0) for m in range(6)})
        x1 = rng.uniform(-2.0, 2.0)
        x2 = x1 + 0.5 + rng.random()
        assert not uniqueness_test_geodesics(u, x1, x2)
    zero = ObstructionFunction(0, ())
    assert uniqueness_test_geodesics(zero, 0.0, 1.0)
    trap = from_v0_coefficients({1: -2.0, 2: 1.0})   # Im((z-1)^2)
    assert geodesic_vanishes(trap, 1.0)              # a single geodesic is fooled
    assert not uniqueness_test_geodesics(trap, 1.0, 0.0)

    # (c) ray test against a four-angle constructed family, degree <= 8
    family = construct_finite([Angle.rational(1, 2), Angle.rational(1, 3),
                               Angle.rational(1, 5)], Angle.irrational("probe", 0.777))
    for _ in range(100):
        u = from_v0_coefficients({m + 1: rng.complex_in_disc(2.0) for m in range(9)})
        assert not uniqueness_test_rays(u, family)
    assert uniqueness_test_rays(zero, family)
    _passed("c08 uniqueness-round-trips",
            "sequence (alpha != 0), two-geodesic with counterexample, "
            "and four-angle ray tests all discriminate")


def test_c09_coefficient_recovery():
    rng = SplitMix64(909)
    worst = 0.0
    for alpha in (-0.5, 0.0, 1.0):
        for _ in range(8):
            coeffs = tuple(rng.complex_in_disc(3.0) for _ in range(6))
            u = ObstructionFunction(alpha, coeffs)
            got = recover_coefficients(alpha, u, 5)
            worst = max(worst, max(abs(a - b) for a, b in zip(got.coeffs, u.coeffs)))
    assert worst < 1e-6, f"worst coefficient error {worst:.3e}"
    _passed("c09 coefficient-recovery", f"24 round trips, worst error {worst:.3e}")


def test_c10_angle_family_suite():
    start = time.monotonic()
    rng = SplitMix64(1010)
    limit = 10 ** 4

    # exact ranges vs bounded brute force on 500 random finite families
    for i in range(500):
        size = 1 + int(rng.random() * 4)
        entries, seen = [], set()
        for _ in range(size):
            n = 2 + int(rng.random() * 10)
            m = 1 + int(rng.random() * (n - 1))
            a = Angle.rational(m, n)
            if a in seen:
                continue
            seen.add(a)
            entries.append((a, 1 + int(rng.random() * 8)))
        if rng.random() < 0.3:
            entries.append((Angle.irrational("w", 0.7), 1 + int(rng.random() * 8)))
        fam = FunctionOfAngles(entries=entries)
        exact = is_admissible(fam)
        brute = is_admissible(fam, mode="brute", limit=limit)
        if not exact.admissible and exact.witness <= limit:
            assert (brute.admissible, brute.witness) == (False, exact.witness), f"family {i}"
        else:
            assert brute.admissible, f"family {i}: witness beyond the scan horizon"

    # both construction routes produce admissible families
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    lazy = construct_infinite(lambda k: Angle.rational(1, primes[k - 1]))
    assert is_admissible(lazy).admissible
    for _ in range(25):
        assert is_admissible(_random_constructed(rng, min_prefix=0)).admissible

    # greedy lower bounds are minimal and below their input
    for _ in range(200):
        fam = _random_constructed(rng)
        extras = list(fam.entries)
        for _ in range(int(rng.random() * 3)):
            n = 2 + int(rng.random() * 10)
            m = 1 + int(rng.random() * (n - 1))
            a = Angle.rational(m, n)
            if any(a == b for b, _ in extras):
                continue
            extras.append((a, 1 + int(rng.random() * 40)))
        padded = FunctionOfAngles(entries=extras)
        assert is_admissible(padded).admissible
        low = lower_bound(padded)
        assert is_minimal(low) and leq(low, padded)

    # minimality by perturbation: dropping an angle or raising an exponent
    # must break admissibility of a constructed family
    for _ in range(50):
        fam = _random_constructed(rng)
        entries = list(fam.entries)
        for i in range(len(entries)):
            dropped = entries[:i] + entries[i + 1:]
            try:
                assert not is_admissible(FunctionOfAngles(entries=dropped)).admissible
            except EmptyFamily:
                pass
            raised = entries[:i] + [(entries[i][0], entries[i][1] + 1)] + entries[i + 1:]
            assert not is_admissible(FunctionOfAngles(entries=raised)).admissible
    elapsed = time.monotonic() - start
    assert elapsed < 20.0, f"took {elapsed:.2f}s"
    _passed("c10 angle-family-suite",
            f"500 exact-vs-brute, 200 lower bounds, 50 perturbation checks "
            f"in {elapsed:.2f}s")


def test_c11_growth_envelopes():
    rng = SplitMix64(1111)
    for _ in range(50):
        alpha = rng.uniform(-0.95, 3.5)
        degree = rng.randint(0, 4)
        u = ObstructionFunction(alpha, tuple(rng.complex_in_disc(2.0)
                                             for _ in range(degree + 1)))
        gb = growth_bound(u)
        for _ in range(10 ** 4):
            r = 1.0 + 99.0 * rng.random()
            theta = math.pi * (0.001 + 0.998 * rng.random())
            z = r * cmath.exp(1j * theta)
            assert abs(u(z)) <= gb.envelope(z) * (1.0 + 1e-9), f"violation at {z}"
    _passed("c11 growth-envelopes", "50 functions x 10^4 points inside the envelope")


def test_c12_full_verification_budget():
    start = time.monotonic()
    report = run_suite("all", seed=0)
    elapsed = time.monotonic() - start
    assert report.failures == 0, report.details
    assert elapsed < 180.0, f"took {elapsed:.2f}s"
    _passed("c12 full-verification-budget",
            f"{report.cases} checks, 0 failures, {elapsed:.2f}s (< 180s)")
