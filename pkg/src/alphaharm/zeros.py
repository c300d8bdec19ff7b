"""Zero location for the kernel polynomials and their one-variable profiles.

The homogeneous kernel polynomial of degree k restricts on the unit circle to
a polynomial with positive coefficients (alpha > -1), so the classical
positive-coefficient annulus bound applies: all zeros of sum a_j w^j lie in
min(a_j / a_(j+1)) <= |w| <= max(a_j / a_(j+1)).  That single bound already
decides circle-freeness on either side of |w| = 1 except at alpha = 0, where
the profile is the geometric sum and every nontrivial root sits exactly on
the circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, NoConvergence, NonPositiveCoefficient
from .bivar import p_value, s_poly
from .params import AlphaParam

INSIDE = "circle_free_inside"
OUTSIDE = "circle_free_outside"
UNDECIDED = "undecided"


@dataclass(frozen=True)
class AnnulusCertificate:
    """Zeros of the certified polynomial lie within r <= |w| <= R."""
    r: float
    R: float
    verdict: str
    r_exact: Fraction | None = None
    R_exact: Fraction | None = None

    def to_json_obj(self) -> dict:
        obj = {"r": self.r, "R": self.R, "verdict": self.verdict}
        if self.r_exact is not None:
            obj["r_exact"] = f"{self.r_exact.numerator}/{self.r_exact.denominator}"
        if self.R_exact is not None:
            obj["R_exact"] = f"{self.R_exact.numerator}/{self.R_exact.denominator}"
        return obj


def ek_annulus(coeffs) -> AnnulusCertificate:
    """Positive-coefficient annulus bound from consecutive coefficient ratios.

    Exact inputs (int / Fraction throughout) keep the radii exact; any float
    in the list drops the certificate to float radii.
    """
    cs = list(coeffs)
    if len(cs) < 2:
        raise DomainError("need a polynomial of degree >= 1")
    exact = all(isinstance(c, (int, Fraction)) for c in cs)
    for c in cs:
        if (c if exact else float(c)) <= 0:
            raise NonPositiveCoefficient("annulus bound needs strictly positive coefficients")
    if exact:
        ratios = [Fraction(cs[j]) / Fraction(cs[j + 1]) for j in range(len(cs) - 1)]
        r_ex, R_ex = min(ratios), max(ratios)
        r, R = float(r_ex), float(R_ex)
    else:
        fs = [float(c) for c in cs]
        ratios_f = [fs[j] / fs[j + 1] for j in range(len(fs) - 1)]
        r_ex = R_ex = None
        r, R = min(ratios_f), max(ratios_f)
    if R < 1.0 or (R_ex is not None and R_ex < 1):
        verdict = INSIDE
    elif r > 1.0 or (r_ex is not None and r_ex > 1):
        verdict = OUTSIDE
    else:
        verdict = UNDECIDED
    return AnnulusCertificate(r, R, verdict, r_ex, R_ex)


def certify_p_circle_free(alpha, k: int) -> AnnulusCertificate:
    """Annulus certificate for the circle profile of the degree-k kernel polynomial.

    Ratios are (j+1) / (alpha+j+1): for alpha > 0 all zeros are inside the unit
    circle, for -1 < alpha < 0 outside, and alpha = 0 is genuinely undecided
    (roots of the geometric sum lie on the circle itself).
    """
    a = AlphaParam.coerce(alpha)
    if not a.half_plane_valid:
        raise DomainError("positive-coefficient certificate requires alpha > -1")
    if k < 1:
        raise DomainError("degree must be >= 1")
    if a.exact is not None:
        coeffs = [_poch_fraction(a.exact, j) / math.factorial(j) for j in range(k + 1)]
    else:
        av = a.value
        coeffs = [1.0]
        for j in range(1, k + 1):
            coeffs.append(coeffs[-1] * (av + j) / j)
    return ek_annulus(coeffs)


def _poch_fraction(a: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= a + 1 + i
    return out


def roots(coeffs, residual_tol: float = 1e-10) -> list[complex]:
    """All roots of sum_j coeffs[j] w^j, companion-matrix seeded, Newton polished.

    Residuals are backward-relative: |p(w)| / max(1, sum |a_j| |w|^j) must fall
    under residual_tol for every root, else NoConvergence.  Returned sorted by
    (real, imag) for reproducibility.
    """
    cs = [complex(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) < 2:
        raise DomainError("need a polynomial of degree >= 1")
    seeds = np.roots(np.array(cs[::-1], dtype=complex))
    ds = [j * c for j, c in enumerate(cs)][1:]

    def horner(poly, w):
        acc = 0j
        for c in reversed(poly):
            acc = acc * w + c
        return acc

    out = []
    for w in seeds:
        w = complex(w)
        for _ in range(60):
            pw = horner(cs, w)
            scale = max(1.0, sum(abs(c) * abs(w) ** j for j, c in enumerate(cs)))
            if abs(pw) <= residual_tol * scale * 0.01:
                break
            dpw = horner(ds, w)
            if dpw == 0:
                break
            w = w - pw / dpw
        pw = horner(cs, w)
        scale = max(1.0, sum(abs(c) * abs(w) ** j for j, c in enumerate(cs)))
        if abs(pw) > residual_tol * scale:
            raise NoConvergence(f"root polish stalled at residual {abs(pw) / scale:.3e}")
        out.append(w)
    out.sort(key=lambda w: (w.real, w.imag))
    return out


def kernel_profile_roots(alpha, k: int, residual_tol: float = 1e-10) -> list[complex]:
    """Roots of the circle profile s_k of the degree-k kernel polynomial."""
    a = AlphaParam.coerce(alpha)
    if a.exact is not None:
        exact = [_poch_fraction(a.exact, j) / math.factorial(j) for j in range(k + 1)]
        cs = [float(c) for c in exact]
    else:
        poly = s_poly(a, k)
        cs = [complex(poly.coefficient(k - j, j)).real for j in range(k + 1)]
    return roots(cs, residual_tol)


def min_modulus_on_circle(alpha, k: int, grid: int = 4096) -> float:
    """min over |z| = 1 of |p_k(z)|, dense grid plus golden-section refinement.

    On the circle |p_k(e^(i theta))| = |s_k(e^(-2 i theta))|, so the scan is a
    vectorised polynomial evaluation over theta.
    """
    a = AlphaParam.coerce(alpha)
    if not a.half_plane_valid:
        raise DomainError("requires alpha > -1")
    if k == 0:
        return 1.0
    av = a.value
    cs = [1.0]
    for j in range(1, k + 1):
        cs.append(cs[-1] * (av + j) / j)
    thetas = np.linspace(0.0, math.pi, grid, endpoint=False)
    w = np.exp(-2j * thetas)
    vals = np.zeros_like(w)
    for c in reversed(cs):
        vals = vals * w + c
    mags = np.abs(vals)
    order = np.argsort(mags)[:3]
    best = float(mags.min())
    step = math.pi / grid
    gold = (math.sqrt(5.0) - 1.0) / 2.0

    def f(theta: float) -> float:
        return abs(p_value(av, k, complex(math.cos(theta), math.sin(theta))))

    for idx in order:
        lo = float(thetas[idx]) - step
        hi = float(thetas[idx]) + step
        c1 = hi - gold * (hi - lo)
        d1 = lo + gold * (hi - lo)
        for _ in range(70):
            if f(c1) < f(d1):
                hi, d1 = d1, c1
                c1 = hi - gold * (hi - lo)
            else:
                lo, c1 = c1, d1
                d1 = lo + gold * (hi - lo)
        best = min(best, f((lo + hi) / 2.0))
    return best
