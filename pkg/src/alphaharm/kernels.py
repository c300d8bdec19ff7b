"""Weighted Poisson kernels on the unit disc and their rotational calculus.

Closed-form and series evaluations are kept as genuinely separate routes
so they can certify each other.  Distributions on the circle come in two
shapes: trigonometric polynomials (finite spectrum, summed exactly) and
weighted Dirac derivative combs at the boundary point 1 (polynomially
growing spectrum, summed with an explicit tail bound).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .bivar import h_poly
from .errors import DomainError
from .hypergeom import f_factor_sequence
from .params import AlphaParam

_TAIL_MARGIN = 0.1      # spend one extra digit on the truncation bound
_SERIES_CAP = 10**6


# -- conformal map ---------------------------------------------------------------


def mobius(z: complex) -> complex:
    """Half-plane uniformizer i(1+z)/(1-z); sends 0 to i and 1 to infinity."""
    z = complex(z)
    if z == 1:
        raise DomainError("mobius map has its pole at z = 1")
    return 1j * (1 + z) / (1 - z)


def mobius_deriv(z: complex) -> complex:
    z = complex(z)
    if z == 1:
        raise DomainError("mobius map has its pole at z = 1")
    return 2j / (1 - z) ** 2


# -- kernels ---------------------------------------------------------------------


def poisson_kernel(alpha, z: complex) -> complex:
    """Closed form (1-|z|^2)^(alpha+1) / ((1-z)(1-conj(z))^(alpha+1)), |z| < 1.

    Powers are principal; 1 - conj(z) has positive real part on the disc so
    the complex power is continuous there.
    """
    a = float(AlphaParam.coerce(alpha).value)
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"|z| = {abs(z)} not inside the unit disc")
    num = (1.0 - abs(z) ** 2) ** (a + 1.0)
    return num / ((1 - z) * (1 - z.conjugate()) ** (a + 1.0))


def _coeff_growth(alpha: float, x: float) -> tuple[float, float]:
    """(M, N) with |(alpha+1)_k / k! * F(-alpha,k;k+1;x)| <= M (1+k)^N for k >= 0."""
    if alpha >= 0.0:
        # factor F <= 1, and (alpha+1)_k/k! <= (1+k)^alpha / Gamma(alpha+1)
        return max(1.0, 1.0 / math.gamma(alpha + 1.0)), alpha
    if alpha > -1.0:
        # product is <= 1: the factor is <= its boundary limit k!/(alpha+1)_k
        return 1.0, 0.0
    # alpha <= -1: rising-factorial part <= max(1, |alpha+1|), factor obeys
    # the (1-x)^(alpha+1) majorant with a linear-in-k constant
    m = max(1.0, abs(alpha + 1.0)) * (1.0 - x) ** (alpha + 1.0)
    if alpha + 1.0 < 0:
        m *= max(1.0, 1.0 / (-(alpha + 1.0)))
    return m, 1.0


def _tail_start(M: float, N: float, r: float, tol: float) -> int:
    """Smallest K with M (1+K)^N r^K / (1-r) below tol (times a safety margin)."""
    target = tol * _TAIL_MARGIN
    K = 1
    while K < _SERIES_CAP:
        bound = M * (1.0 + K) ** N * r ** K / (1.0 - r)
        if bound < target:
            return K
        # geometric decay dominates eventually; step proportionally when far away
        K += 1 + int(math.log(max(bound / target, 2.0)) / max(-math.log(r), 1e-12) * 0.5)
    raise DomainError("series truncation bound did not close below the term cap")


def poisson_kernel_series(alpha, z: complex, tol: float = 1e-12) -> complex:
    """Series route: sum z^k plus the conjugate-power part with its radial factors."""
    a = AlphaParam.coerce(alpha)
    return poisson_integral(a, ToroidalDistribution.dirac(), z, tol=tol)


# -- distributions on the circle ---------------------------------------------------


@dataclass(frozen=True)
class ToroidalDistribution:
    """Either a trigonometric polynomial or a weighted sum of Dirac derivatives at 1."""

    kind: str  # "trig" | "dirac"
    coeffs: tuple[tuple[int, complex], ...] = field(default_factory=tuple)
    orders: tuple[tuple[int, complex], ...] = field(default_factory=tuple)

    @classmethod
    def trig_poly(cls, coeffs: dict[int, complex]) -> "ToroidalDistribution":
        cleaned = tuple(sorted((int(k), complex(c)) for k, c in coeffs.items() if c != 0))
        return cls(kind="trig", coeffs=cleaned)

    @classmethod
    def dirac(cls, order: int = 0, weight: complex = 1.0) -> "ToroidalDistribution":
        return cls.dirac_comb([(order, weight)])

    @classmethod
    def dirac_comb(cls, orders) -> "ToroidalDistribution":
        cleaned = []
        for m, w in orders:
            if m < 0:
                raise DomainError("derivative order must be >= 0")
            if w != 0:
                cleaned.append((int(m), complex(w)))
        return cls(kind="dirac", orders=tuple(sorted(cleaned)))

    def fourier(self, k: int) -> complex:
        """Coefficient at frequency k: table lookup (trig) or sum of w (ik)^m (dirac)."""
        if self.kind == "trig":
            for kk, c in self.coeffs:
                if kk == k:
                    return c
            return 0j
        return sum(w * (1j * k) ** m for m, w in self.orders) if self.orders else 0j

    def derivative(self) -> "ToroidalDistribution":
        if self.kind == "trig":
            return ToroidalDistribution.trig_poly({k: 1j * k * c for k, c in self.coeffs})
        return ToroidalDistribution.dirac_comb([(m + 1, w) for m, w in self.orders])

    def growth(self) -> tuple[float, float]:
        """(M, N) with |fourier(k)| <= M (1+|k|)^N."""
        if self.kind == "trig":
            return (max((abs(c) for _, c in self.coeffs), default=0.0), 0.0)
        if not self.orders:
            return (0.0, 0.0)
        return (sum(abs(w) for _, w in self.orders), float(max(m for m, _ in self.orders)))

    def spectrum(self) -> "SpectrumSet":
        if self.kind == "trig":
            return SpectrumSet.finite(k for k, c in self.coeffs if c != 0)
        if not self.orders:
            return SpectrumSet.finite(())
        # integer zeros of q(ik), q(t) = sum w_m t^m; Cauchy bound on |roots|
        top = max(m for m, _ in self.orders)
        w_top = next(w for m, w in self.orders if m == top)
        if top == 0:
            return SpectrumSet.all_integers()
        bound = 1.0 + sum(abs(w) for m, w in self.orders if m != top) / abs(w_top)
        zeros = []
        for k in range(-int(bound) - 1, int(bound) + 2):
            val = self.fourier(k)
            scale = max(1.0, sum(abs(w) * abs(k) ** m for m, w in self.orders))
            if abs(val) <= 1e-12 * scale:
                zeros.append(k)
        return SpectrumSet.all_integers(excluded=zeros)

    def to_json_obj(self) -> dict:
        if self.kind == "trig":
            return {"kind": "trig",
                    "coeffs": [{"k": k, "re": c.real, "im": c.imag} for k, c in self.coeffs]}
        return {"kind": "dirac",
                "orders": [{"m": m, "re": w.real, "im": w.imag} for m, w in self.orders]}

    @classmethod
    def from_json_obj(cls, data: dict) -> "ToroidalDistribution":
        if data.get("kind") == "trig":
            return cls.trig_poly({int(e["k"]): complex(float(e["re"]), float(e["im"]))
                                  for e in data["coeffs"]})
        if data.get("kind") == "dirac":
            return cls.dirac_comb([(int(e["m"]), complex(float(e["re"]), float(e["im"])))
                                   for e in data["orders"]])
        raise DomainError(f"unknown distribution kind {data.get('kind')!r}")


def poisson_integral(alpha, f: ToroidalDistribution, z: complex, tol: float = 1e-12) -> complex:
    """Weighted Poisson extension of f at z, summed from its Fourier side."""
    a = AlphaParam.coerce(alpha)
    av = float(a.value)
    z = complex(z)
    r = abs(z)
    if r >= 1.0:
        raise DomainError(f"|z| = {r} not inside the unit disc")
    x = r * r
    zb = z.conjugate()

    if f.kind == "trig":
        if not f.coeffs:
            return 0j
        neg = [-k for k, _ in f.coeffs if k < 0]
        fs = f_factor_sequence(a, max(neg), x) if neg else []
        total = 0j
        for k, c in f.coeffs:
            if k >= 0:
                total += c * z ** k
            else:
                kk = -k
                total += c * _poch_ratio(av, kk) * fs[kk] * zb ** kk
        return total

    if not f.orders:
        return 0j
    M, N = f.growth()
    if r == 0.0:
        return f.fourier(0) + 0j
    Mc, Nc = _coeff_growth(av, x)
    K = max(_tail_start(M, N, r, tol), _tail_start(M * Mc, N + Nc, r, tol))
    fs = f_factor_sequence(a, K, x)
    total = f.fourier(0) + 0j
    zp = 1 + 0j
    zbp = 1 + 0j
    poch = 1.0
    for k in range(1, K + 1):
        zp *= z
        zbp *= zb
        poch *= (av + k) / k
        total += f.fourier(k) * zp
        total += f.fourier(-k) * poch * fs[k] * zbp
    return total


def _poch_ratio(alpha: float, k: int) -> float:
    out = 1.0
    for j in range(1, k + 1):
        out *= (alpha + j) / j
    return out


# -- spectra ----------------------------------------------------------------------


@dataclass(frozen=True)
class SpectrumSet:
    """Set of nonvanishing Fourier frequencies: all of Z, a finite set, or a
    half line {start, start+1, ...}, each minus a finite excluded set."""

    kind: str  # "all" | "finite" | "half_line"
    start: int | None = None
    values: frozenset[int] | None = None
    excluded: frozenset[int] = frozenset()

    @classmethod
    def all_integers(cls, excluded=()) -> "SpectrumSet":
        return cls(kind="all", excluded=frozenset(int(k) for k in excluded))

    @classmethod
    def finite(cls, values) -> "SpectrumSet":
        return cls(kind="finite", values=frozenset(int(v) for v in values))

    @classmethod
    def half_line(cls, start: int, excluded=()) -> "SpectrumSet":
        s = int(start)
        exc = {int(k) for k in excluded if int(k) >= s}
        while s in exc:
            exc.discard(s)
            s += 1
        return cls(kind="half_line", start=s, excluded=frozenset(exc))

    def contains(self, k: int) -> bool:
        if self.kind == "finite":
            return k in self.values
        if k in self.excluded:
            return False
        if self.kind == "all":
            return True
        return k >= self.start

    def intersect(self, other: "SpectrumSet") -> "SpectrumSet":
        if self.kind == "finite":
            return SpectrumSet.finite(v for v in self.values if other.contains(v))
        if other.kind == "finite":
            return other.intersect(self)
        excluded = set(self.excluded) | set(other.excluded)
        if self.kind == "all" and other.kind == "all":
            return SpectrumSet.all_integers(excluded)
        start = max((s.start for s in (self, other) if s.kind == "half_line"))
        return SpectrumSet.half_line(start, excluded)

    def to_json_obj(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == "finite":
            out["values"] = sorted(self.values)
        else:
            out["excluded"] = sorted(self.excluded)
            if self.kind == "half_line":
                out["start"] = self.start
        return out


def spectrum(alpha) -> SpectrumSet:
    """Nonvanishing frequencies of the weighted kernel: all of Z, except that a
    negative integer alpha kills every frequency below alpha+1."""
    a = AlphaParam.coerce(alpha)
    if a.is_negative_integer():
        return SpectrumSet.half_line(int(a.exact) + 1)
    return SpectrumSet.all_integers()


def spectrum_of_integral(alpha, f: ToroidalDistribution) -> SpectrumSet:
    return spectrum(alpha).intersect(f.spectrum())


# -- weighted pullback from the half-plane ------------------------------------------


def pullback_constant(alpha) -> complex:
    """Normalizer c with c * phi'(0)^(-alpha/2) = 1 for the pinned branch."""
    a = float(AlphaParam.coerce(alpha).value)
    return 2 ** (a / 2.0) * cmath.exp(1j * math.pi * a / 4.0)


def _mobius_deriv_power(alpha: float, z: complex) -> complex:
    # phi'(z)^(-alpha/2) on the branch with log phi'(0) = log 2 + i pi/2;
    # log(1 - z) is principal (Re(1-z) > 0 on the disc), so this is continuous.
    log_phi_prime = math.log(2.0) + 1j * math.pi / 2.0 - 2.0 * cmath.log(1.0 - z)
    return cmath.exp(-alpha / 2.0 * log_phi_prime)


def weighted_pullback(alpha, u, z: complex) -> complex:
    """phi'(z)^(-alpha/2) u(phi(z)) for a function u on the upper half-plane."""
    a = float(AlphaParam.coerce(alpha).value)
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"|z| = {abs(z)} not inside the unit disc")
    return _mobius_deriv_power(a, z) * u(mobius(z))


def ia_power_kernel(alpha, k: int, z: complex) -> complex:
    """k-th rotational derivative of the kernel: h_k(phi(z)) times the kernel."""
    a = AlphaParam.coerce(alpha)
    if k < 0:
        raise DomainError("derivative order must be >= 0")
    return h_poly(a, k).evaluate(mobius(z)) * poisson_kernel(a, z)


# -- finite-difference probes --------------------------------------------------------


def _fd4(g, h: float) -> complex:
    """Fourth-order central difference of g at 0 with the 5-point stencil."""
    return (8.0 * (g(h) - g(-h)) - (g(2.0 * h) - g(-2.0 * h))) / (12.0 * h)


def wirtinger_dz(f, z: complex, h: float = 1e-3) -> complex:
    fx = _fd4(lambda t: f(z + t), h)
    fy = _fd4(lambda t: f(z + 1j * t), h)
    return (fx - 1j * fy) / 2.0


def wirtinger_dzbar(f, z: complex, h: float = 1e-3) -> complex:
    fx = _fd4(lambda t: f(z + t), h)
    fy = _fd4(lambda t: f(z + 1j * t), h)
    return (fx + 1j * fy) / 2.0


def angular_derivative_fd(f, z: complex, h: float = 1e-3) -> complex:
    """i(z d/dz - conj(z) d/dw) f via rotation flow: d/dtau f(e^(i tau) z)."""
    return _fd4(lambda t: f(cmath.exp(1j * t) * z), h)


def alpha_laplacian_fd(alpha, f, z: complex, h: float = 1e-3) -> complex:
    """Weighted Laplacian d/dz ((1-|w|^2)^(-alpha) d/dw f) by composed stencils."""
    a = float(AlphaParam.coerce(alpha).value)

    def middle(w: complex) -> complex:
        return (1.0 - abs(w) ** 2) ** (-a) * wirtinger_dzbar(f, w, h)

    return wirtinger_dz(middle, z, h)
