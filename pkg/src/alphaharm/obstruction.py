"""The finite-degree obstruction class on the upper half-plane.

Members are u(z) = sum_k c_k (Im z)^(alpha+1) p_k(z) with the homogeneous
kernel polynomials p_k.  This module carries their evaluation, growth
envelopes, ray asymptotics, coefficient recovery from black-box samples,
and the three uniqueness tests (sequence, geodesic, ray) together with
the counterexample machinery that motivates them.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import AngleDegenerate, DomainError, IllConditioned, NotAdmissible
from .bivar import p_value
from .params import AlphaParam

_RAY_T = 1e3                      # base abscissa for limit decisions
_RECOVER_T = 4.0                  # base abscissa for coefficient recovery nodes
_PRIMARY_ANGLES = (math.pi / 2, math.pi / 3, math.pi / 5)
_DEGENERACY_FLOOR = 1e-6


@dataclass(frozen=True)
class ObstructionFunction:
    alpha: AlphaParam
    coeffs: tuple[complex, ...]

    def __post_init__(self):
        a = AlphaParam.coerce(self.alpha)
        object.__setattr__(self, "alpha", a)
        if not a.half_plane_valid:
            raise DomainError("obstruction class requires alpha > -1")
        cs = [complex(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        """Index of the top nonzero coefficient; -1 for the zero function."""
        return len(self.coeffs) - 1

    def eval(self, z: complex) -> complex:
        z = complex(z)
        if z.imag <= 0:
            raise DomainError("evaluation point must lie in the upper half-plane")
        if not self.coeffs:
            return 0j
        a = self.alpha.value
        weight = z.imag ** (a + 1.0)
        total = 0j
        for k, c in enumerate(self.coeffs):
            if c != 0:
                total += c * p_value(a, k, z)
        return weight * total

    __call__ = eval

    def to_json_obj(self) -> dict:
        return {
            "alpha": self.alpha.as_text(),
            "coeffs": [{"re": c.real, "im": c.imag} for c in self.coeffs],
        }

    @classmethod
    def from_json_obj(cls, data: dict) -> "ObstructionFunction":
        alpha = AlphaParam.parse(str(data["alpha"]))
        coeffs = [complex(float(e["re"]), float(e["im"])) for e in data["coeffs"]]
        return cls(alpha, tuple(coeffs))


def v0_form(u: ObstructionFunction) -> dict[int, complex]:
    """Rewrite an alpha = 0 member as sum c_k Im(z^(k+1)): index map k -> k+1."""
    if u.alpha.value != 0.0:
        raise DomainError("the Im(z^k) form exists only at alpha = 0")
    return {k + 1: c for k, c in enumerate(u.coeffs) if c != 0}


def from_v0_coefficients(coeffs: dict[int, complex]) -> ObstructionFunction:
    """Inverse of v0_form: build the alpha = 0 member with given Im(z^k) weights."""
    if any(k < 1 for k in coeffs):
        raise DomainError("Im(z^k) indices start at 1")
    top = max(coeffs, default=0)
    cs = [coeffs.get(k + 1, 0j) for k in range(top)]
    return ObstructionFunction(AlphaParam.coerce(0), tuple(cs))


# -- growth -------------------------------------------------------------------------


@dataclass(frozen=True)
class GrowthBound:
    order: float
    constant: float

    def envelope(self, z: complex) -> float:
        return self.constant * (abs(z) ** 2 / z.imag) ** self.order


def _max_on_arc(g, lo: float, hi: float, samples: int = 2048) -> float:
    """Max of g over (lo, hi): dense grid plus golden-section refinement."""
    phi = (math.sqrt(5.0) - 1.0) / 2.0
    step = (hi - lo) / (samples + 1)
    xs = [lo + step * (i + 1) for i in range(samples)]
    vals = [g(x) for x in xs]
    best = max(vals)
    order = sorted(range(samples), key=lambda i: -vals[i])[:3]
    for idx in order:
        a = xs[idx] - step if idx > 0 else lo
        b = xs[idx] + step if idx < samples - 1 else hi
        c = b - phi * (b - a)
        d = a + phi * (b - a)
        for _ in range(80):
            if g(c) > g(d):
                b, d = d, c
                c = b - phi * (b - a)
            else:
                a, c = c, d
                d = a + phi * (b - a)
        best = max(best, g((a + b) / 2.0))
    return best


def growth_bound(u: ObstructionFunction) -> GrowthBound:
    """Envelope |u(z)| <= C (|z|^2 / Im z)^(n + alpha + 1), valid for |z| >= 1.

    C sums, per degree, the circle maximum of sin^(k+2 alpha+2) |p_k|; each
    factor (|z|^2/Im z)^(k+alpha+1) is then bounded by the top exponent.
    """
    a = u.alpha.value
    if not u.coeffs:
        return GrowthBound(order=a + 1.0, constant=0.0)
    n = u.degree
    constant = 0.0
    for k, c in enumerate(u.coeffs):
        if c == 0:
            continue
        exponent = k + 2.0 * a + 2.0

        def profile(theta: float, kk=k, e=exponent) -> float:
            return math.sin(theta) ** e * abs(p_value(a, kk, cmath.exp(1j * theta)))

        constant += abs(c) * _max_on_arc(profile, 0.0, math.pi)
    return GrowthBound(order=n + a + 1.0, constant=constant)


def ray_limit(u: ObstructionFunction, theta: float) -> complex:
    """Limit of u(t e^(i theta)) / t^(n + alpha + 1) as t -> infinity."""
    if not u.coeffs:
        raise DomainError("ray limit of the zero function is not defined")
    if not 0.0 < theta < math.pi:
        raise DomainError("ray angle must lie in (0, pi)")
    a = u.alpha.value
    n = u.degree
    return u.coeffs[n] * math.sin(theta) ** (a + 1.0) * p_value(a, n, cmath.exp(1j * theta))


# -- coefficient recovery --------------------------------------------------------------


@dataclass(frozen=True)
class RecoveryResult:
    """Recovered coefficients with the relative validation residual and the
    ray angles actually used (one per degree, top down)."""
    coeffs: tuple[complex, ...]
    residual: float
    angles_used: tuple[float, ...]


def _neville_to_zero(fvals: list[complex], hs: list[float]) -> complex:
    tab = list(fvals)
    n = len(tab)
    for m in range(1, n):
        for i in range(n - m):
            tab[i] = tab[i + 1] + (tab[i] - tab[i + 1]) * hs[i + m] / (hs[i + m] - hs[i])
    return tab[0]


def recover_coefficients(alpha, evaluator, n_max: int, thetas=None,
                         tol: float = 1e-6) -> RecoveryResult:
    """Recover c_0..c_[n_max] of a (possibly black-box) member from ray samples.

    Top-down peeling: for each degree k the ray value u(t e^(i theta)) / t^(k+alpha+1)
    is a finite expansion in 1/t, extrapolated to t = infinity by Richardson/Neville
    over the geometric nodes t = T 2^j, j = 0..k, then the recovered term is
    subtracted and the recursion descends.  Small T keeps the error cascade flat:
    contamination of stage k by the stage-m estimate error grows like t^(m-k).

    Angles walk theta = pi/2 -> pi/3 -> pi/5 when |p_k| at the angle falls under
    the degeneracy floor (only possible at alpha = 0).  Raises AngleDegenerate if
    no angle works and IllConditioned if the validation residual shows the model
    does not fit (wrong n_max or evaluator outside the class).
    """
    a = AlphaParam.coerce(alpha)
    if not a.half_plane_valid:
        raise DomainError("recovery requires alpha > -1")
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    av = a.value
    angle_pool = tuple(thetas) if thetas else _PRIMARY_ANGLES

    estimates = [0j] * (n_max + 1)
    used: list[float] = []

    def peeled(z: complex) -> complex:
        val = evaluator(z)
        weight = z.imag ** (av + 1.0)
        for k, c in enumerate(estimates):
            if c != 0:
                val -= c * weight * p_value(av, k, z)
        return val

    for k in range(n_max, -1, -1):
        theta = None
        beta = 0j
        for cand in angle_pool:
            pk = p_value(av, k, cmath.exp(1j * cand))
            if abs(pk) >= _DEGENERACY_FLOOR:
                theta = cand
                beta = math.sin(cand) ** (av + 1.0) * pk
                break
        if theta is None:
            raise AngleDegenerate(f"every working angle degenerates at degree {k}")
        used.append(theta)
        direction = cmath.exp(1j * theta)
        ts = [_RECOVER_T * (2.0 ** j) for j in range(k + 1)]
        fv = [peeled(t * direction) / (t ** (k + av + 1.0)) for t in ts]
        if len(fv) == 1:
            limit = fv[0]
        else:
            limit = _neville_to_zero(fv, [1.0 / t for t in ts])
        estimates[k] = limit / beta

    # validation at nodes disjoint from the recovery grid
    residual = 0.0
    scale = 1.0
    for t in (3.7, 9.1, 23.3):
        z = t * cmath.exp(1j * angle_pool[0])
        model = 0j
        weight = z.imag ** (av + 1.0)
        for k, c in enumerate(estimates):
            model += c * weight * p_value(av, k, z)
        actual = evaluator(z)
        residual = max(residual, abs(actual - model))
        scale = max(scale, abs(actual))
    residual /= scale
    if residual > 1e-2:
        raise IllConditioned(
            f"relative validation residual {residual:.3e}: "
            "sampled function is not a degree <= n_max member")
    return RecoveryResult(tuple(estimates), residual, tuple(used))


# -- uniqueness tests -------------------------------------------------------------------


def _vanishes(ratios: list[float], tol: float) -> bool:
    """Smallness plus decay: tail ratio below tol and each of the last steps
    at most half the previous plus tol."""
    if len(ratios) < 3:
        raise DomainError("need at least three samples to judge decay")
    tail = ratios[-3:]
    if tail[-1] >= tol:
        return False
    return all(tail[i + 1] <= tail[i] / 2.0 + tol for i in range(2))


def sequence_ratio_vanishes(samples, alpha, tol: float = 1e-6) -> bool:
    """Raw decay check of u(z_j) / (Im z_j)^(alpha+1) along a sample sequence.

    No domain guard: at alpha = 0 this check is genuinely unsound (it reports
    vanishing along zero lines of nonzero members), which is exactly the
    phenomenon the guarded test refuses to touch.
    """
    a = float(AlphaParam.coerce(alpha).value)
    pts = [(complex(z), complex(v)) for z, v in samples]
    if len(pts) < 3:
        raise DomainError("need at least three samples")
    mags = [abs(z) for z, _ in pts]
    if any(b <= a_ for a_, b in zip(mags, mags[1:])):
        raise DomainError("sample moduli must be strictly increasing")
    if any(z.imag <= 0 for z, _ in pts):
        raise DomainError("samples must lie in the upper half-plane")
    ratios = [abs(v) / (z.imag ** (a + 1.0)) for z, v in pts]
    return _vanishes(ratios, tol)


def uniqueness_test_sequence(samples, alpha, tol: float = 1e-6) -> bool:
    """Verdict "consistent with u = 0" from weighted decay along one unbounded
    sequence; sound for alpha != 0 members of the obstruction class."""
    a = AlphaParam.coerce(alpha)
    if a.value == 0.0:
        raise DomainError("the sequence test is unsound at alpha = 0; "
                          "use geodesic or ray tests there")
    if not a.half_plane_valid:
        raise DomainError("sequence test requires alpha > -1")
    return sequence_ratio_vanishes(samples, a, tol)


def geodesic_vanishes(u, x: float, tol: float = 1e-6, t0: float = _RAY_T) -> bool:
    """Decay of u(x + iy) / y along one vertical geodesic, y in {t0, 2 t0, 4 t0}."""
    ratios = [abs(u(complex(x, y))) / y for y in (t0, 2.0 * t0, 4.0 * t0)]
    return _vanishes(ratios, tol)


def uniqueness_test_geodesics(u, x1: float, x2: float, tol: float = 1e-6,
                              t0: float = _RAY_T) -> bool:
    """Two-geodesic test at alpha = 0: certifies u = 0 for members when the
    weighted limit vanishes along both verticals.  One geodesic is not enough:
    Im((z-a)^2) = 2(x-a)y dies along x = a while being a nonzero member."""
    if x1 == x2:
        raise DomainError("the two geodesics must be distinct")
    return geodesic_vanishes(u, x1, tol, t0) and geodesic_vanishes(u, x2, tol, t0)


def uniqueness_test_rays(u, foa, tol: float = 1e-6, n_max: int = 8,
                         t0: float = _RAY_T) -> bool:
    """Ray test at alpha = 0 against an admissible family of angles.

    For every angle theta with exponent eta the ratio u(t e^(i theta)) / t^eta
    must vanish; admissibility makes the collection decisive for members of
    degree <= n_max in the Im(z^k) basis.
    """
    from .angles import is_admissible

    report = is_admissible(foa)
    if not report.admissible:
        raise NotAdmissible(f"family fails at k = {report.witness}")
    if foa.is_finite:
        entries = foa.entries
    else:
        entries = foa.prefix_covering(n_max)
    for angle, eta in entries:
        theta = angle.value
        ratios = []
        for t in (t0, 2.0 * t0, 4.0 * t0):
            z = t * cmath.exp(1j * theta)
            ratios.append(abs(u(z)) / t ** eta)
        if not _vanishes(ratios, tol):
            return False
    return True
