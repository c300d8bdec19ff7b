"""Exact bivariate polynomial algebra in z and conj(z) over the Gaussian rationals.

Polynomials are sparse maps (i, j) -> coefficient for the monomial
z^i conj(z)^j.  All identities in this module are exact; floats appear
only in the evaluation shadow at the very end.
"""

from __future__ import annotations

import math
from fractions import Fraction
from threading import Lock

from .errors import DecompositionFailure, DomainError
from .hypergeom import pochhammer
from .params import AlphaParam
from .rationals import GR_ONE, GaussianRational


class BivarPoly:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int], GaussianRational] | None = None):
        cleaned = {}
        for (i, j), c in (coeffs or {}).items():
            c = GaussianRational.coerce(c)
            if c:
                if i < 0 or j < 0:
                    raise DomainError("monomial exponents must be nonnegative")
                cleaned[(int(i), int(j))] = c
        self._coeffs = cleaned

    # -- construction helpers -------------------------------------------------
    @classmethod
    def zero(cls) -> "BivarPoly":
        return cls()

    @classmethod
    def one(cls) -> "BivarPoly":
        return cls({(0, 0): GR_ONE})

    @classmethod
    def monomial(cls, i: int, j: int, coeff=GR_ONE) -> "BivarPoly":
        return cls({(i, j): GaussianRational.coerce(coeff)})

    # -- ring operations -------------------------------------------------------
    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            out[key] = out.get(key, GaussianRational()) + c
        return BivarPoly(out)

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            out[key] = out.get(key, GaussianRational()) - c
        return BivarPoly(out)

    def __neg__(self) -> "BivarPoly":
        return BivarPoly({k: -c for k, c in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, BivarPoly):
            out: dict[tuple[int, int], GaussianRational] = {}
            for (i1, j1), c1 in self._coeffs.items():
                for (i2, j2), c2 in other._coeffs.items():
                    key = (i1 + i2, j1 + j2)
                    prod = c1 * c2
                    out[key] = out.get(key, GaussianRational()) + prod
            return BivarPoly(out)
        scalar = GaussianRational.coerce(other)
        return BivarPoly({k: c * scalar for k, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, BivarPoly) and self._coeffs == other._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # -- calculus ---------------------------------------------------------------
    def dz(self) -> "BivarPoly":
        return BivarPoly({(i - 1, j): c * i for (i, j), c in self._coeffs.items() if i > 0})

    def dzbar(self) -> "BivarPoly":
        return BivarPoly({(i, j - 1): c * j for (i, j), c in self._coeffs.items() if j > 0})

    def conjugate(self) -> "BivarPoly":
        return BivarPoly({(j, i): c.conjugate() for (i, j), c in self._coeffs.items()})

    # -- structure ----------------------------------------------------------------
    def coefficient(self, i: int, j: int) -> GaussianRational:
        return self._coeffs.get((i, j), GaussianRational())

    def terms(self):
        """Terms in graded order: ascending total degree, then ascending conj power."""
        return sorted(self._coeffs.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][1]))

    def total_degree(self) -> int:
        """Largest i+j over nonzero terms; -1 for the zero polynomial."""
        if not self._coeffs:
            return -1
        return max(i + j for (i, j) in self._coeffs)

    def is_homogeneous(self) -> bool:
        degrees = {i + j for (i, j) in self._coeffs}
        return len(degrees) <= 1

    def homogeneous_parts(self) -> list["BivarPoly"]:
        """Nonzero homogeneous parts in ascending degree; their sum is the polynomial."""
        buckets: dict[int, dict[tuple[int, int], GaussianRational]] = {}
        for (i, j), c in self._coeffs.items():
            buckets.setdefault(i + j, {})[(i, j)] = c
        return [BivarPoly(buckets[d]) for d in sorted(buckets)]

    # -- evaluation -----------------------------------------------------------------
    def evaluate(self, z: complex) -> complex:
        """Float shadow: coefficients converted once, Horner over grouped powers of z."""
        if not self._coeffs:
            return 0j
        w = complex(z).conjugate()
        by_i: dict[int, dict[int, complex]] = {}
        for (i, j), c in self._coeffs.items():
            by_i.setdefault(i, {})[j] = complex(c)
        total = 0j
        last_i = None
        for i in sorted(by_i, reverse=True):
            if last_i is not None:
                total *= complex(z) ** (last_i - i)
            inner = 0j
            rows = by_i[i]
            for j in range(max(rows), -1, -1):
                inner = inner * w + rows.get(j, 0j)
            total += inner
            last_i = i
        if last_i:
            total *= complex(z) ** last_i
        return total

    __call__ = evaluate

    # -- serialization -----------------------------------------------------------------
    def to_json_obj(self) -> list[dict]:
        out = []
        for (i, j), c in self.terms():
            re_s, im_s = c.as_json_pair()
            out.append({"i": i, "j": j, "re": re_s, "im": im_s})
        return out

    @classmethod
    def from_json_obj(cls, data: list[dict]) -> "BivarPoly":
        coeffs = {}
        for entry in data:
            coeffs[(int(entry["i"]), int(entry["j"]))] = GaussianRational.from_json_pair(
                str(entry["re"]), str(entry["im"]))
        return cls(coeffs)

    def __repr__(self) -> str:
        if not self._coeffs:
            return "BivarPoly(0)"
        bits = [f"{c!r}*z^{i}*w^{j}" for (i, j), c in self.terms()]
        return "BivarPoly(" + " + ".join(bits) + ")"


# -- the special polynomial families ------------------------------------------------


def _series_coefficient(alpha: Fraction, j: int) -> GaussianRational:
    # (alpha+1)_j / j!
    return GaussianRational.coerce(pochhammer(alpha + 1, j) / math.factorial(j))


def s_poly(alpha, k: int) -> BivarPoly:
    """Univariate section sum_{j<=k} ((alpha+1)_j / j!) z^j."""
    a = AlphaParam.coerce(alpha).require_exact()
    if k < 0:
        raise DomainError("s_poly needs k >= 0")
    return BivarPoly({(j, 0): _series_coefficient(a, j) for j in range(k + 1)})


def p_poly(alpha, k: int) -> BivarPoly:
    """Homogeneous kernel polynomial sum_{j<=k} ((alpha+1)_j / j!) z^(k-j) conj(z)^j."""
    a = AlphaParam.coerce(alpha).require_exact()
    if k < 0:
        raise DomainError("p_poly needs k >= 0")
    return BivarPoly({(k - j, j): _series_coefficient(a, j) for j in range(k + 1)})


_H_CACHE: dict[tuple[Fraction, int], BivarPoly] = {}
_H_LOCK = Lock()


def h_poly(alpha, k: int) -> BivarPoly:
    """Rotation polynomials: h_0 = 1 and

    h_{k+1} = (1/2)(z^2+1) dh_k/dz + (1/2)(w^2+1) dh_k/dw
              + (1/2)(z + (alpha+1) w + i alpha) h_k,   w = conj(z).

    Cached per (alpha, k); recomputation is idempotent so the cache needs
    no invalidation.
    """
    a = AlphaParam.coerce(alpha).require_exact()
    if k < 0:
        raise DomainError("h_poly needs k >= 0")
    with _H_LOCK:
        hit = _H_CACHE.get((a, k))
    if hit is not None:
        return hit
    zsq_plus = BivarPoly({(2, 0): GR_ONE, (0, 0): GR_ONE})
    wsq_plus = BivarPoly({(0, 2): GR_ONE, (0, 0): GR_ONE})
    linear = BivarPoly({
        (1, 0): GaussianRational.of(1),
        (0, 1): GaussianRational.of(a + 1),
        (0, 0): GaussianRational.of(0, a),
    })
    half = Fraction(1, 2)
    h = BivarPoly.one()
    with _H_LOCK:
        _H_CACHE.setdefault((a, 0), h)
    for m in range(1, k + 1):
        with _H_LOCK:
            cached = _H_CACHE.get((a, m))
        if cached is not None:
            h = cached
            continue
        h = (zsq_plus * h.dz() + wsq_plus * h.dzbar() + linear * h) * half
        with _H_LOCK:
            _H_CACHE.setdefault((a, m), h)
    return h


def d_alpha(alpha, p: BivarPoly) -> BivarPoly:
    """Reduced weighted Laplacian (z - conj(z)) d2p/dz dw + dp/dw - (alpha+1) dp/dz."""
    a = AlphaParam.coerce(alpha).require_exact()
    z_minus_w = BivarPoly({(1, 0): GR_ONE, (0, 1): -GR_ONE})
    return z_minus_w * p.dz().dzbar() + p.dzbar() - p.dz() * GaussianRational.of(a + 1)


def angular_derivative(p: BivarPoly) -> BivarPoly:
    """i (z dp/dz - conj(z) dp/dw): monomial z^i w^j scales by i*(i - j)."""
    return BivarPoly({(i, j): c * GaussianRational.of(0, i - j)
                      for (i, j), c in p._coeffs.items()})


def homogeneous_parts(p: BivarPoly) -> list[BivarPoly]:
    return p.homogeneous_parts()


def decompose_h_over_p(alpha, k: int) -> list[GaussianRational]:
    """Exact coefficients b_0..b_k with h_poly(alpha, k) = sum b_m p_poly(alpha, m).

    The degree-m part of h must be a multiple of p_m (leading z^m coefficient 1);
    any nonzero residual raises DecompositionFailure.
    """
    a = AlphaParam.coerce(alpha)
    h = h_poly(a, k)
    parts: dict[int, BivarPoly] = {part.total_degree(): part for part in h.homogeneous_parts()}
    out: list[GaussianRational] = []
    for m in range(k + 1):
        part = parts.pop(m, BivarPoly.zero())
        b = part.coefficient(m, 0)
        residual = part - p_poly(a, m) * b
        if residual:
            raise DecompositionFailure(f"degree-{m} part is not a multiple of p_{m}")
        out.append(b)
    if parts:
        raise DecompositionFailure(f"h_{k} has parts above degree {k}: {sorted(parts)}")
    return out


# -- exact linear algebra over the Gaussian rationals -------------------------------


def nullspace_homogeneous(alpha, k: int) -> list[BivarPoly]:
    """Exact null space of d_alpha restricted to homogeneous degree k.

    Basis monomials z^(k-j) conj(z)^j map into degree k-1; the kernel is
    computed by fraction-free-enough Gaussian elimination over the exact
    scalars (no floats anywhere).
    """
    a = AlphaParam.coerce(alpha)
    cols = k + 1
    row_index = {(k - 1 - j, j): r for r, j in enumerate(range(k))} if k > 0 else {}
    matrix = [[GaussianRational() for _ in range(cols)] for _ in range(max(k, 1))]
    for col in range(cols):
        image = d_alpha(a, BivarPoly.monomial(k - col, col))
        for (i, j), c in image._coeffs.items():
            matrix[row_index[(i, j)]][col] = c
    basis_vectors = _nullspace(matrix, cols)
    out = []
    for vec in basis_vectors:
        out.append(BivarPoly({(k - j, j): vec[j] for j in range(cols)}))
    return out


def _nullspace(matrix: list[list[GaussianRational]], cols: int) -> list[list[GaussianRational]]:
    rows = len(matrix)
    m = [row[:] for row in matrix]
    pivot_cols: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = GR_ONE / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [vi - factor * vr for vi, vr in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
        if r == rows:
            break
    free_cols = [c for c in range(cols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [GaussianRational() for _ in range(cols)]
        vec[fc] = GR_ONE
        for pr, pc in enumerate(pivot_cols):
            vec[pc] = -m[pr][fc]
        basis.append(vec)
    return basis


# -- float shadows -----------------------------------------------------------------


def p_value(alpha: float, k: int, z: complex) -> complex:
    """Float evaluation of the degree-k kernel polynomial at any real alpha."""
    w = complex(z).conjugate()
    coef = 1.0
    total = 0j
    zp = complex(z) ** k
    ratio = None if z == 0 else w / z
    for j in range(k + 1):
        if ratio is None:
            term = (z ** (k - j)) * (w ** j)
        else:
            term = zp
            zp = zp * ratio
        total += coef * term
        coef *= (alpha + 1.0 + j) / (j + 1.0)
    return total


def s_value(alpha: float, k: int, z: complex) -> complex:
    """Float evaluation of the truncated binomial-type section at any real alpha."""
    coef = 1.0
    total = 0j
    zp = 1.0 + 0j
    for j in range(k + 1):
        total += coef * zp
        zp *= z
        coef *= (alpha + 1.0 + j) / (j + 1.0)
    return total
