"""Families of ray angles with decay exponents, and their admissibility order.

An angle theta in (0, pi) paired with a positive integer exponent eta encodes
the requirement "u(t e^(i theta)) / t^eta -> 0".  A family is admissible when
for every degree k >= 1 some angle with eta <= k has sin(k theta) != 0, which
makes the family decisive for the alpha = 0 obstruction class.  Rational
multiples of pi are kept exact as reduced fractions so that sin(k theta) = 0
is the integer test d | k; irrational angles are symbolic labels whose sine
never vanishes at integer multiples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (DomainError, EmptyFamily, HypothesisViolation, NotAdmissible,
                     StepLimit, UncomparableRepresentation)

_LAZY_VALIDATE_PREFIX = 8
_LAZY_LEQ_CAP = 256


@dataclass(frozen=True)
class Angle:
    """Angle in (0, pi): either (m/n) pi in lowest terms or a labelled irrational.

    Irrational identity is the label; the float approximation only feeds
    numerical ray sampling and ordering tie-breaks.
    """
    numerator: int | None = None
    denominator: int | None = None
    label: str | None = None
    approx: float | None = None

    @classmethod
    def rational(cls, m: int, n: int) -> "Angle":
        if n == 0:
            raise DomainError("zero denominator")
        if m * n < 0:
            raise DomainError("angle must lie in (0, pi)")
        g = math.gcd(abs(m), abs(n))
        m, n = abs(m) // g, abs(n) // g
        if not 0 < m < n:
            raise DomainError(f"({m}/{n}) pi lies outside (0, pi)")
        return cls(numerator=m, denominator=n)

    @classmethod
    def irrational(cls, label: str, approx: float) -> "Angle":
        if not label:
            raise DomainError("irrational angle needs a nonempty label")
        if not 0.0 < approx < math.pi:
            raise DomainError("angle must lie in (0, pi)")
        return cls(label=label, approx=approx)

    @property
    def is_rational(self) -> bool:
        return self.numerator is not None

    @property
    def value(self) -> float:
        if self.is_rational:
            return math.pi * self.numerator / self.denominator
        return self.approx

    def sin_vanishes_at(self, k: int) -> bool:
        """Whether sin(k theta) = 0, decided exactly (never through floats)."""
        if self.is_rational:
            return (k * self.numerator) % self.denominator == 0
        return False

    def format(self) -> str:
        if self.is_rational:
            return f"{self.numerator}/{self.denominator}"
        return f"irr:{self.label}:{self.approx!r}"

    @classmethod
    def parse(cls, text: str) -> "Angle":
        text = text.strip()
        if text.startswith("irr:"):
            try:
                _, label, approx = text.split(":", 2)
                return cls.irrational(label, float(approx))
            except ValueError as exc:
                raise DomainError(f"unparseable angle {text!r}") from exc
        if "/" in text:
            try:
                m, n = text.split("/")
                return cls.rational(int(m), int(n))
            except ValueError as exc:
                raise DomainError(f"unparseable angle {text!r}") from exc
        raise DomainError(f"unparseable angle {text!r}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Angle):
            return NotImplemented
        if self.is_rational != other.is_rational:
            return False
        if self.is_rational:
            return (self.numerator, self.denominator) == (other.numerator, other.denominator)
        return self.label == other.label

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(("rat", self.numerator, self.denominator))
        return hash(("irr", self.label))


def d_of(angle: Angle) -> int:
    """Vanishing modulus: sin(k theta) = 0 exactly when d | k; 0 for irrationals
    (the empty vanishing set)."""
    return angle.denominator if angle.is_rational else 0


class FunctionOfAngles:
    """A family of (angle, exponent) pairs, finite or lazily infinite.

    Finite families are explicit nonempty lists with distinct angles.  Lazy
    families are generated by a rule k -> Angle (1-based, rational only) with
    exponents forced to the running lcm of earlier denominators; the rule is
    validated on materialisation and a violation of d(theta_k) | lcm-freeness
    raises HypothesisViolation(k).
    """

    def __init__(self, entries=None, rule=None):
        if entries is None and rule is None:
            raise DomainError("provide entries or a rule")
        self._rule = rule
        if rule is None:
            pairs = [(a, int(e)) for a, e in entries]
            if not pairs:
                raise EmptyFamily("a family needs at least one angle")
            if any(e < 1 for _, e in pairs):
                raise DomainError("exponents must be positive integers")
            if len({a for a, _ in pairs}) != len(pairs):
                raise DomainError("angles must be distinct")
            self._entries: list[tuple[Angle, int]] = pairs
            self._lcm = None
            self._exhausted = True
        else:
            self._entries = list(entries or [])
            self._lcm = 1
            for a, _ in self._entries:
                self._lcm = math.lcm(self._lcm, d_of(a))
            self._exhausted = False

    @property
    def is_finite(self) -> bool:
        return self._rule is None

    @property
    def entries(self) -> tuple[tuple[Angle, int], ...]:
        return tuple(self._entries)

    def materialize(self, count: int) -> tuple[tuple[Angle, int], ...]:
        """Extend a lazy family's explicit prefix to at least `count` entries
        (or until the rule is exhausted); validates each new element."""
        if self.is_finite:
            return self.entries
        while len(self._entries) < count and not self._exhausted:
            k = len(self._entries) + 1
            try:
                angle = self._rule(k)
            except (StopIteration, IndexError):
                self._exhausted = True
                break
            if not isinstance(angle, Angle) or not angle.is_rational:
                raise HypothesisViolation(k, "lazy families use rational angles only")
            if any(angle == a for a, _ in self._entries):
                raise HypothesisViolation(k, f"angle {angle.format()} repeats")
            eta = self._lcm if k > 1 else 1
            if k > 1 and self._lcm % d_of(angle) == 0:
                raise HypothesisViolation(
                    k, f"denominator {d_of(angle)} already divides the running lcm {self._lcm}")
            self._entries.append((angle, eta))
            self._lcm = math.lcm(self._lcm, d_of(angle))
        return tuple(self._entries)

    def prefix_covering(self, k_max: int) -> tuple[tuple[Angle, int], ...]:
        """Entries with exponent <= k_max (materialising a lazy family as needed)."""
        if self.is_finite:
            return tuple((a, e) for a, e in self._entries if e <= k_max)
        while not self._exhausted and (not self._entries or self._entries[-1][1] <= k_max):
            self.materialize(len(self._entries) + 1)
        return tuple((a, e) for a, e in self._entries if e <= k_max)

    def eta_of(self, angle: Angle) -> int | None:
        for a, e in self._entries:
            if a == angle:
                return e
        return None

    def to_json_obj(self) -> dict:
        return {
            "kind": "finite" if self.is_finite else "lazy",
            "entries": [{"angle": a.format(), "eta": e} for a, e in self._entries],
        }

    @classmethod
    def from_json_obj(cls, data) -> "FunctionOfAngles":
        if isinstance(data, list):
            entries = [(Angle.parse(item["angle"]), int(item["eta"])) for item in data]
            return cls(entries=entries)
        entries = [(Angle.parse(item["angle"]), int(item["eta"])) for item in data["entries"]]
        if data.get("kind") == "lazy":
            angles = [a for a, _ in entries]

            def rule(k: int, pool=angles) -> Angle:
                return pool[k - 1]

            fam = cls(rule=rule)
            fam.materialize(len(angles))
            return fam
        return cls(entries=entries)


def construct_infinite(angles_or_rule) -> FunctionOfAngles:
    """Lazy family from a rule k -> Angle or an explicit angle list; exponents
    are eta_1 = 1, eta_k = lcm of the earlier denominators.  Under the
    non-divisibility hypothesis the result is admissible by construction."""
    if callable(angles_or_rule):
        fam = FunctionOfAngles(rule=angles_or_rule)
        fam.materialize(_LAZY_VALIDATE_PREFIX)
    else:
        pool = list(angles_or_rule)
        if not pool:
            raise EmptyFamily("a family needs at least one angle")

        def rule(k: int, pool=pool) -> Angle:
            return pool[k - 1]

        fam = FunctionOfAngles(rule=rule)
        fam.materialize(len(pool))
    if not fam.entries:
        raise EmptyFamily("the rule produced no angles")
    return fam


def construct_finite(prefix, tail: Angle) -> FunctionOfAngles:
    """Finite family from rational angles plus one irrational closing angle.

    Exponents follow the same lcm rule; the closing angle takes the lcm of all
    prefix denominators, so every degree past the rational coverage is caught
    by the never-vanishing sine.
    """
    if not isinstance(tail, Angle) or tail.is_rational:
        raise DomainError("the closing angle must be irrational")
    entries: list[tuple[Angle, int]] = []
    running = 1
    for i, angle in enumerate(prefix, start=1):
        if not isinstance(angle, Angle) or not angle.is_rational:
            raise HypothesisViolation(i, "prefix angles must be rational")
        if any(angle == a for a, _ in entries):
            raise HypothesisViolation(i, f"angle {angle.format()} repeats")
        if i > 1 and running % d_of(angle) == 0:
            raise HypothesisViolation(
                i, f"denominator {d_of(angle)} already divides the running lcm {running}")
        entries.append((angle, running if i > 1 else 1))
        running = math.lcm(running, d_of(angle))
    entries.append((tail, running if entries else 1))
    return FunctionOfAngles(entries=entries)


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    witness: int | None
    method: str
    limit: int | None = None

    def to_json_obj(self) -> dict:
        obj = {"admissible": self.admissible, "method": self.method}
        if self.witness is not None:
            obj["witness"] = self.witness
        if self.limit is not None:
            obj["limit"] = self.limit
        return obj


def is_admissible(foa: FunctionOfAngles, mode: str = "exact",
                  limit: int | None = None) -> AdmissibilityReport:
    """Decide admissibility.

    "exact" partitions k >= 1 by the active angle set (thresholds at the
    distinct exponents) and asks, per range, whether every active angle's sine
    dies simultaneously: with no irrational active that happens exactly at
    multiples of the lcm of active denominators, an integer divisibility
    question.  "brute" scans k = 1..limit with the exact integer sine test and
    is only meaningful for finite families.  Lazy families built by the
    construction rule are admissible by the construction theorem.
    """
    if not isinstance(foa, FunctionOfAngles):
        raise DomainError("expected a family of angles")
    if not foa.is_finite:
        foa.materialize(max(_LAZY_VALIDATE_PREFIX, len(foa.entries) + 1))
        if not foa.entries:
            raise EmptyFamily("the rule produced no angles")
        if not foa._exhausted:
            if mode == "brute":
                raise DomainError("brute force cannot decide a live infinite family")
            # a live rule under the validated hypothesis: admissible by the
            # construction theorem
            return AdmissibilityReport(True, None, "construction")
        # the rule ran dry: what remains is a finite all-rational family,
        # decided exactly like any other
    entries = foa.entries
    if not entries:
        raise EmptyFamily("empty family")
    if mode == "brute":
        if not foa.is_finite and not foa._exhausted:
            raise DomainError("brute force cannot decide a live infinite family")
        if limit is None or limit < 1:
            raise DomainError("brute-force mode needs a positive limit")
        for k in range(1, limit + 1):
            if not any(e <= k and not a.sin_vanishes_at(k) for a, e in entries):
                return AdmissibilityReport(False, k, "brute", limit)
        return AdmissibilityReport(True, None, "brute", limit)
    if mode != "exact":
        raise DomainError(f"unknown mode {mode!r}")

    thresholds = sorted({e for _, e in entries})
    if thresholds[0] > 1:
        return AdmissibilityReport(False, 1, "exact")
    for j, h in enumerate(thresholds):
        active = [a for a, e in entries if e <= h]
        if any(not a.is_rational for a in active):
            continue
        lcm = 1
        for a in active:
            lcm = math.lcm(lcm, d_of(a))
        first = lcm * -(-h // lcm)   # smallest multiple of lcm that is >= h
        if j + 1 < len(thresholds):
            if first < thresholds[j + 1]:
                return AdmissibilityReport(False, first, "exact")
        else:
            return AdmissibilityReport(False, first, "exact")
    return AdmissibilityReport(True, None, "exact")


def leq(a: FunctionOfAngles, b: FunctionOfAngles) -> bool:
    """Partial order: a <= b when every angle of a appears in b with a smaller
    or equal exponent (a demands at least as much decay on at least as few
    rays, so a's vanishing conclusion is implied by b's).

    Irrational angles match by label only; if a holds an irrational that b
    cannot be shown to contain or exclude, the comparison is refused.
    """
    if not a.is_finite:
        a.materialize(_LAZY_LEQ_CAP)
        if not a._exhausted:
            raise UncomparableRepresentation("left family has an undecidable tail")
    if not b.is_finite:
        b.materialize(_LAZY_LEQ_CAP)
    b_entries = dict(b.entries)
    b_has_irrational = any(not ang.is_rational for ang in b_entries)
    for angle, eta in a.entries:
        match = b_entries.get(angle)
        if match is None:
            if not b.is_finite and not b._exhausted and angle.is_rational:
                raise UncomparableRepresentation(
                    f"cannot decide whether {angle.format()} appears in the lazy tail")
            if not angle.is_rational and b_has_irrational:
                raise UncomparableRepresentation(
                    f"irrational labels {angle.format()} cannot be matched")
            return False
        if eta < match:
            return False
    return True


def is_minimal(foa: FunctionOfAngles) -> bool:
    """Whether the family is a minimal admissible one.

    Minimal families are exactly the lcm-constructed ones: exponents 1 = eta_1
    < eta_2 < ... with eta_k the lcm of the earlier denominators, each new
    denominator not dividing that lcm, and (finite case) a single irrational
    angle closing the list.  Raises NotAdmissible for inadmissible input.
    """
    report = is_admissible(foa)
    if not report.admissible:
        raise NotAdmissible(f"family fails at k = {report.witness}")
    if not foa.is_finite:
        # materialisation already enforced the construction hypothesis
        return True
    entries = sorted(foa.entries, key=lambda ae: ae[1])
    etas = [e for _, e in entries]
    if len(set(etas)) != len(etas) or etas[0] != 1:
        return False
    irrationals = [a for a, _ in entries if not a.is_rational]
    if len(irrationals) != 1 or entries[-1][0].is_rational:
        return False
    running = 1
    for i, (angle, eta) in enumerate(entries, start=1):
        expected = running if i > 1 else 1
        if eta != expected:
            return False
        if angle.is_rational:
            if i > 1 and running % d_of(angle) == 0:
                return False
            running = math.lcm(running, d_of(angle))
    return True


def lower_bound(foa: FunctionOfAngles, max_steps: int | None = None) -> FunctionOfAngles:
    """Greedy minimal admissible family below a finite admissible one.

    Walk m = 1, lcm, lcm, ...: at each stage pick, among angles usable at
    degree m (exponent <= m and sin(m theta) != 0), the irrational if any,
    else the smallest angle (ties to the smaller denominator); assign it
    exponent m and fold its denominator into the lcm.  Stops at the first
    irrational pick, which closes a minimal family.
    """
    if not foa.is_finite:
        raise DomainError("lower bound construction takes a finite family")
    report = is_admissible(foa)
    if not report.admissible:
        raise NotAdmissible(f"family fails at k = {report.witness}")
    entries = foa.entries
    if max_steps is None:
        max_steps = 4 * len(entries) + 8
    chosen_prefix: list[Angle] = []
    m = 1
    for _ in range(max_steps):
        eligible = [a for a, e in entries if e <= m and not a.sin_vanishes_at(m)]
        if not eligible:
            raise NotAdmissible(f"no usable angle at degree {m}")
        pick = min(eligible, key=lambda a: (a.is_rational, a.value, d_of(a), a.label or ""))
        if not pick.is_rational:
            return construct_finite(chosen_prefix, pick)
        chosen_prefix.append(pick)
        m = math.lcm(m, d_of(pick))
    raise StepLimit(f"greedy descent did not close after {max_steps} steps")
