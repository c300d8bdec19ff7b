"""Weight parameter for the degenerate Laplacians on disc and half-plane.

The parameter is carried in two layers: a float ``value`` used by all
numerical paths, and an optional exact ``Fraction`` used by the exact
polynomial algebra.  Parsing "num/den" keeps the rational exact; float
input is promoted to its exact binary fraction, so exact identities
still hold for the alpha actually represented.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

AlphaLike = "AlphaParam | Fraction | int | float | str"


@dataclass(frozen=True)
class AlphaParam:
    value: float
    exact: Fraction | None = None

    @property
    def half_plane_valid(self) -> bool:
        """True exactly when alpha > -1 (power weights on the half-plane exist)."""
        return self.value > -1.0

    @classmethod
    def coerce(cls, a) -> "AlphaParam":
        if isinstance(a, AlphaParam):
            return a
        if isinstance(a, str):
            return cls.parse(a)
        if isinstance(a, Fraction):
            return cls(float(a), a)
        if isinstance(a, int):
            return cls(float(a), Fraction(a))
        if isinstance(a, float):
            # exact binary fraction of the given float; no rounding involved
            return cls(a, Fraction(a))
        raise TypeError(f"cannot interpret {a!r} as an alpha parameter")

    @classmethod
    def parse(cls, text: str) -> "AlphaParam":
        text = text.strip()
        try:
            if "/" in text:
                frac = Fraction(text)
                return cls(float(frac), frac)
            if "." in text or "e" in text or "E" in text:
                return cls.coerce(float(text))
            return cls.coerce(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"unparseable alpha {text!r}") from exc

    def require_exact(self) -> Fraction:
        if self.exact is None:
            raise DomainError("operation requires an exact rational alpha")
        return self.exact

    def as_text(self) -> str:
        if self.exact is not None:
            return f"{self.exact.numerator}/{self.exact.denominator}"
        return repr(self.value)

    def is_negative_integer(self) -> bool:
        return self.exact is not None and self.exact.denominator == 1 and self.exact < 0

    def __float__(self) -> float:
        return self.value
