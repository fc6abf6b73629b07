"""Exact scalar arithmetic: rationals, Gaussian rationals, Bernoulli
numbers and even zeta values.

Rational values are stdlib ``fractions.Fraction`` objects, which are always
kept in canonical form (reduced, positive denominator, 0 == 0/1).  This
module adds the Gaussian extension Q(i), the number-theoretic constants the
identity checks consume, and the string/float conversions shared by the rest
of the package.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Rational",
    "GaussRational",
    "ZetaEven",
    "bernoulli",
    "zeta_even",
    "to_float",
    "rational_from_str",
    "rational_to_str",
]

Rational = Fraction


def rational_to_str(q: Fraction) -> str:
    """Canonical "num/den" form; the denominator is omitted when it is 1."""
    return str(q)


def rational_from_str(s: str) -> Fraction:
    """Parse "num/den", plain integers, or decimal literals exactly."""
    return Fraction(s.strip())


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected an exact rational, got {type(v).__name__}")


@dataclass(frozen=True, eq=False)
class GaussRational:
    """Exact complex number re + im*i with rational components.

    Only ring operations are needed by the checks (evaluation at x +- i and
    the i-power reduction map), but division is provided for completeness.
    """

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))

    @staticmethod
    def _coerce(v) -> "GaussRational | None":
        if isinstance(v, GaussRational):
            return v
        if isinstance(v, (int, Fraction)):
            return GaussRational(_as_fraction(v))
        return None

    @staticmethod
    def i_power(k: int) -> "GaussRational":
        """i**k for any integer k (negative exponents wrap mod 4)."""
        return _I_POWERS[k % 4]

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussRational")
        return GaussRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    __repr__ = __str__


_I_POWERS = (
    GaussRational(Fraction(1)),
    GaussRational(Fraction(0), Fraction(1)),
    GaussRational(Fraction(-1)),
    GaussRational(Fraction(0), Fraction(-1)),
)


@dataclass(frozen=True)
class ZetaEven:
    """Exact value rational_part * pi**pi_power (pi_power even, >= 2).

    Keeping pi symbolic lets the moment checks separate the exact rational
    content from the single transcendental factor.
    """

    rational_part: Fraction
    pi_power: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "rational_part", _as_fraction(self.rational_part))
        if self.pi_power < 2 or self.pi_power % 2 != 0:
            raise ValueError("pi_power must be an even integer >= 2")

    def scaled(self, factor: Fraction | int) -> "ZetaEven":
        """Same pi power, rational part multiplied by an exact factor."""
        return ZetaEven(self.rational_part * _as_fraction(factor), self.pi_power)

    def __str__(self) -> str:
        return f"{self.rational_part}*pi^{self.pi_power}"


_BERNOULLI: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (convention B_1 = -1/2), memoized.

    Computed from the defining recurrence sum_{k=0}^{m-1} C(m+1,k) B_k
    = -(m+1) B_m.  Only even indices feed the downstream identities, so the
    B_1 convention is inert there.
    """
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    if n % 2 == 1 and n > 1:
        return Fraction(0)
    with _BERNOULLI_LOCK:
        while len(_BERNOULLI) <= n:
            m = len(_BERNOULLI)
            acc = Fraction(0)
            for k in range(m):
                acc += math.comb(m + 1, k) * _BERNOULLI[k]
            _BERNOULLI.append(-acc / (m + 1))
        return _BERNOULLI[n]


def zeta_even(n: int) -> ZetaEven:
    """Exact zeta(n) for even n >= 2 via Euler's formula.

    zeta(2k) = (-1)^(k+1) B_{2k} (2 pi)^(2k) / (2 (2k)!), returned as the
    (rational, pi-power) pair.
    """
    if n < 2 or n % 2 != 0:
        raise ValueError("zeta_even is defined for even arguments >= 2 only")
    k = n // 2
    rational = (-1) ** (k + 1) * bernoulli(2 * k) * Fraction(2**(2 * k), 2 * math.factorial(2 * k))
    return ZetaEven(rational, 2 * k)


def to_float(x: Fraction | ZetaEven | int) -> float:
    """Nearest double for an exact value.

    Fraction conversion is correctly rounded (big-int true division);
    ZetaEven uses the machine-precision pi constant.  Values beyond double
    range raise OverflowError.
    """
    if isinstance(x, ZetaEven):
        return float(x.rational_part) * math.pi**x.pi_power
    if isinstance(x, (Fraction, int)):
        return float(x)
    raise TypeError(f"cannot convert {type(x).__name__} to float exactly")
