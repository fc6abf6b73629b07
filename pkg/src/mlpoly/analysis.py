"""Floating-point analysis: zeros, quadrature, moments, Fourier transforms.

The exact layers prove identities; this layer reproduces the numeric claims
that live outside the polynomial ring.  Zeros come from Sturm bisection on
the symmetric tridiagonal recurrence matrix, integrals from deterministic
composite Gauss-Legendre panels with analytically chosen truncation, and the
Fourier transform from a closed form that is compared against direct
quadrature.  The erratum audit at the bottom adjudicates the five printed
identities that fail their own cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exactnum import ZetaEven, to_float, zeta_even
from .polyfps import Poly
from .report import CheckReport, CheckStatus
from .sequences import (SeqKind, generate, oracle_gf, oracle_hypergeometric_g,
                        oracle_meixner_g, rodrigues_audit)
from .identities import derivative_expansion_reduced_audit

__all__ = [
    "JacobiMatrix",
    "QuadConfig",
    "FtValue",
    "MomentResult",
    "zeros",
    "weight",
    "make_quad_config",
    "integrate",
    "orthogonality_matrix",
    "moment",
    "ft_closed",
    "ft_numeric",
    "erratum_audit",
]

_SQRT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class JacobiMatrix:
    """Symmetric tridiagonal matrix of the monic recurrence: zero diagonal,
    off-diagonal b_k = sqrt(k(k+1))/2 = sqrt(c_k)."""

    n: int
    off_diagonal: tuple[float, ...]

    @classmethod
    def build(cls, n: int) -> "JacobiMatrix":
        if n < 1:
            raise ValueError("matrix size must be at least 1")
        return cls(n, tuple(math.sqrt(k * (k + 1)) / 2.0 for k in range(1, n)))


def _sturm_count(off_sq: list[float], x: float, pivmin: float) -> int:
    """Number of eigenvalues strictly below x, by counting negative pivots."""
    count = 0
    d = -x
    if abs(d) < pivmin:
        d = -pivmin
    if d < 0:
        count += 1
    for bsq in off_sq:
        d = -x - bsq / d
        if abs(d) < pivmin:
            d = -pivmin
        if d < 0:
            count += 1
    return count


def _eigenvalues(n: int, tol: float) -> list[float]:
    jm = JacobiMatrix.build(n)
    off_sq = [b * b for b in jm.off_diagonal]
    max_bsq = max(off_sq, default=1.0)
    pivmin = max(1e-290, 2.3e-16 * max_bsq)
    bound = math.sqrt(n * (n - 1)) + 1.0 if n > 1 else 1.0
    out = []
    for k in range(n):
        lo, hi = -bound, bound
        # invariant: count(lo) <= k < count(hi)
        for _ in range(200):
            if hi - lo <= tol:
                break
            mid = 0.5 * (lo + hi)
            if _sturm_count(off_sq, mid, pivmin) <= k:
                lo = mid
            else:
                hi = mid
        out.append(0.5 * (lo + hi))
    return out


def zeros(n: int, tol: float = 1e-12) -> list[float]:
    """All n zeros, sorted ascending, each bracketed to width tol.

    The spectrum of the zero-diagonal matrix is symmetric under reflection,
    so the bisection output is antisymmetrized exactly; the middle zero of an
    odd-size matrix is exactly 0.0.  Before returning, the known bound
    max|zero| < sqrt(n(n-1)) and strict interlacing with the size n-1 zeros
    are verified (both only meaningful for n >= 2).
    """
    if n < 1:
        raise ValueError("need at least one zero")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    raw = _eigenvalues(n, tol)
    out = [0.5 * (raw[k] - raw[n - 1 - k]) for k in range(n)]
    if n % 2 == 1:
        out[n // 2] = 0.0
    if n >= 2:
        bound = math.sqrt(n * (n - 1))
        if max(abs(z) for z in out) >= bound:
            raise RuntimeError(f"zero bound sqrt(n(n-1)) violated at n = {n}")
        raw_prev = _eigenvalues(n - 1, tol)
        prev = [0.5 * (raw_prev[k] - raw_prev[n - 2 - k]) for k in range(n - 1)]
        if (n - 1) % 2 == 1:
            prev[(n - 1) // 2] = 0.0
        for k in range(n - 1):
            if not out[k] < prev[k] < out[k + 1]:
                raise RuntimeError(f"interlacing violated between sizes {n - 1} and {n}")
    return out


def weight(t: float) -> float:
    """Orthogonality weight t/sinh(pi t); the removable singularity gives 1/pi."""
    if t == 0.0:
        return 1.0 / math.pi
    pt = math.pi * t
    if abs(pt) > 700.0:
        return 0.0
    return t / math.sinh(pt)


def _weight_array(t: np.ndarray) -> np.ndarray:
    with np.errstate(invalid="ignore", divide="ignore"):
        return np.where(t == 0.0, 1.0 / math.pi, t / np.sinh(math.pi * t))


def _poly_floats(p: Poly) -> list[float]:
    return [float(c) for c in p.coeffs]


def _eval_floats(coeffs: list[float], t: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(t)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


@dataclass(frozen=True)
class QuadConfig:
    """Deterministic composite Gauss-Legendre rule over [-T, T].

    truncation is chosen so the analytic tail bound of the integrand
    envelope C * |t|^d * e^(-rate*|t|) is below abs_tol; with 20 nodes per
    unit panel the panel error of these entire integrands is negligible
    against the tail term.
    """

    truncation: float
    nodes_per_panel: int = 20
    panel_width: float = 1.0
    abs_tol: float = 1e-10


def _gamma_tail(degree: int, rate: float, upper: float) -> float:
    """Exact tail integral of t^degree e^(-rate t) over [upper, infinity).

    (d!/r^(d+1)) e^(-rT) sum_{k<=d} (rT)^k/k!, with every term computed in
    log space so large degrees cannot overflow.
    """
    rt = rate * upper
    log_front = math.lgamma(degree + 1) - (degree + 1) * math.log(rate)
    total = 0.0
    for k in range(degree + 1):
        total += math.exp(log_front + k * math.log(rt) - math.lgamma(k + 1) - rt)
    return total


def make_quad_config(max_degree: int, abs_tol: float = 1e-10,
                     rate: float = math.pi, coeff_norm: float = 1.0) -> QuadConfig:
    """Smallest integer truncation whose two-sided tail bound clears abs_tol/2.

    The envelope constant uses 1/sinh(rate*t) <= 2 e^(-rate t)/(1 - e^(-2 rate T)),
    so the bound is rigorous for integrands of the form
    polynomial(t) / sinh(rate * t) with coefficient 1-norm coeff_norm.
    """
    if max_degree < 0 or abs_tol <= 0 or rate <= 0 or coeff_norm <= 0:
        raise ValueError("invalid quadrature envelope parameters")
    for upper in range(4, 400):
        envelope = 2.0 / (1.0 - math.exp(-2.0 * rate * upper))
        tail = 2.0 * coeff_norm * envelope * _gamma_tail(max_degree, rate, float(upper))
        if tail < 0.5 * abs_tol:
            return QuadConfig(truncation=float(upper), abs_tol=abs_tol)
    raise ValueError("no truncation below 400 satisfies the tail bound")


def _panel_points(cfg: QuadConfig) -> tuple[np.ndarray, np.ndarray]:
    nodes, wts = np.polynomial.legendre.leggauss(cfg.nodes_per_panel)
    t_upper = cfg.truncation
    panels = int(round(2.0 * t_upper / cfg.panel_width))
    edges = np.linspace(-t_upper, t_upper, panels + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    pts = (mids[:, None] + half[:, None] * nodes[None, :]).ravel()
    allw = (half[:, None] * wts[None, :]).ravel()
    return pts, allw


def integrate(f, cfg: QuadConfig) -> float:
    """Integral of a vectorized callback over [-T, T] by fixed GL panels."""
    pts, allw = _panel_points(cfg)
    vals = np.asarray(f(pts), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise ValueError("integrand produced a non-finite value inside the panel range")
    return float(np.dot(allw, vals))


def orthogonality_matrix(n_max: int, cfg: QuadConfig | None = None) -> np.ndarray:
    """Gram matrix of the reduced family under t/sinh(pi t); target diag 2/(n+1)."""
    if n_max < 0:
        raise ValueError("size must be non-negative")
    tab = generate(SeqKind.PHI, n_max)
    coeffs = [_poly_floats(tab[i]) for i in range(n_max + 1)]
    if cfg is None:
        norm = max(sum(abs(c) for c in cs) for cs in coeffs)
        cfg = make_quad_config(2 * n_max + 1, abs_tol=1e-10, coeff_norm=norm * norm)
    pts, allw = _panel_points(cfg)
    wvals = _weight_array(pts)
    phivals = [_eval_floats(cs, pts) for cs in coeffs]
    out = np.empty((n_max + 1, n_max + 1))
    for i in range(n_max + 1):
        for j in range(n_max + 1):
            out[i, j] = float(np.dot(allw, phivals[i] * phivals[j] * wvals))
    return out


@dataclass(frozen=True)
class MomentResult:
    n: int
    closed: Fraction | ZetaEven
    numeric: float
    deviation: float


def moment(n: int, cfg: QuadConfig | None = None) -> MomentResult:
    """Integral of t^n / sinh(t) over the line: exact closed form vs quadrature.

    Closed form: (1 - (-1)^n) (2^(n+1) - 1)/2^n * n! * zeta(n+1), which is 0
    for even n and a rational multiple of pi^(n+1) for odd n.
    """
    if n < 1:
        raise ValueError("moment index starts at 1")
    if n % 2 == 0:
        closed: Fraction | ZetaEven = Fraction(0)
    else:
        factor = Fraction(2 * (2 ** (n + 1) - 1) * math.factorial(n), 2**n)
        closed = zeta_even(n + 1).scaled(factor)
    if cfg is None:
        cfg = make_quad_config(n, abs_tol=1e-10, rate=1.0, coeff_norm=1.0)
    limit = 1.0 if n == 1 else 0.0

    def integrand(t: np.ndarray) -> np.ndarray:
        with np.errstate(invalid="ignore", divide="ignore"):
            return np.where(t == 0.0, limit, t**n / np.sinh(t))

    numeric = integrate(integrand, cfg)
    closed_f = to_float(closed)
    deviation = abs(numeric - closed_f) / max(1.0, abs(closed_f))
    return MomentResult(n, closed, numeric, deviation)


_PHASES = (1 + 0j, 1j, -1 + 0j, -1j)


@dataclass(frozen=True)
class FtValue:
    """One Fourier-transform value with the i^n phase factored out.

    value is the real number v such that the transform equals i^n * v; the
    phase is exact by construction.
    """

    n: int
    s: float
    value: float

    @property
    def phase(self) -> complex:
        return _PHASES[self.n % 4]

    @property
    def complex_value(self) -> complex:
        return self.phase * self.value


def ft_closed(n: int, s: float) -> FtValue:
    """Closed-form transform of the weighted monic member.

    Evaluated as (n+1)!/(2^(n+1) sqrt(2 pi)) * tanh^n(s/2) * sech^2(s/2),
    the overflow-free equivalent of the sinh-quotient form.  The constant
    divisor is 2^(n+1); the 2^n variant seen in print fails the s = 0
    quadrature cross-check by a factor of 2 (see erratum_audit).
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    half = 0.5 * s
    sech = 1.0 / math.cosh(half)
    v = (math.factorial(n + 1) / (2.0 ** (n + 1) * _SQRT_2PI)
         * math.tanh(half) ** n * sech * sech)
    return FtValue(n, s, v)


def ft_numeric(n: int, s: float, cfg: QuadConfig | None = None) -> FtValue:
    """Transform by direct quadrature of p_n(t) w(t) e^(ist)/sqrt(2 pi).

    Parity collapses the integral to a cosine (even n) or sine (odd n) form;
    the residual phase is folded into the factored-out i^n convention so the
    value compares directly against ft_closed.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    p = generate(SeqKind.PHI_MONIC, n)[n]
    coeffs = _poly_floats(p)
    if cfg is None:
        norm = sum(abs(c) for c in coeffs)
        cfg = make_quad_config(n + 1, abs_tol=1e-9, coeff_norm=norm)

    if n % 2 == 0:
        def integrand(t: np.ndarray) -> np.ndarray:
            return _eval_floats(coeffs, t) * _weight_array(t) * np.cos(s * t)
        sign = (-1) ** (n // 2)
    else:
        def integrand(t: np.ndarray) -> np.ndarray:
            return _eval_floats(coeffs, t) * _weight_array(t) * np.sin(s * t)
        sign = (-1) ** ((n - 1) // 2)
    v = sign * integrate(integrand, cfg) / _SQRT_2PI
    return FtValue(n, s, v)


def _ft_sinh_form(n: int, s: float) -> float:
    """The sinh-quotient closed form, usable away from s = 0."""
    return (math.factorial(n + 1) * math.sqrt(2.0 / math.pi)
            * math.sinh(0.5 * s) ** (2 * n + 2) / math.sinh(s) ** (n + 2))


def erratum_audit() -> list[CheckReport]:
    """Adjudicate the five printed identities that fail their own cross-checks.

    Each report evaluates the printed form and the derived alternative side
    by side; all carry AUDITED status because a documented inconsistency is
    expected output, not a build failure.
    """
    reports = []

    # 1. Sign of the base three-term recurrence: the minus-sign variant first
    #    diverges from every oracle at n = 3.
    printed = [Poly([1]), Poly([0, 2])]
    for n in range(1, 3):
        nxt = (2 * Poly([0, 1]) * printed[n] - (n - 1) * printed[n - 1]) / Fraction(n + 1)
        printed.append(nxt)
    oracle3 = oracle_hypergeometric_g(3)
    corrected = generate(SeqKind.G, 20)
    agree = all(
        corrected[n] == oracle_hypergeometric_g(n)
        and corrected[n] == oracle_meixner_g(n)
        and corrected[n] == oracle_gf(SeqKind.G, n)
        for n in range(1, 21)
    )
    residual = printed[3] - oracle3
    reports.append(CheckReport(
        "g-recurrence-sign", (3, 3), CheckStatus.AUDITED, residual=residual,
        note=(f"printed minus-sign recurrence gives {printed[3]} at n = 3; "
              f"hypergeometric oracle gives {oracle3}; plus-sign recurrence matches "
              f"hypergeometric, Meixner and series oracles for n <= 20: {agree}")))

    # 2. Constant in the tanh/sech form of the transform: 2^(n+1) vs 2^n.
    dev_good = 0.0
    dev_printed = math.inf
    for n in range(0, 7):
        for s in (0.5, 1.0, 2.0):
            reference = _ft_sinh_form(n, s)
            good = ft_closed(n, s).value
            bad = 2.0 * good  # the 2^n variant is exactly twice the 2^(n+1) one
            dev_good = max(dev_good, abs(good - reference) / abs(reference))
            dev_printed = min(dev_printed, abs(bad - reference) / abs(reference))
    quad0 = ft_numeric(0, 0.0).value
    reports.append(CheckReport(
        "fourier-tanh-constant", (0, 6), CheckStatus.AUDITED, max_deviation=dev_good,
        note=(f"tanh/sech rewriting needs divisor 2^(n+1): it matches the sinh form "
              f"to {dev_good:.2e} relative and quadrature at n=0, s=0 "
              f"({quad0:.6f} vs {ft_closed(0, 0.0).value:.6f}); the printed 2^n "
              f"variant is high by a factor of 2 (relative error >= {dev_printed:.3f})")))

    # 3. The n = 0 display: its second expression halves the first.
    s0 = 1.3
    first = 1.0 / ((1.0 + math.cosh(s0)) * _SQRT_2PI)
    second = 0.5 * math.sqrt(2.0 / math.pi) * math.sinh(0.5 * s0) ** 2 / math.sinh(s0) ** 2
    closed0 = ft_closed(0, s0).value
    reports.append(CheckReport(
        "fourier-n0-display", (0, 0), CheckStatus.AUDITED,
        max_deviation=abs(first - closed0) / closed0,
        note=(f"first n=0 expression 1/((1+cosh s) sqrt(2 pi)) matches the closed form "
              f"at s = {s0} ({first:.9f} vs {closed0:.9f}); the second printed "
              f"expression gives {second:.9f}, low by a factor of "
              f"{first / second:.6f}")))

    # 4. Printed reduced-family derivative expansion vs the index-shifted form.
    reports.append(derivative_expansion_reduced_audit(20))

    # 5. Difference-Rodrigues formula for the base family.
    reports.append(rodrigues_audit(1, [0.1, 0.2, 0.3, 0.4]))

    return reports
