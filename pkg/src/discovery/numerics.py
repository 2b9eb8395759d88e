"""Log-domain special-function kernels.

Rising factorials, binomials, signed log-sum-exp and the noncentral
generalized factorial coefficient

    C(m, x; sigma, gamma) = (1/x!) * sum_{i=0..x} (-1)^i binom(x, i) (-i*sigma - gamma)_m

which drives the exact law of the number of new species.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import gammaln, gammasgn

LN10 = math.log(10.0)

#: digits that may cancel in the alternating sum before the float result is rejected
MAX_DIGITS_LOST = 6.0
#: largest m for which the exact rational path is attempted automatically
EXACT_MAX_M = 60


class DomainError(ValueError):
    """Argument outside the domain of a special function."""


class PrecisionLoss(ArithmeticError):
    """Catastrophic cancellation in a signed log-domain sum."""


@dataclass(frozen=True)
class LogNumber:
    """A real number stored as ``sign * exp(log_abs)``; ``sign == 0`` means zero."""

    log_abs: float
    sign: int

    @classmethod
    def zero(cls) -> "LogNumber":
        return cls(-math.inf, 0)

    @classmethod
    def from_float(cls, value: float) -> "LogNumber":
        if value == 0:
            return cls.zero()
        return cls(math.log(abs(value)), 1 if value > 0 else -1)

    @classmethod
    def from_fraction(cls, value: Fraction) -> "LogNumber":
        if value == 0:
            return cls.zero()
        num = abs(value.numerator)
        return cls(math.log(num) - math.log(value.denominator), 1 if value > 0 else -1)

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_abs)

    def __mul__(self, other: "LogNumber") -> "LogNumber":
        if self.sign == 0 or other.sign == 0:
            return LogNumber.zero()
        return LogNumber(self.log_abs + other.log_abs, self.sign * other.sign)


def _is_int(v) -> bool:
    return float(v).is_integer()


_STIRLING_MIN = 30.0


def _stirling_tail(z: float) -> float:
    z2 = z * z
    return (1.0 / 12.0 - (1.0 / 360.0 - (1.0 / 1260.0 - (1.0 / 1680.0 - 1.0 / (1188.0 * z2)) / z2) / z2) / z2) / z


def log_gamma_ratio(x: float, h: float) -> float:
    """``log(Gamma(x + h) / Gamma(x))`` for ``x > 0``, ``h >= 0``.

    Accurate to a few ulps of the result even when ``x + h`` is huge, where a
    plain ``lgamma`` difference would cancel away the leading digits.
    """
    if h == 0:
        return 0.0
    if x >= _STIRLING_MIN:
        return (x - 0.5) * math.log1p(h / x) + h * math.log(x + h) - h + _stirling_tail(x + h) - _stirling_tail(x)
    shift = math.ceil(_STIRLING_MIN - x)
    if h <= shift:
        return math.lgamma(x + h) - math.lgamma(x)
    head = math.fsum(math.log(x + j) for j in range(shift))
    return head + log_gamma_ratio(x + shift, h - shift)


def log_pochhammer_ratio(a: float, b: float, m) -> float:
    """``log((a)_m / (b)_m)`` for ``a, b > 0``, without forming either factorial.

    The two rising factorials share their growth, so the ratio is computed
    from gamma ratios with the exact shift ``|a - b|``, which keeps full
    relative accuracy for ``m`` in the billions.
    """
    if m == 0 or a == b:
        return 0.0
    if a > b:
        h = a - b
        return log_gamma_ratio(b + m, h) - log_gamma_ratio(b, h)
    h = b - a
    return log_gamma_ratio(a, h) - log_gamma_ratio(a + m, h)


def log_pochhammer(a, n):
    """``log((a)_n)`` for the rising factorial ``(a)_n = a (a+1) ... (a+n-1)``.

    Vectorised over ``a`` and ``n`` when every ``a > 0`` (log-gamma
    difference). For scalar ``a <= 0`` with integer ``n`` the product is
    evaluated term by term and must be positive.
    """
    if np.isscalar(a) and np.isscalar(n) and a > 0:
        if n < 0:
            raise DomainError("n must be nonnegative")
        return log_gamma_ratio(float(a), float(n))
    a_arr = np.asarray(a, dtype=float)
    n_arr = np.asarray(n, dtype=float)
    if np.all(a_arr > 0):
        out = gammaln(a_arr + n_arr) - gammaln(a_arr)
        return float(out) if out.ndim == 0 else out
    if a_arr.ndim or n_arr.ndim:
        raise DomainError("vectorised log_pochhammer requires a > 0")
    value = pochhammer_lognum(float(a), float(n))
    if value.sign != 1:
        raise DomainError(f"(a)_n = ({a})_{n} is not positive")
    return value.log_abs


def pochhammer_lognum(a: float, n: float) -> LogNumber:
    """Signed rising factorial as a :class:`LogNumber`."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n == 0:
        return LogNumber(0.0, 1)
    if a > 0:
        return LogNumber(log_gamma_ratio(float(a), float(n)), 1)
    if _is_int(n):
        terms = a + np.arange(int(n), dtype=float)
        if np.any(terms == 0):
            return LogNumber.zero()
        neg = int(np.count_nonzero(terms < 0))
        return LogNumber(float(np.sum(np.log(np.abs(terms)))), -1 if neg % 2 else 1)
    # non-integer n with a <= 0
    if _is_int(a) or _is_int(a + n) and a + n <= 0:
        raise DomainError(f"({a})_{n} crosses a pole of the gamma function")
    lg = float(gammaln(a + n) - gammaln(a))
    sgn = int(gammasgn(a + n) * gammasgn(a))
    return LogNumber(lg, sgn)


def log_binom(n, k):
    """``log C(n, k)`` for real ``n >= k >= 0``; vectorised."""
    if np.isscalar(n) and np.isscalar(k):
        if not 0 <= k <= n:
            return -math.inf
        return log_gamma_ratio(n - k + 1.0, float(k)) - math.lgamma(k + 1.0)
    n = np.asarray(n, dtype=float)
    k = np.asarray(k, dtype=float)
    out = gammaln(n + 1.0) - gammaln(k + 1.0) - gammaln(n - k + 1.0)
    return float(out) if out.ndim == 0 else out


def logsumexp(log_values) -> float:
    """``log(sum(exp(v)))`` for an iterable of logs; empty or all ``-inf`` gives ``-inf``."""
    v = np.asarray(log_values, dtype=float)
    if v.size == 0:
        return -math.inf
    top = float(np.max(v))
    if top == -math.inf:
        return -math.inf
    return top + math.log(float(np.sum(np.exp(v - top))))


def signed_logsumexp(log_abs, signs, max_digits_lost: float | None = MAX_DIGITS_LOST) -> LogNumber:
    """Sum of ``sign_i * exp(log_abs_i)`` returned as a :class:`LogNumber`.

    Raises :class:`PrecisionLoss` if the result lies more than
    ``max_digits_lost`` decimal digits below the largest term.
    """
    la = np.asarray(log_abs, dtype=float)
    sg = np.asarray(signs, dtype=float)
    keep = sg != 0
    la, sg = la[keep], sg[keep]
    if la.size == 0:
        return LogNumber.zero()
    top = float(np.max(la))
    total = math.fsum((sg * np.exp(la - top)).tolist())
    if total == 0.0:
        if max_digits_lost is not None:
            raise PrecisionLoss("alternating sum cancelled to zero in floating point")
        return LogNumber.zero()
    result = LogNumber(top + math.log(abs(total)), 1 if total > 0 else -1)
    if max_digits_lost is not None and (top - result.log_abs) / LN10 > max_digits_lost:
        raise PrecisionLoss(
            f"{(top - result.log_abs) / LN10:.1f} digits cancelled (budget {max_digits_lost})"
        )
    return result


def _gen_factorial_lse(m: int, x: int, sigma: float, gamma: float, max_digits_lost) -> LogNumber:
    i = np.arange(x + 1)
    la = np.empty(x + 1)
    sg = np.empty(x + 1)
    for j in range(x + 1):
        p = pochhammer_lognum(-j * sigma - gamma, m)
        la[j] = p.log_abs
        sg[j] = p.sign * (-1 if j % 2 else 1)
    la = la + log_binom(x, i)
    total = signed_logsumexp(la, sg, max_digits_lost)
    if total.sign == 0:
        return total
    return LogNumber(total.log_abs - float(gammaln(x + 1)), total.sign)


def _gen_factorial_exact(m: int, x: int, sigma, gamma) -> Fraction:
    s = Fraction(sigma)
    g = Fraction(gamma)
    total = Fraction(0)
    for i in range(x + 1):
        base = -i * s - g
        prod = Fraction(1)
        for t in range(m):
            prod *= base + t
        term = math.comb(x, i) * prod
        total += -term if i % 2 else term
    return total / math.factorial(x)


def gen_factorial_coeff(
    m: int,
    x: int,
    sigma,
    gamma,
    method: str = "auto",
    max_digits_lost: float = MAX_DIGITS_LOST,
) -> LogNumber:
    """Noncentral generalized factorial coefficient ``C(m, x; sigma, gamma)``.

    Parameters
    ----------
    method : {"auto", "lse", "exact"}
        ``"lse"`` evaluates the alternating sum with signed log-sum-exp and
        raises :class:`PrecisionLoss` on cancellation; ``"exact"`` uses
        rational arithmetic on the exact binary values of ``sigma`` and
        ``gamma`` (or on Fractions passed in); ``"auto"`` tries ``"lse"`` and
        falls back to ``"exact"`` for ``m <= EXACT_MAX_M``.
    """
    m, x = int(m), int(x)
    if m < 0 or not 0 <= x <= max(m, 0):
        raise DomainError(f"need 0 <= x <= m, got m={m}, x={x}")
    if method == "exact":
        return LogNumber.from_fraction(_gen_factorial_exact(m, x, sigma, gamma))
    if method not in ("auto", "lse"):
        raise ValueError(f"unknown method {method!r}")
    try:
        return _gen_factorial_lse(m, x, float(sigma), float(gamma), max_digits_lost)
    except PrecisionLoss:
        if method == "lse" or m > EXACT_MAX_M:
            raise
        return LogNumber.from_fraction(_gen_factorial_exact(m, x, sigma, gamma))
