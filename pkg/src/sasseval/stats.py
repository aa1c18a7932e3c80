"""Paired two-tailed t-tests and Bonferroni family-wise correction.

The Student-t tail probability is computed from the regularized incomplete
beta function, p = I_x(df/2, 1/2) with x = df/(df + t^2), evaluated with a
modified Lentz continued fraction (absolute error <= 1e-10, at most 300
iterations) and the usual symmetry switch at x > (a+1)/(a+b+2). The module
is self-contained; no numerical library is required at runtime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateVariance, EmptyFamily, InsufficientData, LengthMismatch

_BETACF_TOL = 1e-10
_BETACF_MAX_ITER = 300
_TINY = 1e-300


@dataclass(frozen=True)
class PairedT:
    """Raw paired-test result before any multiple-comparison correction."""

    t_stat: float
    df: int
    p_raw: float


@dataclass(frozen=True)
class SignificanceTest:
    t_stat: float
    df: int
    p_raw: float
    p_adjusted: float
    significant: bool
    family_size: int
    alpha: float


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta function (modified Lentz)."""
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _TINY:
        d = _TINY
    d = 1.0 / d
    h = d
    for m in range(1, _BETACF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETACF_TOL:
            return h
    raise RuntimeError(
        f"incomplete beta continued fraction did not converge (a={a}, b={b}, x={x})")


def _incomplete_beta_core(x: float, complement: float, a: float, b: float) -> float:
    """I_x(a, b) with the complement 1-x supplied exactly by the caller.

    Passing the complement separately keeps tiny tails accurate when x is so
    close to 1 that forming 1-x in floating point would lose it entirely.
    """
    if x <= 0.0:
        return 0.0
    if complement <= 0.0:
        return 1.0
    ln_x = math.log(x) if x <= 0.5 else math.log1p(-complement)
    ln_c = math.log(complement) if complement <= 0.5 else math.log1p(-x)
    ln_front = (math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
                + a * ln_x + b * ln_c)
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, complement) / b


def regularized_incomplete_beta(x: float, a: float, b: float) -> float:
    """I_x(a, b) for a, b > 0 and x in [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must be in [0, 1], got {x}")
    return _incomplete_beta_core(x, 1.0 - x, a, b)


def student_t_two_tailed_p(t: float, df: int) -> float:
    """Two-tailed Student-t tail probability, p = I_{df/(df+t^2)}(df/2, 1/2)."""
    if df < 1:
        raise ValueError(f"df must be >= 1, got {df}")
    if math.isnan(t):
        raise ValueError("t statistic is NaN")
    if math.isinf(t):
        return 0.0
    denom = df + t * t
    x = df / denom
    complement = (t * t) / denom  # exact where 1-x would round away
    p = _incomplete_beta_core(x, complement, df / 2.0, 0.5)
    return min(max(p, 0.0), 1.0)


def paired_t_test(xs: Sequence[float], ys: Sequence[float]) -> PairedT:
    """Paired t statistic with sample sd (n-1), df = n-1, two-tailed p.

    All-zero differences are a defined case (t = 0, p = 1); identical nonzero
    differences have no testable variance and raise DegenerateVariance.
    """
    if len(xs) != len(ys):
        raise LengthMismatch(f"paired samples differ in length: {len(xs)} vs {len(ys)}")
    n = len(xs)
    if n < 2:
        raise InsufficientData(f"paired t-test requires n >= 2, got {n}")
    diffs = [x - y for x, y in zip(xs, ys)]
    mean_d = sum(diffs) / n
    var_d = sum((d - mean_d) ** 2 for d in diffs) / (n - 1)
    df = n - 1
    if var_d == 0.0:
        if mean_d == 0.0:
            return PairedT(t_stat=0.0, df=df, p_raw=1.0)
        raise DegenerateVariance(
            f"constant nonzero difference {mean_d}; t statistic undefined")
    t = mean_d / math.sqrt(var_d / n)
    return PairedT(t_stat=t, df=df, p_raw=student_t_two_tailed_p(t, df))


def bonferroni(p_values: Sequence[float], alpha: float = 0.05) -> list[tuple[float, bool]]:
    """Adjust each p by the family size, clamped at 1; flag p_adj < alpha."""
    if len(p_values) == 0:
        raise EmptyFamily("no p-values to correct")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    family = len(p_values)
    out = []
    for p in p_values:
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"p-value outside [0, 1]: {p}")
        p_adj = min(1.0, p * family)
        out.append((p_adj, p_adj < alpha))
    return out


def family_tests(results: Sequence[PairedT], alpha: float = 0.05) -> list[SignificanceTest]:
    """Bonferroni-correct a family of paired tests into full test records."""
    adjusted = bonferroni([r.p_raw for r in results], alpha)
    family = len(results)
    return [
        SignificanceTest(t_stat=r.t_stat, df=r.df, p_raw=r.p_raw,
                         p_adjusted=p_adj, significant=sig,
                         family_size=family, alpha=alpha)
        for r, (p_adj, sig) in zip(results, adjusted)
    ]


def mean_sd(values: Sequence[float]) -> tuple[float, float]:
    """Arithmetic mean and sample standard deviation (n-1); sd is 0 for n=1."""
    n = len(values)
    if n == 0:
        raise InsufficientData("mean/sd of an empty sequence")
    m = sum(values) / n
    if n == 1:
        return m, 0.0
    return m, math.sqrt(sum((v - m) ** 2 for v in values) / (n - 1))
