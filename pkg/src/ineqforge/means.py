"""Bivariate means of positive arguments and their kernel substitutions.

Twelve mean kinds are supported: arithmetic A, geometric G, quadratic Q,
logarithmic L, identric I, the unweighted power mean of order r, the two
arc-based means P (arcsine) and T (arctangent), and the four exponential
combinations X, B, J, K built from them.

L and I are assembled from atanh((x-y)/(x+y)) so that nearly equal
arguments lose no precision; the same even ratio powers both, so the two
stay mutually consistent to the last bit. All means return x exactly when
x == y, and switch to quadratic small-ratio forms when |x-y|/(x+y) drops
below 1e-7.
"""

from __future__ import annotations

import math

from . import kernels
from .errors import DomainError

MEAN_KINDS = ("A", "G", "Q", "L", "I", "power", "P", "T", "X", "B", "J", "K")

# canonical order shown by the CLI for the parametric kind
POWER_DISPLAY_R = 2.0 / 3.0

_SQRT2 = math.sqrt(2.0)
_NEAR_DEGENERATE = 1e-7


def _validate_pair(pair) -> tuple[float, float]:
    try:
        x, y = pair
    except (TypeError, ValueError):
        raise DomainError(f"pair must be a 2-sequence, got {pair!r}") from None
    x = float(x)
    y = float(y)
    if not (math.isfinite(x) and math.isfinite(y) and x > 0.0 and y > 0.0):
        raise DomainError(f"pair entries must be positive finite, got ({x!r}, {y!r})")
    return x, y


def _atanh_over_u_minus1(u: float) -> float:
    """atanh(u)/u - 1 for |u| < 1, series below 0.2 to keep it fully relative."""
    if abs(u) < 0.2:
        u2 = u * u
        power = u2
        acc = 0.0
        n = 1
        while True:
            term = power / (2 * n + 1)
            acc += term
            if term < 1e-17 * acc:
                return acc
            power *= u2
            n += 1
    return math.atanh(u) / u - 1.0


def mean_bundle(x: float, y: float) -> dict[str, float]:
    """All eleven non-parametric means of (x, y) computed in one pass."""
    x, y = _validate_pair((x, y))
    if x == y:
        return {k: x for k in ("A", "G", "Q", "L", "I", "P", "T", "X", "B", "J", "K")}
    a = 0.5 * (x + y)
    g = math.sqrt(x * y)
    q = math.hypot(x, y) / _SQRT2
    u = (x - y) / (x + y)
    h = _atanh_over_u_minus1(u)
    lm = a / (1.0 + h)
    im = g * math.exp(h)
    if abs(u) < _NEAR_DEGENERATE:
        u2 = u * u
        p = a / (1.0 + u2 / 6.0)
        t = a / (1.0 - u2 / 3.0)
        xm = a * math.exp(-u2 / 3.0)
        jm = a * math.exp(-u2 / 6.0)
        bm = q * math.exp(-u2 / 3.0)
        km = q * math.exp(-u2 / 6.0)
    else:
        p = a * u / math.asin(u)
        t = a * u / math.atan(u)
        xm = a * math.exp(g / p - 1.0)
        jm = a * math.exp((a + g) / p - 2.0)
        bm = q * math.exp(a / t - 1.0)
        km = q * math.exp((q + a) / t - 2.0)
    return {"A": a, "G": g, "Q": q, "L": lm, "I": im,
            "P": p, "T": t, "X": xm, "B": bm, "J": jm, "K": km}


def weighted_power_mean(r: float, w: float, x: float, y: float) -> float:
    """(w x^r + (1-w) y^r)^(1/r), with the geometric limit at r = 0."""
    if not (0.0 < w < 1.0):
        raise DomainError(f"weight must lie strictly in (0, 1), got {w!r}")
    x, y = _validate_pair((x, y))
    if x == y:
        return x
    if r == 0.0:
        return math.exp(w * math.log(x) + (1.0 - w) * math.log(y))
    if abs(r) < 1e-8:
        # second-order expansion in r around the geometric limit
        lx = math.log(x)
        ly = math.log(y)
        m = w * lx + (1.0 - w) * ly
        qq = w * lx * lx + (1.0 - w) * ly * ly
        return math.exp(m + 0.5 * r * (qq - m * m))
    return (w * x ** r + (1.0 - w) * y ** r) ** (1.0 / r)


def evaluate_mean(kind: str, pair, r: float | None = None) -> float:
    """Evaluate one mean kind at a positive pair; 'power' needs its order r."""
    if kind not in MEAN_KINDS:
        known = ", ".join(MEAN_KINDS)
        raise DomainError(f"unknown mean kind {kind!r}; known kinds: {known}")
    x, y = _validate_pair(pair)
    if kind == "power":
        if r is None:
            raise DomainError("mean kind 'power' requires the order r")
        return weighted_power_mean(r, 0.5, x, y)
    if x == y:
        return x
    if kind == "A":
        return 0.5 * (x + y)
    if kind == "G":
        return math.sqrt(x * y)
    if kind == "Q":
        return math.hypot(x, y) / _SQRT2
    return mean_bundle(x, y)[kind]


def reduce_homogeneous(kind: str, pair, r: float | None = None) -> tuple[float, float, float]:
    """Exhibit first-degree homogeneity: M(x, y) = sqrt(xy) M(e^t, e^-t).

    Returns (t, lhs, rhs) with t = ln(x/y)/2, lhs the mean at the pair and
    rhs the rescaled mean at (e^t, e^-t).
    """
    x, y = _validate_pair(pair)
    t = 0.5 * (math.log(x) - math.log(y))
    lhs = evaluate_mean(kind, (x, y), r)
    rhs = math.sqrt(x * y) * evaluate_mean(kind, (math.exp(t), math.exp(-t)), r)
    return t, lhs, rhs


def _ordered_pair(pair) -> tuple[float, float]:
    a, b = _validate_pair(pair)
    if not b > a:
        raise DomainError(f"substitution requires b > a, got ({a!r}, {b!r})")
    return a, b


def substitution_arcsin(pair) -> tuple[float, tuple[float, float, float, float]]:
    """t = arcsin((b-a)/(a+b)) and the four kernel-vs-mean residuals.

    The residuals compare sinc t with P/A, cos t with G/A, the exponential
    cotangent kernel with X/A, and its half-angle form with J/A. Each is an
    absolute difference of order-one quantities.
    """
    a, b = _ordered_pair(pair)
    u = (b - a) / (a + b)
    t = math.asin(u)
    m = mean_bundle(a, b)
    res = (
        abs(kernels.sinc(t) - m["P"] / m["A"]),
        abs(math.cos(t) - m["G"] / m["A"]),
        abs(kernels.exp_tcot(t) - m["X"] / m["A"]),
        abs(kernels.exp_tcot_half(t) - m["J"] / m["A"]),
    )
    return t, res


def substitution_arctan(pair) -> tuple[float, tuple[float, float, float, float]]:
    """t = arctan((b-a)/(a+b)) and the four kernel-vs-mean residuals.

    Here sinc t pairs with T/Q, cos t with A/Q, the exponential cotangent
    kernel with B/Q, and its half-angle form with K/Q.
    """
    a, b = _ordered_pair(pair)
    u = (b - a) / (a + b)
    t = math.atan(u)
    m = mean_bundle(a, b)
    res = (
        abs(kernels.sinc(t) - m["T"] / m["Q"]),
        abs(math.cos(t) - m["A"] / m["Q"]),
        abs(kernels.exp_tcot(t) - m["B"] / m["Q"]),
        abs(kernels.exp_tcot_half(t) - m["K"] / m["Q"]),
    )
    return t, res
