"""Discrete distributions built from the exact triangles, their exact
and asymptotic moments, and local-limit-theorem deviation reports.

A family's probabilities are exact rationals (weights over an exact
total); floats appear only at the very end, when a probability or a
moment is compared against a Gaussian.  The sup deviation of a family
is evaluated on integer support points only: between lattice points the
point probability is zero, so the standardized sup is attained at (or
arbitrarily near) the lattice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Sequence

from .exact import (
    arima_rows,
    bell_numbers,
    beta_numbers,
    generalized_binomial,
    matsunaga_rows,
    poisson_moments,
    stirling_signed_rows,
    stirling_unsigned_rows,
)
from .asymptotic import EULER_GAMMA, harmonic, lambert_w

__all__ = [
    "DiscretePMF",
    "LLTReport",
    "LLTFamily",
    "FAMILIES",
    "VARIANT_NAMES",
    "pmf_from_weights",
    "moments_exact",
    "matsunaga_pmf",
    "matsunaga_closed_moments",
    "matsunaga_asym_moments",
    "weighted_matsunaga_pmf",
    "weighted_matsunaga_closed_mean",
    "weighted_matsunaga_asym_moments",
    "weighted_local_gaussian",
    "arima_pmf",
    "arima_reversed_pmf",
    "arima_exact_moments",
    "arima_asym_moments",
    "arima_poisson_tv",
    "a033306_pmf",
    "a033306_exact_moments",
    "a033306_asym_variance",
    "variant_triangle",
    "llt_report",
    "bnk_ratio_uniformity",
    "decay_exponent",
]


@dataclass(frozen=True)
class DiscretePMF:
    """Nonnegative integer weights over ``k = k_min .. k_min+len-1``
    with their exact total; probabilities are exact rationals."""

    name: str
    k_min: int
    weights: tuple[int, ...]
    total: int

    def support(self) -> range:
        return range(self.k_min, self.k_min + len(self.weights))

    def prob(self, k: int) -> Fraction:
        if k not in self.support():
            raise IndexError(f"{self.name}: k={k} outside support")
        return Fraction(self.weights[k - self.k_min], self.total)


@dataclass(frozen=True)
class LLTReport:
    """Standardized lattice deviation of one family member from the
    Gaussian, together with both flavors of centering parameters."""

    n: int
    family: str
    mean_exact: Fraction
    var_exact: Fraction
    mu_asym: float
    sigma2_asym: float
    sup_deviation: float
    rate_tag: str
    centering: str  # which (mu, sigma) the deviation was measured against


@dataclass(frozen=True)
class LLTFamily:
    name: str
    build: Callable[[int], DiscretePMF]
    mu_asym: Callable[[int], float]
    sigma2_asym: Callable[[int], float]
    rate_tag: str


def pmf_from_weights(k_min: int, weights: Sequence[int], name: str = "pmf") -> DiscretePMF:
    ws = tuple(int(w) for w in weights)
    if any(w < 0 for w in ws):
        raise ValueError(f"{name}: negative weight")
    total = sum(ws)
    if total == 0:
        raise ValueError(f"{name}: all weights zero")
    return DiscretePMF(name=name, k_min=k_min, weights=ws, total=total)


def moments_exact(pmf: DiscretePMF) -> tuple[Fraction, Fraction]:
    """Exact rational (mean, variance)."""
    m1 = Fraction(0)
    m2 = Fraction(0)
    for k, w in zip(pmf.support(), pmf.weights):
        m1 += k * Fraction(w, pmf.total)
        m2 += k * k * Fraction(w, pmf.total)
    return m1, m2 - m1 * m1


# ---------------------------------------------------------------- families


def matsunaga_pmf(n: int) -> DiscretePMF:
    """Distribution of |M[n,k]| over k = 1..n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    row = matsunaga_rows(n).row(n)
    return pmf_from_weights(1, [abs(v) for v in row], name=f"matsunaga[{n}]")


def matsunaga_closed_moments(n: int) -> tuple[Fraction, Fraction]:
    """Closed-form mean and variance of the |M[n,k]| distribution via
    alternating beta/harmonic sums; valid from n = 4."""
    if n < 4:
        raise ValueError("closed moments require n >= 4")
    beta = beta_numbers(n)
    H1 = [harmonic(i, 1) for i in range(n + 1)]
    H2 = [harmonic(i, 2) for i in range(n + 1)]
    den = Fraction(0)
    num1 = Fraction(0)
    num2 = Fraction(0)
    for j in range(n - 1):
        term = (-1) ** j * beta[n - j]
        den += term
        num1 += term * H1[n - j]
        num2 += term * (H1[n - j] ** 2 - H2[n - j])
    mean = num1 / den
    var = num2 / den - mean * mean + mean
    return mean, var


def matsunaga_asym_moments(n: int) -> tuple[float, float]:
    """Expansions ``log n + gamma + 1/(2n) + (12W-1)/(12n^2)`` and
    ``log n + gamma - pi^2/6 + 3/(2n) + (12W-7)/(12n^2)``."""
    w = lambert_w(float(n))
    ln = math.log(n)
    mu = ln + EULER_GAMMA + 0.5 / n + (12.0 * w - 1.0) / (12.0 * n * n)
    s2 = ln + EULER_GAMMA - math.pi**2 / 6.0 + 1.5 / n + (12.0 * w - 7.0) / (12.0 * n * n)
    return mu, s2


def weighted_matsunaga_pmf(n: int) -> DiscretePMF:
    """Distribution of |M[n,k]| n^k over k = 1..n (n >= 4; the low rows
    are excluded together with the (3,1) sign exception)."""
    if n < 4:
        raise ValueError("n must be >= 4")
    row = matsunaga_rows(n).row(n)
    weights = [abs(v) * n**k for k, v in zip(range(1, n + 1), row)]
    return pmf_from_weights(1, weights, name=f"weighted_matsunaga[{n}]")


def weighted_matsunaga_closed_mean(n: int) -> Fraction:
    """Closed-form mean of the n^k-weighted family:
    ``sum_k k |M[n,k]| n^k = n n! sum_j C(2n-1-j, n-j) (-1)^j beta_{n-j}
    (H_{2n-j-1} - H_{n-1})`` divided by the total ``P_n(n)``."""
    if n < 4:
        raise ValueError("closed mean requires n >= 4")
    beta = beta_numbers(n)
    Hn1 = harmonic(n - 1, 1)
    num = Fraction(0)
    den = Fraction(0)
    for j in range(n):
        b = comb(2 * n - 1 - j, n - j) * (-1) ** j * beta[n - j]
        den += b
        num += b * (harmonic(2 * n - j - 1, 1) - Hn1)
    return n * num / den


def weighted_matsunaga_asym_moments(n: int) -> tuple[float, float]:
    """``mu n + 1/4 - (4W(n)-1)/(16n)`` and ``sigma^2 n - 1/8 - 1/(12n)``
    with (mu, sigma^2) = (log 2, log 2 - 1/2)."""
    w = lambert_w(float(n))
    mu = math.log(2.0) * n + 0.25 - (4.0 * w - 1.0) / (16.0 * n)
    s2 = (math.log(2.0) - 0.5) * n - 0.125 - 1.0 / (12.0 * n)
    return mu, s2


def weighted_local_gaussian(n: int, k: int) -> float:
    """Refined local Gaussian for the n^k-weighted family: the main term
    ``exp(-x^2/2) / sqrt(2 pi sigma^2 n)`` times its 1/sqrt(n) skew
    correction, at ``x = (k - mu n) / (sigma sqrt(n))``."""
    if n < 4:
        raise ValueError("n must be >= 4")
    mu = math.log(2.0)
    s2 = math.log(2.0) - 0.5
    s = math.sqrt(s2)
    x = (k - mu * n) / (s * math.sqrt(n))
    main = math.exp(-0.5 * x * x) / math.sqrt(2.0 * math.pi * s2 * n)
    corr = 1.0 + x * ((4.0 * s2 - 1.0) * x * x - 3.0 * (2.0 * s2 - 1.0)) / (24.0 * s2 * s * math.sqrt(n))
    return main * corr


def arima_pmf(n: int) -> DiscretePMF:
    """Distribution of ``C(n,k) B_{n-k}`` over k = 0..n (total B_{n+1})."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return pmf_from_weights(0, arima_rows(n).row(n), name=f"arima[{n}]")


def arima_reversed_pmf(n: int) -> DiscretePMF:
    """Row-reversed variant ``C(n,k) B_k``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    bells = bell_numbers(n)
    return pmf_from_weights(
        0, [comb(n, k) * bells[k] for k in range(n + 1)], name=f"arima_reversed[{n}]"
    )


def arima_exact_moments(n: int) -> tuple[Fraction, Fraction]:
    """Exact ``mu_n = n B_n / B_{n+1}`` and
    ``sigma_n^2 = (n(n-1) B_{n-1} + n B_n)/B_{n+1} - mu_n^2``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    b = bell_numbers(n + 1)
    mu = Fraction(n * b[n], b[n + 1])
    s2 = Fraction(n * (n - 1) * b[n - 1] + n * b[n], b[n + 1]) - mu * mu
    return mu, s2


def arima_asym_moments(n: int) -> tuple[float, float]:
    """``w (1 - w^2/(2n(w+1)^2))`` and ``w (1 - w(3w+2)/(2n(w+1)^2))``."""
    w = lambert_w(float(n))
    mu = w * (1.0 - w * w / (2.0 * n * (w + 1.0) ** 2))
    s2 = w * (1.0 - w * (3.0 * w + 2.0) / (2.0 * n * (w + 1.0) ** 2))
    return mu, s2


def arima_poisson_tv(n: int) -> float:
    """Total variation distance between the binomial-Bell distribution
    and Poisson(W(n)) (the family's limit law)."""
    pmf = arima_pmf(n)
    lam = lambert_w(float(n))
    tv = 0.0
    pois_mass = 0.0
    q = math.exp(-lam)
    for k in pmf.support():
        tv += abs(float(pmf.prob(k)) - q)
        pois_mass += q
        q *= lam / (k + 1)
    tv += max(0.0, 1.0 - pois_mass)  # Poisson tail beyond the support
    return 0.5 * tv


def a033306_pmf(n: int) -> DiscretePMF:
    """Balanced convolution ``C(n,k) B_k B_{n-k}`` over k = 0..n; the
    total is the n-th Poisson(2) moment."""
    if n < 1:
        raise ValueError("n must be >= 1")
    b = bell_numbers(n)
    return pmf_from_weights(
        0, [comb(n, k) * b[k] * b[n - k] for k in range(n + 1)], name=f"a033306[{n}]"
    )


def a033306_exact_moments(n: int) -> tuple[Fraction, Fraction]:
    """Mean is identically n/2; variance is
    ``n/4 + n(n-1) T_{n-1} / (4 T_n)`` with T the Poisson(2) moments."""
    if n < 1:
        raise ValueError("n must be >= 1")
    t = poisson_moments(2, n)
    mean = Fraction(n, 2)
    var = Fraction(n, 4) + Fraction(n * (n - 1) * t[n - 1], 4 * t[n])
    return mean, var


def a033306_asym_variance(n: int) -> float:
    """``(w~+1)/4 n - w~(w~^2+2w~+2)/(8(w~+1)^2)`` with w~ = W(n/2)."""
    w = lambert_w(n / 2.0)
    return (w + 1.0) / 4.0 * n - w * (w * w + 2.0 * w + 2.0) / (8.0 * (w + 1.0) ** 2)


# ------------------------------------------------------------- variants


def _poly_product(factors: Sequence[tuple[int, int]]) -> list[int]:
    """Coefficients of ``prod (a + b z)`` over exact integers."""
    coeffs = [1]
    for a, b in factors:
        new = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i] += a * c
            new[i + 1] += b * c
        coeffs = new
    return coeffs


VARIANT_NAMES = (
    "A056856",
    "A220883",
    "A260887",
    "A220884",
    "A078937",
    "A078938",
    "A078939",
    "A124323",
    "A086659",
)


def variant_triangle(n: int, which: str) -> DiscretePMF:
    """Row n of one of the variant triangles, as a distribution.

    Product-form triangles are expanded by exact polynomial
    multiplication; the EGF-derived ones use their binomial closed
    forms (for the singleton-marker family the k = n unit mass is
    removed in closed form, which is exactly what subtracting the
    pure-exponential term does).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if which == "A056856":
        srow = stirling_unsigned_rows(n).row(n)
        return pmf_from_weights(
            1, [v * n ** (k - 1) for k, v in zip(range(1, n + 1), srow)], name=which
        )
    if which == "A220883":
        coeffs = _poly_product([(j, n + 1) for j in range(1, n)])
        return pmf_from_weights(0, coeffs, name=which)
    if which == "A260887":
        coeffs = _poly_product([(j, n) for j in range(2, n + 1)])
        return pmf_from_weights(0, coeffs, name=which)
    if which == "A220884":
        coeffs = _poly_product([(j, n + 1 - j) for j in range(2, n + 1)])
        return pmf_from_weights(0, coeffs, name=which)
    if which in ("A078937", "A078938", "A078939"):
        a = {"A078937": 2, "A078938": 3, "A078939": 4}[which]
        m = poisson_moments(a, n)
        return pmf_from_weights(0, [comb(n, k) * m[n - k] for k in range(n + 1)], name=which)
    if which == "A124323":
        beta = beta_numbers(n)
        return pmf_from_weights(0, [comb(n, k) * beta[n - k] for k in range(n + 1)], name=which)
    if which == "A086659":
        if n < 4:
            raise ValueError("A086659 is degenerate below n = 4")
        beta = beta_numbers(n)
        return pmf_from_weights(
            0, [comb(n, k) * beta[n - k] for k in range(n)], name=which
        )
    raise ValueError(f"unknown variant triangle {which!r}")


# ------------------------------------------------------------------ LLT


def llt_report(pmf: DiscretePMF, family: LLTFamily, n: int,
               centering: str = "exact") -> LLTReport:
    """Standardized sup deviation of the family member from the Gaussian.

    ``sup_k sigma |P(X = k) - phi((k - mu)/sigma)|`` over all integer
    support points, with (mu, sigma) taken either from the exact moments
    or from the family's asymptotic formulas (``centering``).
    """
    mean, var = moments_exact(pmf)
    if var <= 0:
        raise ValueError(f"{pmf.name}: degenerate distribution (variance {var})")
    mu_a = family.mu_asym(n)
    s2_a = family.sigma2_asym(n)
    if centering == "exact":
        mu, s2 = float(mean), float(var)
    elif centering == "asym":
        mu, s2 = mu_a, s2_a
        if s2 <= 0:
            raise ValueError(f"{pmf.name}: nonpositive asymptotic variance {s2}")
    else:
        raise ValueError(f"unknown centering {centering!r}")
    sigma = math.sqrt(s2)
    sup = 0.0
    inv_sqrt2pi = 1.0 / math.sqrt(2.0 * math.pi)
    for k, w in zip(pmf.support(), pmf.weights):
        x = (k - mu) / sigma
        gauss = inv_sqrt2pi * math.exp(-0.5 * x * x)
        p = float(Fraction(w, pmf.total))
        dev = abs(sigma * p - gauss)
        if dev > sup:
            sup = dev
    return LLTReport(
        n=n,
        family=family.name,
        mean_exact=mean,
        var_exact=var,
        mu_asym=mu_a,
        sigma2_asym=s2_a,
        sup_deviation=sup,
        rate_tag=family.rate_tag,
        centering=centering,
    )


def bnk_ratio_uniformity(n: int) -> float:
    """``max_k |M[n,k] / (beta_n s[n,k]) - 1|`` in exact rationals,
    converted to float at the end."""
    if n < 4:
        raise ValueError("n must be >= 4")
    mrow = matsunaga_rows(n).row(n)
    srow = stirling_signed_rows(n).row(n)
    bn = beta_numbers(n)[n]
    worst = Fraction(0)
    for mv, sv in zip(mrow, srow):
        dev = abs(Fraction(mv, bn * sv) - 1)
        if dev > worst:
            worst = dev
    return float(worst)


def decay_exponent(ns: Sequence[int], values: Sequence[float]) -> float:
    """Least-squares slope of log(value) against log(n): the empirical
    decay exponent of a ladder (recorded, never asserted)."""
    if len(ns) != len(values) or len(ns) < 2:
        raise ValueError("need two or more ladder points")
    xs = [math.log(n) for n in ns]
    ys = [math.log(v) for v in values]
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / sxx


_LOG2 = math.log(2.0)


FAMILIES: dict[str, LLTFamily] = {
    "matsunaga": LLTFamily(
        name="matsunaga",
        build=matsunaga_pmf,
        mu_asym=lambda n: matsunaga_asym_moments(n)[0],
        sigma2_asym=lambda n: matsunaga_asym_moments(n)[1],
        rate_tag="(log n)^-1/2",
    ),
    "weighted-matsunaga": LLTFamily(
        name="weighted-matsunaga",
        build=weighted_matsunaga_pmf,
        mu_asym=lambda n: weighted_matsunaga_asym_moments(n)[0],
        sigma2_asym=lambda n: weighted_matsunaga_asym_moments(n)[1],
        rate_tag="n^-1/2",
    ),
    "arima": LLTFamily(
        name="arima",
        build=arima_pmf,
        mu_asym=lambda n: arima_asym_moments(n)[0],
        sigma2_asym=lambda n: arima_asym_moments(n)[1],
        rate_tag="(log n)^-1/2",
    ),
    "arima-reversed": LLTFamily(
        name="arima-reversed",
        build=arima_reversed_pmf,
        mu_asym=lambda n: n - arima_asym_moments(n)[0],
        sigma2_asym=lambda n: arima_asym_moments(n)[1],
        rate_tag="(log n)^-1/2",
    ),
    "a033306": LLTFamily(
        name="a033306",
        build=a033306_pmf,
        mu_asym=lambda n: n / 2.0,
        sigma2_asym=a033306_asym_variance,
        rate_tag="log(n)/n",
    ),
    "a056856": LLTFamily(
        name="a056856",
        build=lambda n: variant_triangle(n, "A056856"),
        mu_asym=lambda n: _LOG2 * n,
        sigma2_asym=lambda n: (_LOG2 - 0.5) * n,
        rate_tag="n^-1/2",
    ),
    "a220883": LLTFamily(
        name="a220883",
        build=lambda n: variant_triangle(n, "A220883"),
        mu_asym=lambda n: _LOG2 * n,
        sigma2_asym=lambda n: (_LOG2 - 0.5) * n,
        rate_tag="n^-1/2",
    ),
    "a260887": LLTFamily(
        name="a260887",
        build=lambda n: variant_triangle(n, "A260887"),
        mu_asym=lambda n: _LOG2 * n,
        sigma2_asym=lambda n: (_LOG2 - 0.5) * n,
        rate_tag="n^-1/2",
    ),
    "a220884": LLTFamily(
        name="a220884",
        build=lambda n: variant_triangle(n, "A220884"),
        mu_asym=lambda n: n / 2.0,
        sigma2_asym=lambda n: n / 6.0,
        rate_tag="n^-1/2",
    ),
    "a124323": LLTFamily(
        name="a124323",
        build=lambda n: variant_triangle(n, "A124323"),
        mu_asym=lambda n: math.log(n),
        sigma2_asym=lambda n: math.log(n),
        rate_tag="(log n)^-1/2",
    ),
}
