"""Counting minimal (e, r)-partitions through mu-vector generating functions.

Minimal (e, r)-partitions of m with ``n + 1`` parts correspond one-to-one
with mu-vectors of weight ``k = (e+1)((r+1)^(n+1) - 1)/r - m``, so the count
is the ``x^k`` coefficient of ``R_n(x)``, the weight enumerator of
mu-vectors of length ``n + 1``.  ``R_n`` is only needed below its validity
order ``V_n = (e+1)(r+1)^n``, and is available three ways:

* closed forms built from ``(r+1)``-ary partition products ``F_n`` and the
  correction series ``G_n`` (r >= 2) or ``D_n``, ``D*_n`` (r = 1);
* explicit base cases for ``n <= 2``;
* a two-term recursion in ``R_{n-1}(x^(r+1))`` and ``R_{n-2}(x^(2r+1))``,
  valid for every r and used as the cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import series as S
from .errors import OrderExceeded, UnsupportedLevel
from .partition_core import Params, _as_params, max_sum, min_parts
from .series import Series

__all__ = [
    "MinSeriesBundle",
    "validity_order",
    "F_series",
    "G_series",
    "D_series",
    "Dstar_series",
    "R_series_closed",
    "R_series_base",
    "R_series_recursive",
    "R_series",
    "closed_form_applies",
    "min_bundle",
    "count_minimal",
]


def validity_order(n: int, params: Params) -> int:
    """``(e+1)(r+1)^n``: R_n's coefficients are pinned below this exponent."""
    params = _as_params(params)
    return (params.e + 1) * (params.r + 1) ** n


def _F_factors(n: int, r: int, t: int = 1) -> list[int]:
    # F_n(x^t) = prod_{j=0}^{n} 1/(1 - x^(t (r+1)^j)); empty for n = -1
    return [t * (r + 1) ** j for j in range(n + 1)]


@lru_cache(maxsize=256)
def F_series(n: int, r: int, N: int) -> Series:
    """``F_n = prod_{j=0}^{n} 1/(1 - x^((r+1)^j))``, with ``F_{-1} = 1``."""
    if n < -1:
        raise ValueError("F_n is defined for n >= -1")
    return S.product(_F_factors(n, r), N)


@lru_cache(maxsize=256)
def G_series(n: int, r: int, N: int) -> Series:
    """``G_n = sum_{j<n} x^((r+1)^j - 1) / (1 - x^(2(r+1)^j)) F_j(x) F_{n-j-1}(x^((2r+1)(r+1)^j))``."""
    if n < 0:
        raise ValueError("G_n is defined for n >= 0")
    acc = S.zero(N)
    for j in range(n):
        p = (r + 1) ** j
        factors = [2 * p] + _F_factors(j, r) + _F_factors(n - j - 1, r, (2 * r + 1) * p)
        acc = acc + S.product(factors, N, base=S.monomial(p - 1, N))
    return acc


@lru_cache(maxsize=256)
def D_series(n: int, N: int) -> Series:
    """``D_n = sum_{j<n} x^(2^j - 1) F_{j+1}(x) F_{n-j-2}(x^(3 * 2^j))`` (r = 1)."""
    if n < 0:
        raise ValueError("D_n is defined for n >= 0")
    acc = S.zero(N)
    for j in range(n):
        factors = _F_factors(j + 1, 1) + _F_factors(n - j - 2, 1, 3 * 2**j)
        acc = acc + S.product(factors, N, base=S.monomial(2**j - 1, N))
    return acc


@lru_cache(maxsize=256)
def Dstar_series(n: int, N: int) -> Series:
    """``D*_n = sum_{j<n} x^(2^(j+2) - 4) F_{j+1}(x) D_{n-j}(x^(3 * 2^j))`` (r = 1)."""
    if n < 0:
        raise ValueError("D*_n is defined for n >= 0")
    acc = S.zero(N)
    for j in range(n):
        t = 3 * 2**j
        inner = S.substitute_to(D_series(n - j, -(-N // t)), t, N)
        term = S.product(_F_factors(j + 1, 1), N, base=inner)
        acc = acc + S.shift(term, 2 ** (j + 2) - 4)
    return acc


def _order(n: int, params: Params, N: Optional[int]) -> int:
    V = validity_order(n, params)
    if N is None:
        return V
    if N < 1:
        raise ValueError("order must be >= 1")
    return min(N, V)


def R_series_closed(n: int, params: Params, N: Optional[int] = None) -> Series:
    """Closed form of ``R_n`` below ``min(N, V_n)``.

    r >= 2, n >= 1:  ``F_n - x^(r(e+1)(r+1)^(n-1) + 1) G_n``.
    r = 1,  n >= 3:  ``F_n - x^(2^(n-1)(e+1) + 1) D_n + x^(7 * 2^(n-3)(e+1) + 4) D*_(n-2)``.
    """
    params = _as_params(params)
    e1, r = params.e + 1, params.r
    if r >= 2 and n < 1 or r == 1 and n < 3:
        raise UnsupportedLevel(f"no closed form for r = {r}, n = {n}; use R_series_base")
    N = _order(n, params, N)
    F = F_series(n, r, N)
    if r >= 2:
        return F - S.shift(G_series(n, r, N), r * e1 * (r + 1) ** (n - 1) + 1)
    return (
        F
        - S.shift(D_series(n, N), 2 ** (n - 1) * e1 + 1)
        + S.shift(Dstar_series(n - 2, N), 7 * 2 ** (n - 3) * e1 + 4)
    )


def R_series_base(n: int, params: Params, N: Optional[int] = None) -> Series:
    """``R_0``, ``R_1`` and ``R_2`` from their explicit formulas."""
    params = _as_params(params)
    e, r = params.e, params.r
    if n == 0:
        # exact polynomial 1 + x + ... + x^e
        N = validity_order(0, params) if N is None else N
        return S.Series.from_coeffs([1] * (e + 1), N)
    N = _order(n, params, N)
    if n == 1:
        return S.product([1, r + 1], N) - S.product([1, 2], N, base=S.monomial(r * (e + 1) + 1, N))
    if n == 2:
        if r >= 2:
            return R_series(2, params, N)
        F2 = F_series(2, 1, N)
        bracket = S.shift(F2, 1) + S.product(_F_factors(1, 1) + _F_factors(0, 1, 3), N)
        return F2 - S.shift(bracket, 2 * (e + 1) + 1)
    raise UnsupportedLevel(f"base formulas cover n <= 2, got n = {n}")


def _shift_to(a: Series, t: int, N: int) -> Series:
    # x^t * a at order N; a must be known to order N - t
    if t >= N:
        return S.zero(N)
    if a.order < N - t:
        raise OrderExceeded(f"need {N - t} coefficients, have {a.order}")
    return S.Series((0,) * t + a.coeffs[: N - t])


@lru_cache(maxsize=256)
def _R_recursive_full(n: int, params: Params) -> Series:
    if n <= 1:
        return R_series_base(n, params)
    e1, r = params.e + 1, params.r
    V = validity_order(n, params)
    first = S.product([1], V, base=S.substitute_to(_R_recursive_full(n - 1, params), r + 1, V))
    t = e1 * r * (r + 1) ** (n - 1) + 1
    if t >= V:
        return first
    inner = S.substitute_to(_R_recursive_full(n - 2, params), 2 * r + 1, V - t)
    second = S.product([1, 2], V - t, base=inner)
    return first - _shift_to(second, t, V)


def R_series_recursive(n: int, params: Params, N: Optional[int] = None) -> Series:
    """``R_n = R_{n-1}(x^(r+1))/(1-x) - x^((e+1) r (r+1)^(n-1) + 1) R_{n-2}(x^(2r+1))/((1-x)(1-x^2))``."""
    params = _as_params(params)
    if n < 0:
        raise ValueError("n must be >= 0")
    full = _R_recursive_full(n, params)
    N = full.order if N is None else min(N, full.order)
    return full.truncate(N)


def closed_form_applies(n: int, params: Params) -> bool:
    """Whether :func:`R_series_closed` is exact below ``V_n`` for these arguments.

    For r >= 2 the ``G_n`` form also needs ``e <= 2r``: past that, terms the
    derivation drops as ``O(x^(V_n))`` land below ``V_n`` (first at e = 2r + 2
    for n = 1 and e = 2r + 1 for n >= 2).
    """
    params = _as_params(params)
    if params.r == 1:
        return n >= 3
    return n >= 1 and params.e <= 2 * params.r


def R_series(n: int, params: Params, N: Optional[int] = None, method: str = "auto") -> Series:
    """Dispatch on ``method``.

    ``auto`` uses the closed form where :func:`closed_form_applies`, the base
    formulas for r = 1 and n <= 2 (and n = 0), and the recursion otherwise.
    """
    params = _as_params(params)
    if method == "recursive":
        return R_series_recursive(n, params, N)
    if method == "base":
        return R_series_base(n, params, N)
    if method == "closed":
        return R_series_closed(n, params, N)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    if closed_form_applies(n, params):
        return R_series_closed(n, params, N)
    if n <= 2 and (params.r == 1 or n == 0):
        return R_series_base(n, params, N)
    return R_series_recursive(n, params, N)


@dataclass(frozen=True)
class MinSeriesBundle:
    params: Params
    n: int
    N: int
    F: Series
    R: Series
    G: Optional[Series] = None
    D: Optional[Series] = None
    Dstar: Optional[Series] = None

    @property
    def validity(self) -> int:
        return validity_order(self.n, self.params)


def min_bundle(n: int, params: Params, N: Optional[int] = None) -> MinSeriesBundle:
    """All the series behind ``R_n`` at one order, for inspection."""
    params = _as_params(params)
    V = validity_order(n, params)
    N = V if N is None else N
    if N < V:
        raise ValueError(f"bundle order {N} is below the validity order {V}")
    r = params.r
    F = F_series(n, r, N)
    R = R_series(n, params, V)
    if r >= 2:
        return MinSeriesBundle(params, n, N, F, R, G=G_series(n, r, N))
    return MinSeriesBundle(
        params, n, N, F, R, D=D_series(n, N), Dstar=Dstar_series(max(n - 2, 0), N)
    )


def count_minimal(m: int, params: Params, method: str = "auto") -> int:
    """Number of minimal (e, r)-partitions of ``m``, read off ``R_n`` at the reflected weight."""
    params = _as_params(params)
    if m < 1:
        raise ValueError("m must be >= 1")
    n = min_parts(m, params) - 1
    k = max_sum(n, params) - m
    assert 0 <= k <= validity_order(n, params) - 1, (
        f"reflected weight {k} outside [0, V_{n}) for m = {m}"
    )
    return R_series(n, params, k + 1, method=method)[k]
