"""Counting all (e, r)-partitions of m.

Two independent routes:

* ``E_k(m)``, the number of (e, r)-partitions of m with largest part exactly
  k, tabulated with ``E_k(m) = E_k(m - k) + E_{k-1}(m - 1)`` wherever
  ``k <= e + 1 + r(m - k)`` (and 0 elsewhere);
* the generating function ``phi_k(x) = sum_m E_k(m) x^m`` in closed form,
  ``x^k / prod_{j<=k}(1 - x^j)`` minus a finite correction sum over
  ``2 <= i <= k`` whose weights are a handful of small table entries.

Summing over ``k <= (r*m + e + 1) // (r + 1)`` gives the total.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import series as S
from .partition_core import Params, _as_params
from .series import Series

__all__ = [
    "CountTable",
    "k_bound",
    "build_table",
    "count_all",
    "a_index",
    "phi_series",
    "correction_weights",
    "main_sum_series",
    "correction_sum_series",
    "count_all_via_series",
    "count_with_parts_dp",
]


def k_bound(m: int, params: Params) -> int:
    """Largest k with ``k <= e + 1 + r(m - k)``."""
    params = _as_params(params)
    return (params.r * m + params.e + 1) // (params.r + 1)


@dataclass(frozen=True)
class CountTable:
    params: Params
    m_max: int
    k_max: int
    rows: tuple[tuple[int, ...], ...]  # rows[m][k] == E_k(m)

    def E(self, k: int, m: int) -> int:
        if k < 0 or m < 0 or k > m:
            return 0
        if m > self.m_max:
            raise IndexError(f"E_{k}({m}) outside the table (m_max = {self.m_max})")
        if k > self.k_max:
            # beyond k_max the guard k <= e+1+r(m-k) fails for every m <= m_max
            return 0
        return self.rows[m][k]

    def total(self, m: int) -> int:
        return sum(self.rows[m][1 : min(self.k_max, m) + 1])

    def to_csv(self) -> str:
        lines = ["m,k,E"]
        for m in range(self.m_max + 1):
            for k in range(min(self.k_max, m) + 1):
                lines.append(f"{m},{k},{self.rows[m][k]}")
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=64)
def build_table(params: Params, m_max: int) -> CountTable:
    params = _as_params(params)
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    e1, r = params.e + 1, params.r
    k_max = max(1, k_bound(m_max, params))
    rows: list[list[int]] = []
    for m in range(m_max + 1):
        row = [0] * (k_max + 1)
        if m == 0:
            row[0] = 1
        for k in range(1, min(k_max, m) + 1):
            if k <= e1 + r * (m - k):
                prev = rows[m - k][k] if k <= m - k else 0
                row[k] = prev + rows[m - 1][k - 1]
        rows.append(row)
    return CountTable(params, m_max, k_max, tuple(tuple(row) for row in rows))


def count_all(m: int, params: Params) -> int:
    params = _as_params(params)
    if m < 1:
        raise ValueError("m must be >= 1")
    return build_table(params, m).total(m)


def a_index(i: int, params: Params) -> int:
    """``ceil((i - (e + 1)) / r)``, rounding toward +inf for negative numerators too."""
    params = _as_params(params)
    return -((params.e + 1 - i) // params.r)


def correction_weights(k_max: int, params: Params) -> dict[int, tuple[int, int]]:
    """Nonzero ``i -> (a_i, E_{i-1}(i + a_i - 2))`` for ``2 <= i <= k_max``.

    The ``i = 2`` weight ``E_1(a_2)`` is 1 exactly when ``e = 0`` (then
    ``a_2 = 1``), so the sum has to start there for r-complete partitions.
    """
    params = _as_params(params)
    if k_max < 2:
        return {}
    needed = max(i + a_index(i, params) - 2 for i in range(2, k_max + 1))
    table = build_table(params, max(needed, 1))
    out = {}
    for i in range(2, k_max + 1):
        a = a_index(i, params)
        w = table.E(i - 1, i + a - 2)
        if w:
            # w != 0 forces i + a - 2 >= i - 1, i.e. a >= 1
            out[i] = (a, w)
    return out


def _phi_pieces(k_max: int, params: Params, N: int):
    """Yield ``(k, main_k, corr_k)`` with ``phi_k = main_k - corr_k``.

    ``main_k = x^k / prod_{j<=k}(1 - x^j)`` and
    ``corr_k = x^(k-1) sum_{i=2}^{k} w_i x^(a_i) / prod_{j=i}^{k}(1 - x^j)``,
    both advanced one ``1/(1 - x^k)`` factor at a time.
    """
    weights = correction_weights(k_max, params)
    main = S.one(N)
    inner = S.zero(N)
    for k in range(1, k_max + 1):
        main = S.product([k], N, base=S.shift(main, 1))
        if k in weights:
            a, w = weights[k]
            inner = inner + S.monomial(a, N, w)
        inner = S.product([k], N, base=inner)
        yield k, main, S.shift(inner, k - 1)


def phi_series(k: int, params: Params, N: int) -> Series:
    """``phi_k`` to order ``N``: its ``x^m`` coefficient is ``E_k(m)``."""
    params = _as_params(params)
    if k < 1:
        raise ValueError("k must be >= 1")
    for j, main, corr in _phi_pieces(k, params, N):
        if j == k:
            return main - corr
    raise AssertionError("unreachable")


def main_sum_series(k_max: int, N: int) -> Series:
    """``sum_{k=1}^{k_max} x^k / prod_{j<=k} (1 - x^j)``."""
    acc = S.zero(N)
    for _, main, _ in _phi_pieces(k_max, Params(0, 1), N):
        acc = acc + main
    return acc


def correction_sum_series(k_max: int, params: Params, N: int) -> Series:
    params = _as_params(params)
    acc = S.zero(N)
    for _, _, corr in _phi_pieces(k_max, params, N):
        acc = acc + corr
    return acc


def count_all_via_series(m: int, params: Params) -> int:
    """Coefficient of ``x^m`` in ``sum_k phi_k`` over ``k <= (r*m + e + 1) // (r + 1)``."""
    params = _as_params(params)
    if m < 1:
        raise ValueError("m must be >= 1")
    total = 0
    for _, main, corr in _phi_pieces(k_bound(m, params), params, m + 1):
        total += main[m] - corr[m]
    return total


def count_with_parts_dp(m: int, params: Params, parts: int) -> int:
    """Number of (e, r)-partitions of ``m`` with exactly ``parts`` parts.

    Tabulates ``C[l][s][k]``: partitions of ``s`` with ``l`` parts and largest
    part ``k``; a part ``k`` may follow any prefix of sum ``s - k`` whose
    largest part is at most ``k`` when ``k <= e + 1 + r(s - k)``.
    """
    params = _as_params(params)
    e1, r = params.e + 1, params.r
    if m < 1 or parts < 1:
        raise ValueError("m and parts must be >= 1")
    # cum[s][k] = number of valid l-part prefixes of sum s with largest part <= k
    cum = [[0] * (m + 1) for _ in range(m + 1)]
    cum[0] = [1] * (m + 1)
    for _ in range(parts):
        nxt = [[0] * (m + 1) for _ in range(m + 1)]
        for s in range(1, m + 1):
            row = nxt[s]
            running = 0
            for k in range(1, m + 1):
                if k <= s and k <= e1 + r * (s - k):
                    running += cum[s - k][k]
                row[k] = running
        cum = nxt
    return cum[m][m]
