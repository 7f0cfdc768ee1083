"""Exhaustive generation of (e, r)-partitions.

The prefix inequalities double as a pruning rule: a depth-first search that
only appends parts ``l' in [last, (e + 1) + r * s]`` never visits an invalid
prefix.  Children are tried in increasing order, so results come out in
lexicographic order of their part sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import LimitExceeded
from .partition_core import Params, Partition, _as_params, max_sum, min_parts

__all__ = [
    "EnumConfig",
    "enumerate_all",
    "iter_er_partitions",
    "count_minimal_brute",
    "integer_partitions",
    "mu_vectors",
    "r_n_brute",
]


@dataclass(frozen=True)
class EnumConfig:
    m: int
    params: Params
    minimal_only: bool = False
    part_count: Optional[int] = None
    limit: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "params", _as_params(self.params))
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.part_count is not None and self.part_count < 1:
            raise ValueError("part_count must be >= 1")
        if self.limit is not None and self.limit < 0:
            raise ValueError("limit must be >= 0")

    @property
    def target_parts(self) -> Optional[int]:
        if self.minimal_only:
            k = min_parts(self.m, self.params)
            if self.part_count is not None and self.part_count != k:
                return 0
            return k
        return self.part_count


def _max_reach(s: int, k: int, e1: int, r: int) -> int:
    # largest total reachable from prefix sum s by appending k more parts
    for _ in range(k):
        s = (r + 1) * s + e1
    return s


def iter_er_partitions(
    m: int, params: Params, part_count: Optional[int] = None
) -> Iterator[tuple[int, ...]]:
    """Yield part tuples of every (e, r)-partition of ``m``, lexicographically."""
    params = _as_params(params)
    e1, r = params.e + 1, params.r
    parts: list[int] = []

    def dfs(s: int, last: int) -> Iterator[tuple[int, ...]]:
        rest = m - s
        if rest == 0:
            if part_count is None or len(parts) == part_count:
                yield tuple(parts)
            return
        if part_count is not None:
            left = part_count - len(parts)
            if left <= 0 or _max_reach(s, left, e1, r) < m:
                return
        hi = min(e1 + r * s, rest)
        for lam in range(last, hi + 1):
            after = rest - lam
            if after and after < lam:
                # the remainder would need a part smaller than lam
                continue
            if part_count is not None:
                left = part_count - len(parts) - 1
                if left == 0 and after:
                    continue
                if after < left * lam:
                    break
            parts.append(lam)
            yield from dfs(s + lam, lam)
            parts.pop()

    yield from dfs(0, 1)


def enumerate_all(cfg: EnumConfig) -> list[Partition]:
    """All (e, r)-partitions selected by ``cfg``, in lexicographic order.

    Raises :class:`LimitExceeded` (carrying the partial list) if more than
    ``cfg.limit`` partitions exist.
    """
    k = cfg.target_parts
    if k == 0:
        return []
    out: list[Partition] = []
    for parts in iter_er_partitions(cfg.m, cfg.params, k):
        if cfg.limit is not None and len(out) >= cfg.limit:
            raise LimitExceeded(
                f"more than {cfg.limit} partitions of {cfg.m}; result truncated", out
            )
        out.append(Partition(parts))
    return out


def count_minimal_brute(m: int, params: Params) -> int:
    params = _as_params(params)
    k = min_parts(m, params)
    return sum(1 for _ in iter_er_partitions(m, params, k))


def integer_partitions(m: int) -> Iterator[tuple[int, ...]]:
    """All partitions of ``m`` as weakly increasing tuples, with no filtering."""

    def rec(rest: int, low: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for lam in range(low, rest + 1):
            for tail in rec(rest - lam, lam):
                yield (lam,) + tail

    yield from rec(m, 1)


def mu_vectors(n: int, params: Params, k_max: int) -> Iterator[tuple[int, ...]]:
    """Every mu-vector of length ``n + 1`` with weight at most ``k_max``."""
    params = _as_params(params)
    e, r = params.e, params.r
    mus: list[int] = []

    def dfs(i: int, total: int) -> Iterator[tuple[int, ...]]:
        if i > n:
            yield tuple(mus)
            return
        if i == 0:
            lo, hi = 0, e
        else:
            lo = r * total
            hi = (e + 1) * r * (r + 1) ** (i - 1) + mus[-1]
        hi = min(hi, k_max - total)
        for mu in range(lo, hi + 1):
            mus.append(mu)
            yield from dfs(i + 1, total + mu)
            mus.pop()

    yield from dfs(0, 0)


def r_n_brute(n: int, params: Params, k_max: int) -> list[int]:
    """``[r_n(0), ..., r_n(k_max)]``: mu-vectors of length ``n + 1`` counted by weight."""
    if n < 0:
        raise ValueError("n must be >= 0")
    counts = [0] * (k_max + 1)
    for mv in mu_vectors(n, params, k_max):
        counts[sum(mv)] += 1
    return counts


def reflected_weight(m: int, n: int, params: Params) -> int:
    """Weight ``(e+1)((r+1)^(n+1) - 1)/r - m`` of the mu-vectors matching partitions of ``m``."""
    return max_sum(n, params) - m
