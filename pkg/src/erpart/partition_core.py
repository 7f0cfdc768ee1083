"""Partitions, parameters and the (e, r)-partition tests.

A partition ``m = l_0 + ... + l_n`` (parts weakly increasing) is an
*(e, r)-partition* when no ``e + 1`` consecutive integers in ``[0, r*m]`` are
missing from its r-cover ``{sum a_i l_i : 0 <= a_i <= r}``.  Two tests are
provided:

* :func:`is_er_partition` -- the prefix inequalities
  ``l_i <= (e + 1) + r * (l_0 + ... + l_{i-1})``; linear time.
* :func:`cover_gap` -- builds the r-cover explicitly and scans it for a gap.
  Exponential in principle, so it is guarded by an explicit size bound.

Both always agree; the second exists to check the first.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import NonpositivePart, NotErPartition, OracleSizeExceeded

__all__ = [
    "Params",
    "Partition",
    "CoverReport",
    "MuVector",
    "DEFAULT_ORACLE_LIMIT",
    "oracle_limit",
    "satisfies_inequalities",
    "is_er_partition",
    "r_cover",
    "r_cover_bits",
    "cover_gap",
    "min_parts",
    "min_parts_log_rule",
    "max_sum",
    "canonical_minimal",
    "mu_transform",
    "mu_inverse",
]

DEFAULT_ORACLE_LIMIT = 10**6


@dataclass(frozen=True)
class Params:
    """Error allowance ``e >= 0`` and multiplier bound ``r >= 1``."""

    e: int
    r: int

    def __post_init__(self):
        if not isinstance(self.e, int) or not isinstance(self.r, int):
            raise TypeError("e and r must be integers")
        if self.e < 0:
            raise ValueError(f"e must be >= 0, got {self.e}")
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        for p in parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
        if any(a > b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly increasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "_m", sum(parts))

    @classmethod
    def of(cls, parts: Iterable[int]) -> Partition:
        """Build from parts in any order."""
        return cls(tuple(sorted(parts)))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``a+b+c``; parts must already be weakly increasing."""
        text = text.strip()
        pieces = text.split("+")
        if not text or any(not p.isdigit() for p in pieces):
            raise ValueError(f"malformed partition {text!r}; expected INT(+INT)*")
        return cls(tuple(int(p) for p in pieces))

    @property
    def m(self) -> int:
        return self._m

    @property
    def n(self) -> int:
        """Index of the largest part (number of parts minus one)."""
        return len(self.parts) - 1

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class CoverReport:
    ok: bool
    gap_start: Optional[int] = None


@dataclass(frozen=True)
class MuVector:
    """Complement vector ``mu_i = (e + 1)(r + 1)^i - l_i``.

    Construction checks the translated constraints
    ``0 <= mu_0 <= e`` and
    ``r * (mu_0 + ... + mu_{i-1}) <= mu_i <= (e + 1) r (r + 1)^(i-1) + mu_{i-1}``
    and raises :class:`NotErPartition` when they fail.
    """

    mus: tuple[int, ...]
    e: int
    r: int

    def __post_init__(self):
        mus = tuple(self.mus)
        object.__setattr__(self, "mus", mus)
        Params(self.e, self.r)
        if not mus:
            raise NotErPartition("empty mu-vector")
        e, r = self.e, self.r
        if not 0 <= mus[0] <= e:
            raise NotErPartition(f"mu_0 = {mus[0]} outside [0, {e}]")
        total = mus[0]
        for i in range(1, len(mus)):
            lo = r * total
            hi = (e + 1) * r * (r + 1) ** (i - 1) + mus[i - 1]
            if not lo <= mus[i] <= hi:
                raise NotErPartition(f"mu_{i} = {mus[i]} outside [{lo}, {hi}]")
            total += mus[i]

    @property
    def n(self) -> int:
        return len(self.mus) - 1

    @property
    def weight(self) -> int:
        return sum(self.mus)


def oracle_limit() -> int:
    """Largest ``r*m`` the cover oracle accepts (``ERPART_ORACLE_LIMIT`` overrides)."""
    raw = os.environ.get("ERPART_ORACLE_LIMIT")
    if raw is None:
        return DEFAULT_ORACLE_LIMIT
    return int(raw)


def _as_params(params) -> Params:
    if isinstance(params, Params):
        return params
    e, r = params
    return Params(e, r)


def satisfies_inequalities(p: Partition, params: Params) -> bool:
    """Check ``l_i <= (e + 1) + r * sum_{j<i} l_j`` for every i (empty sum for i = 0)."""
    params = _as_params(params)
    e1, r = params.e + 1, params.r
    s = 0
    for part in p.parts:
        if part > e1 + r * s:
            return False
        s += part
    return True


def is_er_partition(p: Partition, params: Params) -> bool:
    return satisfies_inequalities(p, params)


def r_cover_bits(p: Partition, params: Params, limit: int | None = None) -> int:
    """The r-cover as a Python int bitset: bit ``t`` set iff ``t`` is attainable."""
    params = _as_params(params)
    r = params.r
    top = r * p.m
    if limit is None:
        limit = oracle_limit()
    if top > limit:
        raise OracleSizeExceeded(f"r*m = {top} exceeds the oracle bound {limit}")
    bits = 1
    for part in p.parts:
        acc = bits
        for a in range(1, r + 1):
            acc |= bits << (a * part)
        bits = acc
    return bits


def _cover_string(bits: int, top: int) -> str:
    # character t is "1" iff t is in the cover, for 0 <= t <= top
    return format(bits, "b")[::-1].ljust(top + 1, "0")[: top + 1]


def r_cover(p: Partition, params: Params, limit: int | None = None) -> set[int]:
    params = _as_params(params)
    occ = _cover_string(r_cover_bits(p, params, limit), params.r * p.m)
    return {t for t, c in enumerate(occ) if c == "1"}


def cover_gap(p: Partition, params: Params, limit: int | None = None) -> CoverReport:
    """Find the smallest ``l`` with ``l .. l+e`` inside ``[0, r*m]`` and all uncovered."""
    params = _as_params(params)
    occ = _cover_string(r_cover_bits(p, params, limit), params.r * p.m)
    at = occ.find("0" * (params.e + 1))
    if at < 0:
        return CoverReport(True)
    return CoverReport(False, at)


def max_sum(n: int, params: Params) -> int:
    """Largest ``m`` with an (e, r)-partition of ``n + 1`` parts: ``(e+1)((r+1)^(n+1) - 1)/r``."""
    params = _as_params(params)
    num = (params.e + 1) * ((params.r + 1) ** (n + 1) - 1)
    q, rem = divmod(num, params.r)
    assert rem == 0, "(r+1)^k - 1 is always divisible by r"
    return q


def min_parts(m: int, params: Params) -> int:
    """Number of parts of a minimal (e, r)-partition of ``m``.

    The smallest ``n + 1`` with ``m <= (e+1)((r+1)^(n+1) - 1)/r``, found by
    integer multiplication.  Parts obey ``l_i <= (e+1)(r+1)^i``, so fewer parts
    cannot reach ``m``; :func:`canonical_minimal` shows this many suffice.
    """
    params = _as_params(params)
    if m < 1:
        raise ValueError("m must be >= 1")
    n = 0
    while max_sum(n, params) < m:
        n += 1
    return n + 1


def min_parts_log_rule(m: int, params: Params) -> int:
    """``floor(log_{r+1}(r*m/(e+1))) + 1`` in exact arithmetic (1 when the log is negative).

    Agrees with :func:`min_parts` unless ``e >= r`` and ``r*m`` falls strictly
    between ``(e+1)((r+1)^(n+1) - 1)`` and ``(e+1)(r+1)^(n+1)``; there it is one
    too small (e.g. m = 3, e = 1, r = 1, where the lone part 3 exceeds e + 1).
    """
    params = _as_params(params)
    if m < 1:
        raise ValueError("m must be >= 1")
    target = params.r * m
    power = params.e + 1
    n = 0
    if power > target:
        return 1
    while power * (params.r + 1) <= target:
        power *= params.r + 1
        n += 1
    return n + 1


def canonical_minimal(m: int, params: Params) -> Partition:
    """The minimal (e, r)-partition ``(e+1), (e+1)(r+1), ..., (e+1)(r+1)^(n-1)`` plus remainder."""
    params = _as_params(params)
    n = min_parts(m, params) - 1
    e1, r = params.e + 1, params.r
    parts = [e1 * (r + 1) ** i for i in range(n)]
    rest = m - (max_sum(n - 1, params) if n > 0 else 0)
    parts.append(rest)
    return Partition.of(parts)


def mu_transform(p: Partition, params: Params) -> MuVector:
    params = _as_params(params)
    e1, r = params.e + 1, params.r
    mus = tuple(e1 * (r + 1) ** i - lam for i, lam in enumerate(p.parts))
    return MuVector(mus, params.e, params.r)


def mu_inverse(mv: MuVector) -> Partition:
    e1, r = mv.e + 1, mv.r
    parts = tuple(e1 * (r + 1) ** i - mu for i, mu in enumerate(mv.mus))
    if any(lam <= 0 for lam in parts):
        raise NonpositivePart(f"mu-vector {mv.mus} gives nonpositive parts {parts}")
    return Partition(parts)
