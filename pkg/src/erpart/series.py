"""Truncated formal power series with exact integer coefficients.

A :class:`Series` holds the coefficients of ``x^0 .. x^(N-1)`` and its
truncation order ``N``.  Two series are considered equal when they agree on
every exponent below the order, i.e. modulo ``O(x^N)``.  Every binary
operation returns a result whose order is the minimum of its inputs' orders,
so precision is never silently invented.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import OrderExceeded

__all__ = [
    "Series",
    "zero",
    "one",
    "monomial",
    "geom",
    "product",
    "mul",
    "add_sub",
    "shift",
    "substitute",
    "substitute_to",
    "coeff",
]


@dataclass(frozen=True)
class Series:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("a Series needs truncation order N >= 1")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: int | None = None) -> Series:
        """Build a series from leading coefficients, zero-padding up to ``order``."""
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs)
        if order < 1:
            raise ValueError("order must be >= 1")
        coeffs = coeffs[:order] + [0] * (order - len(coeffs))
        return cls(tuple(coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return coeff(self, k)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: Series) -> Series:
        return add_sub(self, other, +1)

    def __sub__(self, other: Series) -> Series:
        return add_sub(self, other, -1)

    def __mul__(self, other):
        if isinstance(other, int):
            return Series(tuple(other * c for c in self.coeffs))
        return mul(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> Series:
        return Series(tuple(-c for c in self.coeffs))

    def truncate(self, order: int) -> Series:
        """Drop precision down to ``order`` (which may not exceed the current order)."""
        if order > self.order:
            raise OrderExceeded(f"cannot raise order {self.order} to {order}")
        return Series(self.coeffs[:order])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{k}")
        body = " + ".join(terms) if terms else "0"
        return body.replace("+ -", "- ") + f" + O(x^{self.order})"

    def to_json(self) -> str:
        """JSON array of decimal strings (big coefficients survive any parser)."""
        return json.dumps([str(c) for c in self.coeffs])


def zero(N: int) -> Series:
    return Series((0,) * N)


def one(N: int) -> Series:
    return Series.from_coeffs([1], N)


def monomial(t: int, N: int, c: int = 1) -> Series:
    """``c * x^t`` truncated to order ``N``."""
    if t < 0:
        raise ValueError("exponent must be nonnegative")
    out = [0] * N
    if t < N:
        out[t] = c
    return Series(tuple(out))


def geom(j: int, N: int) -> Series:
    """Coefficients of ``1/(1 - x^j)`` below ``x^N``."""
    if j < 1:
        raise ValueError("geom needs j >= 1")
    return Series(tuple(1 if t % j == 0 else 0 for t in range(N)))


def _mul_by_geom(coeffs: list[int], j: int) -> list[int]:
    # in-place prefix sum with stride j == multiplication by 1/(1-x^j)
    for t in range(j, len(coeffs)):
        coeffs[t] += coeffs[t - j]
    return coeffs


def product(factors: Sequence[int], N: int, base: Series | None = None) -> Series:
    """``base * prod_j 1/(1 - x^j)`` over ``j in factors``, truncated to ``N``.

    Far cheaper than chaining :func:`mul` with :func:`geom` factors.
    """
    if base is None:
        c = [0] * N
        c[0] = 1
    else:
        N = min(N, base.order)
        c = list(base.coeffs[:N])
    for j in factors:
        if j < 1:
            raise ValueError("geom factor needs j >= 1")
        _mul_by_geom(c, j)
    return Series(tuple(c))


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to ``min(a.order, b.order)``."""
    N = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = [0] * N
    for i in range(N):
        ai = ac[i]
        if ai == 0:
            continue
        for j in range(N - i):
            bj = bc[j]
            if bj:
                out[i + j] += ai * bj
    return Series(tuple(out))


def add_sub(a: Series, b: Series, sign: int = 1) -> Series:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    N = min(a.order, b.order)
    return Series(tuple(a.coeffs[k] + sign * b.coeffs[k] for k in range(N)))


def shift(a: Series, t: int) -> Series:
    """Multiply by ``x^t``; the order is kept, so the top ``t`` coefficients fall off."""
    if t < 0:
        raise ValueError("shift must be nonnegative")
    N = a.order
    if t >= N:
        return zero(N)
    return Series((0,) * t + a.coeffs[: N - t])


def substitute(a: Series, t: int) -> Series:
    """The series ``a(x^t)``, kept at the order of ``a``.

    ``a(x^t)`` is actually known to order ``t * a.order``; callers that need
    more precision should pass a longer ``a`` and truncate afterwards.
    """
    if t < 1:
        raise ValueError("substitution exponent must be >= 1")
    N = a.order
    out = [0] * N
    for k in range(0, (N - 1) // t + 1):
        out[t * k] = a.coeffs[k]
    return Series(tuple(out))


def substitute_to(a: Series, t: int, N: int) -> Series:
    """``a(x^t)`` at order ``N``; needs ``a.order >= ceil(N / t)``."""
    if t < 1:
        raise ValueError("substitution exponent must be >= 1")
    need = -(-N // t)
    if a.order < need:
        raise OrderExceeded(f"a(x^{t}) to order {N} needs {need} coefficients, have {a.order}")
    out = [0] * N
    for k in range(need):
        out[t * k] = a.coeffs[k]
    return Series(tuple(out))


def coeff(a: Series, k: int) -> int:
    if k < 0:
        raise IndexError("negative exponent")
    if k >= a.order:
        raise OrderExceeded(f"coefficient of x^{k} requested from a series known only to O(x^{a.order})")
    return a.coeffs[k]
