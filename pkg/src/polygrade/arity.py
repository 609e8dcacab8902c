"""Word-length quantization for polyadic operations.

A word built from ``ell`` nested applications of an ``n``-ary operation
consumes ``ell*(n-1) + 1`` arguments; only those lengths are composable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple


@dataclass(frozen=True)
class ArityShape:
    n: int
    ell: int
    w: int

    def __post_init__(self):
        if self.n < 2 or self.ell < 0 or self.w < 1:
            raise ValueError(f"invalid arity shape {self}")
        if self.w != self.ell * (self.n - 1) + 1:
            raise ValueError(f"w={self.w} is not {self.ell}*({self.n}-1)+1")

    @classmethod
    def from_power(cls, ell: int, n: int) -> ArityShape:
        return cls(n=n, ell=ell, w=word_length(ell, n))


class HigherPowerSolution(NamedTuple):
    """One solution of ``ell_gp*(n_gp-1) == ell_alg*(n_alg-1)``."""

    ell_gp: int
    ell_alg: int
    n_gp: int
    n_alg: int
    w: int


def _check_arity(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"arity must be an integer >= 2, got {n!r}")


def word_length(ell: int, n: int) -> int:
    """Number of arguments consumed by ``ell`` nested ``n``-ary applications."""
    _check_arity(n)
    if ell < 0:
        raise ValueError(f"polyadic power must be >= 0, got {ell}")
    return ell * (n - 1) + 1


def power_for_length(w: int, n: int) -> int | None:
    """Inverse of :func:`word_length`; ``None`` when ``w`` is not a quantized length."""
    _check_arity(n)
    if w < 1:
        raise ValueError(f"word length must be >= 1, got {w}")
    ell, rem = divmod(w - 1, n - 1)
    return ell if rem == 0 else None


def is_quantized(w: int, n: int) -> bool:
    return power_for_length(w, n) is not None


def solve_higher_power_pairs(max_value: int, min_arity: int = 3) -> list[HigherPowerSolution]:
    """All pairs of distinct arities whose composed words have equal length.

    Powers range over ``1..max_value`` and arities over ``min_arity..max_value``.
    The default ``min_arity=3`` leaves out binary operations; pass 2 to include them.
    Rows are sorted by ``(n_gp, n_alg, ell_gp)``.
    """
    if max_value < 2:
        raise ValueError(f"max_value must be >= 2, got {max_value}")
    _check_arity(min_arity)
    powers = range(1, max_value + 1)
    arities = range(min_arity, max_value + 1)
    rows = []
    for n_gp, n_alg, ell_gp, ell_alg in product(arities, arities, powers, powers):
        if n_gp == n_alg:
            continue
        if ell_gp * (n_gp - 1) == ell_alg * (n_alg - 1):
            rows.append(HigherPowerSolution(ell_gp, ell_alg, n_gp, n_alg, ell_gp * (n_gp - 1) + 1))
    rows.sort(key=lambda r: (r.n_gp, r.n_alg, r.ell_gp))
    return rows
