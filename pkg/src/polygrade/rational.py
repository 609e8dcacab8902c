"""Exact rational helpers: parsing, formatting, rank and span membership."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def parse_rational(value) -> Fraction:
    """Accept ints, Fractions, or ``"p/q"`` / ``"p"`` strings. Floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise ValueError(f"not a rational literal: {value!r}") from None
    raise TypeError(f"expected int or 'p/q' string, got {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def row_reduce(rows: Iterable[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Row echelon form over Q; zero rows dropped."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return []
    n_cols = len(m[0])
    piv_r = 0
    for piv_c in range(n_cols):
        for i in range(piv_r, len(m)):
            if m[i][piv_c] != 0:
                break
        else:
            continue
        m[piv_r], m[i] = m[i], m[piv_r]
        fp = m[piv_r][piv_c]
        for r in range(piv_r + 1, len(m)):
            fr = m[r][piv_c]
            if fr == 0:
                continue
            f = fr / fp
            m[r] = [a - f * b for a, b in zip(m[r], m[piv_r])]
        piv_r += 1
        if piv_r == len(m):
            break
    return m[:piv_r]


def rank(rows: Iterable[Sequence[Fraction]]) -> int:
    return len(row_reduce(rows))


def in_span(vector: Sequence[Fraction], spanning: Sequence[Sequence[Fraction]]) -> bool:
    """True iff ``vector`` is a rational combination of ``spanning``."""
    if all(x == 0 for x in vector):
        return True
    base = rank(spanning)
    return rank(list(spanning) + [vector]) == base
