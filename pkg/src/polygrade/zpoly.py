"""Polyadic integer rings Z^[m,n](a, b) and grading of block-shift polynomials.

The ring consists of the representatives ``a + k*b`` of one congruence class
with m-ary addition and n-ary multiplication.  It is well defined exactly
when both arity shape invariants

    I = (a/b) * (m - 1)          and          J = (a/b) * (a**(n-1) - 1)

are nonnegative integers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import prod
from typing import Sequence

from .arity import power_for_length
from .blockshift import MatrixPolynomial, component_product_degree


class InvalidRing(ValueError):
    pass


def shape_invariants(a: int, b: int, m_add: int, n_mul: int) -> tuple[Fraction, Fraction]:
    if b < 1 or not 0 <= a < b:
        raise ValueError(f"need b >= 1 and 0 <= a < b, got a={a}, b={b}")
    r = Fraction(a, b)
    return r * (m_add - 1), r * (a ** (n_mul - 1) - 1)


def _is_natural(q: Fraction) -> bool:
    return q.denominator == 1 and q >= 0


@dataclass(frozen=True)
class PolyadicIntegerRing:
    a: int
    b: int
    m_add: int
    n_mul: int

    def __post_init__(self):
        if self.m_add < 2 or self.n_mul < 2:
            raise InvalidRing(f"arities must be >= 2, got m={self.m_add}, n={self.n_mul}")
        I, J = shape_invariants(self.a, self.b, self.m_add, self.n_mul)
        if not _is_natural(I):
            raise InvalidRing(f"shape invariant I = {I} is not a nonnegative integer")
        if not _is_natural(J):
            raise InvalidRing(f"shape invariant J = {J} is not a nonnegative integer")

    @property
    def invariants(self) -> tuple[int, int]:
        I, J = shape_invariants(self.a, self.b, self.m_add, self.n_mul)
        return int(I), int(J)

    def representative(self, k: int) -> int:
        return self.a + k * self.b

    def contains(self, y: int) -> bool:
        return (y - self.a) % self.b == 0

    def _check_members(self, args):
        for y in args:
            if not self.contains(y):
                raise ValueError(f"{y} is not congruent to {self.a} mod {self.b}")

    def add(self, args: Sequence[int]) -> int:
        if len(args) != self.m_add:
            raise ValueError(f"expected {self.m_add} summands, got {len(args)}")
        self._check_members(args)
        out = sum(args)
        assert self.contains(out)
        return out

    def mul(self, args: Sequence[int]) -> int:
        if len(args) != self.n_mul:
            raise ValueError(f"expected {self.n_mul} factors, got {len(args)}")
        self._check_members(args)
        out = prod(args)
        assert self.contains(out)
        return out

    def additive_querelement(self, y: int) -> int:
        """The q with ``(m-1)*y + q == y``, i.e. ``q = (2-m)*y``."""
        self._check_members([y])
        return (2 - self.m_add) * y

    def to_dict(self):
        return {"a": self.a, "b": self.b, "m_add": self.m_add, "n_mul": self.n_mul}

    def __str__(self):
        return f"Z^[{self.m_add},{self.n_mul}]({self.a},{self.b})"


def m_ary_add(ring: PolyadicIntegerRing, args: Sequence[int]) -> int:
    return ring.add(args)


def n_ary_mul(ring: PolyadicIntegerRing, args: Sequence[int]) -> int:
    return ring.mul(args)


def make_ring(a: int, b: int, m_add: int, n_mul: int, samples: int = 200, seed: int = 0) -> PolyadicIntegerRing:
    """Validate the invariants, then sample closure of both operations."""
    ring = PolyadicIntegerRing(a, b, m_add, n_mul)
    rng = random.Random(seed)
    for _ in range(samples):
        ring.add([ring.representative(rng.randint(-10, 10)) for _ in range(m_add)])
        ring.mul([ring.representative(rng.randint(-10, 10)) for _ in range(n_mul)])
    return ring


@dataclass(frozen=True)
class MinimalArities:
    m_add: int | None
    n_mul: int | None
    cap: int


def minimal_arities(a: int, b: int, cap: int = 1000) -> MinimalArities:
    """Smallest m >= 2 with I integral and smallest n >= 2 with J integral (None past ``cap``)."""
    shape_invariants(a, b, 2, 2)
    m = next((m for m in range(2, cap + 1) if _is_natural(shape_invariants(a, b, m, 2)[0])), None)
    n = next((n for n in range(2, cap + 1) if _is_natural(shape_invariants(a, b, 2, n)[1])), None)
    return MinimalArities(m, n, cap)


def grading_ring_for_polynomials(n: int, n_mul: int) -> PolyadicIntegerRing:
    """The ring Z^[n, n_mul](1, n-1) whose additive n-ary group grades n-ary polynomials.

    Its representatives ``1 + (n-1)*k`` are exactly the quantized degrees
    with power ``k``, and the invariants are I = 1, J = 0.
    """
    if n < 3:
        raise ValueError(f"algebra arity must be >= 3, got {n}")
    ring = make_ring(1, n - 1, n, n_mul)
    assert ring.m_add == n
    assert ring.invariants == (1, 0), ring.invariants
    for k in range(0, 20):
        assert ring.representative(k) == k * (n - 1) + 1
    return ring


@dataclass(frozen=True)
class GradingCheck:
    exponents: tuple
    lhs_exponent: int
    rhs_sum: int
    power: int
    summed_powers: int

    @property
    def ok(self) -> bool:
        return self.lhs_exponent == self.rhs_sum

    def to_dict(self):
        return {"tuple": list(self.exponents), "lhs_exponent": self.lhs_exponent,
                "rhs_sum": self.rhs_sum, "ok": self.ok,
                "power": self.power, "summed_powers": self.summed_powers}


@dataclass
class PolynomialGradingReport:
    checks: list
    notes: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self):
        return self.ok

    def find(self, exponents) -> GradingCheck:
        key = tuple(sorted(exponents))
        return next(c for c in self.checks if c.exponents == key)

    def to_dict(self):
        return {"ok": self.ok, "checks": [c.to_dict() for c in self.checks], "notes": list(self.notes)}


def check_polynomial_grading(poly: MatrixPolynomial, ring: PolyadicIntegerRing) -> PolynomialGradingReport:
    """Compare component-product degrees with ring addition of the degrees.

    For each multiset of n nonconstant terms, the left side is the exponent of
    the product component computed from the factors' polyadic powers; the
    right side is the ring's m-ary sum of the exponents read as
    representatives.  Order is irrelevant since both sides are symmetric.
    """
    n = poly.arity
    if ring.m_add != n:
        raise ValueError(f"ring addition arity {ring.m_add} != polynomial arity {n}")
    bad = poly.non_admissible_exponents()
    if bad:
        raise ValueError(f"non-admissible exponents {bad}")
    exps = sorted(poly.terms)
    checks = []
    for combo in combinations_with_replacement(exps, n):
        ells = [power_for_length(d, n) for d in combo]
        deg = component_product_degree(ells, n)
        checks.append(GradingCheck(combo, deg.exponent, ring.add(list(combo)), deg.power, deg.printed_power))
    notes = [POWER_RULE_NOTE] if checks else []
    return PolynomialGradingReport(checks, notes)


POWER_RULE_NOTE = (
    "product component power is sum(ell_i) + 1, one more than the bare sum of the factor powers; "
    "only the +1 form matches the exponent sum"
)
