"""Block-shift matrix indeterminates and polynomials over them.

``X(y)`` is the (n-1)x(n-1) cyclic shift matrix with ``y`` in every shifted
slot; n such matrices multiply to ``X(y1*...*yn)`` because the shift has
order n-1.  Monomials ``c*X(x**d)`` are stored as (coefficient, exponent)
pairs; :func:`matrix_realization` substitutes a value for ``x`` and is used
as the independent oracle for every product law here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
import random
from itertools import product
from typing import Sequence

from .arity import power_for_length, word_length


def is_admissible(exponent: int, n: int) -> bool:
    """Exponent 0 (the E term) or a quantized degree ``ell*(n-1)+1``."""
    return exponent == 0 or (exponent >= 1 and power_for_length(exponent, n) is not None)


@dataclass(frozen=True)
class BlockShiftMonomial:
    arity: int
    coeff: Fraction
    exponent: int

    def __post_init__(self):
        if self.arity < 2:
            raise ValueError(f"arity must be >= 2, got {self.arity}")
        object.__setattr__(self, "coeff", Fraction(self.coeff))

    @property
    def admissible(self) -> bool:
        return is_admissible(self.exponent, self.arity)

    @property
    def power(self) -> int | None:
        """Polyadic power of the exponent, None for E or non-quantized exponents."""
        if self.exponent < 1:
            return None
        return power_for_length(self.exponent, self.arity)


def monomial_degree(ell: int, n: int) -> int:
    return word_length(ell, n)


def nary_monomial_product(args: Sequence[BlockShiftMonomial]) -> BlockShiftMonomial:
    if not args:
        raise ValueError("no factors")
    n = args[0].arity
    if any(a.arity != n for a in args):
        raise ValueError("factors have different arities")
    if len(args) != n:
        raise ValueError(f"expected {n} factors, got {len(args)}")
    coeff = reduce(lambda acc, a: acc * a.coeff, args, Fraction(1))
    return BlockShiftMonomial(n, coeff, sum(a.exponent for a in args))


def shift_matrix(size: int, value) -> list[list[Fraction]]:
    value = Fraction(value)
    m = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        m[i][(i + 1) % size] = value
    return m


def identity_matrix(size: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]


def matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
            for i in range(len(a))]


def matprod(mats):
    return reduce(matmul, mats)


def matadd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matrix_realization(mono: BlockShiftMonomial, x_value) -> list[list[Fraction]]:
    """``coeff * X(x_value**exponent)`` as an explicit rational matrix."""
    x = Fraction(x_value)
    if x == 0 and mono.exponent < 0:
        raise ZeroDivisionError("negative exponent at x = 0")
    return shift_matrix(mono.arity - 1, mono.coeff * x**mono.exponent)


def querelement_monomial(mono: BlockShiftMonomial) -> BlockShiftMonomial:
    """The monomial q with mu[mono, ..., mono, q] == mono (n-1 copies of mono).

    Exponent ``d*(2-n)`` and coefficient ``coeff**(2-n)``; the exponent may be
    negative.
    """
    if mono.coeff == 0:
        raise ZeroDivisionError("zero monomial has no querelement")
    k = 2 - mono.arity
    return BlockShiftMonomial(mono.arity, mono.coeff**k, mono.exponent * k)


def polyadic_identity(n: int) -> BlockShiftMonomial:
    """E = X(x**0) = X(1)."""
    return BlockShiftMonomial(n, 1, 0)


@dataclass(frozen=True)
class IdentityCheck:
    n: int
    identity_law: bool
    e_equals_i: bool

    @property
    def ok(self) -> bool:
        # E is the ordinary identity matrix only in the binary case
        return self.identity_law and self.e_equals_i == (self.n == 2)

    def __bool__(self):
        return self.ok


def polyadic_identity_check(n: int, x_values=(1, 2, Fraction(3, 2))) -> IdentityCheck:
    """Check mu[E, ..., E, X(x)] == X(x) with matrices, and compare E with I."""
    if n < 2:
        raise ValueError("arity must be >= 2")
    size = n - 1
    e = matrix_realization(polyadic_identity(n), 1)
    law = all(
        matprod([e] * (n - 1) + [shift_matrix(size, x)]) == shift_matrix(size, x)
        for x in x_values
    )
    return IdentityCheck(n, law, e == identity_matrix(size))


@dataclass(frozen=True)
class MatrixPolynomial:
    """``constant*E + sum(coeff * X(x**exponent))`` with exponents >= 1."""

    arity: int
    constant: Fraction = Fraction(0)
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.arity < 2:
            raise ValueError(f"arity must be >= 2, got {self.arity}")
        terms = {}
        for d, c in self.terms.items():
            if d < 0:
                raise ValueError(f"polynomial exponents must be >= 0, got {d}")
            c = Fraction(c)
            if d == 0:
                object.__setattr__(self, "constant", Fraction(self.constant) + c)
                continue
            terms[d] = terms.get(d, Fraction(0)) + c
        object.__setattr__(self, "constant", Fraction(self.constant))
        object.__setattr__(self, "terms", {d: c for d, c in sorted(terms.items()) if c != 0})

    @property
    def is_zero(self) -> bool:
        return self.constant == 0 and not self.terms

    def monomials(self) -> list[BlockShiftMonomial]:
        out = [BlockShiftMonomial(self.arity, self.constant, 0)] if self.constant else []
        return out + [BlockShiftMonomial(self.arity, c, d) for d, c in self.terms.items()]

    def non_admissible_exponents(self) -> list[int]:
        return [d for d in self.terms if not is_admissible(d, self.arity)]

    def __eq__(self, other):
        if not isinstance(other, MatrixPolynomial):
            return NotImplemented
        return (self.arity, self.constant, self.terms) == (other.arity, other.constant, other.terms)

    def __hash__(self):
        return hash((self.arity, self.constant, tuple(self.terms.items())))


def polynomial_realization(poly: MatrixPolynomial, x_value) -> list[list[Fraction]]:
    size = poly.arity - 1
    out = [[Fraction(0)] * size for _ in range(size)]
    for mono in poly.monomials():
        out = matadd(out, matrix_realization(mono, x_value))
    return out


@dataclass(frozen=True)
class PolynomialProduct:
    result: MatrixPolynomial
    flagged: tuple  # exponents of the result that are not admissible

    @property
    def admissible(self) -> bool:
        return not self.flagged


def polynomial_nary_product(args: Sequence[MatrixPolynomial]) -> PolynomialProduct:
    """Multilinear expansion of an n-ary product of polynomials.

    Exponents add across each choice of terms.  Result exponents that are
    neither 0 nor quantized are kept (the matrices exist) but flagged.
    """
    if not args:
        raise ValueError("no factors")
    n = args[0].arity
    if any(p.arity != n for p in args):
        raise ValueError("factors have different arities")
    if len(args) != n:
        raise ValueError(f"expected {n} factors, got {len(args)}")
    acc: dict[int, Fraction] = {}
    for choice in product(*(p.monomials() for p in args)):
        m = nary_monomial_product(choice)
        acc[m.exponent] = acc.get(m.exponent, Fraction(0)) + m.coeff
    result = MatrixPolynomial(n, acc.pop(0, Fraction(0)), acc)
    return PolynomialProduct(result, tuple(result.non_admissible_exponents()))


@dataclass(frozen=True)
class ComponentDegree:
    arity: int
    exponent: int
    power: int
    printed_power: int  # sum of the factor powers, without the +1

    @property
    def note(self) -> str:
        wrong = word_length(self.printed_power, self.arity)
        return (f"resulting polyadic power is {self.power} = sum of factor powers + 1; "
                f"the bare sum {self.printed_power} would give exponent {wrong}, not {self.exponent}")


def component_product_degree(ells: Sequence[int], n: int) -> ComponentDegree:
    """Degree of the n-ary product of components ``A(d_ell1), ..., A(d_elln)``.

    The exponents add: ``sum(d_elli) = (n-1)*(sum(elli) + 1) + 1``, so the
    product has polyadic power ``sum(elli) + 1``.
    """
    if len(ells) != n:
        raise ValueError(f"expected {n} powers, got {len(ells)}")
    exponent = sum(monomial_degree(ell, n) for ell in ells)
    power = power_for_length(exponent, n)
    assert power == sum(ells) + 1
    return ComponentDegree(n, exponent, power, sum(ells))


def oracle_suite(arities=(2, 3, 4, 5), x_values=(1, 2, Fraction(3, 2)), cases: int = 1000, seed: int = 0):
    """Random monomial products, querelements and identity laws against explicit matrices.

    Returns ``(counts, failures)``; an empty failure list means every law held.
    """
    rng = random.Random(seed)
    failures = []
    counts = {"products": 0, "querelements": 0, "identity": 0}
    for _ in range(cases):
        n = rng.choice(arities)
        monos = [BlockShiftMonomial(n, Fraction(rng.randint(-9, 9), rng.randint(1, 4)), rng.randint(0, 6))
                 for _ in range(n)]
        prod_mono = nary_monomial_product(monos)
        for x in x_values:
            lhs = matrix_realization(prod_mono, x)
            rhs = matprod([matrix_realization(m, x) for m in monos])
            if lhs != rhs:
                failures.append({"law": "product", "n": n, "x": str(Fraction(x)),
                                 "exponents": [m.exponent for m in monos]})
        counts["products"] += 1
    for n in arities:
        for ell in range(0, 4):
            mono = BlockShiftMonomial(n, 1, monomial_degree(ell, n))
            q = querelement_monomial(mono)
            for x in x_values:
                mats = [matrix_realization(mono, x)] * (n - 1) + [matrix_realization(q, x)]
                if matprod(mats) != matrix_realization(mono, x):
                    failures.append({"law": "querelement", "n": n, "ell": ell, "x": str(Fraction(x))})
            counts["querelements"] += 1
        chk = polyadic_identity_check(n, x_values)
        counts["identity"] += 1
        if not chk:
            failures.append({"law": "identity", "n": n, "e_equals_i": chk.e_equals_i})
    return counts, failures
