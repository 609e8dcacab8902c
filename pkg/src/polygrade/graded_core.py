"""Finite-dimensional polyadic algebras over Q with a homogeneous basis.

The n-ary multiplication is given by structure constants: ``structure[(i1,
..., in)]`` is the coordinate vector of the product of basis vectors
``i1..in``; missing keys mean a zero product.  Every basis vector carries a
degree in a finite n'-ary grading group, so the component ``A(g)`` is the
span of the basis vectors of degree ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .arity import power_for_length, word_length
from .nary_groups import FiniteNaryGroup, LawCheck, _require_budget, affine_group
from .rational import rank

Vector = tuple  # tuple[Fraction, ...] of length dim


class ArityMismatch(ValueError):
    pass


class NonAssociativeAlgebra(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GradedAlgebra:
    basis: tuple
    mul_arity: int
    add_arity: int
    structure: Mapping
    group: FiniteNaryGroup
    deg: tuple

    def __post_init__(self):
        dim = len(self.basis)
        if dim < 1:
            raise ValueError("algebra needs at least one basis vector")
        if self.mul_arity < 2 or self.add_arity < 2:
            raise ValueError("arities must be >= 2")
        if len(self.deg) != dim:
            raise ValueError(f"deg has {len(self.deg)} entries for {dim} basis vectors")
        for i, g in enumerate(self.deg):
            if not 0 <= g < self.group.N:
                raise ValueError(f"degree {g} of basis vector {self.basis[i]!r} is not a group element")
        clean = {}
        for args, vec in self.structure.items():
            args = tuple(args)
            if len(args) != self.mul_arity or not all(0 <= i < dim for i in args):
                raise ValueError(f"bad structure key {args}")
            vec = tuple(Fraction(c) for c in vec)
            if len(vec) != dim:
                raise ValueError(f"structure vector for {args} has length {len(vec)}, expected {dim}")
            if any(vec):
                clean[args] = vec
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "deg", tuple(self.deg))
        object.__setattr__(self, "structure", clean)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def zero(self) -> Vector:
        return (Fraction(0),) * self.dim

    def e(self, i: int) -> Vector:
        return tuple(Fraction(int(j == i)) for j in range(self.dim))

    def component(self, g: int) -> list[int]:
        return [i for i, d in enumerate(self.deg) if d == g]

    def product(self, args: Sequence[int]) -> Vector:
        """Product of basis vectors given by index."""
        return self.structure.get(tuple(args), self.zero())


@dataclass(frozen=True)
class Violation:
    args: tuple
    out_index: int
    expected_degree: int
    actual_degree: int

    def to_dict(self):
        return {"args": list(self.args), "out": self.out_index,
                "expected_degree": self.expected_degree, "actual_degree": self.actual_degree}


@dataclass(frozen=True)
class SpanDeficiency:
    degrees: tuple
    target: int
    rank: int
    dim: int
    reason: str

    def to_dict(self):
        return {"degrees": list(self.degrees), "target": self.target, "rank": self.rank,
                "dim": self.dim, "reason": self.reason}


@dataclass
class GradingReport:
    """Violations of the inclusion condition and, for strong checks, span deficiencies.

    An empty report means the check passed.
    """

    kind: str
    violations: list = field(default_factory=list)
    deficiencies: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.deficiencies

    def __bool__(self):
        return self.ok

    def to_dict(self):
        return {
            "kind": self.kind,
            "ok": self.ok,
            "violations": [v.to_dict() for v in self.violations],
            "deficiencies": [d.to_dict() for d in self.deficiencies],
            "notes": list(self.notes),
        }


def _add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def _scale(c: Fraction, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def nary_multiply(alg: GradedAlgebra, args: Sequence[Vector]) -> Vector:
    """Multilinear extension of the structure constants."""
    if len(args) != alg.mul_arity:
        raise ValueError(f"expected {alg.mul_arity} factors, got {len(args)}")
    supports = [[(i, c) for i, c in enumerate(v) if c != 0] for v in args]
    out = alg.zero()
    for choice in product(*supports):
        coeff = Fraction(1)
        for _, c in choice:
            coeff *= c
        vec = alg.structure.get(tuple(i for i, _ in choice))
        if vec is not None:
            out = _add(out, _scale(coeff, vec))
    return out


def mary_add(alg: GradedAlgebra, args: Sequence[Vector]) -> Vector:
    """The m-ary addition: coordinate-wise sum of exactly ``add_arity`` vectors."""
    if len(args) != alg.add_arity:
        raise ValueError(f"expected {alg.add_arity} summands, got {len(args)}")
    return _sum(alg, args)


def iterated_add(alg: GradedAlgebra, args: Sequence[Vector]) -> Vector:
    """Composed m-ary addition; the number of summands must be ``ell*(m-1)+1``."""
    if power_for_length(len(args), alg.add_arity) is None:
        raise ValueError(f"{len(args)} summands is not a quantized length for m={alg.add_arity}")
    return _sum(alg, args)


def _sum(alg, args):
    out = alg.zero()
    for v in args:
        out = _add(out, v)
    return out


def support(alg: GradedAlgebra) -> set[int]:
    return set(alg.deg)


def _require_matching_arity(alg: GradedAlgebra) -> None:
    if alg.group.arity != alg.mul_arity:
        raise ArityMismatch(
            f"grading group arity {alg.group.arity} differs from multiplication arity {alg.mul_arity}; "
            "use check_higher_power_graded for composed gradings"
        )


def _inclusion_report(alg, structure, law: FiniteNaryGroup, kind: str) -> GradingReport:
    report = GradingReport(kind)
    for args in sorted(structure):
        expected = law.apply(tuple(alg.deg[i] for i in args))
        for j, c in enumerate(structure[args]):
            if c != 0 and alg.deg[j] != expected:
                report.violations.append(Violation(args, j, expected, alg.deg[j]))
    return report


def _span_deficiencies(alg, structure, law: FiniteNaryGroup, length: int) -> list:
    out = []
    comps = {g: alg.component(g) for g in range(alg.group.N)}
    for degrees in product(range(alg.group.N), repeat=length):
        target = law.apply(degrees)
        dim = len(comps[target])
        if any(not comps[g] for g in degrees):
            if dim:
                out.append(SpanDeficiency(degrees, target, 0, dim, "empty source component"))
            continue
        rows = [structure.get(args, alg.zero()) for args in product(*(comps[g] for g in degrees))]
        r = rank(rows)
        if r < dim:
            reason = "empty target component" if dim == 0 else "products do not span target component"
            out.append(SpanDeficiency(degrees, target, r, dim, reason))
    return out


def check_graded(alg: GradedAlgebra) -> GradingReport:
    """Every basis product lands in the component named by the group law."""
    _require_matching_arity(alg)
    return _inclusion_report(alg, alg.structure, alg.group, "graded")


def check_strongly_graded(alg: GradedAlgebra) -> GradingReport:
    """Graded, and the products of components span the target component exactly."""
    report = check_graded(alg)
    report.kind = "strongly_graded"
    report.deficiencies = _span_deficiencies(alg, alg.structure, alg.group, alg.mul_arity)
    return report


def check_support_assertion(alg: GradedAlgebra) -> bool:
    """Strongly graded implies the support is the whole grading group."""
    try:
        strong = check_strongly_graded(alg).ok
    except ArityMismatch:
        strong = False
    return (not strong) or len(support(alg)) == alg.group.N


def decomposition_length(alg: GradedAlgebra, ell_m: int) -> int:
    return word_length(ell_m, alg.add_arity)


def check_order_theorem(alg: GradedAlgebra) -> int | None:
    """The power ell_m with |G| == ell_m*(m-1)+1, or None if there is none."""
    return order_theorem_power(alg.group.N, alg.add_arity)


def order_theorem_power(order: int, m: int) -> int | None:
    return power_for_length(order, m)


def is_totally_associative(alg: GradedAlgebra, budget: int | None = None) -> LawCheck:
    """Exhaustive placement comparison on basis words of length 2n-1."""
    n = alg.mul_arity
    length = 2 * n - 1
    _require_budget(alg.dim**length * n, budget, "algebra associativity check")
    for word in product(range(alg.dim), repeat=length):
        first = None
        for i in range(n):
            inner = alg.product(word[i : i + n])
            val = alg.zero()
            for j, c in enumerate(inner):
                if c:
                    val = _add(val, _scale(c, alg.product(word[:i] + (j,) + word[i + n :])))
            if first is None:
                first = val
            elif val != first:
                return LawCheck(False, (word, 0, i), f"placements 0 and {i} differ on word {word}")
    return LawCheck(True)


def composed_structure(alg: GradedAlgebra, ell_n: int, budget: int | None = None) -> dict:
    """Structure constants of the ell_n-fold left-nested product."""
    if ell_n < 1:
        raise ValueError("power must be >= 1")
    n = alg.mul_arity
    _require_budget(alg.dim ** word_length(ell_n, n), budget, "composed product")
    cur = dict(alg.structure)
    for _ in range(ell_n - 1):
        nxt = {}
        for head, vec in cur.items():
            for tail in product(range(alg.dim), repeat=n - 1):
                val = alg.zero()
                for j, c in enumerate(vec):
                    if c:
                        val = _add(val, _scale(c, alg.product((j,) + tail)))
                if any(val):
                    nxt[head + tail] = val
        cur = nxt
    return cur


def check_higher_power_graded(
    alg: GradedAlgebra,
    ell_n: int,
    grading_op: FiniteNaryGroup,
    strong: bool = False,
    nesting: str | None = None,
) -> GradingReport:
    """Grade the ell_n-fold composed product by a composed (or explicit) group law.

    ``grading_op`` must take ``ell_n*(n-1)+1`` arguments, and that length must
    be a quantized word length for the algebra's grading group.  For ell_n > 1
    the algebra must be totally associative unless ``nesting="left"`` is given
    to accept the left-nested product as is.
    """
    n = alg.mul_arity
    w = word_length(ell_n, n)
    if grading_op.arity != w:
        raise ArityMismatch(f"composed product takes {w} arguments but grading law takes {grading_op.arity}")
    if power_for_length(w, alg.group.arity) is None:
        raise ArityMismatch(f"word length {w} is not quantized for grading arity {alg.group.arity}")
    if grading_op.N != alg.group.N:
        raise ArityMismatch(f"grading law carrier {grading_op.N} != group carrier {alg.group.N}")
    if nesting not in (None, "left"):
        raise ValueError(f"unsupported nesting {nesting!r}")
    if ell_n > 1 and nesting is None and not is_totally_associative(alg):
        raise NonAssociativeAlgebra("algebra is not totally associative; pass nesting='left' to proceed")
    structure = composed_structure(alg, ell_n)
    report = _inclusion_report(alg, structure, grading_op, "higher_power_strongly_graded" if strong else "higher_power_graded")
    if strong:
        report.deficiencies = _span_deficiencies(alg, structure, grading_op, w)
    return report


def component_inclusion(alg: GradedAlgebra, degrees: Sequence[int], target: int) -> LawCheck:
    """Does the (composed) product of the components ``degrees`` lie in ``A(target)``?

    ``len(degrees)`` must be a quantized word length for the multiplication.
    Zero products are vacuously inside every component.
    """
    ell = power_for_length(len(degrees), alg.mul_arity)
    if ell is None or ell < 1:
        raise ArityMismatch(f"{len(degrees)} factors is not a word length for arity {alg.mul_arity}")
    structure = alg.structure if ell == 1 else composed_structure(alg, ell)
    for args in product(*(alg.component(g) for g in degrees)):
        for j, c in enumerate(structure.get(args, ())):
            if c != 0 and alg.deg[j] != target:
                return LawCheck(False, (args, j), f"product of {args} has a degree-{alg.deg[j]} term")
    return LawCheck(True)


def _grassmann(n: int) -> GradedAlgebra:
    # basis 0 = u (unit, even), 1 = theta (nilpotent, odd)
    structure = {}
    for args in product((0, 1), repeat=n):
        odd = sum(args)
        if odd == 0:
            structure[args] = (1, 0)
        elif odd == 1:
            structure[args] = (0, 1)
    return GradedAlgebra(("u", "theta"), n, 2, structure, affine_group(2, n, 0), (0, 1))


def make_grassmann(n_arity: int) -> GradedAlgebra:
    """Two-dimensional n-ary superalgebra derived from the binary Grassmann algebra.

    ``u`` is the unit and ``theta**2 == 0``, so the only nonzero products are
    ``mu[u, ..., u] = u`` and those with exactly one theta.  Degrees are
    ``u -> 0``, ``theta -> 1`` in the n-ary group ``(sum) mod 2`` obtained by
    iterating binary Z_2.
    """
    if n_arity < 3 or n_arity % 2 == 0:
        raise ValueError(f"arity must be odd and >= 3, got {n_arity}")
    return _grassmann(n_arity)


def binary_superalgebra() -> GradedAlgebra:
    """The ordinary Z_2-graded Grassmann algebra on {u, theta}."""
    return _grassmann(2)


def group_algebra(law: FiniteNaryGroup, grading_group: FiniteNaryGroup | None = None,
                  coeff=1, add_arity: int = 2) -> GradedAlgebra:
    """One basis vector ``e_g`` per group element with ``mu[e_g1, ...] = coeff * e_law(g1, ...)``.

    With ``grading_group`` the degrees live in that group instead of ``law``
    (used when ``law`` is a composed power of the grading group).
    """
    group = grading_group if grading_group is not None else law
    if group.N != law.N:
        raise ValueError("law and grading group must share the carrier")
    N = law.N
    structure = {}
    for args in product(range(N), repeat=law.arity):
        vec = [0] * N
        vec[law.apply(args)] = Fraction(coeff)
        structure[args] = vec
    return GradedAlgebra(tuple(f"e{g}" for g in range(N)), law.arity, add_arity, structure, group, tuple(range(N)))
