"""Graded homomorphisms (phi, psi) between graded polyadic algebras.

``phi`` is a rational matrix whose row ``i`` is the image of source basis
vector ``i`` in target coordinates; ``psi`` maps source group elements to
target group elements.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .graded_core import GradedAlgebra, mary_add, nary_multiply
from .nary_groups import querelement
from .rational import in_span


class ShapeMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GradedHomomorphism:
    phi: tuple
    psi: tuple

    def __post_init__(self):
        rows = tuple(tuple(Fraction(c) for c in row) for row in self.phi)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("phi rows have different lengths")
        object.__setattr__(self, "phi", rows)
        object.__setattr__(self, "psi", tuple(int(x) for x in self.psi))

    def apply(self, v) -> tuple:
        out = [Fraction(0)] * len(self.phi[0])
        for c, row in zip(v, self.phi):
            if c:
                for j, x in enumerate(row):
                    out[j] += c * x
        return tuple(out)

    def compose(self, after: GradedHomomorphism) -> GradedHomomorphism:
        """``after`` applied after ``self``."""
        phi = [after.apply(row) for row in self.phi]
        psi = [after.psi[g] for g in self.psi]
        return GradedHomomorphism(phi, psi)

    @classmethod
    def identity(cls, alg: GradedAlgebra) -> GradedHomomorphism:
        return cls([alg.e(i) for i in range(alg.dim)], list(range(alg.group.N)))


@dataclass
class CheckReport:
    name: str
    witnesses: list = field(default_factory=list)
    samples: int = 0

    @property
    def ok(self) -> bool:
        return not self.witnesses

    def __bool__(self):
        return self.ok

    def to_dict(self):
        return {"check": self.name, "ok": self.ok, "samples": self.samples,
                "witnesses": [_jsonable(w) for w in self.witnesses]}


def _jsonable(w):
    if isinstance(w, dict):
        return {k: _jsonable(v) for k, v in w.items()}
    if isinstance(w, (list, tuple)):
        return [_jsonable(x) for x in w]
    if isinstance(w, Fraction):
        return str(w)
    return w


def _require_shapes(hom: GradedHomomorphism, algA: GradedAlgebra, algB: GradedAlgebra) -> None:
    if (algA.add_arity, algA.mul_arity) != (algB.add_arity, algB.mul_arity):
        raise ShapeMismatch(
            f"arity shapes differ: [{algA.add_arity},{algA.mul_arity}] vs [{algB.add_arity},{algB.mul_arity}]"
        )
    if len(hom.phi) != algA.dim or any(len(r) != algB.dim for r in hom.phi):
        raise ShapeMismatch(f"phi must be {algA.dim}x{algB.dim}")
    if len(hom.psi) != algA.group.N or any(not 0 <= g < algB.group.N for g in hom.psi):
        raise ShapeMismatch("psi must map every source group element into the target carrier")


def check_additive(hom, algA, algB, samples: int = 64, seed: int = 0) -> CheckReport:
    """Phi respects the m-ary addition.  Always holds for a matrix map; run as a self-test."""
    _require_shapes(hom, algA, algB)
    m = algA.add_arity
    report = CheckReport("additive")
    tuples = list(product(range(algA.dim), repeat=m))
    if len(tuples) > samples:
        tuples = random.Random(seed).sample(tuples, samples)
    for idx in tuples:
        lhs = hom.apply(mary_add(algA, [algA.e(i) for i in idx]))
        rhs = mary_add(algB, [hom.apply(algA.e(i)) for i in idx])
        if lhs != rhs:
            report.witnesses.append({"args": list(idx)})
    report.samples = len(tuples)
    return report


def check_multiplicative(hom, algA, algB) -> CheckReport:
    """Phi(mu_A[e_i1..e_in]) == mu_B[Phi e_i1, ..., Phi e_in] on all basis tuples."""
    _require_shapes(hom, algA, algB)
    report = CheckReport("multiplicative")
    images = [hom.apply(algA.e(i)) for i in range(algA.dim)]
    for idx in product(range(algA.dim), repeat=algA.mul_arity):
        lhs = hom.apply(algA.product(idx))
        rhs = nary_multiply(algB, [images[i] for i in idx])
        report.samples += 1
        if lhs != rhs:
            report.witnesses.append({"args": list(idx), "lhs": list(lhs), "rhs": list(rhs)})
    return report


def check_group_hom(hom, grpG, grpH) -> CheckReport:
    """Psi(mu_G[g...]) == mu_H[Psi g...] over every tuple of the source carrier."""
    if grpG.arity != grpH.arity:
        raise ShapeMismatch(f"group arities differ: {grpG.arity} vs {grpH.arity}")
    if len(hom.psi) != grpG.N or any(not 0 <= g < grpH.N for g in hom.psi):
        raise ShapeMismatch("psi does not map the source carrier into the target carrier")
    report = CheckReport("group_hom")
    for gs in product(range(grpG.N), repeat=grpG.arity):
        lhs = hom.psi[grpG.apply(gs)]
        rhs = grpH.apply(tuple(hom.psi[g] for g in gs))
        report.samples += 1
        if lhs != rhs:
            report.witnesses.append({"args": list(gs), "lhs": lhs, "rhs": rhs})
    if report.ok and grpG.N <= 16:
        # querelements are unique, so a law-respecting psi must carry them along
        for a in range(grpG.N):
            assert hom.psi[querelement(grpG, a)] == querelement(grpH, hom.psi[a])
    return report


def check_preserves_grading(hom, algA, algB) -> CheckReport:
    """Phi(v) lies in B(psi(deg v)) for every source basis vector v."""
    _require_shapes(hom, algA, algB)
    report = CheckReport("preserves_grading")
    for i in range(algA.dim):
        target = hom.psi[algA.deg[i]]
        span = [algB.e(j) for j in algB.component(target)]
        report.samples += 1
        if not in_span(hom.phi[i], span):
            report.witnesses.append({"basis": i, "label": algA.basis[i], "target_degree": target,
                                     "image": list(hom.phi[i])})
    return report


@dataclass
class HomomorphismReport:
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self):
        return self.ok

    def __getitem__(self, name) -> CheckReport:
        return next(c for c in self.checks if c.name == name)

    @property
    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.ok]

    def to_dict(self):
        return {"ok": self.ok, "failed": self.failed, "checks": [c.to_dict() for c in self.checks]}


def check_graded_homomorphism(hom, algA, algB) -> HomomorphismReport:
    return HomomorphismReport([
        check_additive(hom, algA, algB),
        check_multiplicative(hom, algA, algB),
        check_group_hom(hom, algA.group, algB.group),
        check_preserves_grading(hom, algA, algB),
    ])
