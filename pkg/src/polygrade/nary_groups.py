"""Finite n'-ary grading groups on the carrier {0, ..., N-1}.

Two kinds of law are supported: affine laws ``(x1 + ... + xn + shift) mod N``
and explicit dense Cayley tables.  Exhaustive checks are vectorized with
numpy and gated by an evaluation budget (``POLYGRADE_BUDGET`` overrides the
default of 10**6 law applications).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from math import gcd

import numpy as np

DEFAULT_BUDGET = 10**6


def default_budget() -> int:
    raw = os.environ.get("POLYGRADE_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    value = int(raw)
    if value < 1:
        raise ValueError(f"POLYGRADE_BUDGET must be >= 1, got {value}")
    return value


class BudgetExceeded(RuntimeError):
    pass


class GroupAxiomError(ValueError):
    """A supplied law is not an n-ary group; ``witness`` locates the failure."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def _require_budget(cost: int, budget: int | None, what: str) -> None:
    budget = default_budget() if budget is None else budget
    if cost > budget:
        raise BudgetExceeded(f"{what} needs {cost} evaluations, budget is {budget}")


class FiniteNaryGroup:
    """An ``arity``-ary operation on ``{0, ..., N-1}``.

    Exactly one of ``shift`` (affine law) and ``table`` is set.  Instances
    are treated as immutable; build them with :func:`affine_group` or
    :func:`table_group`, which run the axiom checks.
    """

    def __init__(self, N: int, arity: int, shift: int | None = None, table=None):
        if N < 1:
            raise ValueError(f"carrier size must be >= 1, got {N}")
        if arity < 2:
            raise ValueError(f"arity must be >= 2, got {arity}")
        if (shift is None) == (table is None):
            raise ValueError("give exactly one of shift or table")
        self.N = N
        self.arity = arity
        self.shift = None if shift is None else shift % N
        self._table = None
        if table is not None:
            t = np.asarray(table, dtype=np.int64)
            if t.ndim == 1:
                if t.size != N**arity:
                    raise ValueError(f"flat table has {t.size} entries, expected {N**arity}")
                t = t.reshape((N,) * arity)
            if t.shape != (N,) * arity:
                raise ValueError(f"table shape {t.shape} != {(N,) * arity}")
            bad = np.argwhere((t < 0) | (t >= N))
            if len(bad):
                pos = tuple(int(i) for i in bad[0])
                raise GroupAxiomError(f"table entry at {pos} is {int(t[pos])}, outside 0..{N - 1}", pos)
            t.setflags(write=False)
            self._table = t

    @property
    def is_affine(self) -> bool:
        return self.shift is not None

    @property
    def carrier(self) -> range:
        return range(self.N)

    def apply(self, *args) -> int:
        if len(args) == 1 and isinstance(args[0], (tuple, list)):
            args = tuple(args[0])
        if len(args) != self.arity:
            raise ValueError(f"expected {self.arity} arguments, got {len(args)}")
        for a in args:
            if not (isinstance(a, (int, np.integer)) and 0 <= a < self.N):
                raise ValueError(f"{a!r} is not in the carrier 0..{self.N - 1}")
        if self.is_affine:
            return (sum(args) + self.shift) % self.N
        return int(self._table[tuple(args)])

    def table(self, budget: int | None = None) -> np.ndarray:
        """Dense Cayley table, axis k indexing argument k."""
        if self._table is None:
            _require_budget(self.N**self.arity, budget, "Cayley table")
            grids = np.indices((self.N,) * self.arity, sparse=True)
            t = (sum(grids) + self.shift) % self.N
            t = np.broadcast_to(t, (self.N,) * self.arity).astype(np.int64)
            t.setflags(write=False)
            self._table = t
        return self._table

    def same_law(self, other: FiniteNaryGroup) -> bool:
        if (self.N, self.arity) != (other.N, other.arity):
            return False
        if self.is_affine and other.is_affine:
            return self.shift == other.shift
        return bool(np.array_equal(self.table(), other.table()))

    def __repr__(self):
        law = f"shift={self.shift}" if self.is_affine else "table"
        return f"FiniteNaryGroup(N={self.N}, arity={self.arity}, {law})"


@dataclass(frozen=True)
class LawCheck:
    """Outcome of an exhaustive law check; truthy iff the law holds."""

    ok: bool
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class DerivednessCertificate:
    has_identity: bool
    gcd_value: int
    necessarily_nonderived: bool


def affine_group(N: int, arity: int, shift: int = 0, budget: int | None = None) -> FiniteNaryGroup:
    """The law ``(x1 + ... + x_arity + shift) mod N``.

    Group axioms hold analytically; they are still self-tested when the
    exhaustive search fits in the budget.
    """
    g = FiniteNaryGroup(N, arity, shift=shift)
    budget = default_budget() if budget is None else budget
    if N**arity <= budget:
        _validate(g, budget, require_commutative=False, check_assoc=N ** (2 * arity - 1) <= budget)
    return g


def table_group(N: int, arity: int, table, validate: bool = True, budget: int | None = None) -> FiniteNaryGroup:
    """A law given by its Cayley table (nested or flat row-major).

    With ``validate`` the table must be totally associative, commutative and
    give every element a unique querelement; otherwise :class:`GroupAxiomError`
    carries a witness.  ``validate=False`` is for inspecting non-group laws.
    """
    g = FiniteNaryGroup(N, arity, table=table)
    if validate:
        _validate(g, budget, require_commutative=True, check_assoc=True)
    return g


def _validate(g: FiniteNaryGroup, budget, require_commutative: bool, check_assoc: bool) -> None:
    if check_assoc:
        res = is_totally_associative(g, budget)
        if not res:
            raise GroupAxiomError(f"law is not totally associative: {res.detail}", res.witness)
    if require_commutative:
        res = is_commutative(g, budget)
        if not res:
            raise GroupAxiomError(f"law is not commutative at {res.witness}", res.witness)
    t = g.table(budget)
    for a in g.carrier:
        sols = np.flatnonzero(t[(a,) * (g.arity - 1)] == a)
        if len(sols) != 1:
            raise GroupAxiomError(
                f"element {a} has {len(sols)} querelement candidates {sols.tolist()}", (a,)
            )


def cayley_table(group: FiniteNaryGroup, budget: int | None = None) -> np.ndarray:
    return group.table(budget)


def find_identities(group: FiniteNaryGroup) -> set[int]:
    """All e with mu[e, ..., e, a] == a for every a."""
    t = group.table()
    lead = group.arity - 1
    return {e for e in group.carrier if np.array_equal(t[(e,) * lead], np.arange(group.N))}


def find_zeros(group: FiniteNaryGroup) -> set[int]:
    """All z with mu[a, ..., a, z] == z for every a."""
    t = group.table()
    lead = group.arity - 1
    return {z for z in group.carrier if all(t[(a,) * lead + (z,)] == z for a in group.carrier)}


def querelement(group: FiniteNaryGroup, a: int) -> int:
    """The unique x with mu[a, ..., a, x] == a."""
    if not 0 <= a < group.N:
        raise ValueError(f"{a} is not in the carrier")
    if group.is_affine:
        # (n-1)a + x + shift == a  (mod N); unique by construction
        return (a - (group.arity - 1) * a - group.shift) % group.N
    sols = np.flatnonzero(group.table()[(a,) * (group.arity - 1)] == a)
    if len(sols) != 1:
        raise GroupAxiomError(f"element {a} has no unique querelement", (a,))
    return int(sols[0])


def _grids(N: int, length: int) -> list[np.ndarray]:
    return list(np.indices((N,) * length, sparse=True))


def is_totally_associative(group: FiniteNaryGroup, budget: int | None = None) -> LawCheck:
    """Compare all placements of the inner application in words of length 2n-1."""
    n, N = group.arity, group.N
    length = 2 * n - 1
    _require_budget(N**length, budget, "associativity check")
    t = group.table(budget)
    idx = _grids(N, length)
    values = []
    for i in range(n):
        inner = t[tuple(idx[i : i + n])]
        values.append(t[tuple(idx[:i] + [inner] + idx[i + n :])])
    values = [np.broadcast_to(v, (N,) * length) for v in values]
    for i in range(1, n):
        bad = np.argwhere(values[i] != values[0])
        if len(bad):
            word = tuple(int(x) for x in bad[0])
            return LawCheck(
                False,
                (word, 0, i),
                f"word {word}: placement 0 gives {int(values[0][word])}, placement {i} gives {int(values[i][word])}",
            )
    return LawCheck(True)


def is_commutative(group: FiniteNaryGroup, budget: int | None = None) -> LawCheck:
    """Invariance under adjacent transpositions, which generate all permutations."""
    n = group.arity
    _require_budget(group.N**n, budget, "commutativity check")
    t = group.table(budget)
    for k in range(n - 1):
        bad = np.argwhere(t != np.swapaxes(t, k, k + 1))
        if len(bad):
            return LawCheck(False, tuple(int(x) for x in bad[0]), f"swap of arguments {k},{k + 1}")
    return LawCheck(True)


def derivedness_certificate(group: FiniteNaryGroup) -> DerivednessCertificate:
    """Necessary condition for strict nonderivedness: gcd(N, n'-1) > 1 and no identity.

    This does not decide reducibility in general.
    """
    ids = find_identities(group)
    g = gcd(group.N, group.arity - 1)
    return DerivednessCertificate(bool(ids), g, g > 1 and not ids)


def _compose_table(t: np.ndarray, ell: int, left: bool) -> np.ndarray:
    N, n = t.shape[0], t.ndim
    cur = t
    for _ in range(ell - 1):
        k = cur.ndim
        if left:
            # mu[cur(x_1..x_k), y_1, ..., y_{n-1}]
            args = [cur.reshape(cur.shape + (1,) * (n - 1))]
            args += [np.arange(N).reshape((1,) * (k + j) + (N,) + (1,) * (n - 2 - j)) for j in range(n - 1)]
        else:
            # mu[y_1, ..., y_{n-1}, cur(x_1..x_k)]
            args = [np.arange(N).reshape((1,) * j + (N,) + (1,) * (n - 2 - j + k)) for j in range(n - 1)]
            args.append(cur.reshape((1,) * (n - 1) + cur.shape))
        cur = np.broadcast_to(t[tuple(args)], (N,) * (k + n - 1))
    return np.ascontiguousarray(cur)


def compose_power(group: FiniteNaryGroup, ell: int, budget: int | None = None,
                  cross_check_limit: int = 4096) -> FiniteNaryGroup:
    """The ``ell``-fold left-nested composition of the law, as a table group.

    The result has arity ``ell*(n'-1) + 1``.  When the table is small, the
    right-nested composition is computed too and must agree.
    """
    if ell < 1:
        raise ValueError(f"power must be >= 1, got {ell}")
    arity = ell * (group.arity - 1) + 1
    size = group.N**arity
    _require_budget(size, budget, "composed table")
    t = group.table(budget)
    left = _compose_table(t, ell, left=True)
    if size <= cross_check_limit:
        right = _compose_table(t, ell, left=False)
        if not np.array_equal(left, right):
            bad = tuple(int(x) for x in np.argwhere(left != right)[0])
            raise GroupAxiomError(f"left and right nestings disagree at {bad}", bad)
    return FiniteNaryGroup(group.N, arity, table=left)


def as_affine(group: FiniteNaryGroup) -> int | None:
    """The shift s if the law equals ``(sum + s) mod N``, else None."""
    if group.is_affine:
        return group.shift
    t = group.table()
    s = int(t[(0,) * group.arity])
    return s if np.array_equal(t, affine_group_table(group.N, group.arity, s)) else None


def affine_group_table(N: int, arity: int, shift: int) -> np.ndarray:
    return FiniteNaryGroup(N, arity, shift=shift).table()


def cayley_grid(group: FiniteNaryGroup) -> str:
    """Human-readable grid: rows by the first argument, columns by the rest.

    Column tuples list the later arguments outermost, so for a ternary law the
    header groups columns by z and then y.
    """
    n, N = group.arity, group.N
    t = group.table()
    names = _arg_names(n)
    cols = [tuple(reversed(c)) for c in product(range(N), repeat=n - 1)]
    headers = [",".join(f"{names[k + 1]}={v}" for k, v in reversed(list(enumerate(c)))) for c in cols]
    width = max(len(h) for h in headers)
    lines = [" " * (len(names[0]) + 4) + " | ".join(h.rjust(width) for h in headers)]
    for x in range(N):
        row = [str(int(t[(x,) + c])).rjust(width) for c in cols]
        lines.append(f"{names[0]}={x}".ljust(len(names[0]) + 3) + " " + " | ".join(row))
    return "\n".join(lines)


def _arg_names(n: int) -> list[str]:
    base = ["x", "y", "z", "t", "u"]
    return base[:n] if n <= len(base) else [f"x{i + 1}" for i in range(n)]

