"""JSON descriptions of groups, algebras, polynomials, rings and homomorphisms.

Rationals are written as ``"p/q"`` strings (plain integers are accepted on
input).  Parse failures raise :class:`FormatError` with a JSON-path location.
"""

from __future__ import annotations

import json
from pathlib import Path

from .blockshift import MatrixPolynomial
from .graded_core import GradedAlgebra
from .homs import GradedHomomorphism
from .nary_groups import FiniteNaryGroup, GroupAxiomError, affine_group, table_group
from .rational import format_rational, parse_rational
from .zpoly import InvalidRing, PolyadicIntegerRing


class FormatError(ValueError):
    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


def _get(obj, key, where, kind=None):
    if not isinstance(obj, dict):
        raise FormatError(where, "expected an object")
    if key not in obj:
        raise FormatError(f"{where}.{key}", "missing")
    value = obj[key]
    if kind is int and (not isinstance(value, int) or isinstance(value, bool)):
        raise FormatError(f"{where}.{key}", f"expected an integer, got {value!r}")
    if kind is list and not isinstance(value, list):
        raise FormatError(f"{where}.{key}", f"expected an array, got {type(value).__name__}")
    return value


def _rational(value, where):
    try:
        return parse_rational(value)
    except (TypeError, ValueError) as exc:
        raise FormatError(where, str(exc)) from None


def group_from_dict(d, where="$", budget=None) -> FiniteNaryGroup:
    N = _get(d, "N", where, int)
    arity = _get(d, "arity", where, int)
    law = _get(d, "law", where)
    try:
        if isinstance(law, dict) and "affine" in law:
            shift = _get(law["affine"], "shift", f"{where}.law.affine", int)
            return affine_group(N, arity, shift, budget=budget)
        if isinstance(law, dict) and "table" in law:
            table = _get(law, "table", f"{where}.law", list)
            return table_group(N, arity, table, budget=budget)
    except (GroupAxiomError, ValueError) as exc:
        raise FormatError(f"{where}.law", str(exc)) from None
    raise FormatError(f"{where}.law", 'expected {"affine": {...}} or {"table": [...]}')


def group_to_dict(g: FiniteNaryGroup) -> dict:
    if g.is_affine:
        law = {"affine": {"shift": g.shift}}
    else:
        law = {"table": [int(x) for x in g.table().ravel()]}
    return {"N": g.N, "arity": g.arity, "law": law}


def algebra_from_dict(d, where="$") -> GradedAlgebra:
    basis = _get(d, "basis", where, list)
    n = _get(d, "mul_arity", where, int)
    m = _get(d, "add_arity", where, int)
    group = group_from_dict(_get(d, "group", where), f"{where}.group")
    deg = _get(d, "deg", where, list)
    dim = len(basis)
    structure = {}
    for k, entry in enumerate(_get(d, "structure", where, list)):
        loc = f"{where}.structure[{k}]"
        args = tuple(_get(entry, "args", loc, list))
        vec = [0] * dim
        for t, out in enumerate(_get(entry, "out", loc, list)):
            j = _get(out, "j", f"{loc}.out[{t}]", int)
            if not 0 <= j < dim:
                raise FormatError(f"{loc}.out[{t}].j", f"index {j} outside 0..{dim - 1}")
            vec[j] += _rational(_get(out, "coeff", f"{loc}.out[{t}]"), f"{loc}.out[{t}].coeff")
        if args in structure:
            raise FormatError(loc, f"duplicate args {list(args)}")
        structure[args] = vec
    try:
        return GradedAlgebra(tuple(basis), n, m, structure, group, tuple(deg))
    except ValueError as exc:
        raise FormatError(where, str(exc)) from None


def algebra_to_dict(alg: GradedAlgebra) -> dict:
    structure = [
        {"args": list(args), "out": [{"j": j, "coeff": format_rational(c)} for j, c in enumerate(vec) if c]}
        for args, vec in sorted(alg.structure.items())
    ]
    return {"basis": list(alg.basis), "mul_arity": alg.mul_arity, "add_arity": alg.add_arity,
            "structure": structure, "group": group_to_dict(alg.group), "deg": list(alg.deg)}


def polynomial_from_dict(d, where="$") -> MatrixPolynomial:
    arity = _get(d, "arity", where, int)
    constant = _rational(d.get("constant", 0), f"{where}.constant")
    terms = {}
    for k, t in enumerate(_get(d, "terms", where, list)):
        loc = f"{where}.terms[{k}]"
        e = _get(t, "exponent", loc, int)
        if e < 0:
            raise FormatError(f"{loc}.exponent", "exponents must be >= 0")
        terms[e] = terms.get(e, 0) + _rational(_get(t, "coeff", loc), f"{loc}.coeff")
    try:
        return MatrixPolynomial(arity, constant, terms)
    except ValueError as exc:
        raise FormatError(where, str(exc)) from None


def polynomial_to_dict(p: MatrixPolynomial) -> dict:
    return {"arity": p.arity, "constant": format_rational(p.constant),
            "terms": [{"exponent": d, "coeff": format_rational(c)} for d, c in p.terms.items()]}


def ring_fields(d, where="$") -> tuple[int, int, int, int]:
    """The four integers of a ring description, without validating the invariants."""
    return tuple(_get(d, k, where, int) for k in ("a", "b", "m_add", "n_mul"))


def ring_from_dict(d, where="$") -> PolyadicIntegerRing:
    args = ring_fields(d, where)
    try:
        return PolyadicIntegerRing(*args)
    except (InvalidRing, ValueError) as exc:
        raise FormatError(where, str(exc)) from None


def hom_from_dict(d, where="$") -> GradedHomomorphism:
    phi = _get(d, "phi", where, list)
    rows = []
    for i, row in enumerate(phi):
        if not isinstance(row, list):
            raise FormatError(f"{where}.phi[{i}]", "expected an array")
        rows.append([_rational(c, f"{where}.phi[{i}][{j}]") for j, c in enumerate(row)])
    psi = _get(d, "psi", where, list)
    try:
        return GradedHomomorphism(rows, psi)
    except (TypeError, ValueError) as exc:
        raise FormatError(where, str(exc)) from None


def hom_to_dict(h: GradedHomomorphism) -> dict:
    return {"phi": [[format_rational(c) for c in row] for row in h.phi], "psi": list(h.psi)}


def load_json(path) -> object:
    path = Path(path)
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None
    except OSError as exc:
        raise FormatError(str(path), exc.strerror or str(exc)) from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)
