import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from polygrade import bundled
from polygrade.graded_core import (
    ArityMismatch,
    GradedAlgebra,
    NonAssociativeAlgebra,
    check_graded,
    check_higher_power_graded,
    check_order_theorem,
    check_strongly_graded,
    check_support_assertion,
    component_inclusion,
    composed_structure,
    group_algebra,
    is_totally_associative,
    make_grassmann,
    mary_add,
    nary_multiply,
    order_theorem_power,
    support,
)
from polygrade.nary_groups import affine_group, compose_power


def relabel(alg, perm):
    """Same algebra with basis vector i renamed perm[i]."""
    inv = {p: i for i, p in enumerate(perm)}
    basis = [alg.basis[inv[k]] for k in range(alg.dim)]
    deg = [alg.deg[inv[k]] for k in range(alg.dim)]
    structure = {}
    for args, vec in alg.structure.items():
        out = [0] * alg.dim
        for j, c in enumerate(vec):
            out[perm[j]] = c
        structure[tuple(perm[i] for i in args)] = out
    return GradedAlgebra(tuple(basis), alg.mul_arity, alg.add_arity, structure, alg.group, tuple(deg))


def test_grassmann_is_graded_with_displayed_families():
    alg = bundled.grassmann_ternary()
    assert check_graded(alg)
    for degs, target in bundled.M3_CONDITIONS:
        assert component_inclusion(alg, degs, target)


def test_grassmann_strong_grading_fails_on_odd_triple():
    rep = check_strongly_graded(bundled.grassmann_ternary())
    assert not rep
    degrees = [d.degrees for d in rep.deficiencies]
    assert (1, 1, 1) in degrees
    # theta squared vanishes, so exactly the triples with two or more odd factors fall short
    assert sorted(degrees) == sorted(t for t in product(range(2), repeat=3) if sum(t) >= 2)
    assert all(d.rank == 0 and d.dim == 1 for d in rep.deficiencies)


def test_binary_superalgebra_conditions():
    from polygrade.graded_core import binary_superalgebra
    alg = binary_superalgebra()
    assert check_graded(alg)
    for degs, target in bundled.A0_CONDITIONS:
        assert component_inclusion(alg, degs, target)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_grassmann_family_associative_and_graded(n):
    alg = make_grassmann(n)
    assert is_totally_associative(alg)
    assert check_graded(alg)


@pytest.mark.parametrize("n", [2, 4])
def test_grassmann_requires_odd_arity(n):
    with pytest.raises(ValueError):
        make_grassmann(n)


def test_strong_instance_over_nonderived_group():
    alg = bundled.strong_ternary_instance()
    assert check_strongly_graded(alg)
    assert support(alg) == {0, 1}
    assert check_support_assertion(alg)
    assert check_order_theorem(alg) == 1
    for degs, target in bundled.AAA_CONDITIONS:
        assert component_inclusion(alg, degs, target)


def test_broken_instance_reports_empty_component():
    rep = check_strongly_graded(bundled.broken_strong_instance())
    assert not rep
    assert support(bundled.broken_strong_instance()) == {0}
    assert check_support_assertion(bundled.broken_strong_instance())


@pytest.mark.parametrize("order, m, ell", [(5, 3, 2), (4, 3, None), (2, 2, 1), (7, 4, 2), (9, 5, 2), (1, 3, 0)])
def test_order_theorem_power(order, m, ell):
    assert order_theorem_power(order, m) == ell


def test_misgraded_product_is_reported():
    alg = bundled.grassmann_ternary()
    structure = dict(alg.structure)
    structure[(0, 0, 0)] = (0, 1)  # u^3 = theta lands in the wrong component
    bad = GradedAlgebra(alg.basis, 3, 2, structure, alg.group, alg.deg)
    rep = check_graded(bad)
    assert [(v.args, v.expected_degree, v.actual_degree) for v in rep.violations] == [((0, 0, 0), 0, 1)]
    assert not component_inclusion(bad, (0, 0, 0), 0)


@pytest.mark.parametrize("make", [bundled.grassmann_ternary, bundled.strong_ternary_instance])
def test_checks_invariant_under_relabeling(make):
    alg = make()
    for perm in ([1, 0],):
        other = relabel(alg, perm)
        assert check_graded(other).ok == check_graded(alg).ok
        assert check_strongly_graded(other).ok == check_strongly_graded(alg).ok
        assert len(check_strongly_graded(other).deficiencies) == len(check_strongly_graded(alg).deficiencies)


@pytest.mark.parametrize("c", [Fraction(5), Fraction(-2, 3)])
def test_checks_invariant_under_scaling(c):
    alg = bundled.strong_ternary_instance()
    scaled = group_algebra(bundled.mx_group(), coeff=c)
    assert check_strongly_graded(scaled).ok == check_strongly_graded(alg).ok


def test_higher_power_with_ell_one_matches_plain_check():
    for alg in (bundled.grassmann_ternary(), bundled.strong_ternary_instance()):
        assert check_higher_power_graded(alg, 1, alg.group).ok == check_graded(alg).ok


def test_higher_power_two_fold_ternary():
    alg = bundled.strong_ternary_instance()
    law = compose_power(alg.group, 2)
    assert check_higher_power_graded(alg, 2, law, strong=True)
    grass = bundled.grassmann_ternary()
    assert check_higher_power_graded(grass, 2, compose_power(grass.group, 2))


def test_higher_power_arity_mismatch():
    alg = bundled.grassmann_ternary()
    with pytest.raises(ArityMismatch):
        check_higher_power_graded(alg, 2, alg.group)
    with pytest.raises(ArityMismatch):
        check_graded(bundled.five_ary_instance())


def test_five_ary_instance_tabulated_versus_composed():
    alg = bundled.five_ary_instance()
    assert check_higher_power_graded(alg, 1, bundled.ct5_group())
    for degs, target in bundled.A5_CONDITIONS:
        assert component_inclusion(alg, degs, target)
    composed = compose_power(bundled.mx_group(), 2)
    assert not check_higher_power_graded(alg, 1, composed)


def non_associative_algebra():
    # mu[e_a, e_b, e_c] = e_{a} when b == c else 0, graded trivially
    structure = {}
    for a, b, c in product(range(2), repeat=3):
        structure[(a, b, c)] = [int(i == a and b == c) for i in range(2)]
    return GradedAlgebra(("p", "q"), 3, 2, structure, affine_group(1, 3, 0), (0, 0))


def test_non_associative_algebra_refused_for_composed_grading():
    alg = non_associative_algebra()
    assert not is_totally_associative(alg)
    law = compose_power(alg.group, 2)
    with pytest.raises(NonAssociativeAlgebra):
        check_higher_power_graded(alg, 2, law)
    assert check_higher_power_graded(alg, 2, law, nesting="left")


def test_composed_structure_of_group_algebra_follows_composed_law():
    alg = bundled.strong_ternary_instance()
    law = compose_power(alg.group, 2)
    structure = composed_structure(alg, 2)
    for args in product(range(2), repeat=5):
        vec = structure[args]
        assert vec[law.apply(args)] == 1 and sum(vec) == 1


vectors = st.lists(st.integers(-5, 5), min_size=2, max_size=2)


@settings(max_examples=60)
@given(vectors, vectors, vectors, vectors, st.integers(-4, 4))
def test_product_is_multilinear(a, b, c, d, k):
    alg = bundled.grassmann_ternary()
    F = lambda v: tuple(Fraction(x) for x in v)
    a, b, c, d = map(F, (a, b, c, d))
    lhs = nary_multiply(alg, [mary_add(alg, [a, tuple(k * x for x in d)]), b, c])
    rhs = mary_add(alg, [nary_multiply(alg, [a, b, c]), tuple(k * x for x in nary_multiply(alg, [d, b, c]))])
    assert lhs == rhs


def test_random_graded_algebras_pass_check():
    # build structure constants that respect a random grading and confirm no false alarms
    rng = random.Random(7)
    group = affine_group(3, 3, 1)
    for _ in range(20):
        deg = tuple(rng.randrange(3) for _ in range(4))
        structure = {}
        for args in product(range(4), repeat=3):
            target = group.apply(tuple(deg[i] for i in args))
            structure[args] = [rng.randint(-2, 2) if deg[j] == target else 0 for j in range(4)]
        alg = GradedAlgebra(("a", "b", "c", "d"), 3, 2, structure, group, deg)
        assert check_graded(alg)
