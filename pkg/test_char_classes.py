#!/usr/bin/env python3
"""
Tests for the characteristic class equations, their solution sets and the orbit type catalog
"""

import random
import sys
from itertools import product
from math import gcd

import pytest

from gauge_orbits.char_classes import (
    canonical_label,
    classify,
    e2,
    e4,
    instantiate_family,
    quotient_classes,
    solve_system,
    verify_label,
)
from gauge_orbits.cohomology import builtin_manifold, cup22, h1_mod, load_manifold, make_class2, make_xi
from gauge_orbits.data_types import BundleSector, CohClass1ModG, CohClass2, CohClass4, HoweSignature, OrbitTypeLabel
from gauge_orbits.errors import InconsistentSectorError, InvalidInputError
from gauge_orbits.howe import derived_data, enumerate_classes, enumerate_signatures
from gauge_orbits.integer_linalg import bezout_vector, solve_linear_congruence
from gauge_orbits.quadrics import solve_quadric
from gauge_orbits.solve_responses import SolutionKind, SolveResponse

S4 = builtin_manifold("s4")
S2XS2 = builtin_manifold("s2xs2")
T4 = builtin_manifold("t4")
SIGMA1 = builtin_manifold("sigma", {"s": 1})
FOUR_MANIFOLDS = [S4, S2XS2, T4, builtin_manifold("lens", {"p": 4}), builtin_manifold("lens", {"p": 5})]
CATALOG = FOUR_MANIFOLDS + [SIGMA1, builtin_manifold("sigma", {"s": 0})]


def sig(text):
    return HoweSignature.parse(text)


def sector(c2):
    return BundleSector.from_int(c2)


def entry_for(catalog, text):
    return next(entry for entry in catalog.entries if entry.J == sig(text))


def zero_label(J, manifold):
    g = derived_data(J).g
    return OrbitTypeLabel(
        J,
        tuple(make_class2(manifold) for _ in range(J.r)),
        tuple(CohClass4(0) for _ in range(J.r)),
        make_xi(manifold, g),
    )


# Oracle: exhaustive box search written against the raw model data only.


def oracle_labels(J, manifold, c2, free_bound, alpha4_bound):
    m = J.m
    g = 0
    for mi in m:
        g = gcd(g, mi)
    m_tilde = [mi // g for mi in m]
    b1, b2, torsion = manifold.b1, manifold.b2, manifold.h1_torsion
    form = manifold.intersection_form
    xi_orders = [g] * b1 + [gcd(d, g) for d in torsion]

    def dot(x, y):
        return sum(x[a] * form[a][b] * y[b] for a in range(b2) for b in range(b2))

    free_choices = list(product(range(-free_bound, free_bound + 1), repeat=b2))
    torsion_choices = list(product(*(range(d) for d in torsion)))
    found = set()
    for xi in product(*(range(o) for o in xi_orders)):
        beta = [xi[b1 + j] * (d // gcd(d, g)) % d for j, d in enumerate(torsion)]
        for frees in product(free_choices, repeat=J.r):
            if any(sum(m_tilde[i] * frees[i][t] for i in range(J.r)) for t in range(b2)):
                continue
            quadratic = 0
            if manifold.h4_rank:
                for i in range(J.r):
                    quadratic += m[i] * (m[i] - 1) // 2 * dot(frees[i], frees[i])
                    for j in range(i + 1, J.r):
                        quadratic += m[i] * m[j] * dot(frees[i], frees[j])
            for tors in product(torsion_choices, repeat=J.r):
                if any(
                    (sum(m_tilde[i] * tors[i][j] for i in range(J.r)) - beta[j]) % d for j, d in enumerate(torsion)
                ):
                    continue
                alpha4_ranges = [
                    range(-alpha4_bound, alpha4_bound + 1) if J.k[i] >= 2 and manifold.h4_rank else range(1)
                    for i in range(J.r)
                ]
                for alpha4 in product(*alpha4_ranges):
                    if sum(mi * a for mi, a in zip(m, alpha4)) + quadratic != c2:
                        continue
                    found.add(
                        OrbitTypeLabel(
                            J,
                            tuple(CohClass2(frees[i], tors[i]) for i in range(J.r)),
                            tuple(CohClass4(a) for a in alpha4),
                            CohClass1ModG(g, tuple(xi)),
                        )
                    )
    return found


def in_box(label, free_bound, alpha4_bound):
    return all(abs(v) <= free_bound for a in label.alpha2 for v in a.free) and all(
        abs(a.coeff) <= alpha4_bound for a in label.alpha4
    )


def test_e2_examples():
    x = make_class2(S2XS2, (2, -1))
    minus_x = make_class2(S2XS2, (-2, 1))
    J = sig("1,1|1,1")
    assert e2(J, (1, 1), (x, minus_x), S2XS2).is_zero

    J = sig("1,1|2,3")
    assert e2(J, (2, 3), (make_class2(S2XS2, (3, 3)), make_class2(S2XS2, (-2, -2))), S2XS2).is_zero


def test_e2_scaling_law():
    rng = random.Random(5)
    lens = builtin_manifold("lens", {"p": 6})
    for manifold in (S2XS2, T4, lens):
        for _ in range(40):
            J = rng.choice(enumerate_signatures(4))
            weights = [rng.randint(-3, 3) for _ in range(J.r)]
            alpha = [
                make_class2(
                    manifold,
                    [rng.randint(-5, 5) for _ in range(manifold.b2)],
                    [rng.randint(0, d - 1) for d in manifold.h1_torsion],
                )
                for _ in range(J.r)
            ]
            factor = rng.randint(-4, 4)
            scaled = e2(J, [factor * w for w in weights], alpha, manifold)
            plain = e2(J, weights, alpha, manifold)
            expected = make_class2(
                manifold, [factor * v for v in plain.free], [factor * v for v in plain.torsion]
            )
            assert scaled == expected


def test_e4_examples():
    x = make_class2(S2XS2, (1, 2))
    assert e4(sig("1|3"), (x,), (CohClass4(0),), S2XS2) == CohClass4(3 * cup22(S2XS2, x, x).coeff)
    assert e4(sig("1,1|2,2"), (make_class2(S2XS2),) * 2, (CohClass4(0),) * 2, S2XS2) == CohClass4(0)
    for a, b in [(1, 1), (3, -2), (0, 5)]:
        alpha = (make_class2(S2XS2, (a, b)), make_class2(S2XS2, (-a, -b)))
        assert e4(sig("1,1|1,1"), alpha, (CohClass4(0),) * 2, S2XS2) == CohClass4(-2 * a * b)
    with pytest.raises(InvalidInputError):
        e4(sig("1|2"), (make_class2(S4),), (CohClass4(1),), S4)


def test_quadratic_part_on_the_kernel():
    rng = random.Random(17)
    for J in enumerate_signatures(4):
        m_tilde = derived_data(J).m_tilde
        for _ in range(10):
            head = [[rng.randint(-3, 3) for _ in range(S2XS2.b2)] for _ in range(J.r - 1)]
            # force sum m~_i alpha_i = 0 by scaling the free choices
            last_weight = m_tilde[-1]
            head = [[last_weight * v for v in vector] for vector in head]
            last = [-sum(m_tilde[i] * head[i][t] for i in range(J.r - 1)) // last_weight for t in range(S2XS2.b2)]
            alpha = [make_class2(S2XS2, v) for v in head + [last]]
            assert e2(J, m_tilde, alpha, S2XS2).is_zero
            quadratic = e4(J, alpha, [CohClass4(0)] * J.r, S2XS2).coeff
            squares = sum(mi * cup22(S2XS2, a, a).coeff for mi, a in zip(J.m, alpha))
            assert 2 * quadratic == -squares


def test_verify_label_examples():
    for manifold in CATALOG:
        for n in (1, 2, 3):
            for J in enumerate_signatures(n):
                assert verify_label(zero_label(J, manifold), manifold, sector(0))

    J = sig("1,1|2,3")
    alpha = (make_class2(S2XS2, (3, 3)), make_class2(S2XS2, (-2, -2)))
    label = OrbitTypeLabel(J, alpha, (CohClass4(0), CohClass4(0)), make_xi(S2XS2, 1))
    eta = make_class2(S2XS2, (1, 1))
    assert verify_label(label, S2XS2, sector(-15 * cup22(S2XS2, eta, eta).coeff))
    assert not verify_label(label, S2XS2, sector(0))


def test_perturbed_xi_is_rejected():
    lens = builtin_manifold("lens", {"p": 4})
    for J in (sig("1|2"), sig("1|4")):
        for label in solve_system(J, lens, sector(0), 2).labels:
            orders = [derived_data(J).g, gcd(4, derived_data(J).g)]
            moved = list(label.xi.components)
            moved[1] = (moved[1] + 1) % orders[1]
            mutated = OrbitTypeLabel(J, label.alpha2, label.alpha4, CohClass1ModG(label.xi.g, tuple(moved)))
            assert not verify_label(mutated, lens, sector(0))


def test_solve_system_examples():
    for n in range(1, 6):
        solutions = solve_system(sig(f"1|{n}"), S4, sector(0), 3)
        assert solutions.kind is SolutionKind.FINITE
        assert len(solutions.labels) == h1_mod(S4, n).order == 1

    solutions = solve_system(sig("1,1|1,1"), S2XS2, sector(12), 12)
    assert solutions.kind is SolutionKind.FINITE
    assert len(solutions.labels) == 8
    pairs = {label.alpha2[0].free for label in solutions.labels}
    assert pairs == {(q, -6 // q) for q in (1, 2, 3, 6, -1, -2, -3, -6)}

    solutions = solve_system(sig("2,3|1,1"), S4, sector(7), 4)
    assert solutions.kind is SolutionKind.INFINITE
    assert solutions.family.rank == 1
    assert len(solutions.family.alpha4_basis) == 1


def test_solve_system_errors():
    with pytest.raises(InconsistentSectorError):
        solve_system(sig("1,1|1,1"), SIGMA1, sector(1), 2)
    with pytest.raises(InvalidInputError):
        solve_system(sig("1,1|1,1"), S2XS2, sector(0), 0)


def test_every_emitted_label_verifies():
    cases = [(manifold, n) for manifold in CATALOG if manifold is not T4 for n in (1, 2, 3)] + [(T4, 1), (T4, 2)]
    for manifold, n in cases:
        charges = (0,) if manifold.h4_rank == 0 else (0, 2, -2, 3, 6)
        for c2 in charges:
            for J in enumerate_signatures(n):
                solutions = solve_system(J, manifold, sector(c2), 2, max_representatives=60)
                for label in solutions.labels:
                    assert verify_label(label, manifold, sector(c2))
                    assert e2(J, J.m, label.alpha2, manifold).is_zero
                if c2 == 0:
                    assert solutions.kind is not SolutionKind.EMPTY
                    assert zero_label(J, manifold) in solutions.labels or solutions.kind is SolutionKind.INFINITE


def test_solver_matches_exhaustive_oracle():
    manifolds = [S4, S2XS2] + [builtin_manifold("lens", {"p": p}) for p in range(2, 7)]
    for manifold in manifolds:
        free_bound = 2 if manifold.b2 else 0
        alpha4_bound = 6
        for n in (1, 2, 3):
            for J in enumerate_signatures(n):
                for c2 in (0, 1, 2, -2, 4):
                    expected = oracle_labels(J, manifold, c2, free_bound, alpha4_bound)
                    solutions = solve_system(J, manifold, sector(c2), max(free_bound, 1))
                    if solutions.response is SolveResponse.NO_WITNESS_WITHIN_BOUND:
                        continue
                    if solutions.kind is SolutionKind.EMPTY:
                        assert expected == set()
                    elif solutions.kind is SolutionKind.FINITE:
                        boxed = {label for label in solutions.labels if in_box(label, free_bound, alpha4_bound)}
                        assert boxed == expected, (J, manifold.name, c2)
                    else:
                        boxed = {label for label in solutions.labels if in_box(label, free_bound, alpha4_bound)}
                        assert boxed <= expected


def test_quotient_identifies_permuted_labels():
    x = make_class2(S2XS2, (1, -2))
    minus_x = make_class2(S2XS2, (-1, 2))
    J = sig("1,1|1,1")
    zero4 = (CohClass4(0), CohClass4(0))
    first = OrbitTypeLabel(J, (x, minus_x), zero4, make_xi(S2XS2, 1))
    second = OrbitTypeLabel(J, (minus_x, x), zero4, make_xi(S2XS2, 1))
    assert canonical_label(first) == canonical_label(second)

    solutions = solve_system(J, S2XS2, sector(4), 4)
    assert len(solutions.labels) == 4
    assert len(quotient_classes([solutions])[0].labels) == 2

    J = sig("1,1|2,2")
    y = make_class2(S2XS2, (3, 1))
    swapped = [
        OrbitTypeLabel(J, (x, y), zero4, make_xi(S2XS2, 2)),
        OrbitTypeLabel(J, (y, x), zero4, make_xi(S2XS2, 2)),
    ]
    assert len({canonical_label(label) for label in swapped}) == 1

    distinct = solve_system(sig("2,3|1,1"), S4, sector(0), 3)
    assert len(quotient_classes([distinct])[0].labels) == len(distinct.labels)


def test_su2_on_s4():
    trivial = classify(2, S4, sector(0), 3)
    assert [str(entry.J) for entry in trivial.entries] == ["1|2", "2|1", "1,1|1,1"]
    assert [len(entry.solutions.labels) for entry in trivial.entries] == [1, 1, 1]
    for c2 in (1, -1, 2, 5):
        catalog = classify(2, S4, sector(c2), 3)
        assert len(catalog.strata) == 1
        assert entry_for(catalog, "2|1").solutions.kind is SolutionKind.FINITE


def test_su2_on_s2xs2_divisor_counts():
    for half, classes in [(1, 1), (2, 2), (6, 4), (12, 6)]:
        catalog = classify(2, S2XS2, sector(2 * half), 2 * half)
        u1 = entry_for(catalog, "1,1|1,1").solutions
        assert u1.kind is SolutionKind.FINITE
        assert len(u1.labels) == classes
        assert entry_for(catalog, "1|2").solutions.kind is SolutionKind.EMPTY
        # alpha_2 = -alpha_1 and Q = -2ab
        firsts = {label.alpha2[0].free for label in u1.labels}
        assert all(a * b == -half for a, b in firsts)
        box = range(-2 * half, 2 * half + 1)
        brute = {max((a, b), (-a, -b)) for a in box for b in box if -2 * a * b == 2 * half}
        assert len(brute) == classes
    for c2 in (1, 3, -5):
        catalog = classify(2, S2XS2, sector(c2), 4)
        assert len(catalog.strata) == 1
        assert catalog.strata[0].J == sig("2|1")


def test_su2_on_lens_spaces():
    counts = {4: (4, 3), 5: (2, 3)}
    for p, (z2, u1) in counts.items():
        catalog = classify(2, builtin_manifold("lens", {"p": p}), sector(0), 3)
        assert len(entry_for(catalog, "1|2").solutions.labels) == z2
        assert len(entry_for(catalog, "1,1|1,1").solutions.labels) == u1
        assert len(entry_for(catalog, "2|1").solutions.labels) == 1
        assert len(catalog.strata) == z2 + u1 + 1


def test_su2_on_t4():
    catalog = classify(2, T4, sector(0), 2)
    assert len(entry_for(catalog, "1|2").solutions.labels) == 16

    for m in (1, -2):
        solutions = solve_system(sig("1,1|1,1"), T4, sector(2 * m), 2)
        assert solutions.kind is SolutionKind.INFINITE
        assert solutions.family.rank == 6
        assert solutions.family.constraint == "quadric"
        assert solutions.labels
        for label in solutions.labels:
            a12, a13, a14, a23, a24, a34 = label.alpha2[0].free
            assert -2 * (a12 * a34 - a13 * a24 + a14 * a23) == 2 * m


def test_su4_with_signature_2_2():
    J = sig("2|2")
    for manifold in FOUR_MANIFOLDS:
        for c2 in range(-4, 5):
            solutions = solve_system(J, manifold, sector(c2), 2)
            if c2 % 2:
                assert solutions.kind is SolutionKind.EMPTY
                assert solutions.response is SolveResponse.NO_DEGREE4_SOLUTION
            else:
                assert solutions.kind is SolutionKind.FINITE
                assert len(solutions.labels) == h1_mod(manifold, 2).order
                assert len({label.xi for label in solutions.labels}) == len(solutions.labels)
    for s in (0, 1, 2):
        surface = builtin_manifold("sigma", {"s": s})
        assert len(solve_system(J, surface, sector(0), 2).labels) == h1_mod(surface, 2).order


def test_su5_family_parametrized_by_degree4_class():
    rng = random.Random(23)
    J = sig("2,3|1,1")
    for manifold in CATALOG:
        c2 = 0 if manifold.h4_rank == 0 else 3
        raw = solve_system(J, manifold, sector(c2), 2)
        for solutions in (raw, quotient_classes([raw])[0]):
            assert solutions.kind is SolutionKind.INFINITE
            family = solutions.family
            assert family.rank >= 1
            assert len(family.alpha2_basis) + len(family.alpha4_basis) == family.rank
            checked = 0
            while checked < 20:
                y = [rng.randint(-3, 3) for _ in family.alpha2_basis]
                z = [rng.randint(-3, 3) for _ in family.alpha4_basis]
                label = instantiate_family(family, y, z, sector(c2))
                if label is None:
                    continue
                assert verify_label(label, manifold, sector(c2))
                checked += 1


def test_definite_model_is_finite():
    cp2 = load_manifold(
        {"name": "CP2", "dim": 4, "b1": 0, "h1_torsion": [], "b2": 1, "intersection_form": [[1]], "h4_rank": 1}
    )
    J = sig("1,1|1,1")
    solutions = solve_system(J, cp2, sector(-4), 2)
    assert solutions.kind is SolutionKind.FINITE
    assert {label.alpha2[0].free for label in solutions.labels} == {(2,), (-2,)}
    assert len(quotient_classes([solutions])[0].labels) == 1
    assert solve_system(J, cp2, sector(-3), 2).kind is SolutionKind.EMPTY
    assert solve_system(J, cp2, sector(4), 2).kind is SolutionKind.EMPTY


def test_quadric_branches():
    # split binary form 2xy: finite away from zero, two lines through zero
    assert solve_quadric([[0, 2], [2, 0]], 6, 3, 100).kind is SolutionKind.FINITE
    assert set(solve_quadric([[0, 2], [2, 0]], 6, 3, 100).points) == {(1, 3), (3, 1), (-1, -3), (-3, -1)}
    assert solve_quadric([[0, 2], [2, 0]], 0, 3, 100).kind is SolutionKind.INFINITE
    # x^2 - 2y^2 does not split
    pell = [[2, 0], [0, -4]]
    assert solve_quadric(pell, 0, 3, 100).points == ((0, 0),)
    assert solve_quadric(pell, -1, 3, 100).kind is SolutionKind.INFINITE
    # content 2 never reaches an odd target
    assert solve_quadric([[0, 2], [2, 0]], 3, 3, 100).kind is SolutionKind.EMPTY
    # zero form is all or nothing
    assert solve_quadric([[0, 0], [0, 0]], 0, 1, 100).kind is SolutionKind.INFINITE
    assert solve_quadric([[0, 0], [0, 0]], 1, 1, 100).kind is SolutionKind.EMPTY
    # x^2 + y^2 - 3z^2 == 0 has only the zero solution, which the bounded search cannot prove
    undecided = solve_quadric([[2, 0, 0], [0, 2, 0], [0, 0, -6]], 0, 2, 100)
    assert undecided.kind is SolutionKind.FINITE
    assert undecided.response is SolveResponse.NO_WITNESS_WITHIN_BOUND
    assert not undecided.exact


def shuffled_signature(J, rng):
    order = list(range(J.r))
    rng.shuffle(order)
    return HoweSignature(tuple(J.k[i] for i in order), tuple(J.m[i] for i in order))


def test_quotient_does_not_depend_on_index_order():
    rng = random.Random(29)
    lens = builtin_manifold("lens", {"p": 4})
    for manifold, n, c2 in [(lens, 3, 0), (builtin_manifold("lens", {"p": 6}), 3, 0), (S4, 3, 2), (S2XS2, 2, 4)]:
        for J in enumerate_classes(n):
            reference = quotient_classes([solve_system(J, manifold, sector(c2), 2)])[0]
            for _ in range(3):
                permuted = quotient_classes([solve_system(shuffled_signature(J, rng), manifold, sector(c2), 2)])[0]
                assert permuted.J == reference.J
                assert permuted.kind is reference.kind
                if reference.kind is SolutionKind.FINITE:
                    assert permuted.labels == reference.labels


def test_classify_is_permutation_invariant():
    rng = random.Random(31)
    lens = builtin_manifold("lens", {"p": 4})
    for manifold, n, c2 in [(lens, 3, 0), (S2XS2, 3, 4), (S4, 3, 2)]:
        reference = classify(n, manifold, sector(c2), 2)
        for _ in range(3):
            shuffled = [shuffled_signature(J, rng) for J in enumerate_classes(n)]
            rng.shuffle(shuffled)
            assert classify(n, manifold, sector(c2), 2, signatures=shuffled) == reference


def test_classify_on_surface_flags_nodes():
    catalog = classify(2, SIGMA1, sector(0), 1)
    u1 = entry_for(catalog, "1,1|1,1")
    assert u1.solutions.kind is SolutionKind.INFINITE
    for label, nodal in zip(u1.solutions.labels, u1.nodal):
        assert nodal == any(not a.is_zero for a in label.alpha2)
    assert entry_for(catalog, "2|1").nodal == (False,)
    with pytest.raises(InconsistentSectorError):
        classify(2, SIGMA1, sector(2), 1)


def test_bezout_vectors_and_congruences():
    for coefficients in [(4,), (6, 10), (2, 3, 4), (12, 18, 8), (5, 5)]:
        h, u = bezout_vector(coefficients)
        assert h == gcd(*coefficients)
        assert sum(a * b for a, b in zip(u, coefficients)) == h
    assert solve_linear_congruence(2, 2, 4) == [1, 3]
    assert solve_linear_congruence(3, 1, 4) == [3]
    assert solve_linear_congruence(2, 1, 4) == []


def main():
    tests = [value for name, value in sorted(globals().items()) if name.startswith("test_") and callable(value)]
    passed = 0
    for test in tests:
        try:
            test()
            print(f"✅ {test.__name__}")
            passed += 1
        except Exception as e:
            print(f"❌ {test.__name__}: {e!r}")
    print(f"\n📊 Test Results: {passed}/{len(tests)} tests passed")
    if passed != len(tests):
        sys.exit(1)


if __name__ == "__main__":
    main()
