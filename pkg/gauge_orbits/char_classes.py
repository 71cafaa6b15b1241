from dataclasses import dataclass, replace
from itertools import product
from typing import Iterable, List, Optional, Sequence

import numpy as np
from sympy import Matrix

from gauge_orbits.cohomology import (
    add_classes,
    bockstein,
    check_class2,
    check_xi,
    cup22,
    h1_mod_elements,
)
from gauge_orbits.cs_nodes import is_node
from gauge_orbits.data_types import (
    BundleSector,
    CatalogEntry,
    CohClass2,
    CohClass4,
    HoweSignature,
    ManifoldModel,
    OrbitTypeCatalog,
    OrbitTypeLabel,
    SolutionFamily,
    SolutionSet,
)
from gauge_orbits.errors import CoordinateMismatchError, InconsistentSectorError, InvalidInputError
from gauge_orbits.howe import canonical_permutation, canonicalize, derived_data, enumerate_classes, homotopy_groups
from gauge_orbits.integer_linalg import bezout_vector, combine, hermite_reduce, kernel_basis, shell_points, solve_linear_congruence
from gauge_orbits.quadrics import evaluate, solve_quadric
from gauge_orbits.solve_responses import SolutionKind, SolveResponse

DEFAULT_MAX_REPRESENTATIVES = 200


def _check_lengths(J: HoweSignature, *sequences: Sequence) -> None:
    for sequence in sequences:
        if len(sequence) != J.r:
            raise CoordinateMismatchError(f"{J.display()} needs {J.r} entries, got {len(sequence)}")


def e2(J: HoweSignature, weights: Sequence[int], alpha2: Sequence[CohClass2], manifold: ManifoldModel) -> CohClass2:
    """sum_i weights_i * alpha_i in H^2(M)."""
    _check_lengths(J, weights, alpha2)
    return add_classes(manifold, list(zip(weights, alpha2)))


def e4(
    J: HoweSignature,
    alpha2: Sequence[CohClass2],
    alpha4: Sequence[CohClass4],
    manifold: ManifoldModel,
) -> CohClass4:
    """sum m_i a4_i + sum m_i(m_i-1)/2 a_i.a_i + sum_{i<j} m_i m_j a_i.a_j."""
    _check_lengths(J, alpha2, alpha4)
    for ki, a4 in zip(J.k, alpha4):
        if ki == 1 and a4.coeff != 0:
            raise InvalidInputError(f"{J.display()}: degree-4 class must vanish on k_i = 1 factors")
        if manifold.h4_rank == 0 and a4.coeff != 0:
            raise CoordinateMismatchError(f"{manifold.name} has no H^4, got degree-4 class {a4}")
    m = J.m
    total = sum(mi * a4.coeff for mi, a4 in zip(m, alpha4))
    for i in range(J.r):
        total += mi_choose_2(m[i]) * cup22(manifold, alpha2[i], alpha2[i]).coeff
        for j in range(i + 1, J.r):
            total += m[i] * m[j] * cup22(manifold, alpha2[i], alpha2[j]).coeff
    return CohClass4(total)


def mi_choose_2(value: int) -> int:
    return value * (value - 1) // 2


def verify_label(label: OrbitTypeLabel, manifold: ManifoldModel, sector: BundleSector) -> bool:
    J = label.J
    derived = derived_data(J)
    if label.xi.g != derived.g:
        raise CoordinateMismatchError(f"xi of {label.J.display()} must be a Z_{derived.g} class, got Z_{label.xi.g}")
    check_xi(manifold, label.xi)
    for a in label.alpha2:
        check_class2(manifold, a)

    degree2 = e2(J, derived.m_tilde, label.alpha2, manifold) == bockstein(manifold, derived.g)(label.xi)
    redundant = e2(J, J.m, label.alpha2, manifold).is_zero
    degree4 = e4(J, label.alpha2, label.alpha4, manifold) == sector.c2
    return degree2 and redundant and degree4


def _free_kernel(J: HoweSignature, m_tilde: Sequence[int], b2: int) -> tuple:
    """Basis of {(f_1, ..., f_r) in (Z^b2)^r : sum m~_i f_i = 0}, coordinate i * b2 + t."""
    rows = []
    for t in range(b2):
        row = [0] * (J.r * b2)
        for i in range(J.r):
            row[i * b2 + t] = m_tilde[i]
        rows.append(row)
    return kernel_basis(rows, J.r * b2)


def _quadratic_value(J: HoweSignature, manifold: ManifoldModel, free_vector: Sequence[int]) -> int:
    """Quadratic part of the degree-4 equation on free parts only."""
    if manifold.h4_rank == 0 or manifold.b2 == 0:
        return 0
    form = np.array(manifold.intersection_form, dtype=object)
    blocks = [np.array(free_vector[i * manifold.b2:(i + 1) * manifold.b2], dtype=object) for i in range(J.r)]
    total = 0
    for i in range(J.r):
        total += mi_choose_2(J.m[i]) * blocks[i].dot(form).dot(blocks[i])
        for j in range(i + 1, J.r):
            total += J.m[i] * J.m[j] * blocks[i].dot(form).dot(blocks[j])
    return int(total)


def _polar_matrix(J: HoweSignature, manifold: ManifoldModel, kernel: tuple) -> tuple:
    """Even matrix P with Q(sum y_a K_a) = y^T P y / 2."""
    size = len(kernel)
    values = [_quadratic_value(J, manifold, vector) for vector in kernel]
    polar = [[0] * size for _ in range(size)]
    for a in range(size):
        polar[a][a] = 2 * values[a]
        for b in range(a + 1, size):
            both = tuple(x + y for x, y in zip(kernel[a], kernel[b]))
            polar[a][b] = polar[b][a] = _quadratic_value(J, manifold, both) - values[a] - values[b]
    return tuple(tuple(row) for row in polar)


def _torsion_solutions(J: HoweSignature, m_tilde: Sequence[int], manifold: ManifoldModel, target: CohClass2) -> list:
    """All torsion parts (t_1, ..., t_r) with sum m~_i t_i = target, solved factor by factor."""
    per_factor = []
    for j, order in enumerate(manifold.h1_torsion):
        solutions = []
        for head in product(range(order), repeat=J.r - 1):
            partial = sum(m_tilde[i] * head[i] for i in range(J.r - 1))
            for last in solve_linear_congruence(m_tilde[-1], target.torsion[j] - partial, order):
                solutions.append(head + (last,))
        if not solutions:
            return []
        per_factor.append(solutions)
    assignments = []
    for choice in product(*per_factor):
        assignments.append(tuple(tuple(choice[j][i] for j in range(len(choice))) for i in range(J.r)))
    return assignments


@dataclass(frozen=True)
class _FreePart:
    kind: SolutionKind
    points: tuple
    response: SolveResponse = SolveResponse.SOLVED
    truncated: bool = False
    rank: int = 0
    constraint: str = "none"
    modulus: int = 0
    alpha4_basis: tuple = ()
    alpha4_bezout: tuple = ()
    base_point: Optional[tuple] = None


def _embed(values: Sequence[int], positions: Sequence[int], size: int) -> tuple:
    vector = [0] * size
    for position, value in zip(positions, values):
        vector[position] = value
    return tuple(vector)


def _solve_free_part(
    J: HoweSignature,
    manifold: ManifoldModel,
    c2: int,
    kernel: tuple,
    polar: tuple,
    bound: int,
    limit: int,
) -> _FreePart:
    """Degree-4 analysis of the free parameters; points are (y, alpha4 coefficients)."""
    rho = len(kernel)
    zeros = (0,) * J.r

    if manifold.h4_rank == 0:
        if rho == 0:
            return _FreePart(SolutionKind.FINITE, (((), zeros),))
        taken, truncated = _take(((y, zeros) for y in shell_points(rho, bound)), limit)
        return _FreePart(SolutionKind.INFINITE, taken, truncated=truncated, rank=rho, base_point=((0,) * rho, zeros))

    higher = [i for i, ki in enumerate(J.k) if ki >= 2]
    if not higher:
        quadric = solve_quadric(polar, c2, bound, limit)
        points = tuple((y, zeros) for y in quadric.points)
        if quadric.kind is SolutionKind.INFINITE:
            return _FreePart(
                SolutionKind.INFINITE,
                points,
                quadric.response,
                quadric.truncated,
                rank=rho,
                constraint="quadric",
                base_point=points[0],
            )
        return _FreePart(quadric.kind, points, quadric.response)

    h, bezout = bezout_vector([J.m[i] for i in higher])
    bezout = _embed(bezout, higher, J.r)
    lattice = tuple(_embed(v, higher, J.r) for v in kernel_basis([[J.m[i] for i in higher]], len(higher)))
    rank = rho + len(lattice)

    def alpha4_at(y: tuple, z: tuple) -> Optional[tuple]:
        remainder = c2 - evaluate(polar, y)
        if remainder % h:
            return None
        particular = tuple((remainder // h) * u for u in bezout)
        shift = combine(z, lattice, J.r)
        return tuple(p + s for p, s in zip(particular, shift))

    witness = next((y for y in product(range(h), repeat=rho) if alpha4_at(y, ()) is not None), None)
    if witness is None:
        return _FreePart(SolutionKind.EMPTY, (), SolveResponse.NO_DEGREE4_SOLUTION)
    if rank == 0:
        return _FreePart(SolutionKind.FINITE, (((), alpha4_at((), ())),))

    def candidates():
        for point in shell_points(rank, bound):
            y, z = point[:rho], point[rho:]
            alpha4 = alpha4_at(y, z)
            if alpha4 is not None:
                yield y, alpha4

    taken, truncated = _take(candidates(), limit)
    return _FreePart(
        SolutionKind.INFINITE,
        taken,
        truncated=truncated,
        rank=rank,
        constraint="congruence" if rho and h > 1 else "none",
        modulus=h,
        alpha4_basis=lattice,
        alpha4_bezout=bezout,
        base_point=(witness, alpha4_at(witness, (0,) * len(lattice))),
    )


def _take(points: Iterable, limit: int) -> tuple:
    taken = []
    for point in points:
        if len(taken) == limit:
            return tuple(taken), True
        taken.append(point)
    return tuple(taken), False


def _build_label(J, manifold, kernel, xi, torsion, y, alpha4) -> OrbitTypeLabel:
    free = combine(y, kernel, J.r * manifold.b2)
    alpha2 = tuple(
        CohClass2(tuple(free[i * manifold.b2:(i + 1) * manifold.b2]), torsion[i]) for i in range(J.r)
    )
    return OrbitTypeLabel(J, alpha2, tuple(CohClass4(v) for v in alpha4), xi)


def _check_sector(manifold: ManifoldModel, sector: BundleSector) -> None:
    if manifold.h4_rank == 0 and sector.c2.coeff != 0:
        raise InconsistentSectorError(f"{manifold.name} has no H^4, so c2 must be 0 (got {sector.c2.coeff})")


def solve_system(
    J: HoweSignature,
    manifold: ManifoldModel,
    sector: BundleSector,
    bound: int,
    max_representatives: int = DEFAULT_MAX_REPRESENTATIVES,
) -> SolutionSet:
    """Solve both characteristic class equations for J over (M, c2).

    Finite sets are complete. Infinite sets carry a lattice description and
    the representatives whose free coordinates have sup-norm <= bound.
    """
    if bound < 1:
        raise InvalidInputError(f"bound must be >= 1, got {bound}")
    if max_representatives < 1:
        raise InvalidInputError(f"max_representatives must be >= 1, got {max_representatives}")
    _check_sector(manifold, sector)

    derived = derived_data(J)
    beta = bockstein(manifold, derived.g)
    sectors = []
    for xi in h1_mod_elements(manifold, derived.g):
        for torsion in _torsion_solutions(J, derived.m_tilde, manifold, beta(xi)):
            sectors.append((xi, torsion))
    if not sectors:
        return SolutionSet(J, SolutionKind.EMPTY, response=SolveResponse.NO_LINEAR_SOLUTION)

    kernel = _free_kernel(J, derived.m_tilde, manifold.b2) if manifold.b2 else ()
    polar = _polar_matrix(J, manifold, kernel)
    free_part = _solve_free_part(J, manifold, sector.c2.coeff, kernel, polar, bound, max_representatives)
    if free_part.kind is SolutionKind.EMPTY:
        return SolutionSet(J, SolutionKind.EMPTY, response=free_part.response)

    labels = (
        _build_label(J, manifold, kernel, xi, torsion, y, alpha4)
        for (xi, torsion), (y, alpha4) in product(sectors, free_part.points)
    )
    if free_part.kind is SolutionKind.FINITE:
        ordered = tuple(sorted(labels, key=OrbitTypeLabel.sort_key))
        return SolutionSet(J, SolutionKind.FINITE, ordered, response=free_part.response)

    taken, truncated = _take(labels, max_representatives)
    xi, torsion = sectors[0]
    base_y, base_alpha4 = free_part.base_point
    family = SolutionFamily(
        J=J,
        alpha2_basis=kernel,
        alpha4_basis=free_part.alpha4_basis,
        alpha4_bezout=free_part.alpha4_bezout,
        constraint=free_part.constraint,
        modulus=free_part.modulus,
        quadratic_form=polar,
        target=sector.c2.coeff,
        base_label=_build_label(J, manifold, kernel, xi, torsion, base_y, base_alpha4),
        rank=free_part.rank,
    )
    return SolutionSet(
        J,
        SolutionKind.INFINITE,
        tuple(sorted(taken, key=OrbitTypeLabel.sort_key)),
        family,
        free_part.response,
        truncated or free_part.truncated,
    )


def instantiate_family(
    family: SolutionFamily,
    alpha2_coords: Sequence[int],
    alpha4_coords: Sequence[int],
    sector: BundleSector,
) -> Optional[OrbitTypeLabel]:
    """Label at lattice coordinates (y, z) of an infinite family; None if the degree-4 constraint fails.

    Torsion parts and xi are taken from the family's base label.
    """
    J = family.J
    if len(alpha2_coords) != len(family.alpha2_basis) or len(alpha4_coords) != len(family.alpha4_basis):
        raise CoordinateMismatchError(
            f"family of {J.display()} takes {len(family.alpha2_basis)} + {len(family.alpha4_basis)} coordinates"
        )
    base = family.base_label
    b2 = len(base.alpha2[0].free)
    y = tuple(alpha2_coords)
    value = evaluate(family.quadratic_form, y) if y else 0

    if family.modulus:
        remainder = sector.c2.coeff - value
        if remainder % family.modulus:
            return None
        particular = tuple((remainder // family.modulus) * u for u in family.alpha4_bezout)
        shift = combine(alpha4_coords, family.alpha4_basis, J.r)
        alpha4 = tuple(p + s for p, s in zip(particular, shift))
    else:
        if family.constraint == "quadric" and value != sector.c2.coeff:
            return None
        alpha4 = (0,) * J.r

    free = combine(y, family.alpha2_basis, J.r * b2)
    alpha2 = tuple(CohClass2(tuple(free[i * b2:(i + 1) * b2]), base.alpha2[i].torsion) for i in range(J.r))
    return OrbitTypeLabel(J, alpha2, tuple(CohClass4(v) for v in alpha4), base.xi)


def canonical_label(label: OrbitTypeLabel) -> OrbitTypeLabel:
    """Sort indices by descending (k_i, m_i), then by the encoded classes inside equal blocks."""
    J = label.J
    order = sorted(range(J.r), key=lambda i: ((-J.k[i], -J.m[i]), label.block_key(i)))
    return OrbitTypeLabel(
        canonicalize(J),
        tuple(label.alpha2[i] for i in order),
        tuple(label.alpha4[i] for i in order),
        label.xi,
    )


def _permute_family(family: SolutionFamily) -> SolutionFamily:
    J = family.J
    order = canonical_permutation(J)
    base = canonical_label(family.base_label)
    b2 = len(family.base_label.alpha2[0].free)

    def permute_blocks(vector: Sequence[int], width: int) -> tuple:
        return tuple(v for i in order for v in vector[i * width:(i + 1) * width])

    permuted = [permute_blocks(v, b2) for v in family.alpha2_basis]
    alpha2_basis = hermite_reduce(permuted)
    polar = _reexpress_polar(family.quadratic_form, permuted, alpha2_basis) if permuted else family.quadratic_form
    return replace(
        family,
        J=canonicalize(J),
        alpha2_basis=alpha2_basis,
        alpha4_basis=hermite_reduce([permute_blocks(v, 1) for v in family.alpha4_basis]),
        alpha4_bezout=permute_blocks(family.alpha4_bezout, 1) if family.alpha4_bezout else (),
        quadratic_form=polar,
        base_label=base,
    )


def _reexpress_polar(polar: tuple, old_basis: list, new_basis: tuple) -> tuple:
    """Polar matrix of the same form in new_basis; both bases span the same lattice."""
    old = Matrix(old_basis).T
    new = Matrix(list(new_basis)).T
    change, _ = old.gauss_jordan_solve(new)
    polar = change.T * Matrix(polar) * change
    return tuple(tuple(int(polar[a, b]) for b in range(polar.cols)) for a in range(polar.rows))


def quotient_classes(sols: Iterable[SolutionSet]) -> List[SolutionSet]:
    """Identify labels that differ by a permutation preserving (k_i, m_i); xi is untouched."""
    quotiented = []
    for solution in sols:
        labels = sorted({canonical_label(label) for label in solution.labels}, key=OrbitTypeLabel.sort_key)
        family = _permute_family(solution.family) if solution.family else None
        quotiented.append(replace(solution, J=canonicalize(solution.J), labels=tuple(labels), family=family))
    return quotiented


def classify(
    n: int,
    manifold: ManifoldModel,
    sector: BundleSector,
    bound: int,
    max_representatives: int = DEFAULT_MAX_REPRESENTATIVES,
    signatures: Optional[Iterable[HoweSignature]] = None,
) -> OrbitTypeCatalog:
    """Orbit type catalog of SU(n) bundles over M in the sector c2.

    Every admissible label is holonomy-induced, so nothing is filtered after
    solving. Signatures may be given in any order or representative; entries
    come back canonical and sorted. The generic stratum (n|1) is always present.
    """
    _check_sector(manifold, sector)
    if signatures is None:
        classes = enumerate_classes(n)
    else:
        classes = sorted({canonicalize(J) for J in signatures}, key=lambda J: (J.r, J.pairs))
        if any(J.n != n for J in classes):
            raise InvalidInputError(f"all signatures must belong to SU({n})")

    entries = []
    for J in classes:
        solutions = quotient_classes([solve_system(J, manifold, sector, bound, max_representatives)])[0]
        nodal = tuple(is_node(label, manifold) for label in solutions.labels) if manifold.is_surface else ()
        entries.append(CatalogEntry(J, derived_data(J), tuple(homotopy_groups(J)), solutions, nodal))
    return OrbitTypeCatalog(manifold, n, sector, tuple(entries))
