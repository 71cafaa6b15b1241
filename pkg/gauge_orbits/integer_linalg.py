"""Integer lattice helpers on top of sympy's DomainMatrix normal forms."""
from itertools import product
from math import gcd
from typing import Iterator, Sequence

from sympy import Matrix, mod_inverse
from sympy.core.intfunc import igcdex
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import hermite_normal_form, smith_normal_decomp

from gauge_orbits.data_types import FinAbGroup


def _to_lists(matrix) -> list:
    return [[int(v) for v in row] for row in matrix.to_Matrix().tolist()]


def hermite_reduce(vectors: Sequence[Sequence[int]]) -> tuple:
    """Canonical basis of the lattice spanned by vectors.

    Each basis vector has a positive first nonzero entry, later vectors start
    strictly further right, and the result only depends on the lattice.
    """
    vectors = [list(map(int, v)) for v in vectors if any(v)]
    if not vectors:
        return ()
    size = len(vectors[0])
    # reverse the coordinates so the column HNF pivots on the first coordinate
    columns = [[vectors[j][size - 1 - i] for j in range(len(vectors))] for i in range(size)]
    hnf = _to_lists(hermite_normal_form(DM(columns, ZZ)))
    basis = []
    for j in range(len(hnf[0]) if hnf else 0):
        vector = tuple(hnf[size - 1 - t][j] for t in range(size))
        if any(vector):
            basis.append(vector)
    return tuple(sorted(basis, key=leading_index))


def leading_index(vector: Sequence[int]) -> int:
    return next(i for i, v in enumerate(vector) if v)


def kernel_basis(rows: Sequence[Sequence[int]], ncols: int) -> tuple:
    """Hermite-reduced basis of {x in Z^ncols : rows . x = 0}."""
    if ncols == 0:
        return ()
    rows = [list(map(int, row)) for row in rows if any(row)]
    if not rows:
        return tuple(tuple(int(i == j) for i in range(ncols)) for j in range(ncols))
    smf, _, right = smith_normal_decomp(DM(rows, ZZ))
    diagonal = _to_lists(smf)
    transform = _to_lists(right)
    zero_columns = [j for j in range(ncols) if all(row[j] == 0 for row in diagonal)]
    basis = [[transform[i][j] for i in range(ncols)] for j in zero_columns]
    for vector in basis:
        if any(sum(a * b for a, b in zip(row, vector)) for row in rows):
            raise ArithmeticError("Smith transform returned a non-kernel vector")
    return hermite_reduce(basis)


def group_from_cyclic_orders(orders: Sequence[int], free_rank: int = 0) -> FinAbGroup:
    """Normal form of Z^free_rank + Z_{o_1} + ... + Z_{o_s}."""
    orders = [int(o) for o in orders if o != 1]
    if not orders:
        return FinAbGroup(free_rank, ())
    factors = invariant_factors(Matrix.diag(*orders))
    return FinAbGroup(free_rank, tuple(int(d) for d in factors if int(d) > 1))


def solve_linear_congruence(a: int, b: int, modulus: int) -> list:
    """All x in [0, modulus) with a x = b mod modulus, ascending."""
    common = gcd(a, modulus)
    if b % common:
        return []
    step = modulus // common
    if step == 1:
        base = 0
    else:
        base = (b // common) * mod_inverse((a // common) % step, step) % step
    return [base + t * step for t in range(common)]


def bezout_vector(coefficients: Sequence[int]) -> tuple:
    """(h, u) with h = gcd(coefficients) and sum(u_i * c_i) == h."""
    h = int(coefficients[0])
    u = [1] + [0] * (len(coefficients) - 1)
    for index, value in enumerate(coefficients[1:], start=1):
        x, y, common = igcdex(h, int(value))
        u = [int(x) * ui for ui in u]
        u[index] = int(y)
        h = int(common)
    if h < 0:
        h, u = -h, [-ui for ui in u]
    return h, tuple(u)


def combine(coefficients: Sequence[int], basis: Sequence[Sequence[int]], size: int) -> tuple:
    total = [0] * size
    for coefficient, vector in zip(coefficients, basis):
        for i, v in enumerate(vector):
            total[i] += coefficient * v
    return tuple(total)


def shell_points(dimension: int, bound: int) -> Iterator[tuple]:
    """Integer points of [-bound, bound]^dimension ordered by sup-norm, then lexicographically."""
    if dimension == 0:
        yield ()
        return
    for radius in range(bound + 1):
        span = range(-radius, radius + 1)
        for point in product(span, repeat=dimension):
            if max(abs(v) for v in point) == radius:
                yield point
