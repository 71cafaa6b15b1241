"""Integer points on Q(y) = target for an integral quadratic form Q.

Forms are passed by their even polar matrix P = 2G, so Q(y) = y^T P y / 2 and
every entry of P is an integer.
"""
from dataclasses import dataclass
from itertools import product
from math import gcd, isqrt
from typing import Iterator, Optional, Sequence

from sympy import Matrix, divisors

from gauge_orbits.integer_linalg import shell_points
from gauge_orbits.solve_responses import SolutionKind, SolveResponse


@dataclass(frozen=True)
class QuadricSolution:
    kind: SolutionKind
    points: tuple
    response: SolveResponse = SolveResponse.SOLVED
    truncated: bool = False
    exact: bool = True


def evaluate(polar: Sequence[Sequence[int]], y: Sequence[int]) -> int:
    total = 0
    for a, row in enumerate(polar):
        for b, value in enumerate(row):
            total += value * y[a] * y[b]
    return total // 2


def content(polar: Sequence[Sequence[int]]) -> int:
    """gcd of the coefficients of Q as a polynomial; 0 for the zero form."""
    common = 0
    for a, row in enumerate(polar):
        common = gcd(common, row[a] // 2)
        for b in range(a + 1, len(row)):
            common = gcd(common, row[b])
    return common


def _last_coordinate(polar, head: tuple, target: int, bound: int) -> list:
    """Integers t with |t| <= bound and Q(head, t) == target."""
    last = len(polar) - 1
    a = polar[last][last] // 2
    b = sum(polar[i][last] * head[i] for i in range(last))
    c = evaluate([row[:last] for row in polar[:last]], head) - target
    if a == 0:
        if b == 0:
            return list(range(-bound, bound + 1)) if c == 0 else []
        if c % b:
            return []
        t = -c // b
        return [t] if abs(t) <= bound else []
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    root = isqrt(disc)
    if root * root != disc:
        return []
    found = set()
    for numerator in (-b - root, -b + root):
        if numerator % (2 * a) == 0 and abs(numerator // (2 * a)) <= bound:
            found.add(numerator // (2 * a))
    return sorted(found)


def bounded_points(polar, target: int, bound: int) -> Iterator[tuple]:
    """Solutions with sup-norm <= bound; leading coordinates by shell, last one solved exactly."""
    size = len(polar)
    if size == 0:
        if target == 0:
            yield ()
        return
    for radius in range(bound + 1):
        for head in product(range(-radius, radius + 1), repeat=size - 1):
            for t in _last_coordinate(polar, head, target, radius):
                point = head + (t,)
                if max(abs(v) for v in point) == radius:
                    yield point


def _take(points: Iterator[tuple], limit: int) -> tuple:
    taken = []
    for point in points:
        if len(taken) == limit:
            return tuple(taken), True
        taken.append(point)
    return tuple(taken), False


def _definiteness(polar) -> Optional[int]:
    matrix = Matrix(polar)
    if matrix.is_positive_definite:
        return 1
    if matrix.is_negative_definite:
        return -1
    return None


def _ellipsoid_points(polar, target: int) -> tuple:
    """All solutions of a positive definite Q(y) == target >= 0."""
    if target < 0:
        return ()
    inverse = Matrix(polar).inv()
    radii = []
    for a in range(len(polar)):
        # |y_a| <= sqrt(2 * target * (P^-1)_aa)
        bound_sq = 2 * target * inverse[a, a]
        p, q = int(bound_sq.p), int(bound_sq.q)
        radii.append(isqrt(p * q) // q)
    spans = [range(-radius, radius + 1) for radius in radii]
    return tuple(point for point in product(*spans) if evaluate(polar, point) == target)


def _split_binary_points(a: int, b: int, c: int, s: int, target: int) -> tuple:
    """All solutions of a x^2 + b x y + c y^2 == target != 0 when b^2 - 4ac == s^2 > 0."""
    found = set()
    if a != 0:
        # (2a x + (b - s) y)(2a x + (b + s) y) == 4 a target
        product_value = 4 * a * target
        for d in divisors(abs(product_value)):
            for u in (d, -d):
                w = product_value // u
                if (w - u) % (2 * s):
                    continue
                y = (w - u) // (2 * s)
                numerator = u - (b - s) * y
                if numerator % (2 * a) == 0:
                    found.add((numerator // (2 * a), y))
    elif c != 0:
        # y (b x + c y) == target with b != 0
        for d in divisors(abs(target)):
            for y in (d, -d):
                rest = target // y - c * y
                if rest % b == 0:
                    found.add((rest // b, y))
    else:
        # b x y == target
        if target % b == 0:
            for d in divisors(abs(target // b)):
                for x in (d, -d):
                    found.add((x, target // b // x))
    return tuple(sorted(found, key=lambda p: (max(abs(p[0]), abs(p[1])), p)))


def solve_quadric(polar: Sequence[Sequence[int]], target: int, bound: int, limit: int) -> QuadricSolution:
    """Decide whether {y : Q(y) == target} is empty, finite or infinite and list points.

    Finite answers are complete. Infinite answers list the points of sup-norm
    <= bound, at most limit of them. Indefinite forms of rank >= 3 and singular
    forms are only decided by the witnesses found within the bound; the
    response says so when none turned up.
    """
    polar = [list(map(int, row)) for row in polar]
    size = len(polar)
    if size == 0:
        if target == 0:
            return QuadricSolution(SolutionKind.FINITE, ((),))
        return QuadricSolution(SolutionKind.EMPTY, (), SolveResponse.NO_QUADRIC_SOLUTION)

    common = content(polar)
    if common == 0:
        if target != 0:
            return QuadricSolution(SolutionKind.EMPTY, (), SolveResponse.NO_QUADRIC_SOLUTION)
        points, truncated = _take(shell_points(size, bound), limit)
        return QuadricSolution(SolutionKind.INFINITE, points, truncated=truncated)
    if target % common:
        return QuadricSolution(SolutionKind.EMPTY, (), SolveResponse.NO_QUADRIC_SOLUTION)

    sign = _definiteness(polar)
    if sign is not None:
        oriented = [[sign * v for v in row] for row in polar]
        points = _ellipsoid_points(oriented, sign * target)
        if not points:
            return QuadricSolution(SolutionKind.EMPTY, (), SolveResponse.NO_QUADRIC_SOLUTION)
        ordered = tuple(sorted(points, key=lambda p: (max(abs(v) for v in p), p)))
        return QuadricSolution(SolutionKind.FINITE, ordered)

    singular = Matrix(polar).det() == 0
    if size == 2 and not singular:
        a, b, c = polar[0][0] // 2, polar[0][1], polar[1][1] // 2
        discriminant = b * b - 4 * a * c
        s = isqrt(discriminant)
        if s * s == discriminant:
            if target != 0:
                points = _split_binary_points(a, b, c, s, target)
                if not points:
                    return QuadricSolution(SolutionKind.EMPTY, (), SolveResponse.NO_QUADRIC_SOLUTION)
                return QuadricSolution(SolutionKind.FINITE, points)
            # target 0 splits into two rational lines through the origin
            points, truncated = _take(bounded_points(polar, 0, bound), limit)
            return QuadricSolution(SolutionKind.INFINITE, points, truncated=truncated)
        if target == 0:
            return QuadricSolution(SolutionKind.FINITE, ((0, 0),))

    return _witness_search(polar, target, bound, limit)


def _witness_search(polar, target: int, bound: int, limit: int) -> QuadricSolution:
    points, truncated = _take(bounded_points(polar, target, bound), limit)
    zero = tuple(0 for _ in polar)
    nontrivial = [p for p in points if p != zero]
    if nontrivial:
        return QuadricSolution(SolutionKind.INFINITE, points, truncated=truncated)
    if target == 0:
        return QuadricSolution(
            SolutionKind.FINITE, (zero,), SolveResponse.NO_WITNESS_WITHIN_BOUND, exact=False
        )
    return QuadricSolution(SolutionKind.EMPTY, (), SolveResponse.NO_WITNESS_WITHIN_BOUND, exact=False)
