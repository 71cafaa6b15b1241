from math import gcd
from typing import Iterator, List

from gauge_orbits.data_types import HomotopyGroupDescription, HoweSignature, SignatureDerived
from gauge_orbits.errors import InvalidInputError
from gauge_orbits.integer_linalg import group_from_cyclic_orders

# largest n whose enumeration still finishes in a couple of seconds
MAX_N_ORDERED = 14
MAX_N_CLASSES = 24
MAX_DEGREE = 4


def _check_n(n: int, max_n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidInputError(f"n must be an integer, got {n!r}")
    if n < 1 or n > max_n:
        raise InvalidInputError(f"n must lie in 1..{max_n}, got {n}")


def _ordered_pairs(remaining: int) -> Iterator[tuple]:
    if remaining == 0:
        yield ()
        return
    for k in range(1, remaining + 1):
        for m in range(1, remaining // k + 1):
            for rest in _ordered_pairs(remaining - k * m):
                yield ((k, m),) + rest


def enumerate_signatures(n: int, max_n: int = MAX_N_ORDERED) -> List[HoweSignature]:
    """Every ordered signature of SU(n), depth first on the remaining budget, k then m ascending."""
    _check_n(n, min(max_n, MAX_N_ORDERED))
    return [HoweSignature(tuple(k for k, _ in pairs), tuple(m for _, m in pairs)) for pairs in _ordered_pairs(n)]


def _nonincreasing_pairs(remaining: int, ceiling: tuple) -> Iterator[tuple]:
    if remaining == 0:
        yield ()
        return
    for k in range(min(remaining, ceiling[0]), 0, -1):
        for m in range(remaining // k, 0, -1):
            if (k, m) > ceiling:
                continue
            for rest in _nonincreasing_pairs(remaining - k * m, (k, m)):
                yield ((k, m),) + rest


def enumerate_classes(n: int, max_n: int = MAX_N_CLASSES) -> List[HoweSignature]:
    """Canonical representatives of signatures up to permutation, sorted by (r, pairs)."""
    _check_n(n, min(max_n, MAX_N_CLASSES))
    classes = [
        HoweSignature(tuple(k for k, _ in pairs), tuple(m for _, m in pairs))
        for pairs in _nonincreasing_pairs(n, (n, n))
    ]
    return sorted(classes, key=lambda J: (J.r, J.pairs))


def canonicalize(J: HoweSignature) -> HoweSignature:
    pairs = sorted(J.pairs, reverse=True)
    return HoweSignature(tuple(k for k, _ in pairs), tuple(m for _, m in pairs))


def canonical_permutation(J: HoweSignature) -> List[int]:
    """Index order taking J to canonicalize(J); ties keep their relative order."""
    return sorted(range(J.r), key=lambda i: (-J.k[i], -J.m[i]))


def derived_data(J: HoweSignature) -> SignatureDerived:
    g = gcd(*J.m)
    return SignatureDerived(
        g=g,
        m_tilde=tuple(mi // g for mi in J.m),
        r_star=sum(1 for ki in J.k if ki > 1),
        dim=sum(ki * ki for ki in J.k) - 1,
    )


def _unitary_homotopy(k: int, degree: int) -> tuple:
    """(free_rank, torsion orders) of pi_degree(U(k)) for 2 <= degree <= 4."""
    if degree == 2:
        return 0, ()
    if degree == 3:
        return (1, ()) if k >= 2 else (0, ())
    if degree == 4:
        return (0, (2,)) if k == 2 else (0, ())
    raise InvalidInputError(f"no unitary homotopy table entry for degree {degree}")


def homotopy_groups(J: HoweSignature) -> List[HomotopyGroupDescription]:
    g = derived_data(J).g
    groups = [
        HomotopyGroupDescription(0, 0, (g,) if g > 1 else ()),
        HomotopyGroupDescription(1, J.r - 1, ()),
    ]
    for degree in range(2, MAX_DEGREE + 1):
        free_rank = 0
        orders = []
        for ki in J.k:
            rank, torsion = _unitary_homotopy(ki, degree)
            free_rank += rank
            orders.extend(torsion)
        group = group_from_cyclic_orders(orders, free_rank)
        groups.append(HomotopyGroupDescription(degree, group.free_rank, group.invariant_factors))
    return groups
