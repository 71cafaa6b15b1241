"""Kinematical node strata of Chern-Simons theory on a closed surface of genus s.

On a surface every alpha_i is c_i times the generator of H^2, the charges
satisfy sum m~_i c_i = 0, and a stratum is nodal whenever some c_i != 0.
That criterion is sufficient; nothing is claimed about its converse.
"""
from fractions import Fraction
from itertools import product
from typing import List, Sequence

from gauge_orbits.cohomology import builtin_manifold, h1_mod_elements
from gauge_orbits.data_types import ChargeVector, HoweSignature, ManifoldModel, NodeStratum, OrbitTypeLabel
from gauge_orbits.errors import CoordinateMismatchError, InvalidInputError, NotASurfaceError
from gauge_orbits.howe import derived_data
from gauge_orbits.integer_linalg import combine, kernel_basis


def charge_lattice(J: HoweSignature) -> List[ChargeVector]:
    """Hermite-reduced basis of G = {c in Z^r : sum m~_i c_i = 0}, rank r - 1."""
    m_tilde = derived_data(J).m_tilde
    return [ChargeVector(vector) for vector in kernel_basis([m_tilde], J.r)]


def node_coefficient(J: HoweSignature, charge: Sequence[int]) -> Fraction:
    """sum_j (m_j / k_j) c_j^2, the stratum's coefficient without the 4 pi prefactor."""
    if len(charge) != J.r:
        raise CoordinateMismatchError(f"{J.display()} takes {J.r} charges, got {len(charge)}")
    return sum((Fraction(mj, kj) * cj * cj for kj, mj, cj in zip(J.k, J.m, charge)), Fraction(0))


def coarsen_charges(J: HoweSignature, charge: Sequence[int]) -> tuple:
    """Relabel by k'_i = k_i m_i, m'_i = 1, c'_i = m_i c_i. The coefficient does not change."""
    if len(charge) != J.r:
        raise CoordinateMismatchError(f"{J.display()} takes {J.r} charges, got {len(charge)}")
    coarse = HoweSignature(tuple(ki * mi for ki, mi in zip(J.k, J.m)), (1,) * J.r)
    return coarse, ChargeVector(tuple(mi * ci for mi, ci in zip(J.m, charge)))


def enumerate_strata(J: HoweSignature, s: int, bound: int) -> List[NodeStratum]:
    """One row per (xi, c): xi over H^1(Sigma_s; Z_g), c over lattice coordinates in [-bound, bound].

    Both loops run in lexicographic coordinate order, xi outermost.
    """
    if s < 0:
        raise InvalidInputError(f"genus must be >= 0, got {s}")
    if bound < 0:
        raise InvalidInputError(f"bound must be >= 0, got {bound}")
    surface = builtin_manifold("sigma", {"s": s})
    basis = [vector.c for vector in charge_lattice(J)]
    charges = [
        combine(coords, basis, J.r) for coords in product(range(-bound, bound + 1), repeat=len(basis))
    ]
    strata = []
    for xi in h1_mod_elements(surface, derived_data(J).g):
        for charge in charges:
            strata.append(NodeStratum(xi.components, ChargeVector(charge), any(charge), node_coefficient(J, charge)))
    return strata


def is_node(label: OrbitTypeLabel, manifold: ManifoldModel) -> bool:
    if not manifold.is_surface:
        raise NotASurfaceError(f"node criterion needs a surface, {manifold.name} has dimension {manifold.dim}")
    return any(not alpha.is_zero for alpha in label.alpha2)
