from gauge_orbits.data_types import (
    FinAbGroup,
    Generator,
    HoweSignature,
    PostnikovDecomposition,
    Relation,
    RingPresentation,
    Term,
    subscript,
)
from gauge_orbits.errors import InvalidInputError
from gauge_orbits.howe import derived_data

K_Z_2 = "K(Z,2)"
K_ZG_1 = "K(Z_g,1)"


def postnikov5(J: HoweSignature) -> PostnikovDecomposition:
    derived = derived_data(J)
    return PostnikovDecomposition(g=derived.g, kz2_count=J.r - 1, kz4_count=derived.r_star)


def _chern_generators(J: HoweSignature) -> tuple:
    return tuple(Generator("x", (i + 1, j), 2 * j) for i, ki in enumerate(J.k) for j in range(1, ki + 1))


def _degree2_sum(J: HoweSignature, weights) -> tuple:
    return tuple(Term(w, ((f"x{subscript(i + 1)}{subscript(1)}", 1),)) for i, w in enumerate(weights) if w)


def integral_ring(J: HoweSignature) -> RingPresentation:
    """Z[x_ij : deg x_ij = 2j] modulo m_1 x_11 + ... + m_r x_r1."""
    return RingPresentation(0, _chern_generators(J), (Relation(_degree2_sum(J, J.m)),))


def modg_ring(J: HoweSignature) -> RingPresentation:
    """H*(B SU J; Z_g): one degree-1 generator x on top of the x_ij.

    x^2 = 0 for odd g and x^2 = l (m~_1 x_11 + ... + m~_r x_r1) for g = 2l.
    With g == 1 this is the integral presentation over the zero ring.
    """
    derived = derived_data(J)
    g = derived.g
    if g == 1:
        return RingPresentation(1, _chern_generators(J), (Relation(_degree2_sum(J, J.m)),))
    generators = (Generator("x", (), 1),) + _chern_generators(J)
    square = (Term(1, (("x", 2),)),)
    if g % 2:
        rhs = ()
    else:
        rhs = _degree2_sum(J, [(g // 2) * mt % g for mt in derived.m_tilde])
    return RingPresentation(g, generators, (Relation(square, rhs),))


def em_cohomology(space: str, degree: int, g: int = 0) -> FinAbGroup:
    """H^degree(K(Z,2); Z) or H^degree(K(Z_g,1); Z)."""
    if degree < 0:
        raise InvalidInputError(f"degree must be >= 0, got {degree}")
    if space == K_Z_2:
        return FinAbGroup(1) if degree % 2 == 0 else FinAbGroup()
    if space == K_ZG_1:
        if g < 2:
            raise InvalidInputError(f"K(Z_g,1) needs g >= 2, got {g}")
        if degree == 0:
            return FinAbGroup(1)
        return FinAbGroup(0, (g,)) if degree % 2 == 0 else FinAbGroup()
    raise InvalidInputError(f"unknown Eilenberg-MacLane space '{space}', expected {K_Z_2} or {K_ZG_1}")
