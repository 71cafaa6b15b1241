from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from gauge_orbits.errors import InvalidInputError, ModelInvariantError
from gauge_orbits.solve_responses import SolutionKind, SolveResponse

SUBSCRIPTS = str.maketrans("0123456789-", "₀₁₂₃₄₅₆₇₈₉₋")
SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def subscript(value: int) -> str:
    return str(value).translate(SUBSCRIPTS)


def superscript(value: int) -> str:
    return str(value).translate(SUPERSCRIPTS)


@dataclass(frozen=True)
class SolverParameterConfig:
    default_bound: int
    max_n_ordered: int
    max_n_classes: int
    max_representatives: int


@dataclass(frozen=True)
class HoweSignature:
    """J = (k|m): block sizes k_i and multiplicities m_i with sum(k_i * m_i) = n."""

    k: tuple
    m: tuple

    def __post_init__(self):
        try:
            k = tuple(int(v) for v in self.k)
            m = tuple(int(v) for v in self.m)
        except (TypeError, ValueError) as exc:
            raise InvalidInputError(f"signature entries must be integers: {exc}") from exc
        if not k or len(k) != len(m):
            raise InvalidInputError(f"signature needs equal, nonempty k and m lists, got {k} and {m}")
        if any(v < 1 for v in k + m):
            raise InvalidInputError(f"signature entries must be positive, got ({k}|{m})")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "m", m)

    @classmethod
    def parse(cls, text: str) -> "HoweSignature":
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        if body.count("|") != 1:
            raise InvalidInputError(f"cannot parse signature '{text}', expected 'k1,k2|m1,m2'")
        left, right = body.split("|")
        try:
            k = tuple(int(part) for part in left.split(","))
            m = tuple(int(part) for part in right.split(","))
        except ValueError as exc:
            raise InvalidInputError(f"cannot parse signature '{text}': {exc}") from exc
        return cls(k, m)

    @property
    def n(self) -> int:
        return sum(ki * mi for ki, mi in zip(self.k, self.m))

    @property
    def r(self) -> int:
        return len(self.k)

    @property
    def pairs(self) -> tuple:
        return tuple(zip(self.k, self.m))

    def __str__(self) -> str:
        return f"{','.join(map(str, self.k))}|{','.join(map(str, self.m))}"

    def display(self) -> str:
        return f"({self})"


@dataclass(frozen=True)
class SignatureDerived:
    g: int
    m_tilde: tuple
    r_star: int
    dim: int


@dataclass(frozen=True)
class FinAbGroup:
    """Z^free_rank plus cyclic factors d_1 | d_2 | ... with every d_j >= 2."""

    free_rank: int = 0
    invariant_factors: tuple = ()

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        if self.free_rank < 0 or any(d < 2 for d in factors):
            raise InvalidInputError(f"bad abelian group data: Z^{self.free_rank} + {factors}")
        if any(b % a for a, b in zip(factors, factors[1:])):
            raise InvalidInputError(f"invariant factors must form a divisor chain: {factors}")
        object.__setattr__(self, "invariant_factors", factors)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def order(self) -> Optional[int]:
        if self.free_rank:
            return None
        order = 1
        for d in self.invariant_factors:
            order *= d
        return order

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"
        terms = []
        if self.free_rank == 1:
            terms.append("Z")
        elif self.free_rank > 1:
            terms.append(f"Z{superscript(self.free_rank)}")
        terms.extend(f"Z{subscript(d)}" for d in self.invariant_factors)
        return " ⊕ ".join(terms)


@dataclass(frozen=True)
class HomotopyGroupDescription:
    degree: int
    free_rank: int = 0
    torsion_factors: tuple = ()

    @property
    def group(self) -> FinAbGroup:
        return FinAbGroup(self.free_rank, self.torsion_factors)

    def __str__(self) -> str:
        return str(self.group)


@dataclass(frozen=True)
class ManifoldModel:
    """Integral cohomology of a closed oriented manifold, in fixed bases.

    H^1 = Z^b1 + torsion(h1_torsion); H^2 = Z^b2 + torsion(h1_torsion);
    H^4 = Z^h4_rank. intersection_form is the cup product H^2_free x H^2_free -> H^4.
    """

    name: str
    dim: int
    b1: int
    h1_torsion: tuple
    b2: int
    intersection_form: tuple
    h4_rank: int

    def __post_init__(self):
        object.__setattr__(self, "h1_torsion", tuple(int(d) for d in self.h1_torsion))
        object.__setattr__(
            self, "intersection_form", tuple(tuple(int(v) for v in row) for row in self.intersection_form)
        )
        if self.dim not in (2, 3, 4):
            raise ModelInvariantError(f"model '{self.name}': dim must be 2, 3 or 4, got {self.dim}")
        if self.b1 < 0 or self.b2 < 0:
            raise ModelInvariantError(f"model '{self.name}': negative Betti number")
        torsion = self.h1_torsion
        if any(d < 2 for d in torsion) or any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ModelInvariantError(f"model '{self.name}': torsion {torsion} is not a divisor chain of factors >= 2")
        form = self.intersection_form
        if len(form) != self.b2 or any(len(row) != self.b2 for row in form):
            raise ModelInvariantError(f"model '{self.name}': intersection form must be {self.b2}x{self.b2}")
        if any(form[a][b] != form[b][a] for a in range(self.b2) for b in range(self.b2)):
            raise ModelInvariantError(f"model '{self.name}': intersection form is not symmetric")
        if self.h4_rank not in (0, 1):
            raise ModelInvariantError(f"model '{self.name}': h4_rank must be 0 or 1")
        if self.dim >= 4 and self.h4_rank != 1:
            raise ModelInvariantError(f"model '{self.name}': dim >= 4 needs h4_rank 1")
        if self.dim < 4 and self.h4_rank != 0:
            raise ModelInvariantError(f"model '{self.name}': dim < 4 has no H^4")
        if self.h4_rank == 0 and any(v for row in form for v in row):
            raise ModelInvariantError(f"model '{self.name}': nonzero intersection form without H^4")

    @property
    def is_surface(self) -> bool:
        return self.dim == 2

    @property
    def h2_group(self) -> FinAbGroup:
        return FinAbGroup(self.b2, self.h1_torsion)


@dataclass(frozen=True)
class CohClass2:
    free: tuple
    torsion: tuple = ()

    def encode(self) -> tuple:
        return tuple(self.free) + tuple(self.torsion)

    @property
    def is_zero(self) -> bool:
        return not any(self.encode())

    def __str__(self) -> str:
        return f"({','.join(map(str, self.encode()))})" if self.encode() else "0"


@dataclass(frozen=True)
class CohClass4:
    coeff: int = 0

    def __str__(self) -> str:
        return str(self.coeff)


@dataclass(frozen=True)
class CohClass1ModG:
    """Class in H^1(M; Z_g): b1 coordinates mod g, then one per torsion factor mod gcd(d_j, g)."""

    g: int
    components: tuple = ()

    @property
    def is_zero(self) -> bool:
        return not any(self.components)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.components))})" if self.components else "0"


@dataclass(frozen=True)
class BundleSector:
    c2: CohClass4

    @classmethod
    def from_int(cls, c2: int) -> "BundleSector":
        return cls(CohClass4(int(c2)))


@dataclass(frozen=True)
class OrbitTypeLabel:
    J: HoweSignature
    alpha2: tuple
    alpha4: tuple
    xi: CohClass1ModG

    def __post_init__(self):
        if len(self.alpha2) != self.J.r or len(self.alpha4) != self.J.r:
            raise InvalidInputError(f"label for {self.J.display()} needs {self.J.r} classes per degree")

    def block_key(self, i: int) -> tuple:
        return self.alpha2[i].encode() + (self.alpha4[i].coeff,)

    def sort_key(self) -> tuple:
        return (
            self.J.k,
            self.J.m,
            tuple(a.encode() for a in self.alpha2),
            tuple(a.coeff for a in self.alpha4),
            self.xi.components,
        )


@dataclass(frozen=True)
class SolutionFamily:
    """Lattice description of an infinite solution set.

    alpha2_basis spans the free part of (alpha_1, ..., alpha_r) in coordinates
    i * b2 + t. constraint is "quadric" (Q(y) == target), "congruence"
    (Q(y) == target mod modulus, then alpha^4 = particular + span(alpha4_basis))
    or "none". quadratic_form holds 2G, so Q(y) = y^T (2G) y / 2.
    """

    J: HoweSignature
    alpha2_basis: tuple
    alpha4_basis: tuple
    alpha4_bezout: tuple
    constraint: str
    modulus: int
    quadratic_form: tuple
    target: int
    base_label: OrbitTypeLabel
    rank: int


@dataclass(frozen=True)
class SolutionSet:
    J: HoweSignature
    kind: SolutionKind
    labels: tuple = ()
    family: Optional[SolutionFamily] = None
    response: SolveResponse = SolveResponse.SOLVED
    truncated: bool = False

    def __post_init__(self):
        if self.kind is SolutionKind.INFINITE and (self.family is None or self.family.rank < 1):
            raise ValueError("infinite solution sets carry a family of rank >= 1")
        if self.kind is not SolutionKind.INFINITE and self.family is not None:
            raise ValueError("only infinite solution sets carry a family")
        if self.kind is SolutionKind.EMPTY and self.labels:
            raise ValueError("empty solution sets have no labels")

    @property
    def family_rank(self) -> Optional[int]:
        return self.family.rank if self.family else None


@dataclass(frozen=True)
class CatalogEntry:
    J: HoweSignature
    derived: SignatureDerived
    homotopy: tuple
    solutions: SolutionSet
    nodal: tuple = ()


@dataclass(frozen=True)
class OrbitTypeCatalog:
    manifold: ManifoldModel
    n: int
    sector: BundleSector
    entries: tuple

    @property
    def strata(self) -> tuple:
        return tuple(label for entry in self.entries for label in entry.solutions.labels)


@dataclass(frozen=True)
class PostnikovDecomposition:
    """(B SU J)_5 = K(Z_g,1) x K(Z,2)^kz2_count x K(Z,4)^kz4_count; the first factor is absent when g == 1."""

    g: int
    kz2_count: int
    kz4_count: int

    @property
    def km_zg1_count(self) -> int:
        return 1 if self.g > 1 else 0


@dataclass(frozen=True)
class Generator:
    symbol: str
    indices: tuple
    degree: int

    @property
    def name(self) -> str:
        return self.symbol + "".join(subscript(i) for i in self.indices)


@dataclass(frozen=True)
class Term:
    """coeff times a monomial; monomial is a tuple of (generator, exponent)."""

    coeff: int
    monomial: tuple


@dataclass(frozen=True)
class Relation:
    lhs: tuple
    rhs: tuple = ()


@dataclass(frozen=True)
class RingPresentation:
    """coefficient_modulus 0 means Z, otherwise Z_modulus."""

    coefficient_modulus: int
    generators: tuple
    relations: tuple


@dataclass(frozen=True)
class ChargeVector:
    c: tuple

    def __str__(self) -> str:
        return f"({','.join(map(str, self.c))})"


@dataclass(frozen=True)
class NodeStratum:
    xi: tuple
    charge: ChargeVector
    nodal: bool
    coefficient: Fraction


@dataclass(frozen=True)
class StratumRecord:
    J_k: tuple
    J_m: tuple
    alpha2: tuple
    alpha4: tuple
    xi: tuple
    kind: str
    family_rank: Optional[int]
    dim: int
    pi: tuple
    nodal: Optional[bool]


@dataclass(frozen=True)
class ClassificationReport:
    manifold: str
    n: int
    c2: int
    strata: tuple = ()
    counts: tuple = field(default_factory=tuple)
