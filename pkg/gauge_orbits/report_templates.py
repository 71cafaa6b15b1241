import json
from typing import Any, Dict, List, Sequence

import pandas as pd

from gauge_orbits.data_types import (
    ClassificationReport,
    HoweSignature,
    NodeStratum,
    OrbitTypeCatalog,
    PostnikovDecomposition,
    Relation,
    RingPresentation,
    StratumRecord,
    subscript,
    superscript,
)
from gauge_orbits.howe import derived_data
from gauge_orbits.solve_responses import SolutionKind


def coefficient_ring_text(modulus: int) -> str:
    return "Z" if modulus == 0 else f"Z{subscript(modulus)}"


def _monomial_text(monomial: Sequence) -> str:
    return "".join(name + (superscript(exponent) if exponent > 1 else "") for name, exponent in monomial)


def polynomial_text(terms: Sequence) -> str:
    if not terms:
        return "0"
    text = ""
    for position, term in enumerate(terms):
        magnitude = abs(term.coeff)
        body = _monomial_text(term.monomial)
        piece = ("" if magnitude == 1 else str(magnitude)) + body if body else str(magnitude)
        if term.coeff < 0:
            text += "−" + piece
        else:
            text += ("+" if position else "") + piece
    return text


def relation_text(relation: Relation) -> str:
    lhs = polynomial_text(relation.lhs)
    if not relation.rhs:
        return lhs
    rhs = polynomial_text(relation.rhs)
    if len(relation.rhs) > 1:
        rhs = f"({rhs})"
    return f"{lhs} − {rhs}"


def presentation_text(presentation: RingPresentation) -> str:
    """e.g. Z₂[x,x₁₁]/(x² − x₁₁)"""
    generators = ",".join(generator.name for generator in presentation.generators)
    relations = ", ".join(relation_text(relation) for relation in presentation.relations)
    return f"{coefficient_ring_text(presentation.coefficient_modulus)}[{generators}]/({relations})"


def postnikov_text(decomposition: PostnikovDecomposition) -> str:
    factors = []
    if decomposition.km_zg1_count:
        factors.append(f"K(Z{subscript(decomposition.g)},1)")
    factors.extend(["K(Z,2)"] * decomposition.kz2_count)
    factors.extend(["K(Z,4)"] * decomposition.kz4_count)
    return " × ".join(factors) if factors else "pt"


def presentation_dict(presentation: RingPresentation) -> Dict[str, Any]:
    return {
        "coefficients": coefficient_ring_text(presentation.coefficient_modulus),
        "generators": [{"name": g.name, "degree": g.degree} for g in presentation.generators],
        "relations": [relation_text(relation) for relation in presentation.relations],
        "text": presentation_text(presentation),
    }


def bsuj_text(J: HoweSignature, presentation: RingPresentation, decomposition: PostnikovDecomposition) -> str:
    generators = ", ".join(f"{g.name} (deg {g.degree})" for g in presentation.generators)
    return "\n".join(
        [
            f"B SU{J.display()}",
            f"├ Postnikov level 5: {postnikov_text(decomposition)}",
            f"├ Generators: {generators}",
            f"└ Cohomology: {presentation_text(presentation)}",
        ]
    )


def bsuj_dict(J: HoweSignature, presentation: RingPresentation, decomposition: PostnikovDecomposition) -> Dict[str, Any]:
    return {
        "J": {"k": list(J.k), "m": list(J.m)},
        "postnikov": {
            "g": decomposition.g,
            "km_zg1_count": decomposition.km_zg1_count,
            "kz2_count": decomposition.kz2_count,
            "kz4_count": decomposition.kz4_count,
            "text": postnikov_text(decomposition),
        },
        "ring": presentation_dict(presentation),
    }


def signature_table(signatures: Sequence[HoweSignature]) -> str:
    rows = []
    for J in signatures:
        derived = derived_data(J)
        rows.append({"J": J.display(), "r": J.r, "g": derived.g, "r*": derived.r_star, "dim": derived.dim})
    return pd.DataFrame(rows, columns=["J", "r", "g", "r*", "dim"]).to_string(index=False)


def signature_rows(signatures: Sequence[HoweSignature]) -> List[Dict[str, Any]]:
    rows = []
    for J in signatures:
        derived = derived_data(J)
        rows.append(
            {"J": {"k": list(J.k), "m": list(J.m)}, "g": derived.g, "r_star": derived.r_star, "dim": derived.dim}
        )
    return rows


def node_rows(strata: Sequence[NodeStratum]) -> List[Dict[str, Any]]:
    return [
        {
            "xi": list(stratum.xi),
            "c": list(stratum.charge.c),
            "nodal": stratum.nodal,
            "coefficient": str(stratum.coefficient),
        }
        for stratum in strata
    ]


def node_table(J: HoweSignature, genus: int, strata: Sequence[NodeStratum]) -> str:
    rows = [
        {
            "xi": "(" + ",".join(map(str, stratum.xi)) + ")",
            "c": str(stratum.charge),
            "nodal": "yes" if stratum.nodal else "no",
            "coefficient/4π": str(stratum.coefficient),
        }
        for stratum in strata
    ]
    table = pd.DataFrame(rows, columns=["xi", "c", "nodal", "coefficient/4π"]).to_string(index=False)
    header = f"Node strata of SU{J.display()} on a genus {genus} surface (nodal: sufficient criterion)"
    return f"{header}\n{table}"


def _count_value(solutions) -> Any:
    if solutions.kind is SolutionKind.INFINITE:
        return f"infinite(rank={solutions.family_rank})"
    return len(solutions.labels)


def catalog_report(catalog: OrbitTypeCatalog, representatives: int) -> ClassificationReport:
    """Flatten a catalog; infinite families keep their first `representatives` labels."""
    strata = []
    counts = []
    for entry in catalog.entries:
        solutions = entry.solutions
        counts.append((str(entry.J), _count_value(solutions)))
        labels = solutions.labels
        if solutions.kind is SolutionKind.INFINITE:
            labels = labels[:representatives]
        pi = tuple(str(group) for group in entry.homotopy)
        for position, label in enumerate(labels):
            strata.append(
                StratumRecord(
                    J_k=entry.J.k,
                    J_m=entry.J.m,
                    alpha2=tuple((a.free, a.torsion) for a in label.alpha2),
                    alpha4=tuple(a.coeff for a in label.alpha4),
                    xi=label.xi.components,
                    kind=solutions.kind.value,
                    family_rank=solutions.family_rank,
                    dim=entry.derived.dim,
                    pi=pi,
                    nodal=entry.nodal[position] if entry.nodal else None,
                )
            )
    return ClassificationReport(
        manifold=catalog.manifold.name,
        n=catalog.n,
        c2=catalog.sector.c2.coeff,
        strata=tuple(strata),
        counts=tuple(counts),
    )


def report_to_dict(report: ClassificationReport) -> Dict[str, Any]:
    return {
        "manifold": report.manifold,
        "n": report.n,
        "c2": report.c2,
        "strata": [
            {
                "J": {"k": list(record.J_k), "m": list(record.J_m)},
                "alpha2": [{"free": list(free), "torsion": list(torsion)} for free, torsion in record.alpha2],
                "alpha4": list(record.alpha4),
                "xi": list(record.xi),
                "kind": record.kind,
                "family_rank": record.family_rank,
                "dim": record.dim,
                "pi": list(record.pi),
                "nodal": record.nodal,
            }
            for record in report.strata
        ],
        "counts": {key: value for key, value in report.counts},
    }


def report_from_dict(data: Dict[str, Any]) -> ClassificationReport:
    strata = tuple(
        StratumRecord(
            J_k=tuple(item["J"]["k"]),
            J_m=tuple(item["J"]["m"]),
            alpha2=tuple((tuple(a["free"]), tuple(a["torsion"])) for a in item["alpha2"]),
            alpha4=tuple(item["alpha4"]),
            xi=tuple(item["xi"]),
            kind=item["kind"],
            family_rank=item["family_rank"],
            dim=item["dim"],
            pi=tuple(item["pi"]),
            nodal=item["nodal"],
        )
        for item in data["strata"]
    )
    return ClassificationReport(
        manifold=data["manifold"],
        n=data["n"],
        c2=data["c2"],
        strata=strata,
        counts=tuple(data["counts"].items()),
    )


def to_json(data: Any) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2)


def _class_text(free: Sequence[int], torsion: Sequence[int]) -> str:
    return "(" + ",".join(map(str, tuple(free) + tuple(torsion))) + ")"


def report_text(report: ClassificationReport, catalog: OrbitTypeCatalog) -> str:
    lines = [
        f"Orbit types of SU({report.n}) bundles",
        f"├ Manifold: {report.manifold}",
        f"└ c2: {report.c2}",
    ]
    for entry, (key, count) in zip(catalog.entries, report.counts):
        records = [r for r in report.strata if r.J_k == entry.J.k and r.J_m == entry.J.m]
        pi = " | ".join(str(group) for group in entry.homotopy)
        lines.append("")
        lines.append(f"Stratum {entry.J.display()}")
        lines.append(f"├ dim SU(J): {entry.derived.dim}")
        lines.append(f"├ π₀..π₄: {pi}")
        lines.append(f"├ count: {count}")
        if entry.solutions.kind is SolutionKind.INFINITE:
            family = entry.solutions.family
            lines.append(f"├ family: {family.constraint} constraint, lattice rank {family.rank}")
            hidden = len(entry.solutions.labels) - len(records)
            if hidden > 0 or entry.solutions.truncated:
                lines.append(f"├ showing {len(records)} representatives, more exist")
        if not records:
            lines.append("└ labels: none")
            continue
        lines.append("└ labels:")
        for record in records:
            alpha2 = " ".join(_class_text(free, torsion) for free, torsion in record.alpha2)
            alpha4 = ",".join(map(str, record.alpha4))
            xi = "(" + ",".join(map(str, record.xi)) + ")"
            node = "" if record.nodal is None else (" nodal" if record.nodal else " nonnodal")
            lines.append(f"   α²: {alpha2} | α⁴: ({alpha4}) | ξ: {xi}{node}")
    return "\n".join(lines)
