import json
from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Iterator, Mapping, Optional, Sequence, Union

import numpy as np
from sympy import LeviCivita

from gauge_orbits.data_types import CohClass1ModG, CohClass2, CohClass4, FinAbGroup, ManifoldModel
from gauge_orbits.errors import CoordinateMismatchError, InvalidInputError, ModelSchemaError
from gauge_orbits.integer_linalg import group_from_cyclic_orders

MODEL_FIELDS = {
    "name": str,
    "dim": int,
    "b1": int,
    "h1_torsion": list,
    "b2": int,
    "intersection_form": list,
    "h4_rank": int,
}

# gamma_12, gamma_13, gamma_14, gamma_23, gamma_24, gamma_34
T4_BASIS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


def _t4_form() -> tuple:
    return tuple(tuple(int(LeviCivita(*(a + b))) for b in T4_BASIS) for a in T4_BASIS)


def _param(params, key: str, position: int) -> Optional[int]:
    if params is None:
        return None
    if isinstance(params, Mapping):
        value = params.get(key)
    elif isinstance(params, int):
        value = params if position == 0 else None
    else:
        value = params[position] if len(params) > position else None
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInputError(f"manifold parameter {key} must be an integer, got {value!r}")
    return value


def builtin_manifold(name: str, params: Union[Mapping, Sequence, int, None] = None) -> ManifoldModel:
    """Catalog models: S4, S2xS2, T4, LensP3xS1 (p >= 2) and Sigma (genus s >= 0)."""
    key = name.strip().lower().replace("×", "x").replace("_", "")
    if key == "s4":
        return ManifoldModel("S4", 4, 0, (), 0, (), 1)
    if key == "s2xs2":
        return ManifoldModel("S2xS2", 4, 0, (), 2, ((0, 1), (1, 0)), 1)
    if key == "t4":
        return ManifoldModel("T4", 4, 4, (), 6, _t4_form(), 1)
    if key in ("lens", "lensp3xs1", "lp3xs1"):
        p = _param(params, "p", 0)
        if p is None or p < 2:
            raise InvalidInputError(f"LensP3xS1 needs an integer parameter p >= 2, got {p}")
        return ManifoldModel(f"LensP3xS1(p={p})", 4, 1, (p,), 0, (), 1)
    if key in ("sigma", "surface"):
        s = _param(params, "s", 0)
        if s is None:
            s = 0
        if s < 0:
            raise InvalidInputError(f"Sigma needs a genus s >= 0, got {s}")
        return ManifoldModel(f"Sigma(s={s})", 2, 2 * s, (), 1, ((0,),), 0)
    raise InvalidInputError(f"unknown manifold '{name}', expected one of s4, s2xs2, t4, lens, sigma")


def load_manifold(document: Union[Mapping, str]) -> ManifoldModel:
    """Validate a model document (parsed JSON or JSON text) and build the model."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ModelSchemaError(f"model document is not valid JSON: {exc}") from exc
    if not isinstance(document, Mapping):
        raise ModelSchemaError("model document must be a JSON object")

    missing = [key for key in MODEL_FIELDS if key not in document]
    if missing:
        raise ModelSchemaError(f"model document is missing fields: {', '.join(missing)}")
    unknown = [key for key in document if key not in MODEL_FIELDS]
    if unknown:
        raise ModelSchemaError(f"model document has unknown fields: {', '.join(unknown)}")
    for key, expected in MODEL_FIELDS.items():
        value = document[key]
        if isinstance(value, bool) or not isinstance(value, expected):
            raise ModelSchemaError(f"field '{key}' must be of type {expected.__name__}")

    def is_int(value) -> bool:
        return isinstance(value, int) and not isinstance(value, bool)

    if not all(is_int(d) for d in document["h1_torsion"]):
        raise ModelSchemaError("field 'h1_torsion' must be a list of integers")
    form = document["intersection_form"]
    if not all(isinstance(row, list) and all(is_int(v) for v in row) for row in form):
        raise ModelSchemaError("field 'intersection_form' must be a list of integer rows")

    return ManifoldModel(
        name=document["name"],
        dim=document["dim"],
        b1=document["b1"],
        h1_torsion=tuple(document["h1_torsion"]),
        b2=document["b2"],
        intersection_form=tuple(tuple(row) for row in form),
        h4_rank=document["h4_rank"],
    )


def manifold_document(manifold: ManifoldModel) -> dict:
    return {
        "name": manifold.name,
        "dim": manifold.dim,
        "b1": manifold.b1,
        "h1_torsion": list(manifold.h1_torsion),
        "b2": manifold.b2,
        "intersection_form": [list(row) for row in manifold.intersection_form],
        "h4_rank": manifold.h4_rank,
    }


def h1_mod_orders(manifold: ManifoldModel, g: int) -> tuple:
    """Cyclic orders of the coordinates of H^1(M; Z_g): b1 copies of g, then gcd(d_j, g)."""
    if g < 1:
        raise InvalidInputError(f"coefficient modulus must be positive, got {g}")
    return (g,) * manifold.b1 + tuple(gcd(d, g) for d in manifold.h1_torsion)


def h1_mod(manifold: ManifoldModel, g: int) -> FinAbGroup:
    return group_from_cyclic_orders(h1_mod_orders(manifold, g))


def h1_mod_elements(manifold: ManifoldModel, g: int) -> Iterator[CohClass1ModG]:
    """All classes of H^1(M; Z_g) in lexicographic coordinate order."""
    for components in product(*(range(order) for order in h1_mod_orders(manifold, g))):
        yield CohClass1ModG(g, tuple(components))


def make_xi(manifold: ManifoldModel, g: int, components: Sequence[int] = ()) -> CohClass1ModG:
    orders = h1_mod_orders(manifold, g)
    components = tuple(components) if components else (0,) * len(orders)
    if len(components) != len(orders):
        raise CoordinateMismatchError(
            f"H^1({manifold.name}; Z_{g}) has {len(orders)} coordinates, got {len(components)}"
        )
    return CohClass1ModG(g, tuple(int(c) % order for c, order in zip(components, orders)))


def make_class2(manifold: ManifoldModel, free: Sequence[int] = (), torsion: Sequence[int] = ()) -> CohClass2:
    free = tuple(int(v) for v in free) if free else (0,) * manifold.b2
    torsion = tuple(int(v) for v in torsion) if torsion else (0,) * len(manifold.h1_torsion)
    if len(free) != manifold.b2 or len(torsion) != len(manifold.h1_torsion):
        raise CoordinateMismatchError(
            f"H^2({manifold.name}) has {manifold.b2} free and {len(manifold.h1_torsion)} torsion coordinates"
        )
    return CohClass2(free, tuple(v % d for v, d in zip(torsion, manifold.h1_torsion)))


def check_class2(manifold: ManifoldModel, x: CohClass2) -> None:
    if len(x.free) != manifold.b2 or len(x.torsion) != len(manifold.h1_torsion):
        raise CoordinateMismatchError(f"class {x} does not live in H^2({manifold.name})")
    if any(not 0 <= v < d for v, d in zip(x.torsion, manifold.h1_torsion)):
        raise CoordinateMismatchError(f"torsion coordinates of {x} are not reduced")


def check_xi(manifold: ManifoldModel, xi: CohClass1ModG) -> None:
    orders = h1_mod_orders(manifold, xi.g)
    if len(xi.components) != len(orders) or any(not 0 <= c < o for c, o in zip(xi.components, orders)):
        raise CoordinateMismatchError(f"class {xi} does not live in H^1({manifold.name}; Z_{xi.g})")


def add_classes(manifold: ManifoldModel, weighted: Sequence[tuple]) -> CohClass2:
    """sum(a * x for a, x in weighted) in H^2(M)."""
    free = np.zeros(manifold.b2, dtype=object)
    torsion = np.zeros(len(manifold.h1_torsion), dtype=object)
    for weight, x in weighted:
        check_class2(manifold, x)
        free = free + weight * np.array(x.free, dtype=object)
        torsion = torsion + weight * np.array(x.torsion, dtype=object)
    return make_class2(manifold, tuple(int(v) for v in free), tuple(int(v) for v in torsion))


@dataclass(frozen=True)
class BocksteinMap:
    """Connecting map H^1(M; Z_g) -> H^2(M; Z) of 0 -> Z -> Z -> Z_g -> 0.

    Zero on the free Z_g generators; the torsion generator of order gcd(d_j, g)
    goes to (d_j / gcd(d_j, g)) times the j-th torsion generator of H^2.
    """

    manifold: ManifoldModel
    g: int

    @property
    def multipliers(self) -> tuple:
        return tuple(d // gcd(d, self.g) for d in self.manifold.h1_torsion)

    def __call__(self, xi: CohClass1ModG) -> CohClass2:
        if xi.g != self.g:
            raise CoordinateMismatchError(f"Bockstein for Z_{self.g} applied to a Z_{xi.g} class")
        check_xi(self.manifold, xi)
        torsion_part = xi.components[self.manifold.b1:]
        return make_class2(
            self.manifold,
            (),
            tuple(c * multiplier for c, multiplier in zip(torsion_part, self.multipliers)),
        )


def bockstein(manifold: ManifoldModel, g: int) -> BocksteinMap:
    if g < 1:
        raise InvalidInputError(f"coefficient modulus must be positive, got {g}")
    return BocksteinMap(manifold, g)


def cup22(manifold: ManifoldModel, x: CohClass2, y: CohClass2) -> CohClass4:
    """Cup product H^2 x H^2 -> H^4 through the intersection form on free parts."""
    check_class2(manifold, x)
    check_class2(manifold, y)
    if manifold.h4_rank == 0 or manifold.b2 == 0:
        return CohClass4(0)
    form = np.array(manifold.intersection_form, dtype=object)
    value = np.array(x.free, dtype=object).dot(form).dot(np.array(y.free, dtype=object))
    return CohClass4(int(value))
