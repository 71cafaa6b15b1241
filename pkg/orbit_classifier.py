import os
from typing import List, Optional, Tuple

import utils
from config import GaugeOrbitConfig
from gauge_orbits import char_classes, classifying_space, cs_nodes, howe, report_templates
from gauge_orbits.cohomology import builtin_manifold, load_manifold
from gauge_orbits.data_types import (
    BundleSector,
    ClassificationReport,
    HoweSignature,
    ManifoldModel,
    NodeStratum,
    OrbitTypeCatalog,
    PostnikovDecomposition,
    RingPresentation,
    SolverParameterConfig,
)
from gauge_orbits.errors import InvalidInputError
from gauge_orbits.logger import Logger
from gauge_orbits.solve_responses import SolutionKind, SolveResponse


class OrbitTypeClassifier:
    def __init__(self, config: GaugeOrbitConfig, logger: Optional[Logger] = None) -> None:
        self.config = config
        self.parameters: SolverParameterConfig = utils.load_solver_parameter_config(
            config.PARAMETERS_NAME, config.PARAMETERS_DIR
        )
        self.logger = logger or Logger("orbit_classifier", config.LOGS_DIR, config.LOG_LEVEL)

    def resolve_manifold(self, name: Optional[str], params=None, model_file: Optional[str] = None) -> ManifoldModel:
        """A model file wins; otherwise the catalog, then <MODELS_DIR>/<name>.json."""
        if model_file:
            self.logger.info(f"Loading manifold model from {model_file}")
            return load_manifold(utils.load_model_document(model_file))
        if not name:
            raise InvalidInputError("either --manifold or --model-file is required")
        try:
            return builtin_manifold(name, params)
        except InvalidInputError:
            candidate = os.path.join(self.config.MODELS_DIR, f"{name.lower()}.json")
            if params is None and os.path.exists(candidate):
                self.logger.info(f"Using model file {candidate} for '{name}'")
                return load_manifold(utils.load_model_document(candidate))
            raise

    def signatures(self, n: int, classes: bool) -> List[HoweSignature]:
        if classes:
            return howe.enumerate_classes(n, self.parameters.max_n_classes)
        return howe.enumerate_signatures(n, self.parameters.max_n_ordered)

    def classify(self, n: int, manifold: ManifoldModel, c2: int, bound: Optional[int] = None) -> Tuple[OrbitTypeCatalog, ClassificationReport]:
        bound = self.parameters.default_bound if bound is None else bound
        self.logger.info(f"Classifying SU({n}) over {manifold.name}, c2={c2}, bound={bound}")
        signatures = howe.enumerate_classes(n, self.parameters.max_n_classes)
        catalog = char_classes.classify(
            n,
            manifold,
            BundleSector.from_int(c2),
            bound,
            self.parameters.max_representatives,
            signatures,
        )

        solve_report = {}
        for entry in catalog.entries:
            solutions = entry.solutions
            self.logger.info(
                f"{entry.J.display()}: {solutions.kind.value}, {len(solutions.labels)} labels, {solutions.response.value}"
            )
            if solutions.response is SolveResponse.NO_WITNESS_WITHIN_BOUND:
                self.logger.warning(
                    f"{entry.J.display()}: result depends on the search bound {bound}, no witness found inside it"
                )
            if solutions.kind is SolutionKind.INFINITE and solutions.truncated:
                self.logger.warning(
                    f"{entry.J.display()}: representatives capped at {self.parameters.max_representatives}"
                )
            resp_key = solutions.response.value
            solve_report[resp_key] = solve_report.get(resp_key, 0) + 1
        self.logger.log_response_summary("Solve report", solve_report)

        return catalog, report_templates.catalog_report(catalog, bound)

    def nodes(self, J: HoweSignature, genus: int, bound: Optional[int] = None) -> List[NodeStratum]:
        bound = self.parameters.default_bound if bound is None else bound
        strata = cs_nodes.enumerate_strata(J, genus, bound)
        self.logger.info(
            f"{J.display()} on genus {genus}: {len(strata)} strata, {sum(s.nodal for s in strata)} nodal"
        )
        return strata

    def bsuj(self, J: HoweSignature, coefficients: str) -> Tuple[RingPresentation, PostnikovDecomposition]:
        if coefficients == "z":
            presentation = classifying_space.integral_ring(J)
        elif coefficients == "zg":
            presentation = classifying_space.modg_ring(J)
        else:
            raise InvalidInputError(f"coefficients must be 'z' or 'zg', got '{coefficients}'")
        return presentation, classifying_space.postnikov5(J)
