import json
import os
from typing import Any, Dict

from gauge_orbits import howe
from gauge_orbits.data_types import SolverParameterConfig
from gauge_orbits.errors import InvalidInputError, ModelSchemaError

DEFAULT_SOLVER_PARAMETERS = {
    "default_bound": 10,
    "max_n_ordered": howe.MAX_N_ORDERED,
    "max_n_classes": howe.MAX_N_CLASSES,
    "max_representatives": 200,
}


def load_solver_parameter_config(name: str, parameters_dir: str = "solver_parameters") -> SolverParameterConfig:
    """Load solver parameters from JSON, writing the defaults out when the file is missing."""
    config_path = os.path.join(parameters_dir, f"{name}.json")

    if os.path.exists(config_path):
        try:
            data = load_json(config_path)
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidInputError(f"cannot read solver parameters {config_path}: {exc}") from exc
        unknown = set(data) - set(DEFAULT_SOLVER_PARAMETERS)
        if unknown:
            raise InvalidInputError(f"unknown solver parameters in {config_path}: {', '.join(sorted(unknown))}")
        parameters = SolverParameterConfig(**{**DEFAULT_SOLVER_PARAMETERS, **data})
        if parameters.max_n_ordered > howe.MAX_N_ORDERED or parameters.max_n_classes > howe.MAX_N_CLASSES:
            raise InvalidInputError(
                f"{config_path}: enumeration limits cannot exceed "
                f"max_n_ordered={howe.MAX_N_ORDERED} and max_n_classes={howe.MAX_N_CLASSES}"
            )
        return parameters

    save_json(DEFAULT_SOLVER_PARAMETERS, config_path)
    return SolverParameterConfig(**DEFAULT_SOLVER_PARAMETERS)


def load_json(file_path: str) -> Any:
    with open(file_path, "r", encoding="utf-8") as f:
        return json.load(f)


def load_model_document(file_path: str) -> Dict[str, Any]:
    """Read a manifold model file; the document itself is validated by cohomology.load_manifold."""
    try:
        return load_json(file_path)
    except FileNotFoundError as exc:
        raise InvalidInputError(f"model file not found: {file_path}") from exc
    except json.JSONDecodeError as exc:
        raise ModelSchemaError(f"model file {file_path} is not valid JSON: {exc}") from exc


def save_json(data: Any, file_path: str) -> None:
    """Save data to JSON file."""
    directory = os.path.dirname(file_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(file_path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, ensure_ascii=False)
