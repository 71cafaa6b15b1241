import os
from dataclasses import dataclass


@dataclass
class GaugeOrbitConfig:
    # Logging Configuration
    LOGS_DIR: str = os.getenv("GAUGE_ORBITS_LOGS_DIR", "logs")
    LOG_LEVEL: str = os.getenv("GAUGE_ORBITS_LOG_LEVEL", "WARNING")

    # Solver Configuration
    PARAMETERS_NAME: str = os.getenv("GAUGE_ORBITS_PARAMETERS", "default")
    PARAMETERS_DIR: str = "solver_parameters"

    # Model Configuration
    MODELS_DIR: str = os.getenv("GAUGE_ORBITS_MODELS_DIR", "manifold_models")

    def __post_init__(self):
        os.makedirs(self.LOGS_DIR, exist_ok=True)
