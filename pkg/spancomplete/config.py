"""Run configuration shared by sweeps and the command line."""

import os
from typing import Literal, Self

from pydantic import BaseModel, Field

ENV_PREFIX = "SPANCOMPLETE_"


class RunConfig(BaseModel):
    """Settings for randomized runs, truncation and parallelism.

    Attributes
    ----------
    seed : int
        Seed for every randomized run.
    samples : int
        Number of random samples drawn by property runs.
    dim : int
        Truncation bound used by simplicial set classifiers.
    n_jobs : int
        Worker count handed to joblib; -1 uses all cores.
    symmetric_metrics : bool
        Whether pseudometrics must be symmetric.
    log_level : str
        Threshold for console logging.

    """

    seed: int = 0
    samples: int = Field(100, gt=0)
    dim: int = Field(4, ge=0)
    n_jobs: int = -1
    symmetric_metrics: bool = True
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"

    @classmethod
    def from_env(cls, **overrides: object) -> Self:
        """Build a configuration from environment variables.

        Parameters
        ----------
        **overrides
            Values that win over the environment (``None`` is ignored).

        Returns
        -------
        RunConfig
            Validated configuration.

        """
        values: dict[str, object] = {}
        for name in ("seed", "samples", "dim", "n_jobs", "log_level"):
            raw = os.environ.get(ENV_PREFIX + name.upper())
            if raw is not None:
                values[name] = raw
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls.model_validate(values)
