import math
from functools import lru_cache
from typing import Optional

from pydantic import BaseSettings, PositiveInt, confloat, conint, validator

from tightpaths.exceptions import InvalidThreshold

LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")


class Settings(BaseSettings):
    """
    Library-wide defaults, overridable through `TIGHTPATHS_*` environment variables.

    :param tolerance: Slack added to the threshold in every cost comparison.
    :param path_cap: Maximum number of paths the oracle may enumerate.
    :param log_level: Level used by the command-line front end.
    :param bench_repetitions: Default number of timed runs per benchmark cell.
    :param bench_points: Default number of thresholds in a benchmark sweep.
    """

    tolerance: confloat(ge=0) = 0.0  # type: ignore
    path_cap: PositiveInt = 10_000_000
    log_level: str = "WARNING"
    bench_repetitions: PositiveInt = 5
    bench_points: conint(ge=2) = 25  # type: ignore

    class Config:
        env_prefix = "TIGHTPATHS_"

    @validator("tolerance")
    def finite_tolerance(cls, value: float) -> float:
        if math.isinf(value):
            raise ValueError("tolerance must be finite")
        return value

    @validator("log_level")
    def known_log_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"unknown log level {value!r}")
        return level


@lru_cache()
def get_settings() -> Settings:
    return Settings()


def resolve_tolerance(tolerance: Optional[float]) -> float:
    if tolerance is None:
        return get_settings().tolerance
    if not 0 <= tolerance < math.inf:
        raise ValueError("tolerance must be nonnegative and finite")
    return tolerance


def check_threshold(gamma: float) -> float:
    """Reject thresholds the algorithms are not defined for."""
    if math.isnan(gamma):
        raise InvalidThreshold(gamma, "not a number")
    if gamma < 0:
        raise InvalidThreshold(gamma, "must be nonnegative")
    if math.isinf(gamma):
        raise InvalidThreshold(gamma, "must be finite")
    return float(gamma)
