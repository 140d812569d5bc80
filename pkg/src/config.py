"""Runtime settings, read from the environment and an optional ``.env``."""

import logging
from functools import lru_cache

from pydantic import BaseSettings, Field, validator

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class Settings(BaseSettings):
    """Toolkit settings.

    Every field can be overridden with an ``EARS_``-prefixed environment
    variable, e.g. ``EARS_THREADS=4``.
    """

    log_level: str = "WARNING"
    threads: int = Field(1, ge=1)
    seed: int = 0
    zeta_max_n: int = Field(14, ge=3)
    exhaustive_max_edges: int = Field(20, ge=1)
    rainbow_max_colors: int = Field(18, ge=1)
    exact_rc_max_edges: int = Field(8, ge=1)

    @validator("log_level")
    def _known_level(cls, value: str) -> str:  # noqa: N805
        level = value.upper()
        if level not in logging._nameToLevel:  # pylint: disable=protected-access
            raise ValueError(f"unknown log level {value}")
        return level

    class Config:
        env_prefix = "EARS_"
        env_file = ".env"
        env_file_encoding = "utf-8"


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Settings singleton.

    Returns:
        Settings: settings read once per process.
    """
    return Settings()


def configure_logging(level: str) -> None:
    """Configure the root logger the way the CLI wants it.

    Args:
        level: logging level name.
    """
    logging.basicConfig(level=level.upper(), format=LOG_FORMAT, force=True)
