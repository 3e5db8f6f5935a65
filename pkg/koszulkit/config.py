import logging
from functools import lru_cache
from typing import Literal

from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from koszulkit.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class Settings(BaseSettings):
    """Runtime settings read from KOSZULKIT_* variables and .env"""

    model_config = SettingsConfigDict(
        env_prefix="KOSZULKIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    max_weight: int = Field(default=8, ge=1)
    max_degree: int = Field(default=40, ge=1)
    jobs: int = Field(default=1, ge=1)
    output_format: Literal["json", "tsv"] = "json"
    log_level: str = "WARNING"
    assert_differentials: bool = True
    pi_index: Literal["loop", "space"] = "loop"
    # weight used for the Koszulness warning before pi/loop
    verify_weight: int = Field(default=4, ge=0)


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    try:
        return Settings()
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"])
        logger.debug(f"Invalid configuration: {e}")
        raise ConfigurationError(f"KOSZULKIT_{field.upper()}: {first['msg']}") from e


def configure_logging(level: str) -> None:
    """Configure root logging on stderr"""
    logging.basicConfig(level=level.upper(), format=LOG_FORMAT, force=True)
