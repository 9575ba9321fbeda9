"""
Application configuration module.
Handles runtime settings and environment configuration.
"""

import logging

from dotenv import load_dotenv
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings

from bellsim.constants import CHUNK_SIZE

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)


class MonteCarloSettings(BaseModel):
    """Monte Carlo execution settings."""

    workers: int = Field(default=1, ge=1)
    chunk_size: int = Field(default=CHUNK_SIZE, ge=1)
    start_method: str = Field(default="spawn")

    model_config = {"extra": "forbid", "frozen": True}


class Settings(BaseSettings):
    """Application settings loaded from environment variables.

    Only knobs that cannot change numeric results live here: the output of
    every command depends on argv and seed alone.
    """

    app_name: str = Field(default="bellsim")
    log_level: str = Field(default="WARNING")

    # Monte Carlo execution
    workers: int = Field(default=1, ge=1)
    mp_start_method: str = Field(default="spawn")

    @property
    def monte_carlo(self) -> MonteCarloSettings:
        """Get Monte Carlo execution configuration."""
        return MonteCarloSettings(
            workers=self.workers,
            chunk_size=CHUNK_SIZE,
            start_method=self.mp_start_method,
        )

    model_config = {
        "extra": "ignore",
        "env_prefix": "BELLSIM_",
        "env_file": ".env",
        "env_file_encoding": "utf-8",
    }


def configure_logging(level: str | None = None) -> None:
    """Configure root logging; records go to standard error."""
    resolved = (level or settings.log_level).upper()
    logging.basicConfig(
        level=getattr(logging, resolved, logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    # numpy/scipy stay quiet unless something is really wrong
    logging.getLogger("scipy").setLevel(logging.WARNING)
    logger.debug(f"Logging configured: level={resolved}")


# Global settings instance
settings = Settings()
