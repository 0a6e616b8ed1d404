"""
Configuration management for the dops command line.

Loads settings from environment variables with validation.
"""

import logging
import os
from typing import Optional

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def env_int(name: str, default: int) -> Optional[int]:
    """Integer variable, or None when it holds anything else."""
    try:
        return int(os.getenv(name, str(default)))
    except ValueError:
        return None


class Settings:
    """Application settings loaded from environment variables."""

    # Scenario limits
    MAX_DEGREE: Optional[int] = env_int("DOPS_MAX_DEGREE", 200)

    # Artifacts
    OUTPUT_DIR: str = os.getenv("DOPS_OUTPUT_DIR", "out")

    # Application
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO").upper()
    LOG_FILE: str = os.getenv("DOPS_LOG_FILE", "")

    def validate(self) -> None:
        """
        Validate the loaded settings.

        Raises:
            ValueError: If a setting is out of range
        """
        if self.MAX_DEGREE is None:
            raise ValueError("DOPS_MAX_DEGREE must be an integer")
        if self.MAX_DEGREE < 1:
            raise ValueError("DOPS_MAX_DEGREE must be positive")
        if not self.OUTPUT_DIR:
            raise ValueError("DOPS_OUTPUT_DIR must not be empty")
        if not isinstance(logging.getLevelName(self.LOG_LEVEL), int):
            raise ValueError(f"unknown LOG_LEVEL {self.LOG_LEVEL}")


# Create global settings instance
settings = Settings()
