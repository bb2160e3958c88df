"""
Application configuration using Pydantic Settings
"""
import logging
from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

BASE_DIR = Path(__file__).resolve().parent.parent


class Settings(BaseSettings):
    """Application settings loaded from environment variables"""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    # Application
    app_name: str = "Coxeter FC Analyzer"
    debug: bool = False
    log_level: str = "INFO"
    log_format: Literal["console", "json"] = "console"

    @field_validator("log_level")
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        """Accept any case, reject names the logging module does not know"""
        level = v.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Unknown log level {v!r}")
        return level

    # Root engine limits (overridable per CLI call / HTTP request)
    max_length: int = 12
    element_cap: int = 200_000

    # Decimal digits for the multiprecision sign screen of field elements
    sign_precision_dps: int = 30

    # Reports
    report_format: Literal["human", "machine"] = "human"
    templates_path: str = str(BASE_DIR / "templates")

    # Graph corpus shipped with the repository
    graphs_path: str = str(BASE_DIR / "data" / "graphs")


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()
