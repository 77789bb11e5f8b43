"""
Configuración centralizada de la librería usando Pydantic Settings.
"""

from pathlib import Path
from typing import List, Literal, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Configuración de la aplicación."""

    model_config = SettingsConfigDict(
        env_prefix="MOTIVIC_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Precisión de series truncadas
    default_precision: int = Field(default=24, ge=4)
    max_precision: int = Field(default=1024, ge=8)

    # Oráculos sobre cuerpos finitos
    field_checks: List[int] = Field(default_factory=lambda: [2, 3, 5, 7])
    ff_enumeration_limit: int = Field(default=4096, ge=1)
    ff_dimension_limit: int = Field(default=12, ge=1)

    # Levantamiento de arcos
    rotation_search_bound: int = Field(default=16, ge=0)

    # Suites aleatorias y salida
    seed: int = Field(default=20240917)
    output_format: Literal["json", "table"] = Field(default="json")

    # Logging Configuration
    log_level: str = Field(default="WARNING")
    log_dir: Optional[Path] = Field(default=None)

    @field_validator("field_checks")
    @classmethod
    def _check_fields(cls, value: List[int]) -> List[int]:
        if any(q < 2 for q in value):
            raise ValueError(f"field checks must be >= 2: {value}")
        return value


# Singleton instance
settings = Settings()
