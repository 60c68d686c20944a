"""Application configuration using Pydantic BaseSettings."""

from typing import List

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings loaded from environment variables (prefix RIGIKIT_)."""

    # Application
    app_name: str = Field(default="rigikit")
    app_version: str = Field(default="1.0.0")
    debug: bool = Field(default=False)
    log_level: str = Field(default="WARNING")

    # Parallelism (RIGIKIT_THREADS)
    threads: int = Field(default=1, description="Worker processes for per-graph work")

    # Census enumeration guards
    cubic_max_n: int = Field(default=14)
    quartic_max_n: int = Field(default=12)
    dense_max_n: int = Field(default=10)
    bipartite_max_n: int = Field(default=14)
    vertex_transitive_max_n: int = Field(default=64)

    # Reports
    default_dimensions: List[int] = Field(default=[2, 3])
    float_tolerance: float = Field(default=1e-9)
    schema_version: str = Field(default="1")

    model_config = {
        "env_file": ".env",
        "env_prefix": "RIGIKIT_",
        "case_sensitive": False,
    }

    @field_validator("threads")
    @classmethod
    def validate_threads(cls, value: int) -> int:
        """Threads must be a positive worker count."""
        if value < 1:
            raise ValueError("RIGIKIT_THREADS must be at least 1")
        return value

    @field_validator("default_dimensions")
    @classmethod
    def validate_dimensions(cls, value: List[int]) -> List[int]:
        """Body frameworks are only defined for 1 <= d <= 6 here."""
        for d in value:
            if d < 1 or d > 6:
                raise ValueError(f"Dimension {d} outside supported range 1..6")
        return value

    def enumeration_limit(self, k: int, bipartite: bool = False) -> int:
        """
        Largest vertex count the census will enumerate without --force.

        Args:
            k: Regular degree
            bipartite: Whether the bipartite enumerator is used

        Returns:
            Maximum allowed n
        """
        if bipartite:
            return self.bipartite_max_n
        if k <= 3:
            return self.cubic_max_n
        if k == 4:
            return self.quartic_max_n
        return self.dense_max_n


# Global settings instance
settings = Settings()
