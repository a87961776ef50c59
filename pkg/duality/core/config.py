"""Application configuration using Pydantic Settings."""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Verifier settings with environment variable support (prefix ``DUALITY_``)."""

    # Application
    app_name: str = "gl-duality-verifier"
    app_version: str = "0.1.0"

    # Size guard shared by every builder (DUALITY_BUDGET)
    budget: int = 20000

    # Randomized checks
    default_seed: int = 20240601
    group_samples: int = 50

    # Worker pool for `verify all`
    max_workers: int = 1

    # Reporting
    include_timings: bool = False

    # Logging Configuration
    log_level: str = "WARNING"

    model_config = SettingsConfigDict(
        env_prefix="DUALITY_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )


# Global settings instance
settings = Settings()
