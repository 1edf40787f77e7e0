"""
Configuration Management Module
Load solver and harness settings from .env file and environment
"""

import os
from pathlib import Path
from typing import List

from dotenv import dotenv_values
from pydantic import BaseModel, Field, field_validator


class SolverConfig(BaseModel):
    """Solver caps and search settings"""
    max_vertices: int = 64       # solver path refuses larger graphs
    bruteforce_cap: int = 18     # gamma_sp_bruteforce
    enumeration_cap: int = 12    # S(G), P(S) and lambda sweeps
    secure_cap: int = 14         # secure domination subset enumeration
    timeout_seconds: float = 0.0  # 0 disables the deadline
    workers: int = 1

    @field_validator("max_vertices", "bruteforce_cap", "enumeration_cap", "secure_cap", "workers")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("caps and worker counts must be positive")
        return value

    @field_validator("timeout_seconds")
    @classmethod
    def _non_negative(cls, value: float) -> float:
        if value < 0:
            raise ValueError("timeout must be non-negative")
        return value


class HarnessConfig(BaseModel):
    """Verification harness settings"""
    seed: int = 1
    product_cap: int = 24        # largest product order solved exactly
    random_count: int = 200
    densities: List[float] = Field(default_factory=lambda: [0.2, 0.5, 0.8])
    all_labeled_max: int = 6

    @field_validator("product_cap", "random_count", "all_labeled_max")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("harness limits must be positive")
        return value

    @field_validator("densities")
    @classmethod
    def _densities(cls, value: List[float]) -> List[float]:
        if not value:
            raise ValueError("at least one edge density is required")
        if any(not 0.0 <= p <= 1.0 for p in value):
            raise ValueError("edge densities must lie in [0, 1]")
        return value


class OutputConfig(BaseModel):
    """Report output settings"""
    format: str = "human"
    report_dir: str = "reports"

    @field_validator("format")
    @classmethod
    def _format(cls, value: str) -> str:
        if value not in ("human", "json", "csv"):
            raise ValueError(f"unknown output format {value!r}")
        return value


class LoggingConfig(BaseModel):
    """Logging settings"""
    level: str = "INFO"
    file: str = "logs/superdom.log"


class Config(BaseModel):
    """Main configuration container"""
    solver: SolverConfig = Field(default_factory=SolverConfig)
    harness: HarnessConfig = Field(default_factory=HarnessConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)


def _densities(raw: str) -> List[float]:
    return [float(p) for p in raw.split(",") if p.strip()]


def load_config(config_path: str = None) -> Config:
    """
    Load configuration from .env file

    Args:
        config_path: Path to .env file. If None, looks for .env in current directory

    Returns:
        Config object with all settings
    """
    env_file = None

    if config_path:
        path = Path(config_path)
        if path.exists():
            env_file = str(path)
    else:
        candidates = [
            Path(".env"),
            Path(__file__).parent.parent / ".env",
        ]
        for path in candidates:
            if path.exists():
                env_file = str(path)
                break

    env_values = {}
    if env_file:
        env_values = dotenv_values(env_file)

    # Environment variables override the file
    config_dict = {
        **env_values,
        **os.environ,
    }

    return Config(
        solver=SolverConfig(
            max_vertices=int(config_dict.get("SUPERDOM_MAX_VERTICES", 64)),
            bruteforce_cap=int(config_dict.get("SUPERDOM_BRUTEFORCE_CAP", 18)),
            enumeration_cap=int(config_dict.get("SUPERDOM_ENUMERATION_CAP", 12)),
            secure_cap=int(config_dict.get("SUPERDOM_SECURE_CAP", 14)),
            timeout_seconds=float(config_dict.get("SUPERDOM_TIMEOUT", 0.0)),
            workers=int(config_dict.get("SUPERDOM_WORKERS", 1)),
        ),
        harness=HarnessConfig(
            seed=int(config_dict.get("SUPERDOM_SEED", 1)),
            product_cap=int(config_dict.get("SUPERDOM_PRODUCT_CAP", 24)),
            random_count=int(config_dict.get("SUPERDOM_RANDOM_COUNT", 200)),
            densities=_densities(config_dict.get("SUPERDOM_DENSITIES", "0.2,0.5,0.8")),
            all_labeled_max=int(config_dict.get("SUPERDOM_ALL_LABELED_MAX", 6)),
        ),
        output=OutputConfig(
            format=config_dict.get("SUPERDOM_FORMAT", "human"),
            report_dir=config_dict.get("SUPERDOM_REPORT_DIR", "reports"),
        ),
        logging=LoggingConfig(
            level=config_dict.get("LOG_LEVEL", "INFO"),
            file=config_dict.get("LOG_FILE", "logs/superdom.log"),
        ),
    )


# Global config instance
_config: Config = None


def get_config() -> Config:
    """Get global configuration instance"""
    global _config
    if _config is None:
        _config = load_config()
    return _config


def reset_config():
    """Reset configuration (useful for testing)"""
    global _config
    _config = None
