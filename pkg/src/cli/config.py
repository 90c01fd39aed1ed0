# src/cli/config.py
import logging
import os
from pathlib import Path
from typing import Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field

from src.optsearch import SearchBudget

logger = logging.getLogger("cli")

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[2] / "configs" / "lab_config.yaml"
THREADS_VARIABLE = "GRIESMER_LAB_THREADS"


class SearchSettings(BaseModel):
    max_nodes: int = Field(10**9, gt=0)
    max_seconds: float = Field(600.0, gt=0)
    max_vertices: int = Field(20_000, gt=0)

    def budget(self, max_nodes: Optional[int] = None, max_seconds: Optional[float] = None) -> SearchBudget:
        return SearchBudget(max_nodes=max_nodes or self.max_nodes, max_seconds=max_seconds or self.max_seconds)


class CanonicalSettings(BaseModel):
    exact_product: int = Field(64, gt=0)
    max_states: int = Field(200_000, gt=0)


class LoggingSettings(BaseModel):
    level: str = "INFO"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class LabConfig(BaseModel):
    search: SearchSettings = Field(default_factory=SearchSettings)
    canonical: CanonicalSettings = Field(default_factory=CanonicalSettings)
    workers: Optional[int] = Field(None, ge=1)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)

    def resolved_workers(self) -> int:
        """GRIESMER_LAB_THREADS, then the config file, then the CPU count."""
        raw = os.getenv(THREADS_VARIABLE)
        if raw:
            try:
                value = int(raw)
            except ValueError:
                raise ValueError(f"{THREADS_VARIABLE} must be an integer, got {raw!r}") from None
            if value < 1:
                raise ValueError(f"{THREADS_VARIABLE} must be >= 1, got {value}")
            return value
        return self.workers or os.cpu_count() or 1


def load_config(path: Optional[str] = None) -> LabConfig:
    """Read the YAML config; without a file the built-in defaults apply."""
    load_dotenv()
    config_path = Path(path) if path else DEFAULT_CONFIG_PATH
    if not config_path.exists():
        if path:
            raise FileNotFoundError(f"config file not found: {config_path}")
        return LabConfig()
    with open(config_path, "r") as f:
        raw = yaml.safe_load(f) or {}
    logger.debug(f"Loaded config from {config_path}")
    return LabConfig.model_validate(raw)
