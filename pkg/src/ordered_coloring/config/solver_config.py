"""Solver configuration."""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path
from typing import Dict, Optional

import json
import yaml

ALGOS = (
    "auto",
    "oracle",
    "edgeless",
    "two-list",
    "chordal",
    "clique-matching",
    "single-edge",
    "ljj4",
)
SUB3_SOLVERS = ("oracle", "edwards")
MATCHERS = ("augmenting", "hopcroft-karp")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass
class SolverConfig:
    """Configuration for solving and gadget verification."""

    algo: str = "auto"
    k: Optional[int] = None
    ell: int = 1
    sub3: str = "oracle"
    sub3_edwards: bool = False
    threads: int = 1
    matcher: str = "augmenting"
    pinning_timeout: Optional[float] = None
    log_level: str = "WARNING"

    def load_from_file(self, config_file: str) -> None:
        """Load configuration from JSON or YAML; unknown keys are ignored."""
        path = Path(config_file)
        if path.suffix == ".json":
            with path.open() as f:
                cfg = json.load(f)
        elif path.suffix in [".yaml", ".yml"]:
            with path.open() as f:
                cfg = yaml.safe_load(f) or {}
        else:
            raise ValueError("Unsupported config format")
        for key, val in cfg.items():
            if hasattr(self, key):
                setattr(self, key, val)

    def save_to_file(self, config_file: str) -> None:
        """Save configuration to JSON or YAML."""
        path = Path(config_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        if path.suffix == ".json":
            with path.open("w") as f:
                json.dump(self.to_dict(), f, indent=2)
        elif path.suffix in [".yaml", ".yml"]:
            with path.open("w") as f:
                yaml.dump(self.to_dict(), f)
        else:
            raise ValueError("Unsupported config format")

    def validate_config(self) -> bool:
        """Validate configuration parameters."""
        if self.algo not in ALGOS:
            raise ValueError(f"algo must be one of {', '.join(ALGOS)}")
        if self.sub3 not in SUB3_SOLVERS:
            raise ValueError(f"sub3 must be one of {', '.join(SUB3_SOLVERS)}")
        if self.matcher not in MATCHERS:
            raise ValueError(f"matcher must be one of {', '.join(MATCHERS)}")
        if self.ell < 0:
            raise ValueError("ell must be non-negative")
        if self.k is not None and self.k < 1:
            raise ValueError("k must be positive")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")
        if self.pinning_timeout is not None and self.pinning_timeout <= 0:
            raise ValueError("pinning_timeout must be positive")
        if self.log_level.upper() not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}")
        return True

    def to_dict(self) -> Dict:
        """Convert to dictionary."""
        return {f.name: getattr(self, f.name) for f in fields(self)}
