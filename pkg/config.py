"""
Graph Burning Toolkit - Configuration
Settings come from the environment; a local .env file is honoured.
"""

import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

load_dotenv()

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

_settings: Optional["Settings"] = None


@dataclass(frozen=True)
class Settings:
    log_level: str = "INFO"
    oracle_cap: int = 32
    centrality_tol: float = 1e-10
    centrality_max_iter: int = 1000
    centrality_dense_limit: int = 4000
    cbrh_max_depth: int = 64
    cbrh_max_calls: int = 1_000_000
    fixture_dir: Path = Path(__file__).resolve().parent / "fixtures"
    data_dir: Path = Path(__file__).resolve().parent / "data"
    port: int = 5000


def _env(name, default, cast):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return cast(raw.strip())
    except ValueError:
        logging.getLogger(__name__).warning("Ignoring bad value %s=%r", name, raw)
        return default


def get_settings(reload: bool = False) -> Settings:
    """
    Return the process-wide settings, reading the environment once

    Args:
        reload (bool): Re-read the environment (tests use this after monkeypatching)

    Returns:
        Settings: Frozen settings object
    """
    global _settings
    if _settings is None or reload:
        base = Settings()
        _settings = Settings(
            log_level=_env("BURN_LOG_LEVEL", base.log_level, str).upper(),
            oracle_cap=_env("BURN_ORACLE_CAP", base.oracle_cap, int),
            centrality_tol=_env("BURN_CENTRALITY_TOL", base.centrality_tol, float),
            centrality_max_iter=_env("BURN_CENTRALITY_MAX_ITER", base.centrality_max_iter, int),
            centrality_dense_limit=_env("BURN_CENTRALITY_DENSE_LIMIT", base.centrality_dense_limit, int),
            cbrh_max_depth=_env("BURN_CBRH_MAX_DEPTH", base.cbrh_max_depth, int),
            cbrh_max_calls=_env("BURN_CBRH_MAX_CALLS", base.cbrh_max_calls, int),
            fixture_dir=_env("BURN_FIXTURE_DIR", base.fixture_dir, Path),
            data_dir=_env("BURN_DATA_DIR", base.data_dir, Path),
            port=_env("PORT", base.port, int),
        )
    return _settings


def configure_logging(level: Optional[str] = None) -> None:
    """Configure root logging once; later calls only adjust the level"""
    level = (level or get_settings().log_level).upper()
    root = logging.getLogger()
    if not root.handlers:
        logging.basicConfig(level=level, format=LOG_FORMAT)
    root.setLevel(level)
