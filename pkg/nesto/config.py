import logging
import os
from dataclasses import dataclass, replace

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 16


@dataclass(frozen=True)
class NestoConfig:
    # Largest ground set any enumeration will accept
    max_n: int = DEFAULT_MAX_N

    # Arc-subset search in is_graphical is exhaustive only up to this size
    graphical_search_n: int = 5

    # Backtracking nodes visited by is_isomorphic before giving up
    search_budget: int = 2_000_000

    # Size caps for the weak order on S_m and the partial weak order on P_n
    weak_order_max_m: int = 7
    partial_weak_order_max_n: int = 6

    # Random building sets sampled per ground size by the verification suite
    random_samples: int = 100

    # Random linear extensions sampled per shelling check
    shelling_samples: int = 20

    log_level: str = "WARNING"

    def with_max_n(self, max_n: int | None) -> "NestoConfig":
        if max_n is None:
            return self
        return replace(self, max_n=max_n)


_config: NestoConfig | None = None


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}")
        return default


def load_config() -> NestoConfig:
    """Build the process configuration from the environment (and a .env file if present)."""
    load_dotenv()
    return NestoConfig(
        max_n=_env_int("NESTO_MAX_N", DEFAULT_MAX_N),
        graphical_search_n=_env_int("NESTO_GRAPHICAL_SEARCH_N", 5),
        search_budget=_env_int("NESTO_SEARCH_BUDGET", 2_000_000),
        random_samples=_env_int("NESTO_RANDOM_SAMPLES", 100),
        shelling_samples=_env_int("NESTO_SHELLING_SAMPLES", 20),
        log_level=os.getenv("NESTO_LOG_LEVEL", "WARNING"),
    )


def get_config() -> NestoConfig:
    global _config
    if _config is None:
        _config = load_config()
    return _config


def set_config(config: NestoConfig):
    """Install a configuration for the rest of the process (the CLI does this once per job)."""
    global _config
    _config = config
