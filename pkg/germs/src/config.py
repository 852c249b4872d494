"""
Engine limits and per-run job configuration.
"""

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from dotenv import load_dotenv

from .consts import (
    DEFAULT_GROWTH_WINDOW,
    DEFAULT_HILBERT_MAX_K,
    DEFAULT_MAX_ORDER,
    ENV_GROWTH_WINDOW,
    ENV_HILBERT_MAX_K,
    ENV_MAX_ORDER,
    ENV_WORKERS,
    MIN_ORDER,
    POWER_ITERATION_MAX_STEPS,
    POWER_ITERATION_TOL,
)
from .enums import GrowthTarget, OutputFormat, Restriction
from .errors import ConfigError, OutOfRange
from .series.coeffs import to_fraction


def _env_int(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigError(f"{name}={raw!r} is not an integer") from exc
    if value < minimum:
        raise ConfigError(f"{name}={value} must be >= {minimum}")
    return value


@dataclass(frozen=True)
class EngineLimits:
    """Safety caps shared by every computation of a run."""
    max_order: int = DEFAULT_MAX_ORDER
    hilbert_max_k: int = DEFAULT_HILBERT_MAX_K
    growth_window: int = DEFAULT_GROWTH_WINDOW
    power_iteration_tol: float = POWER_ITERATION_TOL
    power_iteration_max_steps: int = POWER_ITERATION_MAX_STEPS
    workers: int = 1

    @classmethod
    def from_env(cls, dotenv_path: Optional[str] = None) -> 'EngineLimits':
        """Read GERM_* overrides from the environment (and a .env file if present)."""
        load_dotenv(dotenv_path)
        return cls(
            max_order=_env_int(ENV_MAX_ORDER, DEFAULT_MAX_ORDER, MIN_ORDER),
            hilbert_max_k=_env_int(ENV_HILBERT_MAX_K, DEFAULT_HILBERT_MAX_K, 0),
            growth_window=_env_int(ENV_GROWTH_WINDOW, DEFAULT_GROWTH_WINDOW, 1),
            workers=_env_int(ENV_WORKERS, 1, 1),
        )

    def check_order(self, order: int) -> int:
        if not MIN_ORDER <= order <= self.max_order:
            raise OutOfRange(f"order {order} outside [{MIN_ORDER}, {self.max_order}]")
        return order

    def check_hilbert_k(self, k: int) -> int:
        if not 0 <= k <= self.hilbert_max_k:
            raise OutOfRange(f"k={k} outside [0, {self.hilbert_max_k}]")
        return k


@dataclass
class JobConfig:
    """Everything one CLI invocation needs."""
    command: str
    spec_source: Optional[str] = None
    order: Optional[int] = None
    output: OutputFormat = OutputFormat.TEXT
    lambdas: List[Fraction] = field(default_factory=list)
    seed: int = 0
    k_range: Tuple[int, int] = (1, 1)
    target: GrowthTarget = GrowthTarget.GENERATOR
    restriction: Restriction = Restriction.NONE
    workers: int = 1
    output_path: Optional[str] = None
    verbose: bool = False
    literals: Dict[str, str] = field(default_factory=dict)
    limits: EngineLimits = field(default_factory=EngineLimits)

    def __post_init__(self):
        if self.order is not None:
            self.limits.check_order(self.order)
        k_lo, k_hi = self.k_range
        if k_lo > k_hi:
            raise OutOfRange(f"empty k range {k_lo}..{k_hi}")
        self.limits.check_hilbert_k(k_lo)
        self.limits.check_hilbert_k(k_hi)
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        self.lambdas = [to_fraction(lam) for lam in self.lambdas]
