"""
Tolerances, search parameters and logging setup.

All numeric predicates in tilerscope compare against a ``ToleranceConfig``.
The defaults suit unit-scale inputs: construction noise sits around
``eps_geom`` while equality tests on lengths and angles use thresholds two
orders of magnitude wider.

Set ``TILERSCOPE_DEBUG=1`` in the environment to get DEBUG logging from the
command line without passing ``-vv``.
"""

from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass, field

from tilerscope.errors import ConfigError

DEFAULT_EPS_GEOM = 1e-9
DEFAULT_EPS_LEN = 1e-7
DEFAULT_EPS_ANGLE = 1e-7

DEFAULT_BUDGET = 2000
DEFAULT_SEED = 0

GOLDEN_CONJUGATE = (math.sqrt(5.0) - 1.0) / 2.0


def default_epsilon_steps() -> tuple[float, ...]:
    return tuple(2.0 ** -k for k in range(3, 13))


def golden_fractions(count: int, start: float = 1.0 / 3.0) -> tuple[float, ...]:
    """Interior fractions 1/3, 1/3 + φ⁻¹, 1/3 + 2φ⁻¹, … taken modulo 1."""
    out = []
    value = start
    while len(out) < count:
        if 0.05 < value < 0.95:
            out.append(value)
        value = (value + GOLDEN_CONJUGATE) % 1.0
    return tuple(out)


def default_workers() -> int:
    return min(8, (os.cpu_count() or 1) + 4)


@dataclass(frozen=True)
class ToleranceConfig:
    eps_geom: float = DEFAULT_EPS_GEOM
    eps_len: float = DEFAULT_EPS_LEN
    eps_angle: float = DEFAULT_EPS_ANGLE

    def __post_init__(self):
        for name in ("eps_geom", "eps_len", "eps_angle"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ConfigError(f"{name} must be a finite positive number, got {value!r}")
        if self.eps_geom > self.eps_len:
            raise ConfigError(
                f"eps_geom ({self.eps_geom}) must not exceed eps_len ({self.eps_len})"
            )

    def to_dict(self) -> dict:
        return {"eps_geom": self.eps_geom, "eps_len": self.eps_len, "eps_angle": self.eps_angle}


@dataclass(frozen=True)
class SearchParams:
    """Knobs of the witness search.

    ``epsilon_steps`` is a unitless, strictly decreasing schedule. Each sampler
    scales it by its own natural bound: the safe offset δ for corner planes,
    the lowest off-facet vertex for shave planes, radians for chord rotations.
    """

    budget: int = DEFAULT_BUDGET
    seed: int = DEFAULT_SEED
    epsilon_steps: tuple[float, ...] = field(default_factory=default_epsilon_steps)
    tolerance: ToleranceConfig = field(default_factory=ToleranceConfig)
    workers: int = field(default_factory=default_workers)
    chord_fractions: tuple[float, ...] = field(default_factory=lambda: golden_fractions(3))

    def __post_init__(self):
        if not isinstance(self.budget, int) or self.budget < 1:
            raise ConfigError(f"budget must be a positive integer, got {self.budget!r}")
        if not isinstance(self.seed, int) or not (0 <= self.seed < 2 ** 64):
            raise ConfigError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        steps = tuple(float(s) for s in self.epsilon_steps)
        if not steps or any(s <= 0 for s in steps):
            raise ConfigError("epsilon_steps must be a non-empty list of positive offsets")
        if any(b >= a for a, b in zip(steps, steps[1:])):
            raise ConfigError("epsilon_steps must be strictly decreasing")
        object.__setattr__(self, "epsilon_steps", steps)
        fractions = tuple(float(f) for f in self.chord_fractions)
        if not fractions or any(not (0.0 < f < 1.0) for f in fractions):
            raise ConfigError("chord_fractions must lie strictly between 0 and 1")
        object.__setattr__(self, "chord_fractions", fractions)
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers!r}")

    def to_dict(self) -> dict:
        # workers is left out on purpose: results never depend on it
        return {
            "budget": self.budget,
            "seed": self.seed,
            "epsilon_steps": list(self.epsilon_steps),
            "chord_fractions": list(self.chord_fractions),
            "tolerance": self.tolerance.to_dict(),
        }


def _env_debug() -> bool:
    return os.environ.get("TILERSCOPE_DEBUG", "").strip().lower() in {"1", "true", "yes", "on"}


def configure_logging(verbosity: int = 0) -> None:
    """Attach a stderr handler to the ``tilerscope`` logger. CLI use only."""
    if verbosity >= 2 or _env_debug():
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    root = logging.getLogger("tilerscope")
    root.setLevel(level)
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        root.addHandler(handler)
