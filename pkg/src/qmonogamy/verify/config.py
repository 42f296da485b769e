"""
Sweep configuration
"""

import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple

from ..bounds import CoeffParams
from ..measures import EoaConfig
from ..validation import check_choice, require
from .models import Direction


class SweepMode(Enum):
    STATES = "states"
    VECTORS = "vectors"
    FAMILY = "family"


class Measure(Enum):
    CONCURRENCE = "concurrence"
    TSALLIS2_ASSIST = "tsallis2_assist"


class Sampler(Enum):
    UNIFORM = "uniform"
    GEOMETRIC = "geometric"


# gamma of each measure in the worked examples
MEASURE_GAMMA = {
    Measure.CONCURRENCE: 2.0,
    Measure.TSALLIS2_ASSIST: 1.0,
}

REJECTION_CAP = int(os.getenv("QMONOGAMY_REJECTION_CAP", "100"))


@dataclass(frozen=True)
class SweepConfig:
    """Parameters of one verification sweep"""
    mode: SweepMode
    samples: int
    num_parties: int
    coeffs: CoeffParams
    exponents: Tuple[float, ...]
    seed: int = 0
    measure: Measure = Measure.CONCURRENCE
    sampler: Sampler = Sampler.UNIFORM
    pad: int = 0
    eoa: EoaConfig = field(default_factory=lambda: EoaConfig(restarts=4, max_iterations=200))

    def __post_init__(self):
        object.__setattr__(self, "mode", check_choice(SweepMode, self.mode, "mode"))
        object.__setattr__(self, "measure", check_choice(Measure, self.measure, "measure"))
        object.__setattr__(self, "sampler", check_choice(Sampler, self.sampler, "sampler"))
        object.__setattr__(self, "exponents", tuple(float(e) for e in self.exponents))
        require(self.samples >= 1, f"samples must be >= 1, got {self.samples}")
        require(self.num_parties >= 2, f"num_parties must be >= 2, got {self.num_parties}")
        require(len(self.exponents) >= 1, "at least one exponent is required")
        require(self.pad >= 0, f"pad must be >= 0, got {self.pad}")
        if self.direction is Direction.MONOGAMY:
            require(all(e >= self.coeffs.gamma for e in self.exponents),
                    f"monogamy exponents must be >= gamma={self.coeffs.gamma}, got {self.exponents}")
        else:
            require(all(0 <= e <= self.coeffs.gamma for e in self.exponents),
                    f"polygamy exponents must lie in [0, {self.coeffs.gamma}], got {self.exponents}")

    @property
    def direction(self) -> Direction:
        """Concurrence is checked for monogamy, the assistance measure for polygamy"""
        if self.measure is Measure.CONCURRENCE:
            return Direction.MONOGAMY
        return Direction.POLYGAMY
