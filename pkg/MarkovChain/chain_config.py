from dataclasses import dataclass
from typing import Optional

from Common.errors import InputError

LAZINESS = 0.5  # Every proposal is accepted with probability LAZINESS * min(1, mu(T) / mu(S))


@dataclass(frozen=True)
class ChainConfig:
    """
    :param epsilon: total variation target in (0, 1), sets the number of steps through the mixing budget
    :param seed: root seed; chain c draws from the sub-stream (seed, c)
    :param steps_override: run exactly this many steps instead of the mixing budget
    """
    epsilon: float = 0.01
    seed: int = 0
    steps_override: Optional[int] = None

    def __post_init__(self):
        if not 0 < self.epsilon < 1:
            raise InputError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if self.seed < 0:
            raise InputError(f"seed must be non-negative, got {self.seed}")
        if self.steps_override is not None and self.steps_override < 0:
            raise InputError(f"step count must be non-negative, got {self.steps_override}")
