import math
from bisect import insort
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from Common.errors import DegenerateChainError, InputError, NumericalError
from Distributions import HomogeneousDistribution
from Distributions.subset import Subset
from MarkovChain.chain_config import LAZINESS
from MarkovChain.random_stream import UniformStream


CONSISTENCY_RTOL = 1e-9


class ChainRun:
    """
    One trajectory of the lazy base-exchange Metropolis chain.

    Every step consumes exactly three uniforms of the chain's stream, in this order:
    u_i picks i = current[floor(u_i * k)], u_j picks j = absent[floor(u_j * (n - k))]
    (both lists sorted ascending), and u_a accepts T = S - i + j iff u_a < 1/2 min(1, mu(T) / mu(S)).
    u_a is drawn even when T has zero mass. A single-state chain (k == 0 or k == n) draws nothing.
    A ChainRun is single-threaded; several runs may share one distribution.
    """

    def __init__(self, distribution: HomogeneousDistribution, start: Sequence[int], rng: np.random.Generator,
                 log_mass: Optional[Callable[[Subset], float]] = None):
        self.distribution = distribution
        self._log_mass = log_mass or distribution.log_mass
        start = tuple(start)
        distribution.validate_subset(start)
        self.current_logmass: float = self._log_mass(start)
        if self.current_logmass == -math.inf:
            raise InputError(f"start state {list(start)} is not in the support")

        members = set(start)
        self._current: List[int] = list(start)
        self._absent: List[int] = [x for x in range(distribution.n) if x not in members]
        self._uniforms = UniformStream(rng)

        self.step_count: int = 0
        self.accept_count: int = 0
        self.reject_infeasible_count: int = 0

    @property
    def current(self) -> Subset:
        return tuple(self._current)

    @property
    def is_degenerate(self) -> bool:
        """ k == 0 or k == n: the support is a single state and no move exists """
        return not self._current or not self._absent

    @property
    def acceptance_rate(self) -> float:
        return self.accept_count / self.step_count if self.step_count else 0.0

    @property
    def uniforms_drawn(self) -> int:
        return self._uniforms.n_drawn

    def propose(self) -> Tuple[int, int, Subset]:
        """ Draws (i, j) and returns (i, j, S - i + j) """
        if self.is_degenerate:
            raise DegenerateChainError("single-state chain: nothing to exchange")
        i = self._current[self._uniforms.index(len(self._current))]
        j = self._absent[self._uniforms.index(len(self._absent))]
        proposal = sorted(x for x in self._current if x != i)
        insort(proposal, j)
        return i, j, tuple(proposal)

    def step(self) -> 'ChainRun':
        """ Performs one transition of the chain. A single-state chain only counts the step """
        if self.is_degenerate:
            self.step_count += 1
            return self
        i, j, proposal = self.propose()
        proposal_logmass = self._log_mass(proposal)
        u = self._uniforms.next()
        if proposal_logmass == -math.inf:
            self.reject_infeasible_count += 1
        else:
            log_ratio = proposal_logmass - self.current_logmass
            acceptance = LAZINESS if log_ratio >= 0 else LAZINESS * math.exp(log_ratio)
            if u < acceptance:
                self._move(i, j, proposal_logmass)
        self.step_count += 1
        return self

    def run(self, n_steps: int) -> 'ChainRun':
        for _ in range(n_steps):
            self.step()
        return self

    def check_consistency(self) -> None:
        """ Re-evaluates the cached log mass of the current state
        :raises NumericalError: the cache drifted from the distribution """
        fresh = self.distribution.log_mass(self.current)
        if abs(fresh - self.current_logmass) > CONSISTENCY_RTOL * max(1.0, abs(fresh)):
            raise NumericalError(f"cached log mass {self.current_logmass!r} != {fresh!r} at {list(self.current)}")

    def _move(self, i: int, j: int, proposal_logmass: float) -> None:
        self._current.remove(i)
        insort(self._current, j)
        self._absent.remove(j)
        insort(self._absent, i)
        self.current_logmass = proposal_logmass
        self.accept_count += 1


def propose(run: ChainRun) -> Tuple[int, int, Subset]:
    return run.propose()


def step(run: ChainRun) -> ChainRun:
    return run.step()
