import functools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence

from Common.config import ENUMERATION_CAP, MASS_CACHE_SIZE
from Distributions import HomogeneousDistribution
from Distributions.subset import Subset
from MarkovChain.chain_config import ChainConfig
from MarkovChain.chain_run import ChainRun
from MarkovChain.mixing_budget import MixingBudget, mixing_budget
from MarkovChain.random_stream import chain_stream

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SampleResult:
    subset: Subset
    steps: int
    accepts: int
    rejected_infeasible: int
    chain_id: int = 0

    def to_record(self) -> dict:
        return {"subset": list(self.subset), "steps": self.steps, "accepts": self.accepts}


def _resolve_steps(d: HomogeneousDistribution, start: Sequence[int], config: ChainConfig,
                   budget: Optional[MixingBudget], start_mass_lower_bound: Optional[float], cap: int) -> int:
    if config.steps_override is not None:
        return config.steps_override
    if budget is None:
        budget = mixing_budget(d, start, config.epsilon, start_mass_lower_bound, cap)
    return budget.tau


def _run_chain(d: HomogeneousDistribution, start: Sequence[int], seed: int, chain_id: int, steps: int,
               log_mass=None) -> SampleResult:
    run = ChainRun(d, start, chain_stream(seed, chain_id), log_mass)
    run.run(steps)
    return SampleResult(run.current, run.step_count, run.accept_count, run.reject_infeasible_count, chain_id)


def sample(d: HomogeneousDistribution, start: Sequence[int], config: ChainConfig,
           budget: Optional[MixingBudget] = None, chain_id: int = 0,
           start_mass_lower_bound: Optional[float] = None, cap: int = ENUMERATION_CAP) -> SampleResult:
    """
    Runs one chain from start for the mixing budget (or config.steps_override) steps and returns its final state.
    Deterministic given (config.seed, chain_id)
    """
    steps = _resolve_steps(d, start, config, budget, start_mass_lower_bound, cap)
    return _run_chain(d, start, config.seed, chain_id, steps)


def _run_chunk(d: HomogeneousDistribution, start: Subset, seed: int, steps: int, chain_ids: List[int],
               cache_size: int) -> List[SampleResult]:
    # One memo per worker, shared by the chains of its chunk only
    log_mass = functools.lru_cache(maxsize=cache_size)(d.log_mass)
    return [_run_chain(d, start, seed, chain_id, steps, log_mass) for chain_id in chain_ids]


def sample_many(d: HomogeneousDistribution, start: Sequence[int], config: ChainConfig, num_samples: int,
                threads: int = 1, budget: Optional[MixingBudget] = None,
                start_mass_lower_bound: Optional[float] = None, cap: int = ENUMERATION_CAP,
                cache_size: int = MASS_CACHE_SIZE) -> List[SampleResult]:
    """
    num_samples independent chains, chain c on the sub-stream (config.seed, c).
    With threads > 1 the chains run on a process pool; results are returned in chain order either way,
    and are identical for every value of threads
    """
    start = tuple(start)
    steps = _resolve_steps(d, start, config, budget, start_mass_lower_bound, cap)
    chain_ids = list(range(num_samples))
    if threads <= 1 or num_samples <= 1:
        return _run_chunk(d, start, config.seed, steps, chain_ids, cache_size)

    n_chunks = min(num_samples, 4 * threads)
    chunks = [chain_ids[c::n_chunks] for c in range(n_chunks)]
    logger.info("Running %d chains of %d steps on %d workers", num_samples, steps, threads)
    results: List[Optional[SampleResult]] = [None] * num_samples
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_run_chunk, d, start, config.seed, steps, chunk, cache_size) for chunk in chunks]
        for future in futures:
            for result in future.result():
                results[result.chain_id] = result
    return results
