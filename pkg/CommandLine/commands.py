import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Optional, TextIO

from Common.config import ENUMERATION_CAP, PSD_RTOL
from Common.errors import InputError
from Common.serialization import dumps
from CommandLine.model_loading import ModelSpec, load_model, parse_start
from Diagnostics import diagnose
from Distributions import count_candidates
from MarkovChain import ChainConfig, mixing_budget, sample_many
from StartState import initialize


@contextmanager
def _open_output(output_path: Optional[Path]) -> TextIO:
    if output_path is None:
        yield sys.stdout
    else:
        with open(output_path, 'w', newline='\n') as f:
            yield f


def cmd_sample(model: ModelSpec, epsilon: float, num_samples: int, seed: int, steps: Optional[int] = None,
               start: Optional[str] = None, threads: int = 1, output_path: Optional[Path] = None,
               cap: int = ENUMERATION_CAP, psd_rtol: float = PSD_RTOL) -> int:
    """ Writes one JSON line per independent chain: {"subset": [...], "steps": t, "accepts": a} """
    if num_samples < 1:
        raise InputError(f"--num-samples must be at least 1, got {num_samples}")
    config = ChainConfig(epsilon=epsilon, seed=seed, steps_override=steps)
    d = load_model(model, psd_rtol)

    start_subset = parse_start(start, d)
    lower_bound = None
    if start_subset is None:
        report = initialize(d, cap)
        start_subset = report.subset
        lower_bound = report.start_mass_lower_bound(d.n, d.k)

    budget = None
    if steps is None:
        budget = mixing_budget(d, start_subset, epsilon, lower_bound, cap)
    print(f"\n -- Sampling {num_samples} chains on {d!r} from {list(start_subset)} -- ", file=sys.stderr)
    if budget is not None:
        print(f"C_mu: {budget.c_mu:.6g} ({budget.c_mu_source}), mu(S0): {budget.mu_start_normalized:.6g}, "
              f"epsilon: {epsilon}, steps per chain: {budget.tau}", file=sys.stderr)
    else:
        print(f"Steps per chain (override): {steps}", file=sys.stderr)

    results = sample_many(d, start_subset, config, num_samples, threads=threads, budget=budget, cap=cap)
    with _open_output(output_path) as out:
        for result in results:
            record = result.to_record()
            record["subset"] = list(d.to_labels(result.subset))
            out.write(dumps(record) + '\n')

    total_steps = sum(r.steps for r in results)
    if total_steps:
        accepts = sum(r.accepts for r in results)
        infeasible = sum(r.rejected_infeasible for r in results)
        print(f"Acceptance rate: {accepts / total_steps:.4f}, infeasible proposals: {infeasible / total_steps:.4f}, "
              f"distinct samples: {len(set(r.subset for r in results))}", file=sys.stderr)
    return 0


def cmd_init(model: ModelSpec, output_path: Optional[Path] = None, cap: int = ENUMERATION_CAP,
             psd_rtol: float = PSD_RTOL) -> int:
    d = load_model(model, psd_rtol)
    report = initialize(d, cap)
    record = report.to_record()
    record["subset"] = list(d.to_labels(report.subset))
    with _open_output(output_path) as out:
        out.write(dumps(record) + '\n')
    return 0


def cmd_diagnose(model: ModelSpec, epsilon: float, start: Optional[str] = None, output_path: Optional[Path] = None,
                 cap: int = ENUMERATION_CAP, psd_rtol: float = PSD_RTOL) -> int:
    """ Writes the diagnostics report; returns 1 when any check fails """
    d = load_model(model, psd_rtol)
    print(f"\n -- Diagnosing {d!r}: {count_candidates(d)} candidate subsets -- ", file=sys.stderr)
    report = diagnose(d, epsilon, parse_start(start, d), cap)
    with _open_output(output_path) as out:
        out.write(dumps(report.to_record()) + '\n')

    print(f"lambda: {report.poincare:.6g}, C_mu: {report.c_mu:.6g}, tau: {report.tau_bound}, "
          f"TV at tau: {report.tv_at_tau:.3e}, support: {report.support_size}", file=sys.stderr)
    if report.failed_checks:
        print(f"Failed checks: {', '.join(report.failed_checks)}", file=sys.stderr)
        return 1
    print("All checks passed", file=sys.stderr)
    return 0
