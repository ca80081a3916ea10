import os
import sys
from argparse import ArgumentParser
from pathlib import Path

from Common import InputError, SamplerError, configure_logging
from Common.config import ENUMERATION_CAP, PSD_RTOL
from CommandLine import ModelSpec, cmd_diagnose, cmd_init, cmd_sample
from CommandLine.model_loading import MODEL_KINDS

# Exit codes: 0 ok, 1 failed diagnostics check, 2 parse/input error, 3 domain error,
# 4 capacity error, 5 numerical error


def _add_model_arguments(parser: ArgumentParser) -> None:
    parser.add_argument("--model", choices=MODEL_KINDS, required=True)
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--ensemble", type=Path, help="kdpp: n x n ensemble matrix L, one row per line")
    source.add_argument("--features", type=Path, help="kdpp: n x m feature matrix X, L = X X^T")
    source.add_argument("--table", type=Path, help="table: 'i1;...;ik,weight' per line")
    source.add_argument("--graph", type=Path, help="spanning-tree: 'u,v,weight' per line")
    parser.add_argument("--k", type=int, help="Subset size (required for kdpp)")
    parser.add_argument("--cap", type=int, default=ENUMERATION_CAP,
                        help="Largest number of subsets exact computations may enumerate")
    parser.add_argument("--psd-rtol", type=float, default=PSD_RTOL,
                        help="Relative pivot tolerance below which a determinant counts as zero")
    parser.add_argument("--output", type=Path, help="Output file (default: stdout)")
    parser.add_argument("-v", "--verbose", action='count', default=0)


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(description="Exchange-walk sampler for homogeneous strongly Rayleigh distributions")
    commands = parser.add_subparsers(dest="command", required=True)

    sample_parser = commands.add_parser("sample", help="Draw approximate samples with the base-exchange chain")
    _add_model_arguments(sample_parser)
    sample_parser.add_argument("--epsilon", type=float, default=0.01, help="Total variation target")
    sample_parser.add_argument("--num-samples", metavar='N', type=int, default=1,
                               help="Number of independent chains, one sample each")
    sample_parser.add_argument("--seed", type=int, default=0)
    sample_parser.add_argument("--steps", type=int, help="Run exactly this many steps per chain")
    sample_parser.add_argument("--start", help="Comma-separated start subset (default: the initializer's)")
    sample_parser.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    diagnose_parser = commands.add_parser("diagnose", help="Exact mixing and negative-dependence checks")
    _add_model_arguments(diagnose_parser)
    diagnose_parser.add_argument("--epsilon", type=float, default=0.01)
    diagnose_parser.add_argument("--start", help="Comma-separated start subset (default: the initializer's)")

    init_parser = commands.add_parser("init", help="Print the start state the sampler would use")
    _add_model_arguments(init_parser)
    return parser


def _model_spec(args) -> ModelSpec:
    path = args.ensemble or args.features or args.table or args.graph
    expected = {'kdpp': ('ensemble', 'features'), 'table': ('table',), 'spanning-tree': ('graph',)}[args.model]
    if not any(getattr(args, name) for name in expected):
        flags = ' or '.join(f'--{name}' for name in expected)
        raise InputError(f"--model {args.model} reads its input from {flags}")
    return ModelSpec(args.model, path, args.k, features=args.features is not None)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        model = _model_spec(args)
        if args.command == 'sample':
            return cmd_sample(model, args.epsilon, args.num_samples, args.seed, args.steps, args.start,
                              args.threads, args.output, args.cap, args.psd_rtol)
        if args.command == 'diagnose':
            return cmd_diagnose(model, args.epsilon, args.start, args.output, args.cap, args.psd_rtol)
        return cmd_init(model, args.output, args.cap, args.psd_rtol)
    except SamplerError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == '__main__':
    sys.exit(main())
