#!/usr/bin/env python3
"""
Command-line front end for the Bures-Wasserstein toolkit

Reads a JSON problem file (path or standard input), writes one JSON envelope to
standard output and logs to standard error.
"""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from typing import Any, TextIO

import coloredlogs

from barycentre import BarycenterConfig, barycenter
from bures_metric import bures_distance, fidelity, hellinger
from checks import PropertySuiteCoordinator, suite_failed
from config import AppConfig, get_config
from coupling import build_coupling, mc_coupling_value, mc_pair_cost
from envelopes import (
    barycenter_to_envelope,
    coupling_to_envelope,
    distance_to_envelope,
    dumps_envelope,
    error_to_envelope,
    estimate_to_envelope,
    fidelity_to_envelope,
    matrix_to_envelope,
    solution_diagnostics,
    suite_to_envelope,
)
from geodesics import geodesic, monotonicity_gap, wasserstein_mean
from loaders import ProblemFile, load_initial, load_problem, random_ensembles
from spd_core import BuresError, InvalidProblem, NotConverged

EXIT_OK = 0
EXIT_INTERNAL_ERROR = 1
EXIT_INVALID_INPUT = 2
EXIT_NOT_CONVERGED = 3
EXIT_SUITE_FAILED = 4

Envelope = dict[str, Any]


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser that raises instead of printing usage and exiting"""

    def error(self, message: str):
        raise InvalidProblem(f"{self.prog}: {message}")


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {value}")
    return value


def build_parser(config: AppConfig) -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="bures", description="Bures-Wasserstein geometry of SPD matrices")
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level on standard error")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("input", nargs="?", help="problem file (JSON); standard input when omitted or '-'")
        sub.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS)
        return sub

    add("dist", "Bures-Wasserstein distance between the first two matrices")
    add("fidelity", "fidelity between the first two matrices")
    add("mean", "Wasserstein mean of the first two matrices")

    sub = add("geodesic", "point at parameter t on the geodesic between the first two matrices")
    sub.add_argument("--t", type=float, required=True, help="parameter in [0, 1]")

    for name, help_text in (("barycenter", "Wasserstein barycentre"), ("couple", "optimal m-coupling")):
        sub = add(name, help_text)
        sub.add_argument("--tol", type=_positive_float, default=config.barycenter.tol)
        sub.add_argument("--max-iter", type=_positive_int, default=config.barycenter.max_iter)
        sub.add_argument("--initial", help="starting iterate: a matrix index or a problem file")

    sub = add("mc", "Monte Carlo estimate of the pair cost or the coupling value")
    sub.add_argument("--samples", type=_positive_int, default=config.monte_carlo.samples)
    sub.add_argument("--seed", type=_non_negative_int, default=config.monte_carlo.seed)
    sub.add_argument("--coupling", action="store_true", help="estimate the coupling value even for two matrices")

    sub = add("check", "run the property suites on the input, or on seeded random ensembles")
    sub.add_argument("--trials", type=_positive_int, default=config.check.trials)
    sub.add_argument("--seed", type=_non_negative_int, default=config.check.seed)
    return parser


def setup_logging(config: AppConfig, verbose: bool = False) -> None:
    coloredlogs.install(
        level="DEBUG" if verbose else config.logging.level,
        fmt=config.logging.format,
        stream=sys.stderr,
    )


def _first_two(problem: ProblemFile, command: str) -> ProblemFile:
    if len(problem) < 2:
        raise InvalidProblem(f"{command} needs two matrices, got {len(problem)}")
    if len(problem) > 2:
        logging.warning(f"{command} uses the first two of {len(problem)} matrices")
    return problem


def _barycenter_config(args: argparse.Namespace, config: AppConfig, problem: ProblemFile) -> BarycenterConfig:
    initial = load_initial(args.initial, problem) if args.initial is not None else None
    return BarycenterConfig(
        tol=args.tol,
        max_iter=args.max_iter,
        initial=initial,
        conditioning_limit=config.numerics.conditioning_limit,
    )


def run_dist(args: argparse.Namespace, config: AppConfig, problem: ProblemFile) -> tuple[Envelope, int]:
    a, b = _first_two(problem, "dist").psd(2)
    report = bures_distance(a, b, slack=config.numerics.discriminant_slack)
    return distance_to_envelope(report, hellinger(a, b)), EXIT_OK


def run_fidelity(args: argparse.Namespace, config: AppConfig, problem: ProblemFile) -> tuple[Envelope, int]:
    a, b = _first_two(problem, "fidelity").psd(2)
    report = bures_distance(a, b, slack=config.numerics.discriminant_slack)
    return fidelity_to_envelope(fidelity(a, b), report), EXIT_OK


def run_mean(args: argparse.Namespace, config: AppConfig, problem: ProblemFile) -> tuple[Envelope, int]:
    a, b = _first_two(problem, "mean").spd(2)
    diagnostics = {"t": 0.5, "monotonicity_gap": monotonicity_gap(a, b)}
    return matrix_to_envelope("mean", wasserstein_mean(a, b), diagnostics), EXIT_OK


def run_geodesic(args: argparse.Namespace, config: AppConfig, problem: ProblemFile) -> tuple[Envelope, int]:
    a, b = _first_two(problem, "geodesic").spd(2)
    point = geodesic(a, b).evaluate(args.t)
    diagnostics = {
        "t": args.t,
        "distance": bures_distance(a, b).d,
        "distance_from_start": bures_distance(a, point).d,
    }
    return matrix_to_envelope("geodesic", point, diagnostics), EXIT_OK


def run_barycenter(args: argparse.Namespace, config: AppConfig, problem: ProblemFile) -> tuple[Envelope, int]:
    weights = problem.resolved_weights()
    solution = barycenter(problem.spd(), weights, _barycenter_config(args, config, problem))
    return barycenter_to_envelope(solution, weights), EXIT_OK


def run_couple(args: argparse.Namespace, config: AppConfig, problem: ProblemFile) -> tuple[Envelope, int]:
    plan = build_coupling(
        problem.spd(), problem.resolved_weights(), _barycenter_config(args, config, problem), config.numerics.recon_tol
    )
    return coupling_to_envelope(plan), EXIT_OK


def run_mc(args: argparse.Namespace, config: AppConfig, problem: ProblemFile) -> tuple[Envelope, int]:
    matrices = problem.spd()
    mc = config.monte_carlo

    if len(matrices) == 2 and not args.coupling:
        a, b = matrices
        estimate = mc_pair_cost(a, b, args.samples, args.seed, mc.chunk_size, mc.workers)
        return estimate_to_envelope(estimate, "pair_cost", bures_distance(a, b).squared), EXIT_OK

    cfg = BarycenterConfig(
        tol=config.barycenter.tol,
        max_iter=config.barycenter.max_iter,
        conditioning_limit=config.numerics.conditioning_limit,
    )
    plan = build_coupling(matrices, problem.resolved_weights(), cfg, config.numerics.recon_tol)
    estimate = mc_coupling_value(
        plan, samples=args.samples, seed=args.seed, chunk_size=mc.chunk_size, workers=mc.workers
    )
    return estimate_to_envelope(estimate, "coupling_value", plan.optimal_value), EXIT_OK


def run_check(args: argparse.Namespace, config: AppConfig, problem: ProblemFile | None) -> tuple[Envelope, int]:
    ensembles = [problem] if problem is not None else random_ensembles(args.trials, args.seed)
    entries, summary = PropertySuiteCoordinator().run_all(ensembles, seed=args.seed)
    return suite_to_envelope(entries, summary), EXIT_SUITE_FAILED if suite_failed(summary) else EXIT_OK


COMMANDS: dict[str, Callable[..., tuple[Envelope, int]]] = {
    "dist": run_dist,
    "fidelity": run_fidelity,
    "mean": run_mean,
    "geodesic": run_geodesic,
    "barycenter": run_barycenter,
    "couple": run_couple,
    "mc": run_mc,
    "check": run_check,
}


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    """
    Run one subcommand and print its envelope

    Args:
        argv: Arguments without the program name (sys.argv[1:] when None)
        stdin: Stream for problem files given as '-' or omitted
        stdout: Stream for the envelope

    Returns:
        Exit code: 0 success, 1 unexpected error, 2 invalid input, 3 no convergence, 4 property suite failure
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    config = get_config()
    command = next((a for a in argv if a in COMMANDS), argv[0] if argv else "")

    try:
        args = build_parser(config).parse_args(argv)
    except SystemExit as e:
        # --help
        return int(e.code or 0)
    except InvalidProblem as e:
        setup_logging(config)
        logging.error(f"Invalid arguments: {e}")
        print(dumps_envelope(error_to_envelope(command, e)), file=stdout)
        return EXIT_INVALID_INPUT

    setup_logging(config, args.verbose)
    command = args.command
    logging.debug(f"Running {command} with {vars(args)}")

    try:
        if command == "check" and args.input is None:
            problem = None
        else:
            problem = load_problem(args.input, stream=stdin)
        envelope, code = COMMANDS[command](args, config, problem)

    except NotConverged as e:
        logging.error(f"{command}: {e}")
        diagnostics = solution_diagnostics(e.solution) if e.solution is not None else None
        print(dumps_envelope(error_to_envelope(command, e, diagnostics)), file=stdout)
        return EXIT_NOT_CONVERGED
    except BuresError as e:
        logging.error(f"{command}: invalid input: {e}")
        print(dumps_envelope(error_to_envelope(command, e)), file=stdout)
        return EXIT_INVALID_INPUT
    except Exception as e:
        logging.error(f"{command}: unexpected error: {e}", exc_info=True)
        print(dumps_envelope(error_to_envelope(command, BuresError(str(e)))), file=stdout)
        return EXIT_INTERNAL_ERROR

    print(dumps_envelope(envelope), file=stdout)
    if code == EXIT_OK:
        logging.info(f"{command} finished successfully")
    else:
        logging.error(f"{command} finished with exit code {code}")
    return code


if __name__ == "__main__":
    sys.exit(run())
