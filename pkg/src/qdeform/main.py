#!/usr/bin/env python3
"""
qdeform command line.

Parses arguments, loads a job (preset or job file), runs the requested
command on the engine in a worker thread and prints a deterministic report.
Exit status: 0 when every check passes, 1 when a check fails, 2 on errors.
"""

import argparse
import asyncio
import sys
from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence

from dotenv import load_dotenv

# Performance optimization: Use uvloop for better async performance on Unix systems
try:
    import uvloop
    if sys.platform != "win32":
        asyncio.set_event_loop_policy(uvloop.EventLoopPolicy())
except ImportError:
    # uvloop not available, continue with default event loop
    pass

from aiologger import Logger

from .algebra.bosonize import check_hopf_axioms
from .algebra.braided import check_commutator_identity, find_primitives
from .algebra.deform import (A_NAME, H_NAME, HLAMBDA_NAME, DeformedPresentation, DimsTable, basis_monomials,
                             comodule_check, graded_dims, verify_cocycle)
from .algebra.double import build_double, generator_products, quotient_central, verify_double
from .algebra.groebner import Presentation, check_confluence, complete
from .algebra.report import CheckReport, QDeformError
from .algebra.scalars import CYCLOTOMIC
from .logger import setup_logging
from .utils.config import QDeformConfig, get_config, load_config_from_env
from .utils.expressions import parse_poly
from .utils.spec_loader import JobSpec, load_spec_async
from .views.report_view import ReportView, make_console

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2

COMMANDS = ("build", "reduce", "dims", "primitives", "deform", "double", "verify")
VERIFY_TARGETS = ("hopf", "cocycle", "double", "confluence", "all")
ALGEBRAS = (H_NAME, HLAMBDA_NAME, A_NAME)


@dataclass
class RunOptions:
    """Command and flags, independent of argparse."""
    command: str
    target: Optional[str] = None
    max_degree: Optional[int] = None
    emit: Optional[str] = None
    quotient: bool = False
    verify: bool = False
    verbose: bool = False
    expression: Optional[str] = None
    algebra: str = HLAMBDA_NAME
    degree: Optional[int] = None
    shared_group: bool = False


@dataclass
class CommandResult:
    """Everything a command prints: plain lines, an optional dims table and check reports."""
    lines: List[str] = field(default_factory=list)
    dims: Optional[DimsTable] = None
    reports: List[CheckReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.passed else EXIT_CHECK_FAILED


def _build_degree(job: JobSpec, options: RunOptions) -> int:
    return options.max_degree if options.max_degree is not None else job.degree


def _check_degree(options: RunOptions, default: int, build: int) -> int:
    wanted = options.max_degree if options.max_degree is not None else default
    return min(wanted, build)


def _presentations(dp: DeformedPresentation) -> List[Presentation]:
    return [dp.H.pres, dp.Hlambda.pres, dp.A]


def _verify_hopf(dp: DeformedPresentation, D: int) -> List[CheckReport]:
    return [check_hopf_axioms(dp.H, D), check_hopf_axioms(dp.Hlambda, D), check_commutator_identity(dp.datum)]


def _verify_confluence(dp: DeformedPresentation, D: int) -> List[CheckReport]:
    return [check_confluence(pres, D) for pres in _presentations(dp)]


def _verify_cocycle(dp: DeformedPresentation, D: int) -> List[CheckReport]:
    _, report = verify_cocycle(dp, D)
    return [comodule_check(dp, D), report]


def _verify_double(job: JobSpec, dp: DeformedPresentation, D: int, max_total: int) -> List[CheckReport]:
    tau = job.pairing(D)
    dpres = build_double(tau, D)
    return [verify_double(tau, dpres, dp, max_total)]


def run(job: JobSpec, options: RunOptions, config: Optional[QDeformConfig] = None) -> CommandResult:
    """Run one command on a job. Synchronous; engine errors propagate as QDeformError."""
    config = config or get_config()
    engine = config.engine
    result = CommandResult()
    D = _build_degree(job, options)
    command = options.command

    if command == "primitives":
        n = options.degree if options.degree is not None else 2
        free = complete(Presentation.free(job.datum), n)
        primitives = find_primitives(free, None, n)
        result.lines.append(f"# primitives of degree {n} in T(V): {len(primitives)}")
        result.lines.extend(p.render() for p in primitives)
        return result

    dp = job.deformation(D)

    if command == "build":
        for pres in _presentations(dp):
            if options.emit == "rules":
                result.lines.append(f"# {pres.name} ({len(pres.rules)} rules)")
                result.lines.extend(pres.render_rules())
            else:
                result.lines.append(f"{pres.name}: {len(pres.rules)} rules, confluent to degree "
                                    f"{pres.confluence_checked_to}")
    elif command == "reduce":
        if options.algebra not in ALGEBRAS:
            raise QDeformError(f"unknown algebra {options.algebra!r}; choose from {', '.join(ALGEBRAS)}")
        pres = {H_NAME: dp.H.pres, HLAMBDA_NAME: dp.Hlambda.pres, A_NAME: dp.A}[options.algebra]
        p = parse_poly(options.expression or "", pres.datum)
        result.lines.append(pres.reduce(p).render())
    elif command == "dims":
        result.dims = graded_dims(dp, D)
    elif command == "deform":
        check = _check_degree(options, engine.cocycle_degree, D)
        sigma, report = verify_cocycle(dp, check)
        if options.emit == "cocycle":
            result.lines.extend(sigma.render_entries(basis_monomials(dp.H, check), check))
        result.reports.append(report)
    elif command == "double":
        Dd = _check_degree(options, engine.double_degree, D)
        tau = job.pairing(Dd)
        dpres = build_double(tau, Dd)
        result.lines.append(f"# {dpres.pres.name} ({len(dpres.pres.rules)} rules)")
        result.lines.extend(generator_products(dpres))
        if options.quotient:
            quotient = quotient_central(dpres)
            result.lines.append(f"# {quotient.name} ({len(quotient.pres.rules)} rules)")
            result.lines.extend(quotient.pres.render_rules())
        if options.verify:
            result.reports.append(verify_double(tau, dpres, dp, min(D, engine.cocycle_degree)))
    elif command == "verify":
        target = options.target or "all"
        if target in ("hopf", "all"):
            result.reports.extend(_verify_hopf(dp, _check_degree(options, engine.hopf_degree, D)))
        if target in ("confluence", "all"):
            result.reports.extend(_verify_confluence(dp, _check_degree(options, engine.confluence_degree, D)))
        if target in ("cocycle", "all"):
            result.reports.extend(_verify_cocycle(dp, _check_degree(options, engine.cocycle_degree, D)))
        if target in ("double", "all"):
            result.reports.extend(_verify_double(job, dp, _check_degree(options, engine.double_degree, D),
                                                 _check_degree(options, engine.cocycle_degree, D)))
    else:
        raise QDeformError(f"unknown command {command!r}")
    return result


class JobRunner:
    """Loads a job, runs a command off the event loop and logs what happened."""

    def __init__(self, config: Optional[QDeformConfig] = None, logger: Logger = None):
        self.config = config or get_config()
        self.logger = logger or setup_logging(self.config.logging.level, self.config.logging.log_dir,
                                              self.config.logging.enabled, self.config.logging.backup_count,
                                              self.config.logging.format)

    async def load(self, source: str, options: Optional[RunOptions] = None) -> JobSpec:
        job = await load_spec_async(source, self.config.engine.default_degree)
        engine = self.config.engine
        if job.field.kind == CYCLOTOMIC and job.degree < engine.root_of_unity_degree:
            job = job.with_degree(engine.root_of_unity_degree)
        if options is not None and options.shared_group and not job.shared_group:
            job = replace(job, shared_group=True, flags=dict(job.flags))
        return job

    async def run(self, source: str, options: RunOptions) -> CommandResult:
        await self.logger.info(f"job start: command={options.command} target={options.target} "
                               f"source={source} max_degree={options.max_degree}")
        try:
            job = await self.load(source, options)
            await self.logger.debug(f"job {job.name}: {job.datum.size} letters, "
                                    f"components {', '.join(job.components)}, degree {job.degree}")
            result = await asyncio.to_thread(run, job, options, self.config)
        except QDeformError as exc:
            await self.logger.error(f"{type(exc).__name__}: {exc}")
            raise
        for report in result.reports:
            counts = ", ".join(f"{axiom} {b['pass']}/{b['pass'] + b['fail']}"
                               for axiom, b in report.summary().items())
            await self.logger.info(f"{report.title}: {'PASS' if report.passed else 'FAIL'} ({counts})")
        await self.logger.info(f"job done: exit {result.exit_code}")
        return result


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdeform",
        description="Exact cocycle deformations of pointed Hopf algebras and their doubles.")
    commands = parser.add_subparsers(dest="command", required=True)

    def add_job(sub: argparse.ArgumentParser) -> None:
        source = sub.add_mutually_exclusive_group(required=True)
        source.add_argument("--preset", help="built-in job, e.g. sl2, sl3-zero, uq-sl2-N5")
        source.add_argument("--spec", help="path to a job file")
        sub.add_argument("--max-degree", type=int, dest="max_degree", help="degree bound D")
        sub.add_argument("--verbose", action="store_true", help="print every check line")
        sub.add_argument("--shared-group", action="store_true", dest="shared_group",
                         help="identify the dual group with a renamed copy of Gamma")

    add_job(sub := commands.add_parser("build", help="complete the rule sets of H, H^lambda and A"))
    sub.add_argument("--emit", choices=("rules",))

    add_job(sub := commands.add_parser("reduce", help="normal form of an expression"))
    sub.add_argument("expression")
    sub.add_argument("--algebra", choices=ALGEBRAS, default=HLAMBDA_NAME)

    add_job(sub := commands.add_parser("dims", help="graded dimensions of H and H^lambda"))
    sub.add_argument("--emit", choices=("dims",))

    add_job(sub := commands.add_parser("primitives", help="primitive elements of T(V) in one degree"))
    sub.add_argument("--degree", type=int, required=True)

    add_job(sub := commands.add_parser("deform", help="extract the cocycle sigma and check it"))
    sub.add_argument("--emit", choices=("cocycle",))

    add_job(sub := commands.add_parser("double", help="build the generalized quantum double"))
    sub.add_argument("--quotient", action="store_true", help="also print the central quotient")
    sub.add_argument("--verify", action="store_true", help="run the double checks")

    add_job(sub := commands.add_parser("verify", help="run a check suite"))
    sub.add_argument("target", choices=VERIFY_TARGETS)
    return parser


def options_from_args(args: argparse.Namespace) -> RunOptions:
    return RunOptions(
        command=args.command,
        target=getattr(args, "target", None),
        max_degree=args.max_degree,
        emit=getattr(args, "emit", None),
        quotient=getattr(args, "quotient", False),
        verify=getattr(args, "verify", False),
        verbose=args.verbose,
        expression=getattr(args, "expression", None),
        algebra=getattr(args, "algebra", HLAMBDA_NAME),
        degree=getattr(args, "degree", None),
        shared_group=args.shared_group,
    )


async def main_async(argv: Optional[Sequence[str]] = None, config: Optional[QDeformConfig] = None,
                     logger: Logger = None, view: Optional[ReportView] = None) -> int:
    args = build_parser().parse_args(argv)
    config = config or get_config()
    options = options_from_args(args)
    view = view or ReportView(make_console(use_color=config.output.use_color),
                              verbose=args.verbose or config.output.verbose)
    if args.max_degree is not None and args.max_degree < 2:
        view.error(f"--max-degree must be at least 2, got {args.max_degree}")
        return EXIT_ERROR
    runner = JobRunner(config, logger)
    source = args.preset or args.spec
    try:
        result = await runner.run(source, options)
    except QDeformError as exc:
        view.error(str(exc))
        return EXIT_ERROR
    finally:
        if logger is None:
            await runner.logger.shutdown()
    view.lines(result.lines)
    if result.dims is not None:
        view.dims(result.dims, emit=options.emit == "dims")
    for report in result.reports:
        view.report(report)
    return result.exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point."""
    # Load environment variables
    load_dotenv()
    config = load_config_from_env()
    try:
        return asyncio.run(main_async(argv, config))
    except KeyboardInterrupt:
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
