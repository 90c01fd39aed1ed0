# src/cli/main.py
"""griesmer-lab command line: bounds, constructions, analysis, search, verification and reports."""
import argparse
import logging
import sys
from pathlib import Path

import pandas as pd

from src.boundtab import (
    VerificationReport,
    report,
    run_bound_b_suite,
    run_lemma_suite,
    run_n2_8_suite,
    run_plotkin_suite,
)
from src.buildkit import ConstructionRecipe, build, format_hadamard
from src.cli.config import LabConfig, load_config
from src.cli.reports import render, table1
from src.cli.schemas import AnalysisDocument, BoundComparison
from src.codekit import GeneratorMatrix, analyze, read_code, write_code
from src.errors import BudgetExceeded, CodeFileError, GriesmerLabError
from src.optsearch import (
    classify_optimal_four,
    max_code_size,
    min_length_exhaustive,
    min_length_systematic,
    verify_counterexample,
    verify_griesmer_family,
    verify_n4,
    verify_n8,
)

logger = logging.getLogger("cli")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONSTRUCTION = 3
EXIT_PARSE = 4
EXIT_BUDGET = 5
EXIT_ASSERTION = 6


# -----------------------------
# Argument parser
# -----------------------------
def _size_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int, help="Combinatorial dimension")
    group.add_argument("--M", type=int, help="Number of codewords")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="griesmer-lab", description="Bounds, constructions and searches for short codes.")
    parser.add_argument("--config", type=str, default=None, help="Path to lab_config.yaml")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    bounds = commands.add_parser("bounds", help="Length lower bounds for (q, k, d) or (q, M, d)")
    bounds.add_argument("--q", type=int, required=True)
    bounds.add_argument("--d", type=int, required=True)
    _size_flags(bounds)
    bounds.add_argument("--json", action="store_true")

    construct = commands.add_parser("construct", help="Build a code or Hadamard matrix and write it to a file")
    families = construct.add_subparsers(dest="family", required=True)
    for name, flags in {
        "simplex": ["--k"],
        "dim3": ["--d"],
        "hadamard": ["--order"],
        "levenshtein": ["--order"],
        "counterexample": ["--k"],
        "simplex-seq": ["--k", "--h"],
    }.items():
        sub = families.add_parser(name)
        for flag in flags:
            sub.add_argument(flag, type=int, required=True)
        if name == "levenshtein":
            sub.add_argument("--size", type=int, default=None, help="Number of words (default: order)")
        if name == "counterexample":
            sub.add_argument("--punctured", action="store_true", help="Drop the last coordinate")
        sub.add_argument("--out", type=str, required=True, help="Output file")

    analyze_cmd = commands.add_parser("analyze", help="Parameters of a codefile and how it compares with the bounds")
    analyze_cmd.add_argument("path", type=str)
    analyze_cmd.add_argument("--json", action="store_true")

    search = commands.add_parser("search", help="Exhaustive minimum-length search")
    search.add_argument("--q", type=int, required=True)
    search.add_argument("--d", type=int, required=True)
    _size_flags(search)
    search.add_argument("--systematic", action="store_true", help="Restrict to codes systematic on k coordinates")
    search.add_argument("--n-limit", type=int, default=None, help="Largest length searched")
    search.add_argument("--length", type=int, default=None, help="Decide whether M words fit at exactly this length")
    search.add_argument("--hint", type=str, default=None, help="Codefile used as an upper bound for systematic searches")
    search.add_argument("--budget-nodes", type=int, default=None)
    search.add_argument("--budget-seconds", type=float, default=None)
    search.add_argument("--out", type=str, default=None, help="Write the witness here")
    search.add_argument("--json", action="store_true")

    verify = commands.add_parser("verify", help="Run a verification suite")
    suites = verify.add_subparsers(dest="suite", required=True)
    lemmas = suites.add_parser("lemmas")
    lemmas.add_argument("--rmax", type=int, default=12)
    lemmas.add_argument("--kmax", type=int, default=12)
    lemmas.add_argument("--dmax", type=int, default=512)
    for name, default in (("n4", 6), ("n8", 6), ("optimal4", 6)):
        suites.add_parser(name).add_argument("--dmax", type=int, default=default)
    family = suites.add_parser("griesmer-family")
    family.add_argument("--q", type=int, required=True)
    family.add_argument("--d", type=int, required=True)
    family.add_argument("--kmax", type=int, default=8)
    counter = suites.add_parser("counterexample")
    counter.add_argument("--k", type=int, required=True)
    for sub in suites.choices.values():
        sub.add_argument("--json", action="store_true")
    for name in ("n4", "n8", "griesmer-family"):
        suites.choices[name].add_argument("--budget-nodes", type=int, default=None)
        suites.choices[name].add_argument("--budget-seconds", type=float, default=None)

    report_cmd = commands.add_parser("report", help="Reproduce a published table")
    tables = report_cmd.add_subparsers(dest="table", required=True)
    tables.add_parser("table1").add_argument("--json", action="store_true")
    return parser


def parse_args(argv=None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


# -----------------------------
# Commands
# -----------------------------
def _print_table(records: list[dict]) -> None:
    if records:
        print(pd.DataFrame(records).to_string(index=False))


def cmd_bounds(args: argparse.Namespace, config: LabConfig) -> int:
    result = report(args.q, args.d, k=args.k, M=args.M)
    if args.json:
        print(result.to_json())
        return EXIT_OK
    _print_table([e.model_dump(by_alias=True) for e in result.entries])
    best = result.best
    print(f"best: any={best.any} systematic={best.systematic} linear={best.linear}")
    griesmer = result.entry("griesmer")
    if griesmer is not None and griesmer.bound_class == "linear" and best.systematic < griesmer.value:
        print(f"note: Griesmer {griesmer.value} holds for linear codes; best systematic bound is {best.systematic}")
    return EXIT_OK


def _recipe(args: argparse.Namespace) -> ConstructionRecipe:
    family = {"simplex-seq": "simplex_sequence"}.get(args.family, args.family)
    if getattr(args, "punctured", False):
        family = "punctured_counterexample"
    parameters = {
        name: getattr(args, name) for name in ("k", "d", "h", "order", "size") if getattr(args, name, None) is not None
    }
    if family == "hadamard":
        parameters = {"n": parameters["order"]}
    return ConstructionRecipe(family=family, parameters=parameters, provenance="command line")


def cmd_construct(args: argparse.Namespace, config: LabConfig) -> int:
    built = build(_recipe(args))
    if args.family == "hadamard":
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(format_hadamard(built))
        logger.info(f"Wrote Hadamard matrix of order {built.order} to {out}")
        print(f"Hadamard matrix of order {built.order} via {built.recipe.describe()}")
        return EXIT_OK
    code = built.span() if isinstance(built, GeneratorMatrix) else built
    write_code(code, args.out)
    print(analyze(code).summary())
    return EXIT_OK


def _compare(code_n: int, bounds) -> list[BoundComparison]:
    return [
        BoundComparison(bound=e.bound, bound_class=e.bound_class, value=e.value, observed=code_n, margin=code_n - e.value)
        for e in bounds.entries
    ]


def cmd_analyze(args: argparse.Namespace, config: LabConfig) -> int:
    code = read_code(args.path)
    analysis = analyze(code)
    params = analysis.params
    bounds = None
    if params.d >= 1:
        bounds = report(params.q, params.d, k=params.k) if params.k else report(params.q, params.d, M=params.M)
    doc = AnalysisDocument(analysis=analysis, bounds=bounds, comparisons=_compare(params.n, bounds) if bounds else [])
    if args.json:
        print(doc.model_dump_json(indent=2, by_alias=True))
        return EXIT_OK
    line = analysis.summary()
    if doc.griesmer_line():
        line += f"; {doc.griesmer_line()}"
    print(line)
    _print_table([{**c.model_dump(by_alias=True), "verdict": c.verdict()} for c in doc.comparisons])
    return EXIT_OK


def cmd_search(args: argparse.Namespace, config: LabConfig) -> int:
    budget = config.search.budget(args.budget_nodes, args.budget_seconds)
    workers = config.resolved_workers()
    if args.systematic:
        if args.k is None:
            raise ValueError("--systematic needs --k")
        hint = read_code(args.hint) if args.hint else None
        n_limit = args.n_limit or (hint.n if hint else None)
        if n_limit is None:
            raise ValueError("--n-limit is required")
        result = min_length_systematic(args.q, args.k, args.d, n_limit, budget=budget, workers=workers, hint=hint)
    else:
        size = args.M if args.M is not None else args.q**args.k
        if args.length is not None:
            result = max_code_size(
                args.q, args.length, args.d, size, budget=budget, workers=workers, max_vertices=config.search.max_vertices
            )
        elif args.n_limit is None:
            raise ValueError("--n-limit or --length is required")
        else:
            result = min_length_exhaustive(
                args.q, size, args.d, args.n_limit, budget=budget, workers=workers, max_vertices=config.search.max_vertices
            )
    if args.out and result.witness is not None and result.found:
        write_code(result.witness, args.out)
    if args.json:
        print(result.model_dump_json(indent=2))
    else:
        print(f"status: {result.status}")
        print(f"value: {result.value}")
        print(f"nodes: {result.nodes_explored}  duration: {result.duration_ms:.1f} ms")
        if result.lower_bound is not None:
            print(f"lower bound: {result.lower_bound}")
        if result.witness is not None and result.found:
            print(f"witness: {result.witness}")
    return EXIT_BUDGET if result.status == "budget_exceeded" else EXIT_OK


def _finish(report_: VerificationReport, as_json: bool, message: str = "") -> int:
    if as_json:
        print(report_.model_dump_json(indent=2))
    else:
        print(f"{report_.name}: {'pass' if report_.passed else 'FAIL'} ({report_.checks} checks)")
        for failure in report_.failures:
            print(f"  failed: {failure}")
        if report_.passed and message:
            print(message)
    return EXIT_OK if report_.passed else EXIT_ASSERTION


def cmd_verify(args: argparse.Namespace, config: LabConfig) -> int:
    workers = config.resolved_workers()
    suite = args.suite
    if suite == "lemmas":
        result = run_lemma_suite(r_max=args.rmax, k_max=args.kmax, d_max=args.dmax)
        for extra in (run_plotkin_suite(), run_bound_b_suite(), run_n2_8_suite()):
            result.merge(extra)
        return _finish(result, args.json)
    if suite in ("n4", "n8"):
        budget = config.search.budget(args.budget_nodes, args.budget_seconds)
        verify = verify_n4 if suite == "n4" else verify_n8
        return _finish(verify(args.dmax, budget=budget, workers=workers), args.json)
    if suite == "optimal4":
        result = VerificationReport(name="optimal4", passed=True)
        for d in range(1, args.dmax + 1):
            classified = classify_optimal_four(
                d, exact_product=config.canonical.exact_product, max_states=config.canonical.max_states
            )
            result.record(classified.all_linear, f"d={d}: a nonlinear ({classified.n}, 4, {d}) code exists")
            result.details[str(d)] = classified.count_up_to_equivalence
        return _finish(result, args.json, "all optimal size-4 codes linear")
    if suite == "griesmer-family":
        budget = config.search.budget(args.budget_nodes, args.budget_seconds)
        family = verify_griesmer_family(args.q, args.d, args.kmax, budget=budget, workers=workers)
        if args.json:
            print(family.model_dump_json(indent=2))
        else:
            _print_table([e.model_dump(exclude={"witness"}) for e in family.entries])
        if any(e.status == "budget_exceeded" for e in family.entries):
            return EXIT_BUDGET
        return EXIT_OK if all(e.status in ("confirmed", "out_of_range") for e in family.entries) else EXIT_ASSERTION
    if suite == "counterexample":
        result = verify_counterexample(args.k)
        return _finish(result, args.json, result.details.get("comparison", ""))
    raise ValueError(f"Unsupported verification suite: {suite}")


def cmd_report(args: argparse.Namespace, config: LabConfig) -> int:
    doc = table1()
    print(doc.model_dump_json(indent=2) if args.json else render(doc))
    return EXIT_ASSERTION if doc.failures else EXIT_OK


COMMANDS = {
    "bounds": cmd_bounds,
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "search": cmd_search,
    "verify": cmd_verify,
    "report": cmd_report,
}

# exit code for library errors, per command
FAILURE_CODES = {"construct": EXIT_CONSTRUCTION, "analyze": EXIT_PARSE}


# -----------------------------
# Main logic
# -----------------------------
def main(args: argparse.Namespace) -> int:
    try:
        config = load_config(args.config)
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    level = logging.DEBUG if args.verbose else config.logging.level
    logging.basicConfig(level=level, format=config.logging.format)

    try:
        return COMMANDS[args.command](args, config)
    except BudgetExceeded as e:
        logger.warning(f"{e} (nodes explored: {e.nodes})")
        return EXIT_BUDGET
    except CodeFileError as e:
        logger.error(f"Parse error: {e}")
        return EXIT_PARSE
    except OSError as e:
        logger.error(str(e))
        return FAILURE_CODES.get(args.command, EXIT_USAGE)
    except (GriesmerLabError, ValueError) as e:
        logger.error(f"{args.command} failed: {e}")
        return FAILURE_CODES.get(args.command, EXIT_USAGE)


def run(argv=None) -> int:
    return main(parse_args(argv))


if __name__ == "__main__":
    sys.exit(run())
