"""
Command line: `check`, `export-diagram` and `cocycle`.

Exit codes are 0 when everything passes, 1 on violations and 2 on input errors.
Reports go to stdout or --out; logging goes to stderr.
"""

import argparse
import logging
import re
import sys
from pathlib import Path
from typing import List, Optional

import numpy as np

from m2c.builtin.instances.cochains import all_cochains, enumerate_cocycles, failing_tuples, is_cocycle
from m2c.builtin.instances.groups import FiniteAbelianGroup
from m2c.builtin.instances.skeletal import build_scalar_instance, omega_of
from m2c.core.errors import INPUT_ERRORS, ValidationError
from m2c.core.report import summarize
from m2c.core.settings import Settings
from m2c.io.dot import export_diagram
from m2c.io.instance_file import parse_instance
from m2c.io.report_file import FORMATS, render_report
from m2c.suite import SUITES, run_all, stasheff_pass_set

logger = logging.getLogger("m2c")

EXIT_PASS = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT = 2


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info("Wrote %s.", out)
    else:
        sys.stdout.write(text)


def _group(spec: str, what: str) -> FiniteAbelianGroup:
    try:
        return FiniteAbelianGroup.parse(spec)
    except ValueError as e:
        raise ValidationError(what, str(e))


#region Verbs

def cmd_check(args) -> int:
    inst = parse_instance(args.path)
    if args.model and inst.kind != args.model:
        raise ValidationError("model", f"file holds a {inst.kind} instance, not {args.model}")
    settings = Settings()
    settings.update(depth=args.depth, threads=args.threads, fail_fast=args.fail_fast or None,
                    report=args.report, fillers=args.fillers)

    selection = args.suite.split(",") if args.suite else ["all"]
    reports = run_all(inst, selection, settings)
    _write(render_report(reports, settings.report), args.out)

    summary = summarize(reports)
    logger.info("%s: %d checks, %d failed.", inst.name, summary.total, summary.failed)
    return EXIT_PASS if summary.passed else EXIT_VIOLATIONS


def cmd_export_diagram(args) -> int:
    inst = parse_instance(args.path)
    Settings().update(depth=args.depth, fillers=args.fillers)
    tokens = [t for t in re.split(r"[,\s]+", args.indices.strip()) if t]
    _write(export_diagram(inst, args.condition, tokens), args.out)
    return EXIT_PASS


def _renderCochain(omega: np.ndarray, K: FiniteAbelianGroup) -> str:
    flat = omega.reshape(-1, len(K.moduli))
    return " ".join(K.label(v) for v in flat)


def cmd_cocycle(args) -> int:
    G = _group(args.group, "group")
    K = _group(args.coefficients, "coefficients")
    settings = Settings()
    settings.update(threads=args.threads)

    if args.verify:
        inst = parse_instance(args.verify)
        if inst.kind != "scalar":
            raise ValidationError("model", "--verify expects a scalar instance file")
        if inst.meta["group"] != G.spec() or inst.meta["coefficients"] != K.spec():
            raise ValidationError("group", f"file is over {inst.meta['group']} with coefficients "
                                           f"{inst.meta['coefficients']}, not {G.spec()} / {K.spec()}")
        omega = omega_of(inst)
        verdict = is_cocycle(omega, G, K)
        batch = stasheff_pass_set(inst, omega.reshape(1, G.order ** 4, len(K.moduli)))
        if (batch == {0}) != verdict:
            logger.error("Stasheff batch check disagrees with the coboundary oracle.")
            return EXIT_VIOLATIONS
        print(f"cocycle: {'true' if verdict else 'false'}")
        if not verdict:
            print(f"failing 5-tuples: {len(failing_tuples(omega, G, K))}")
        return EXIT_PASS if verdict else EXIT_VIOLATIONS

    cocycles = enumerate_cocycles(G, K, settings.threads)
    base = build_scalar_instance(G, K)
    passing = stasheff_pass_set(base, all_cochains(G, K))
    for omega in cocycles:
        print(_renderCochain(omega, K))
    print(f"cocycles: {len(cocycles)}")
    print(f"stasheff passes: {len(passing)}")
    if len(passing) != len(cocycles):
        logger.error("Stasheff batch check found %d passing cochains, the oracle %d cocycles.",
                     len(passing), len(cocycles))
        return EXIT_VIOLATIONS
    return EXIT_PASS

#endregion


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="m2c", description="Coherence checker for monoidal 2-categories.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug")
    parser.add_argument("--config", help="YAML config file layered over the defaults")
    verbs = parser.add_subparsers(dest="verb", required=True)

    check = verbs.add_parser("check", help="check an instance file")
    check.add_argument("path")
    check.add_argument("--suite", help=f"comma separated suites ({', '.join(SUITES)}), condition ids or all")
    check.add_argument("--model", choices=("tabulated", "scalar"))
    check.add_argument("--depth", type=int)
    check.add_argument("--fail-fast", action="store_true")
    check.add_argument("--report", choices=FORMATS)
    check.add_argument("--fillers", choices=("phi", "kv"))
    check.add_argument("--threads", type=int)
    check.add_argument("--out")
    check.set_defaults(run=cmd_check)

    export = verbs.add_parser("export-diagram", help="write one condition's surface as DOT")
    export.add_argument("path")
    export.add_argument("--condition", required=True)
    export.add_argument("--indices", required=True, help="index tokens separated by commas or spaces")
    export.add_argument("--depth", type=int)
    export.add_argument("--fillers", choices=("phi", "kv"))
    export.add_argument("--out")
    export.set_defaults(run=cmd_export_diagram)

    cocycle = verbs.add_parser("cocycle", help="enumerate or verify 4-cocycles of the skeletal family")
    cocycle.add_argument("--group", required=True)
    cocycle.add_argument("--coefficients", required=True)
    mode = cocycle.add_mutually_exclusive_group(required=True)
    mode.add_argument("--enumerate", action="store_true")
    mode.add_argument("--verify", metavar="PATH")
    cocycle.add_argument("--threads", type=int)
    cocycle.set_defaults(run=cmd_cocycle)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 on --help
        return int(e.code or 0)

    level = logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose else logging.WARNING
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s", force=True)

    try:
        if args.config:
            Settings().loadFile(args.config)
        return args.run(args)
    except INPUT_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
