"""Command-line front end.

Three subcommands:

* ``eval --n N [--reduce] EXPR_OR_FILE`` — evaluate one expression (or each
  non-blank, non-``#`` line of a file) and print the result in canonical
  text form.
* ``check {prop6,prop8,prop9,prop10,lemma5,all} --n N [--level L] [--seed S]
  [--json] [--mutate M]`` — run the named theorem checks; exit status 0 when
  every claim holds, 1 otherwise.  ``--mutate`` injects a named defect into
  the canonical maps so the failure path of the suite can be exercised.
* ``repl --n N`` — a line-oriented loop with immutable ``name = expr``
  bindings.

Exit codes: 0 success / all checks pass, 1 check failure, 2 usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .algebra import Element
from .parser import RESERVED, ExprError, evaluate, parse
from .scalars import GaussianRational
from .theorems import (
    check_lemma5,
    check_prop6,
    check_prop8,
    check_prop9,
    check_prop10,
    default_level,
    default_unitaries,
    named_mutation,
    run_all,
    summary_table,
)

CHECK_NAMES = ["prop6", "prop8", "prop9", "prop10", "lemma5", "all"]

_BINDING_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.+)$")


def _build_argparser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cuntzcalc",
        description="Exact calculator and theorem checker for the Cuntz algebra.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate an expression or a file of them")
    ev.add_argument("expr", help="expression text, or a path to a file (one expression per line)")
    ev.add_argument("--n", type=int, required=True, help="rank of the algebra (>= 2)")
    ev.add_argument(
        "--reduce",
        action="store_true",
        help="collapse complete sibling families before printing",
    )

    ck = sub.add_parser("check", help="run theorem checks")
    ck.add_argument("which", choices=CHECK_NAMES)
    ck.add_argument("--n", type=int, default=2, help="rank of the algebra (default 2)")
    ck.add_argument(
        "--level",
        type=int,
        default=None,
        help="sweep depth (default: 2 for n=2, else 1)",
    )
    ck.add_argument("--seed", type=int, default=0, help="seed for randomized claims")
    ck.add_argument("--json", action="store_true", help="machine-readable report")
    ck.add_argument(
        "--mutate",
        choices=["psi-weight", "phi-drop"],
        default=None,
        help="self-test: inject a named defect into the canonical maps",
    )

    rp = sub.add_parser("repl", help="interactive loop")
    rp.add_argument("--n", type=int, required=True, help="rank of the algebra (>= 2)")
    return ap


def _render(value, reduce_first: bool = False) -> str:
    if isinstance(value, GaussianRational):
        return str(value)
    if reduce_first and isinstance(value, Element):
        return str(value.canonical_reduce())
    return str(value)


def _cmd_eval(args) -> int:
    if os.path.isfile(args.expr):
        with open(args.expr, encoding="utf-8") as fh:
            sources = [
                line.strip()
                for line in fh
                if line.strip() and not line.strip().startswith("#")
            ]
    else:
        sources = [args.expr]
    for src in sources:
        try:
            value = evaluate(parse(src, args.n), args.n)
        except ExprError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(_render(value, args.reduce))
    return 0


def _run_checks(args) -> list:
    level = args.level if args.level is not None else default_level(args.n)
    if args.which == "all":
        return run_all(args.n, level, seed=args.seed, mutation=args.mutate)
    if args.mutate is None:
        endo = left_inv = None
    else:
        endo, left_inv = named_mutation(args.n, args.mutate)
    if args.which == "prop6":
        return [check_prop6(args.n, level, endo, left_inv)]
    if args.which == "prop8":
        return [check_prop8(args.n, level, endo, left_inv)]
    if args.which == "prop9":
        return [check_prop9(args.n, 1, level)]
    if args.which == "prop10":
        return [check_prop10(args.n, level, seed=args.seed, endo=endo)]
    return [
        check_lemma5(u.rows, level, name=name)
        for name, u in default_unitaries(args.n)
    ]


def _cmd_check(args) -> int:
    if args.n < 2:
        print("error: --n must be at least 2", file=sys.stderr)
        return 2
    reports = _run_checks(args)
    ok = all(r.passed for r in reports)
    if args.json:
        params = {"which": args.which, "n": args.n, "seed": args.seed,
                  "level": args.level if args.level is not None else default_level(args.n)}
        if args.mutate:
            params["mutate"] = args.mutate
        witnesses = []
        for r in reports:
            for w in r.witnesses:
                record = {"check": r.name}
                record.update(w.to_dict())
                witnesses.append(record)
        doc = {
            "command": "check",
            "params": params,
            "verdict": "pass" if ok else "fail",
            "witnesses": witnesses,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(summary_table(reports))
        failing = [r for r in reports if not r.passed]
        for r in failing:
            print()
            print(f"failures in {r.name}:")
            for w in r.failures():
                print(w.line())
    return 0 if ok else 1


def _cmd_repl(args) -> int:
    if args.n < 2:
        print("error: --n must be at least 2", file=sys.stderr)
        return 2
    env: dict = {}
    prompt = f"O{args.n}> "
    print(f"exact calculator on the rank-{args.n} algebra; "
          "'name = expr' binds, ':q' quits")
    while True:
        sys.stdout.write(prompt)
        sys.stdout.flush()
        line = sys.stdin.readline()
        if not line:
            print()
            return 0
        line = line.strip()
        if not line:
            continue
        if line in (":q", ":quit", "exit"):
            return 0
        binding = _BINDING_RE.match(line)
        try:
            if binding:
                name, body = binding.group(1), binding.group(2)
                if name in RESERVED:
                    print(f"error: {name!r} is reserved")
                    continue
                if name in env:
                    print(f"error: {name!r} is already bound (bindings are immutable)")
                    continue
                value = evaluate(parse(body, args.n), args.n, env)
                env[name] = value
                print(f"{name} = {_render(value)}")
            else:
                print(_render(evaluate(parse(line, args.n), args.n, env)))
        except ExprError as exc:
            print(f"error: {exc}")
    return 0


def main(argv=None) -> int:
    args = _build_argparser().parse_args(argv)
    if args.command == "eval":
        return _cmd_eval(args)
    if args.command == "check":
        return _cmd_check(args)
    return _cmd_repl(args)


if __name__ == "__main__":
    sys.exit(main())
