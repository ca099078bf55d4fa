"""Command-line surface.

Exit codes: 0 success (or verdict true), 1 usage/input error, 2 negative
check verdict, 3 theorem-violation alarm (or pencil violation), 4 budget
exceeded.  Reports are plain text with a ``# key: value`` header block;
identical inputs produce byte-identical stdout (timing goes to stderr).

The element-sweep budget resolves as: --budget flag, else the
WEAKTRI_BUDGET environment variable, else the library default.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .adapted import find_adapted_vector
from .errors import (
    BudgetExceededError,
    PreconditionError,
    SpaceFileError,
    TheoremViolationError,
)
from .flags import flag_space, recover_flag
from .gf import parse_field
from .linalg import Mat
from .spaces import DEFAULT_BUDGET, format_spacefile, parse_spacefile
from .survey import (
    DEFAULT_SEED,
    CampaignSpec,
    count_flags,
    gen_joint,
    gen_random,
    gen_sl,
    gen_sym,
    gen_triangular,
    run_campaign,
)
from .pencils import verify_pencil_division
from .triang import space_weakly_triangularizable

BUDGET_ENV = "WEAKTRI_BUDGET"


def _resolve_budget(args):
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET


def _read_spacefile(path, exploratory=False):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_spacefile(text, exploratory=exploratory)


def _add_spacefile_arg(sub):
    sub.add_argument("spacefile", help="matrix-space file, or - for stdin")
    sub.add_argument(
        "--exploratory",
        action="store_true",
        help="allow characteristic-2 fields (exploratory mode)",
    )


def _add_budget_arg(sub):
    sub.add_argument(
        "--budget",
        type=int,
        default=None,
        help=f"element-sweep budget (default: ${BUDGET_ENV} or {DEFAULT_BUDGET})",
    )


def cmd_check(args):
    space = _read_spacefile(args.spacefile, args.exploratory)
    budget = _resolve_budget(args)
    mode = args.mode
    print(f"# space: n={space.n} dim={space.dim} field={space.field.descriptor()}")
    if mode == "exhaustive":
        verdict = space_weakly_triangularizable(space, budget=budget)
    else:
        if not mode.startswith("sample:"):
            raise ValueError(f"bad --mode {mode!r}; use exhaustive or sample:N:SEED")
        parts = mode.split(":")
        if len(parts) != 3:
            raise ValueError(f"bad --mode {mode!r}; use sample:N:SEED")
        count, seed = int(parts[1]), int(parts[2])
        print(f"# seed: {seed}")
        verdict = space_weakly_triangularizable(
            space, mode="sample", count=count, seed=seed, budget=budget
        )
    print(f"# mode: {mode}")
    print(f"# checked: {verdict.checked}")
    print(f"# certified: {'yes' if verdict.certified else 'no'}")
    if verdict.all_triangularizable:
        note = "" if verdict.certified else f" (no counterexample in {verdict.checked} samples)"
        print(f"verdict true{note}")
        return 0
    print("verdict false")
    print("witness " + " ".join(str(e) for e in verdict.witness.entries))
    return 2


def cmd_recover(args):
    space = _read_spacefile(args.spacefile, args.exploratory)
    budget = _resolve_budget(args)
    flag, trace = recover_flag(space, budget=budget)
    print(f"# space: n={space.n} dim={space.dim} field={space.field.descriptor()}")
    print("# recovered: yes")
    for i, vec in enumerate(flag.basis, start=1):
        print(f"e{i} " + " ".join(str(e) for e in vec.entries))
    text = trace.to_text()
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write(text)
        print(f"# trace_file: {args.trace}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_adapted(args):
    space = _read_spacefile(args.spacefile, args.exploratory)
    vec = find_adapted_vector(space)
    print(f"# space: n={space.n} dim={space.dim} field={space.field.descriptor()}")
    if vec is None:
        print("none")
    else:
        print("adapted " + " ".join(str(e) for e in vec.entries))
    return 0


def cmd_lemma31(args):
    field = parse_field(args.field, exploratory=args.exploratory)
    budget = _resolve_budget(args)
    report = verify_pencil_division(field, args.degree, budget=budget)
    print(f"# field: {field.descriptor()}")
    print(f"# degree: {args.degree}")
    print(report.summary())
    return 0 if report.ok else 3


def cmd_campaign(args):
    field = parse_field(args.field, exploratory=args.exploratory)
    constraints = ()
    if args.contains_identity:
        constraints = (Mat.identity(field, args.n),)
    mode = "exhaustive"
    count = 0
    if args.random is not None:
        mode = "random"
        count = args.random
        print(f"# seed: {args.seed}")
    spec = CampaignSpec(
        n=args.n,
        field=field,
        dim=args.dim,
        constraints=constraints,
        mode=mode,
        count=count,
        seed=args.seed,
        shards=args.shards,
        budget=_resolve_budget(args),
        journal=args.journal,
        resume=args.resume,
    )
    started = time.time()
    report = run_campaign(spec)
    sys.stdout.write(report.to_text())
    print(f"elapsed: {time.time() - started:.1f}s", file=sys.stderr)
    return 3 if report.alarms else 0


def cmd_gen(args):
    field = parse_field(args.field, exploratory=args.exploratory)
    kind = args.kind
    if kind == "joint":
        if not args.blocks:
            raise ValueError("--kind joint needs --blocks, e.g. --blocks 1,2")
        sizes = [int(t) for t in args.blocks.split(",")]
        space = gen_joint([_full_algebra(size, field) for size in sizes])
    else:
        if args.n is None:
            raise ValueError(f"--kind {kind} needs --n")
        if kind == "triangular":
            space = gen_triangular(args.n, field)
        elif kind == "sym":
            space = gen_sym(args.n, field)
        elif kind == "sl":
            space = gen_sl(args.n, field)
        elif kind == "random":
            if args.dim is None:
                raise ValueError("--kind random needs --dim")
            space = gen_random(args.n, field, args.dim, args.seed)
        else:
            raise ValueError(f"unknown kind {kind!r}")
    sys.stdout.write(format_spacefile(space))
    return 0


def _full_algebra(n, field):
    from .spaces import MatSpace

    return MatSpace.from_span(
        [Mat.unit(field, n, i, j) for i in range(n) for j in range(n)],
        field=field,
        n=n,
    )


def cmd_flags(args):
    field = parse_field(args.field, exploratory=args.exploratory)
    print(f"# n: {args.n}")
    print(f"# field: {field.descriptor()}")
    print(count_flags(args.n, field))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="weaktri",
        description="Exact-arithmetic weak-triangularizability toolkit over finite fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide weak triangularizability of a space")
    _add_spacefile_arg(p)
    p.add_argument("--mode", default="exhaustive", help="exhaustive or sample:N:SEED")
    _add_budget_arg(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("recover", help="recover the invariant flag of an optimal space")
    _add_spacefile_arg(p)
    p.add_argument("--trace", default=None, help="write the recovery trace to a file")
    _add_budget_arg(p)
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("adapted", help="first adapted vector of a space")
    _add_spacefile_arg(p)
    p.set_defaults(func=cmd_adapted)

    p = sub.add_parser("lemma31", help="exhaustive split-pencil divisibility sweep")
    p.add_argument("--field", required=True, help="field descriptor, e.g. GF(3)")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--exploratory", action="store_true")
    _add_budget_arg(p)
    p.set_defaults(func=cmd_lemma31)

    p = sub.add_parser("campaign", help="sweep subspaces for weakly triangularizable hits")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--field", required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--contains-identity", action="store_true")
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--journal", default=None)
    p.add_argument("--resume", action="store_true")
    p.add_argument("--random", type=int, default=None, metavar="COUNT",
                   help="random mode: check COUNT seeded samples instead")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--exploratory", action="store_true")
    _add_budget_arg(p)
    p.set_defaults(func=cmd_campaign)

    p = sub.add_parser("gen", help="emit a named space as a spacefile")
    p.add_argument("--kind", required=True,
                   choices=["triangular", "sym", "sl", "joint", "random"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--field", required=True)
    p.add_argument("--dim", type=int, default=None, help="dimension for --kind random")
    p.add_argument("--blocks", default=None, help="joint block sizes, e.g. 1,2")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--exploratory", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("flags", help="count the complete flags of F^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--field", required=True)
    p.add_argument("--exploratory", action="store_true")
    p.set_defaults(func=cmd_flags)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpaceFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 4
    except TheoremViolationError as exc:
        print(f"THEOREM VIOLATION: {exc}", file=sys.stderr)
        if exc.trace is not None:
            sys.stderr.write(exc.trace.to_text())
        return 3
    except (PreconditionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
