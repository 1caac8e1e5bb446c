"""Command-line front end.

Exit status: 0 on success, 1 on usage or validation errors, 2 when a
verification suite finds a mismatch.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .coeffring import Poly
from .engine import Hom, IntegralityError, NotARunNetwork, compute, entry_sum, fixture_network
from .oracle import (
    DEFAULT_CAP,
    MAX_CAP,
    PREDICATES,
    STAT_NAMES,
    CapExceeded,
    predicate_count,
    predicate_count_by_descent_sets,
    stat_polynomial,
)
from .powerseries import NonUnitConstantTerm, Series
from .runnetwork import ParseError, RunNetwork, SchemaError, load_network
from .seriesmatrix import SingularConstantTerm

MAX_BOUND = 64
FORMATS = ("poly", "csv", "seq")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _bound(text: str) -> int:
    n = int(text)
    if not 0 <= n <= MAX_BOUND:
        raise argparse.ArgumentTypeError(f"N must lie in 0..{MAX_BOUND}")
    return n


def _cap(text: str) -> int:
    n = int(text)
    if not 0 <= n <= MAX_CAP:
        raise argparse.ArgumentTypeError(f"cap must lie in 0..{MAX_CAP}")
    return n


def _vertices(text: str) -> frozenset[int]:
    try:
        return frozenset(int(v) for v in text.replace(" ", "").split(",") if v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertices, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="runnet", description="Exact run-network generating functions and brute-force checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def output_opts(sp, hom_default):
        sp.add_argument("--N", type=_bound, default=12, help="truncation bound (default 12, at most 64)")
        sp.add_argument("--hom", choices=[h.value for h in Hom], default=hom_default)
        sp.add_argument("--format", choices=FORMATS, default="poly")

    c = sub.add_parser("compute", help="run the pipeline on a network file")
    c.add_argument("network", help="network JSON file, or the name of a shipped fixture")
    c.add_argument("--start", type=_vertices, help="start vertices, e.g. 1,2")
    c.add_argument("--end", type=_vertices, help="end vertices")
    output_opts(c, "perm")

    r = sub.add_parser("recipe", help="evaluate a built-in recipe or a recipe document")
    r.add_argument("name", help="built-in name (pk, gz2014, davidBarton(3), ...) or a recipe JSON file")
    output_opts(r, None)

    o = sub.add_parser("oracle", help="brute-force statistics and predicate counts")
    osub = o.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    st = osub.add_parser("stat", help="st-polynomial by enumeration")
    st.add_argument("name", choices=STAT_NAMES)
    st.add_argument("n", type=int)
    st.add_argument("--cap", type=_cap, default=DEFAULT_CAP)
    st.add_argument("--format", choices=("poly", "csv"), default="poly")
    pr = osub.add_parser("pred", help="count permutations satisfying a predicate")
    pr.add_argument("name", choices=PREDICATES)
    pr.add_argument("n", type=int)
    pr.add_argument("--m", type=int, help="run-length bound for incRunsBelow / altRunsBelow")
    pr.add_argument("--cap", type=_cap, default=DEFAULT_CAP)

    k = sub.add_parser("check", help="run a verification suite")
    k.add_argument("suite", choices=("tables", "oracle", "identities", "bijections", "all"))
    k.add_argument("--N", type=_bound, default=12)
    k.add_argument("--cap", type=_cap, default=DEFAULT_CAP)
    return p


# -- output ------------------------------------------------------------------------


def rows_of(s: Series, hom: Hom) -> list[Poly]:
    """Per-degree polynomials: ``n! * [x^n]`` for perm/alt, raw coefficients for words."""
    return list(s.coeffs) if hom is Hom.WORD else s.egf_numerators()


def render(rows: Sequence[Poly], fmt: str) -> str:
    if fmt == "poly":
        return "".join(f"{n}: {p}\n" for n, p in enumerate(rows))
    if fmt == "csv":
        return "".join(f"{n},{p.csv()}\n" for n, p in enumerate(rows))
    vals = []
    for p in rows:
        v = p(1)
        vals.append(str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}")
    return ",".join(vals) + "\n"


# -- commands ----------------------------------------------------------------------


def _load_net(spec: str) -> RunNetwork:
    path = Path(spec)
    if not path.exists() and "/" not in spec and not spec.endswith(".json"):
        try:
            return fixture_network(spec)
        except FileNotFoundError:
            raise UsageError(f"no such network file or shipped fixture: {spec}") from None
    return load_network(path)


def cmd_compute(args, out: TextIO) -> int:
    net = _load_net(args.network)
    if args.start is not None or args.end is not None:
        net = net.with_endpoints(args.start if args.start is not None else net.start,
                                 args.end if args.end is not None else net.end)
    hom = Hom(args.hom)
    mat = compute(net, args.N, hom)
    out.write(render(rows_of(entry_sum(mat, net.start, net.end), hom), args.format))
    return 0


def cmd_recipe(args, out: TextIO) -> int:
    from .recipes import evaluate_recipe, get_recipe, load_recipe, resolve_hom

    name = args.name
    recipe = load_recipe(name) if name.endswith(".json") or Path(name).is_file() else get_recipe(name)
    hom = resolve_hom(recipe, args.hom)
    s = evaluate_recipe(recipe, args.N, hom)
    out.write(render(rows_of(s, hom), args.format))
    return 0


def cmd_oracle(args, out: TextIO) -> int:
    if args.n < 0:
        raise UsageError("n must be non-negative")
    if args.kind == "stat":
        poly = stat_polynomial(args.name, args.n, args.cap)
        out.write(f"{poly}\n" if args.format == "poly" else f"{poly.csv()}\n")
        return 0
    if args.n <= args.cap:
        count = predicate_count(args.name, args.n, args.m, args.cap)
    elif args.name != "altRunsBelow":
        # these predicates depend only on the descent set, so ribbon counts give exact totals
        count = predicate_count_by_descent_sets(args.name, args.n, args.m)
    else:
        raise CapExceeded(f"n = {args.n} exceeds the enumeration cap {args.cap}")
    out.write(f"{count}\n")
    return 0


def cmd_check(args, out: TextIO) -> int:
    from .checks import SUITES, run_suite

    names = SUITES if args.suite == "all" else (args.suite,)
    status = 0
    for name in names:
        res = run_suite(name, bound=args.N, cap=args.cap)
        if res.ok:
            out.write(f"{name}: pass ({res.passed} checks)\n")
        else:
            out.write(f"{name}: FAIL after {res.passed} passing checks\n{res.mismatch.describe()}\n")
            status = 2
            break
    return status


COMMANDS = {"compute": cmd_compute, "recipe": cmd_recipe, "oracle": cmd_oracle, "check": cmd_check}


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return COMMANDS[args.command](args, out)
    except NotARunNetwork as exc:
        print(f"error: not a run network: {exc.violation}", file=sys.stderr)
        return 1
    except (ParseError, SchemaError, UsageError, CapExceeded, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 1
    except (NonUnitConstantTerm, SingularConstantTerm, IntegralityError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
