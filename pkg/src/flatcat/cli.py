"""Command-line interface: ``flatcat <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bijections as bj
from .closed_forms import AVOIDER_FORMULAS, avoiders, tot
from .core_words import Pattern, format_word, parse_word
from .enumeration import iter_avoiders, iter_flattened, iter_flattened_by_trun
from .errors import InvalidInput, NotInCatalog
from .gf_catalog import TABLE1_PATTERNS, get_entry
from .polyalg import parse_bindings
from .recurrences import build, build_uvw

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


# -- enumerate --------------------------------------------------------------


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.trun is not None:
        words = iter_flattened_by_trun(args.n, args.trun)
    elif args.avoid is not None:
        words = iter_avoiders(args.n, Pattern.parse(args.avoid))
    else:
        words = iter_flattened(args.n)
    if args.format == "count":
        _emit(str(sum(1 for _ in words)))
    else:
        for w in words:
            _emit(format_word(w))
    return EXIT_OK


# -- gf -----------------------------------------------------------------------


def cmd_gf(args: argparse.Namespace) -> int:
    entry = get_entry(args.id)
    bindings = parse_bindings(args.set or [])
    series = entry.gf.substitute(bindings).expand(args.terms)
    doc = {
        "id": entry.id,
        "bindings": dict(sorted(bindings.items())),
        "terms": args.terms,
        "coefficients": [series[n].to_json() for n in range(args.terms + 1)],
    }
    if all(series[n].is_constant() for n in range(args.terms + 1)):
        doc["integers"] = series.ints()
    _emit(json.dumps(doc, indent=None if args.compact else 1))
    return EXIT_OK


# -- recurrence ---------------------------------------------------------------


def cmd_recurrence(args: argparse.Namespace) -> int:
    family = args.family.lower()
    arr = build(family, args.n)
    for n in range(1, args.n + 1):
        for m in range(1, n + 1):
            _emit(_dump({"n": n, "m": m, "value": arr(n, m).to_json()}))
    if args.uvw:
        seq = build_uvw(family, args.n, arr)
        for name in ("u", "v", "w"):
            for n, val in enumerate(getattr(seq, name)):
                _emit(_dump({"seq": name, "n": n, "value": val.to_json()}))
    return EXIT_OK


# -- totals / avoid -------------------------------------------------------------


def _patterns(arg: str) -> list[str]:
    if arg == "all":
        return list(TABLE1_PATTERNS)
    return [str(Pattern.parse(arg))]


def _table(rows: list[dict], fmt: str, columns: Sequence[str]) -> None:
    if fmt == "json":
        _emit(json.dumps(rows, indent=1))
        return
    _emit(",".join(columns))
    for row in rows:
        _emit(",".join("" if row[c] is None else str(row[c]).lower() for c in columns))


def cmd_totals(args: argparse.Namespace) -> int:
    from .gf_catalog import gf_table1
    from .oracle import total_occurrences

    rows = []
    for tau in _patterns(args.pattern):
        deriv = gf_table1(tau).expand(args.max_n).derivative_at("q", 1).ints()
        for n in range(2 if len(tau) == 3 else 1, args.max_n + 1):
            formula = tot(tau, n)
            oracle = total_occurrences(n, tau) if n <= args.oracle_max else None
            match = formula == deriv[n] and (oracle is None or oracle == formula)
            rows.append({"pattern": tau, "n": n, "formula": formula, "oracle": oracle,
                         "gf_derivative": deriv[n], "match": match})
    _table(rows, args.format, ("pattern", "n", "formula", "oracle", "gf_derivative", "match"))
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_FAIL


def cmd_avoid(args: argparse.Namespace) -> int:
    from .gf_catalog import gf_table1
    from .oracle import avoider_count

    rows = []
    for tau in _patterns(args.pattern):
        g = gf_table1(tau).substitute({"q": 0}).expand(args.max_n).ints()
        key = {"112": "122", "221": "211", "231": "211"}.get(tau, tau)
        lo = AVOIDER_FORMULAS[key].validity if key in AVOIDER_FORMULAS else 1
        for n in range(1, args.max_n + 1):
            formula = avoiders(tau, n) if key in AVOIDER_FORMULAS and n >= lo else None
            oracle = avoider_count(n, tau) if n <= args.oracle_max else None
            known = [v for v in (formula, oracle) if v is not None]
            rows.append({"pattern": tau, "n": n, "formula": formula, "oracle": oracle,
                         "gf": g[n], "match": all(v == g[n] for v in known)})
    _table(rows, args.format, ("pattern", "n", "formula", "oracle", "gf", "match"))
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_FAIL


# -- bijection ------------------------------------------------------------------

_MARKED_IN = {"trun", "valley", "valley_inverse"}


def _parse_bits(text: str) -> tuple[int, ...]:
    raw = text.replace(",", "").strip()
    if not raw or set(raw) - {"0", "1"}:
        raise InvalidInput(f"expected a binary word, got {text!r}")
    return tuple(int(c) for c in raw)


def _render(value) -> str:
    if isinstance(value, bj.MarkedWord):
        return f"{format_word(value.word)} mark={value.mark}"
    return format_word(value)


def cmd_bijection(args: argparse.Namespace) -> int:
    if args.verify:
        from .verify import suite_bijections

        rep = suite_bijections(args.max_n)
        _emit(rep.to_json())
        return EXIT_OK if rep.ok else EXIT_FAIL
    if not args.map or args.word is None:
        raise InvalidInput("--map and --word are required unless --verify is given")
    fn = bj.MAPS[args.map]
    if args.map == "prime":
        arg = _parse_bits(args.word)
    else:
        arg = parse_word(args.word)
    if args.map in _MARKED_IN:
        if args.mark is None:
            raise InvalidInput(f"map {args.map!r} needs --mark")
        arg = bj.MarkedWord(arg, args.mark)
    elif args.map == "trun" and args.mark is None:
        raise InvalidInput("map 'trun' needs --mark")
    _emit(_render(fn(arg)))
    return EXIT_OK


# -- verify ----------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    from .verify import run_suite

    reports = run_suite(args.suite, args.max_n)
    doc = [r.to_dict() for r in reports]
    if not args.timing:
        for d in doc:
            d.pop("elapsed")
    _emit(json.dumps(doc if args.suite == "all" else doc[0], indent=2))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


# -- parser -------------------------------------------------------------------------


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flatcat", description="Flattened Catalan words and their consecutive patterns.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list or count flattened words")
    p.add_argument("--n", type=_positive, required=True)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--trun", type=_positive, metavar="M", help="only words whose terminal run has M distinct letters")
    grp.add_argument("--avoid", metavar="TAU", help="only words avoiding the consecutive pattern TAU, e.g. 312")
    p.add_argument("--format", choices=("lines", "count"), default="lines")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("gf", help="expand a catalogued generating function")
    p.add_argument("--id", required=True, help="A..E, trun, F_<tau>, shortValley, U_A, ...")
    p.add_argument("--terms", type=_positive, default=20, help="highest power of x (default 20)")
    p.add_argument("--set", action="append", metavar="VAR=INT", help="bind y, p, q or r; repeatable")
    p.add_argument("--compact", action="store_true", help="single-line JSON")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("recurrence", help="print a triangular array as JSON lines")
    p.add_argument("--family", required=True, choices=("a", "b", "c", "d", "e", "A", "B", "C", "D", "E"))
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--uvw", action="store_true", help="also print the u, v, w sequences")
    p.set_defaults(func=cmd_recurrence)

    for name, fn, help_text, cols in (
        ("totals", cmd_totals, "total occurrences over F_n", "pattern,n,formula,oracle,gf_derivative,match"),
        ("avoid", cmd_avoid, "number of avoiders in F_n", "pattern,n,formula,oracle,gf,match"),
    ):
        p = sub.add_parser(name, help=help_text, description=f"CSV columns: {cols}. Empty cells were not computed.")
        p.add_argument("--pattern", default="all", help="pattern such as 312, or 'all'")
        p.add_argument("--max-n", type=_positive, default=20)
        p.add_argument("--oracle-max", type=int, default=12, help="brute-force only up to this n (default 12)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.set_defaults(func=fn)

    p = sub.add_parser("bijection", help="apply a bijection or run the exhaustive checks")
    p.add_argument("--map", choices=sorted(bj.MAPS))
    p.add_argument("--word", help="comma-separated letters (binary word for 'prime')")
    p.add_argument("--mark", type=int, help="0-based mark index")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--max-n", type=_positive, default=10, help="bound for --verify (default 10)")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("verify", help="run a verification suite and print a JSON report")
    p.add_argument(
        "--suite",
        default="all",
        choices=("cardinality", "table1", "theorems", "functional", "recurrences", "totals",
                 "avoiders", "bijections", "equidistribution", "all"),
    )
    p.add_argument("--max-n", type=_positive, default=None, help="brute-force bound, default 10 (series order for 'functional', default 20)")
    p.add_argument("--timing", action="store_true", help="include elapsed seconds (output is then not reproducible)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, NotInCatalog) as exc:
        sys.stderr.write(f"flatcat {args.command}: {exc}\n")
        return EXIT_USAGE
    except BrokenPipeError:  # pragma: no cover
        return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
