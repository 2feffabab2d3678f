"""Command-line front end.

Weights and words are comma-separated integers; words list letters in
application order.  Exit status is 0 on success and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .algebra import AlgebraSpec, parse_algebra
from .errors import DomainError, ResourceError
from .kw_boundary import boundary_residual, chi_expansion, sample_chi
from .shapovalov import InnerProductEngine, gram_matrix, inner_product_oracle
from .special_norms import (classify_path, prefixed_staircase_norm, scan_coefficient_positivity,
                            staircase_norm, verify_minuscule_gram)
from .weightsys import DEFAULT_LEVEL_CAP, build_weight_system, enumerate_paths

NUMBERING = "Bourbaki for B/C/D/F/G; E_n chain 1..n-1 with node n on node 3"


def _ints(text: str, what: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise DomainError(f"malformed {what} {text!r}; expected comma-separated integers") from None


def _rationals(text: str, rank: int) -> tuple[Fraction, ...]:
    try:
        values = tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"malformed m {text!r}; expected comma-separated rationals like 1,3/2") from None
    if len(values) == 1:
        values = values * rank
    if len(values) != rank:
        raise DomainError(f"m has {len(values)} entries, algebra needs {rank} (or a single value)")
    return values


def _header(spec: AlgebraSpec) -> dict:
    return {**spec.to_json(), "numbering": NUMBERING}


def _table(headers, rows) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _fmt(seq) -> str:
    return ",".join(str(x) for x in seq)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _ws(args):
    spec = parse_algebra(args.algebra)
    highest = _ints(args.highest, "highest weight")
    return build_weight_system(spec, highest, level_cap=args.level_cap)


def cmd_weights(args) -> str:
    ws = _ws(args)
    if args.format == "dot":
        return ws.to_dot()
    if args.format == "json":
        return _dump({**ws.to_json(), "algebra": _header(ws.spec)})
    rows = []
    for n, level in enumerate(ws.levels):
        for w in level:
            rows.append((n, _fmt(w), " ".join(f"{p}/{q}" for p, q in ws.strings[w])))
    return _table(("level", "weight", "p/q per root"), rows)


def cmd_paths(args) -> str:
    ws = _ws(args)
    weight = _ints(args.weight, "weight")
    paths = enumerate_paths(ws, weight)
    if args.format == "json":
        return _dump({"algebra": _header(ws.spec), "highest": list(ws.highest),
                      "weight": list(weight), "paths": [list(p) for p in paths]})
    return _table(("#", "word"), [(k, _fmt(p)) for k, p in enumerate(paths, 1)])


def cmd_gram(args) -> str:
    ws = _ws(args)
    weight = _ints(args.weight, "weight")
    g = gram_matrix(ws, weight, debug=args.check)
    if args.check:
        for s, a in enumerate(g.paths):
            for t, b in enumerate(g.paths):
                if inner_product_oracle(a, b, ws.spec, ws.highest) != g.entries[s][t]:
                    raise AssertionError(f"recursion and oracle disagree at ({s},{t})")
    if args.format == "json":
        return _dump({"algebra": _header(ws.spec), "highest": list(ws.highest), **g.to_json()})
    head = ["path"] + [str(k) for k in range(1, len(g) + 1)]
    rows = [[_fmt(p)] + list(row) for p, row in zip(g.paths, g.entries)]
    return _table(head, rows)


def cmd_norm(args) -> str:
    spec = parse_algebra(args.algebra)
    highest = _ints(args.highest, "highest weight")
    if len(highest) != spec.rank:
        raise DomainError(f"highest weight has {len(highest)} labels, {spec.name} needs {spec.rank}")
    bra = _ints(args.bra if args.bra is not None else args.word, "word")
    ket = _ints(args.ket if args.ket is not None else args.word, "word")
    engine = InnerProductEngine(spec, highest)
    value = engine(bra, ket)
    out = {"bra": list(bra), "ket": list(ket), "value": str(value)}
    if args.oracle:
        out["oracle"] = str(inner_product_oracle(bra, ket, spec, highest))
    if args.format == "json":
        return _dump(out)
    return _table(tuple(out), [tuple(_fmt(v) if isinstance(v, list) else v for v in out.values())])


def cmd_staircase(args) -> str:
    ws = _ws(args)
    word = _ints(args.word, "word")
    if not ws.is_path(word):
        raise DomainError(f"word {list(word)} is not a path in the weight system")
    kind = classify_path(ws, word)
    if kind is None:
        raise DomainError(f"word {list(word)} is not a staircase path (every run must span its "
                          "whole root string, except possibly the last)")
    if kind[0] == "staircase":
        value = staircase_norm(kind[1])
        detail = {"form": "staircase", "bursts": [[b.index, b.length] for b in kind[1].bursts]}
    else:
        n0, i0, inner = kind[1]
        value = prefixed_staircase_norm(n0, i0, inner)
        detail = {"form": "prefixed", "n0": n0, "i0": i0,
                  "bursts": [[b.index, b.length] for b in inner.bursts]}
    out = {"word": list(word), **detail, "norm": str(value), "audited": True}
    if args.format == "json":
        return _dump(out)
    return _table(("word", "form", "norm"), [(_fmt(word), detail["form"], value)])


def cmd_minuscule(args) -> str:
    spec = parse_algebra(args.algebra)
    if args.s is not None:
        if not 1 <= args.s <= spec.rank:
            raise DomainError(f"--s {args.s} out of range 1..{spec.rank}")
        highest = tuple(int(i == args.s) for i in range(1, spec.rank + 1))
    elif args.highest:
        highest = _ints(args.highest, "highest weight")
    else:
        raise DomainError("give --s or --highest")
    report = verify_minuscule_gram(build_weight_system(spec, highest, level_cap=args.level_cap))
    if args.format == "json":
        return _dump(report.to_json())
    rows = [(_fmt(w), n, "pass" if ok else "FAIL") for w, n, ok in report.rows]
    text = _table(("weight", "paths", "all ones"), rows)
    return text + f"strings two terms long: {report.strings_ok}\noverall: {'pass' if report.passed else 'FAIL'}\n"


def cmd_scan(args) -> str:
    ws = _ws(args)
    report = scan_coefficient_positivity(ws, args.max_level)
    if args.format == "json":
        return _dump(report.to_json())
    rows = [("paths scanned", report.paths_scanned), ("coefficients", report.coefficients_seen),
            ("min coefficient", report.min_coefficient), ("negatives", report.negatives),
            ("dropped non-path terms", report.pruned_terms)]
    return _table(("quantity", "value"), rows)


def _expansion(args):
    spec = parse_algebra(args.algebra)
    return spec, chi_expansion(spec, args.s, _rationals(args.m, spec.rank))


def cmd_kw_expand(args) -> str:
    _, exp = _expansion(args)
    if args.format == "json":
        return _dump(exp.to_json())
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["weight", "level", "norm", "root_factor", "coefficient", "rate"])
        for t in exp.terms:
            w.writerow([_fmt(t.weight), t.level, t.norm, t.root_factor, t.coefficient, t.rate])
        return buf.getvalue()
    rows = [(_fmt(t.weight), t.level, t.norm, t.coefficient, t.rate) for t in exp.terms]
    return (f"prefactor 2^({exp.prefactor_log2})\n"
            + _table(("weight", "level", "W_w", "coefficient", "rate"), rows))


def cmd_kw_boundary(args) -> str:
    spec = parse_algebra(args.algebra)
    value = boundary_residual(spec, args.s, _rationals(args.m, spec.rank))
    if args.format == "json":
        return _dump({"algebra": spec.name, "s": args.s, "residual": str(value)})
    return f"{value}\n"


def cmd_kw_plot(args) -> str:
    _, exp = _expansion(args)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["sigma", "value"])
    for sigma, value in sample_chi(exp, args.sigma_min, args.sigma_max, args.num):
        w.writerow([repr(sigma), repr(value)])
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hwnorms", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, formats, help, rep=True):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--algebra", required=True, help="e.g. A3, G2, D4")
        if rep:
            p.add_argument("--highest", required=True, help="Dynkin labels, e.g. 0,1")
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--level-cap", type=int, default=DEFAULT_LEVEL_CAP)
        return p

    add("weights", cmd_weights, ["table", "json", "dot"], "weight system")
    add("paths", cmd_paths, ["table", "json"], "paths to a weight").add_argument("--weight", required=True)
    p = add("gram", cmd_gram, ["table", "json"], "Gram matrix of path states")
    p.add_argument("--weight", required=True)
    p.add_argument("--check", action="store_true", help="compare every entry with the oracle")
    p = add("norm", cmd_norm, ["table", "json"], "inner product of two words")
    p.add_argument("--word", default="")
    p.add_argument("--bra")
    p.add_argument("--ket")
    p.add_argument("--oracle", action="store_true")
    add("staircase", cmd_staircase, ["table", "json"], "closed-form norm").add_argument("--word", required=True)
    p = add("minuscule-verify", cmd_minuscule, ["table", "json"], "all-ones Gram check", rep=False)
    p.add_argument("--s", type=int)
    p.add_argument("--highest")
    p = add("conjecture-scan", cmd_scan, ["table", "json"], "coefficient positivity scan")
    p.add_argument("--max-level", type=int)
    for name, func, formats in [("kw-expand", cmd_kw_expand, ["table", "json", "csv"]),
                                ("kw-boundary", cmd_kw_boundary, ["table", "json"]),
                                ("kw-plot", cmd_kw_plot, ["csv"])]:
        p = add(name, func, formats, f"boundary profile: {name[3:]}", rep=False)
        p.add_argument("--s", type=int, required=True)
        p.add_argument("--m", required=True, help="comma-separated positive rationals, or one value for all")
        if name == "kw-plot":
            p.add_argument("--sigma-min", type=float, default=0.0)
            p.add_argument("--sigma-max", type=float, default=2.0)
            p.add_argument("--num", type=int, default=41)
    return parser


_VALUE_FLAGS = {"--highest", "--weight", "--word", "--bra", "--ket", "--m"}


def _join_values(argv):
    # "-1,1,-1" would otherwise be read as an option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = _join_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        stdout.write(args.func(args))
    except (DomainError, ResourceError, OverflowError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
