"""
Command-line front end.

    afnorm parse FILE
    afnorm homology FILE
    afnorm alexander FILE [--character E] [--class S]
    afnorm norms FILE --class S [--character E]
    afnorm verify FILE (--class S | --scan B)
    afnorm cw-norm COMPLEX COCYCLE
    afnorm specialize FILE --class S [--character E]

Every command accepts ``--json``.  Exit status: 0 success, 1 inequality
violation, 2 input error, 3 resource guard.  Negative values need the
``--class=-1,2`` spelling so argparse does not read them as options.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .abelian import Character, parse_character
from .alexander import specialization_check
from .cw import ComplexError, CW2Complex, cocycle_norm, load_cocycle, minimize_norm, validate_complex
from .laurent import span
from .norms import GeneratorUnderused, GroupAnalysis, af_norm, integral_classes, verify_inequality
from .presentation import PresentationError, parse_presentation

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3
DEFAULT_MAX_GENERATORS = 8
MAX_SCAN_CLASSES = 20000


class InputError(Exception):
    pass


class ResourceGuard(Exception):
    pass


def _num(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else str(x)


def _read(path: str) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _max_generators() -> int:
    raw = os.environ.get("AFNORM_MAX_GENERATORS")
    if raw is None:
        return DEFAULT_MAX_GENERATORS
    try:
        return int(raw)
    except ValueError as exc:
        raise InputError(f"AFNORM_MAX_GENERATORS must be an integer, got {raw!r}") from exc


def _load_presentation(path: str, digests: dict, guard: bool = True):
    data = _read(path)
    digests[path] = hashlib.sha256(data).hexdigest()
    try:
        p = parse_presentation(data.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise InputError(f"{path}: not UTF-8 text") from exc
    except PresentationError as exc:
        raise InputError(f"{path}: {exc}") from exc
    limit = _max_generators()
    if guard and p.num_generators > limit:
        raise ResourceGuard(f"{p.num_generators} generators exceeds the limit of {limit} (set AFNORM_MAX_GENERATORS)")
    return p


def _parse_class(text: str | None, rank: int) -> tuple[int, ...]:
    if text is None:
        raise InputError("--class is required")
    try:
        vals = tuple(int(x) for x in text.split(",")) if text.strip() else ()
    except ValueError as exc:
        raise InputError(f"--class expects comma-separated integers, got {text!r}") from exc
    if len(vals) != rank:
        raise InputError(f"--class has {len(vals)} coordinate(s); the free abelianization has rank {rank}")
    return vals


def _parse_character(analysis: GroupAnalysis, text: str | None) -> Character:
    if text is None:
        return analysis.characters[0]
    try:
        return parse_character(analysis.structure, text)
    except ValueError as exc:
        raise InputError(f"--character: {exc}") from exc


# --- commands: each returns (result dict, human lines, exit status) ------------


def cmd_parse(args, digests):
    p = _load_presentation(args.file, digests, guard=False)
    result = {
        "presentation": p.format(),
        "generators": p.names,
        "relators": [r.format(p.names) for r in p.relators],
    }
    return result, [p.format()], EXIT_OK


def cmd_homology(args, digests):
    p = _load_presentation(args.file, digests)
    a = GroupAnalysis(p).structure
    result = a.describe()
    result["torsion"] = list(a.invariant_factors)
    lines = [
        f"rank     {a.free_rank}",
        "torsion  " + (" x ".join(f"Z/{d}" for d in a.invariant_factors) or "none"),
        "H1       " + (" x ".join(["Z"] * a.free_rank + [f"Z/{d}" for d in a.invariant_factors]) or "0"),
    ]
    return result, lines, EXIT_OK


def _character_list(analysis, text):
    return [_parse_character(analysis, text)] if text is not None else analysis.characters


def cmd_alexander(args, digests):
    p = _load_presentation(args.file, digests)
    analysis = GroupAnalysis(p)
    s = _parse_class(args.class_, analysis.rank) if args.class_ is not None else None
    rows, lines = [], []
    for sigma in _character_list(analysis, args.character):
        poly = analysis.polynomial(sigma)
        row = {"character": sigma.label(), "polynomial": poly.format()}
        text = f"{sigma.label():>10}  {poly.format()}"
        if s is not None:
            row["af_norm"] = af_norm(poly, s)
            text += f"    ||s|| = {row['af_norm']}"
        rows.append(row)
        lines.append(text)
    return {"rank": analysis.rank, "characters": rows}, lines, EXIT_OK


def cmd_norms(args, digests):
    p = _load_presentation(args.file, digests)
    analysis = GroupAnalysis(p)
    s = _parse_class(args.class_, analysis.rank)
    try:
        report = verify_inequality(p, s, analysis)
    except GeneratorUnderused as exc:
        raise InputError(str(exc)) from exc
    result = report.as_dict()
    if args.character is not None:
        sigma = _parse_character(analysis, args.character)
        result["selected_character"] = sigma.label()
        result["selected_af_norm"] = report.af_norms[sigma.label()]
    lines = [
        f"class               {','.join(map(str, s))}",
        f"generator values    {','.join(map(str, report.generator_values))}",
        f"presentation norm   {_num(report.lhs)}",
        f"trivial norm        {report.trivial_norm}",
    ]
    for label, n in report.af_norms.items():
        lines.append(f"AF norm [{label}]".ljust(20) + f"{n}")
    return result, lines, EXIT_OK


def cmd_verify(args, digests):
    p = _load_presentation(args.file, digests)
    analysis = GroupAnalysis(p)
    if args.scan is not None:
        if args.scan < 0:
            raise InputError("--scan bound must be nonnegative")
        count = (2 * args.scan + 1) ** analysis.rank
        if count > MAX_SCAN_CLASSES:
            raise ResourceGuard(f"scan would visit {count} classes (limit {MAX_SCAN_CLASSES})")
        classes = list(integral_classes(analysis.rank, args.scan))
    else:
        classes = [_parse_class(args.class_, analysis.rank)]
    try:
        reports = [verify_inequality(p, s, analysis) for s in classes]
    except GeneratorUnderused as exc:
        raise InputError(str(exc)) from exc
    rows = [
        {"class": list(r.class_values), "lhs": _num(r.lhs), "rhs": r.rhs,
         "holds": r.holds, "equality": r.equality}
        for r in reports
    ]
    lines = [f"{'class':>16}  {'lhs':>8}  {'rhs':>6}  verdict"]
    for r in reports:
        verdict = ("equal" if r.equality else "holds") if r.holds else "VIOLATED"
        lines.append(f"{','.join(map(str, r.class_values)):>16}  {str(_num(r.lhs)):>8}  {r.rhs:>6}  {verdict}")
    ok = all(r.holds for r in reports)
    result = {"classes": rows, "all_hold": ok, "characters": [c.label() for c in analysis.characters]}
    return result, lines, EXIT_OK if ok else EXIT_VIOLATION


def cmd_cw_norm(args, digests):
    cdata, kdata = _read(args.complex), _read(args.cocycle)
    digests[args.complex] = hashlib.sha256(cdata).hexdigest()
    digests[args.cocycle] = hashlib.sha256(kdata).hexdigest()
    try:
        c = CW2Complex.from_json(cdata.decode("utf-8"))
        diag = validate_complex(c)
        k0 = load_cocycle(kdata.decode("utf-8"))
        value, k = minimize_norm(c, k0)
        start = cocycle_norm(c, k0)
    except (ComplexError, ValueError, UnicodeDecodeError) as exc:
        raise InputError(str(exc)) from exc
    result = {
        "value": _num(value),
        "initial_value": _num(start),
        "minimizer": k,
        "adjacency": diag.adjacency,
        "weights": {e: _num(w) for e, w in diag.weights.items()},
        "euler_characteristic": diag.euler,
    }
    lines = [
        f"norm            {_num(value)}",
        f"initial |k0|    {_num(start)}",
        "minimizer       " + ", ".join(f"{e}={v}" for e, v in k.items()),
        f"euler char      {diag.euler}",
    ]
    return result, lines, EXIT_OK


def cmd_specialize(args, digests):
    p = _load_presentation(args.file, digests)
    analysis = GroupAnalysis(p)
    s = _parse_class(args.class_, analysis.rank)
    sigma = _parse_character(analysis, args.character)
    check = specialization_check(p, sigma, s, analysis.structure, analysis.matrix)
    spec_span = span(check.specialized, (1,)) if check.specialized else None
    result = {
        "character": sigma.label(),
        "class": list(s),
        "specialized": check.specialized.format(),
        "span": spec_span,
        "divisor": check.divisor.format(),
        "delta": check.delta,
        "af_norm": check.af_norm,
        "regular": check.regular,
        "primitive": check.primitive,
        "divisible": check.divisible,
        "span_ok": check.span_ok,
        "verdict": check.verdict,
    }
    lines = [
        f"character     {sigma.label()}",
        f"specialized   {check.specialized.format()}",
        f"span          {spec_span if spec_span is not None else '-'}",
        f"divisor       {check.divisor.format()}",
        f"regular       {'yes' if check.regular else 'no'}",
        f"primitive     {'yes' if check.primitive else 'no'}",
        f"divisible     {'yes' if check.divisible else 'no'}",
        f"span bound    {'yes' if check.span_ok else 'no'}  (needs >= {check.delta + check.af_norm})",
    ]
    if not (check.regular and check.primitive):
        lines.append("note          class is not regular and primitive; the check does not apply")
    return result, lines, EXIT_OK


COMMANDS = {
    "parse": cmd_parse,
    "homology": cmd_homology,
    "alexander": cmd_alexander,
    "norms": cmd_norms,
    "verify": cmd_verify,
    "cw-norm": cmd_cw_norm,
    "specialize": cmd_specialize,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="afnorm", description="Alexander-Fox norms of group presentations")
    parser.add_argument("--version", action="version", version=f"afnorm {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        return sp

    command("parse", "echo the canonical presentation").add_argument("file")
    command("homology", "first homology").add_argument("file")

    sp = command("alexander", "(twisted) Alexander-Fox polynomials")
    sp.add_argument("file")
    sp.add_argument("--character")
    sp.add_argument("--class", dest="class_")

    sp = command("norms", "norms of an integral class")
    sp.add_argument("file")
    sp.add_argument("--class", dest="class_", required=True)
    sp.add_argument("--character")

    sp = command("verify", "check the norm inequality")
    sp.add_argument("file")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--class", dest="class_")
    group.add_argument("--scan", type=int, metavar="B")

    sp = command("cw-norm", "minimize the cocycle norm on a 2-complex")
    sp.add_argument("complex")
    sp.add_argument("cocycle")

    sp = command("specialize", "one-variable specialization and span check")
    sp.add_argument("file")
    sp.add_argument("--class", dest="class_", required=True)
    sp.add_argument("--character")
    return parser


def _arguments(args) -> dict:
    out = {k: v for k, v in vars(args).items() if k not in ("command", "json")}
    if "class_" in out:
        out["class"] = out.pop("class_")
    return out


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    digests: dict[str, str] = {}
    try:
        result, lines, status = COMMANDS[args.command](args, digests)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceGuard as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_GUARD
    if args.json:
        report = {
            "tool": "afnorm",
            "version": __version__,
            "command": args.command,
            "arguments": _arguments(args),
            "input_sha256": digests,
            "result": result,
        }
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))
    return status


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
