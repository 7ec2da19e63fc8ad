"""Command-line front end: ``tqc act|verify|charge|classify|psib|render``.

Word grammars
  T-words:  a  b  a'  b'  (b a)^5  [x, y]      rightmost letter acts first
  K-words:  A[j]  T[j][k]  P(name)  with ' for inverses, (..)^n for powers;
            P names: ga, gb, swap(j,k) or an inline patch "j->k, k->j"
Rationals are written p/q or inf.

Exit codes: 0 success, 1 check failed or move inapplicable, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _spec(args):
    from tqc.render import RenderSpec
    return RenderSpec(depth=args.depth, width=args.width, height=args.height,
                      show_doe=not args.no_doe, show_dots=not args.no_dots, show_labels=not args.no_labels)


def _build_object(kind: str, word: str):
    from tqc.dotted import apply_kword, parse_kword, standard_dotted
    from tqc.marked import apply_tword, parse_tword, standard_marked

    try:
        if kind == "marked":
            return apply_tword(standard_marked(), parse_tword(word))
        w = parse_kword(word)
    except ValueError as exc:
        raise UsageError(f"cannot parse {kind} word {word!r}: {exc}") from None
    return apply_kword(standard_dotted(), w)


def _svg(kind: str, obj, spec) -> str:
    from tqc.render import render_dotted, render_marked
    return render_marked(obj, spec) if kind == "marked" else render_dotted(obj, spec)


def cmd_act(args) -> int:
    from tqc.dotted import KMoveError
    try:
        obj = _build_object(args.kind, args.word)
    except KMoveError as exc:
        _emit(args, {"ok": False, "error": str(exc)}, f"inapplicable: {exc}")
        return EXIT_FAIL
    if args.emit == "svg":
        svg = _svg(args.kind, obj, _spec(args))
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(svg)
        else:
            sys.stdout.write(svg)
        return EXIT_OK
    data = obj.to_json()
    text = json.dumps(data, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return EXIT_OK


def cmd_render(args) -> int:
    args.emit = "svg"
    return cmd_act(args)


def cmd_verify(args) -> int:
    from tqc.suites import SUITES

    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite == "all":
        names.remove("kashaev-class")
    reports = []
    for name in names:
        fn = SUITES[name]
        kw = {"budget": args.budget} if name in ("charges", "class", "kashaev-class", "sharp") else {}
        reports.append(fn(**kw))
    ok = all(r["ok"] for r in reports)
    lines = []
    for r in reports:
        lines.append(f"[{'PASS' if r['ok'] else 'FAIL'}] {r['suite']} ({r['seconds']:.2f}s)")
        for c in r["checks"]:
            detail = "" if c["detail"] is None else f"  {json.dumps(c['detail'], sort_keys=True, default=str)}"
            lines.append(f"    {'ok  ' if c['ok'] else 'FAIL'} {c['name']}{detail}")
    _emit(args, {"ok": ok, "reports": reports}, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_charge(args) -> int:
    from tqc import charge as C
    from tqc.dotted import format_kword, parse_kword
    from tqc.functor import bold_F
    from tqc.marked import parse_tword

    text = args.word.strip()
    try:
        if text.startswith("T:"):
            word = bold_F(parse_tword(text[2:]))
        else:
            word = parse_kword(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse {args.word!r}: {exc}") from None
    payload = {"word": format_kword(word)}
    try:
        if args.script:
            with open(args.script) as fh:
                sc = C.parse_script(fh.read())
            if C.p_normalize(sc.word) != C.p_normalize(word):
                raise C.ScriptError("script header does not match the given word")
            got = C.check_script(sc)
            payload.update(method="script", steps=len(sc.steps))
        else:
            res = C.search_charge(word, budget=args.budget, return_script=bool(args.emit_script))
            if args.emit_script and res:
                got, sc = res
                with open(args.emit_script, "w") as fh:
                    fh.write(sc.dumps())
            else:
                got = res
            if not got:
                payload.update(ok=False, method="search", expanded=got.expanded,
                               best_length=got.best_length, best_word=got.best_word)
                _emit(args, payload, f"not found within budget ({got.expanded} expansions); "
                                     f"shortest residual: {got.best_word}")
                return EXIT_FAIL
            payload["method"] = "search"
    except C.ChargeError as exc:
        payload.update(ok=False, error=str(exc))
        _emit(args, payload, f"error: {exc}")
        return EXIT_FAIL
    payload.update(ok=True, zeta=got.exponent, z=-got.exponent)
    _emit(args, payload, f"zeta^{got.exponent}")
    return EXIT_OK


def cmd_classify(args) -> int:
    from tqc.extensions import ExtensionParams, classify_report, fs_class

    p = ExtensionParams(args.n, args.p, args.q, args.r)
    c = fs_class(p)
    rep = classify_report(p)
    payload = {"euler": c.euler, "gv": c.gv, "params": list(p),
               "equivalent_to_T_1000": rep["equivalent"]}
    _emit(args, payload, f"T_({args.n},{args.p},{args.q},{args.r}): {c}")
    return EXIT_OK


def _parse_complex(s: str) -> complex:
    try:
        return complex(s.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise UsageError(f"cannot parse complex number {s!r}") from None


def cmd_psib(args) -> int:
    from tqc.qdilog import QDParams, QuadratureError, check_grid, psi_b_detailed

    if args.check:
        rep = check_grid()
        lines = [f"worst |Psi|-1: {rep['worst']['unitarity']:.3e}",
                 f"worst functional residual: {rep['worst']['functional']:.3e}",
                 f"worst doubling change: {rep['worst']['doubling']:.3e}",
                 "PASS" if rep["ok"] else "FAIL"]
        _emit(args, rep, "\n".join(lines))
        return EXIT_OK if rep["ok"] else EXIT_FAIL
    if args.b is None or args.z is None:
        raise UsageError("psib needs --b and --z (or --check)")
    try:
        p = QDParams(b=args.b, r=args.r, N=args.N, tol=args.tol)
        v = psi_b_detailed(_parse_complex(args.z), p)
    except (QuadratureError, ZeroDivisionError) as exc:
        _emit(args, {"ok": False, "error": str(exc)}, f"error: {exc}")
        return EXIT_FAIL
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = v.to_json()
    _emit(args, out, f"{out['re']:.15g} {'+' if out['im'] >= 0 else '-'} {abs(out['im']):.15g}i"
                     f"  (|.| = {out['abs']:.15g}, err ~ {out['est_error']:.1e})")
    return EXIT_OK


def _add_render_opts(p) -> None:
    p.add_argument("--depth", type=int, default=5, help="Farey depth of drawn exterior edges")
    p.add_argument("--width", type=int, default=480)
    p.add_argument("--height", type=int, default=480)
    p.add_argument("--no-doe", action="store_true")
    p.add_argument("--no-dots", action="store_true")
    p.add_argument("--no-labels", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    ap = argparse.ArgumentParser(prog="tqc", description=__doc__, parents=[common],
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("act", parents=[common], help="apply a word to the standard object")
    p.add_argument("kind", choices=("marked", "dotted"))
    p.add_argument("word")
    p.add_argument("--emit", choices=("json", "svg"), default="json")
    p.add_argument("-o", "--output")
    _add_render_opts(p)
    p.set_defaults(fn=cmd_act)

    p = sub.add_parser("render", parents=[common], help="SVG of the standard object moved by a word")
    p.add_argument("kind", choices=("marked", "dotted"))
    p.add_argument("word")
    p.add_argument("-o", "--output")
    _add_render_opts(p)
    p.set_defaults(fn=cmd_render)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=("relations", "permutations", "functor", "vertex", "charges", "class",
                                     "kashaev-class", "sharp", "psib", "all"))
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("charge", parents=[common], help="zeta-charge of a relator word")
    p.add_argument("word", help="K-word, or T-word prefixed with 'T:'")
    p.add_argument("--script", help="check this proof script instead of searching")
    p.add_argument("--budget", type=int, default=None, help="node expansions (default $TQC_BUDGET or 10^6)")
    p.add_argument("--emit-script", help="write the derivation found by search to this file")
    p.set_defaults(fn=cmd_charge)

    p = sub.add_parser("classify", parents=[common], help="class of T_(n,p,q,r) in H^2(T;Z)")
    for name in "npqr":
        p.add_argument(name, type=int)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("psib", parents=[common], help="evaluate the quantum dilogarithm")
    p.add_argument("--b", type=float)
    p.add_argument("--z", help="complex argument such as 0.3+0.1i")
    p.add_argument("--r", type=float, default=0.1, help="detour radius")
    p.add_argument("--N", type=int, default=400, help="subinterval budget")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--check", action="store_true", help="run the identity grid")
    p.set_defaults(fn=cmd_psib)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"tqc: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
