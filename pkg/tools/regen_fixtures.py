"""Regenerate the proof-script fixtures by search and replay them strictly.

    python3 tools/regen_fixtures.py [--check]

With --check nothing is written; the stored scripts are compared against a
fresh search instead.
"""

import argparse
import sys
from pathlib import Path

from tqc import charge as C

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "tqc" / "fixtures"

TITLES = {
    "pentagon": "(beta alpha)^5",
    "alpha4": "alpha^4",
    "beta3": "beta^3",
    "comm1": "[beta alpha beta, alpha^2 beta alpha beta alpha^2]",
    "comm2": "[beta alpha beta, alpha^2 beta alpha^2 beta alpha beta alpha^2 beta^2 alpha^2]",
}


def annotated(script, title, annotate):
    trace = []
    got = C.check_script(script, trace=trace)
    lines = [f"# image of the T relator {title} under F", f"# charge: zeta^{got.exponent}"]
    lines.append(f"word: {script.word}")
    for st, word, total in trace:
        w = " ".join(f"{k}={v}" for k, v in sorted(st.binding.items()))
        lines.append(f"apply {st.rule} at {st.pos} {st.direction}" + (f" with {w}" if w else ""))
        if annotate:
            lines.append(f"#   [{total:+d}] {word}")
    return "\n".join(lines) + "\n", got


def derived(write):
    base = {r.name: r for r in C._BASE}
    labels = {"j": "-1", "k": "1", "l": "-1/2"}
    from tqc.exactnum import parse_rational
    ok = True
    for r in C._DERIVED:
        b = {v: parse_rational(labels[v]) for v in r.variables}
        res = C.search_charge(C.relator_of_rule(r, b), rules=base, check_relator=False, return_script=True)
        if not res or res[0].exponent != r.charge_delta:
            print(f"derived {r.name}: FAILED ({res})")
            ok = False
            continue
        sc = res[1]
        sc.comments = [f"derivation of {r.name}: {r.describe()}", "base rules only; j=-1, k=1, l=-1/2"]
        if write:
            (FIXTURES / C.DERIVED_FIXTURES[r.name]).write_text(sc.dumps())
        print(f"derived {r.name}: zeta^{r.charge_delta}, {len(sc.steps)} steps")
    return ok


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    ok = derived(not args.check)
    C._VALIDATED = False
    for name, title in TITLES.items():
        res = C.search_charge(C.t_relator_kword(name), return_script=True)
        if not res:
            print(f"{name}: search failed: {res}")
            ok = False
            continue
        text, got = annotated(res[1], title, annotate=name in ("pentagon", "alpha4", "beta3"))
        path = FIXTURES / C.SCRIPT_FIXTURES[name]
        if args.check:
            stored = C.check_script(path.read_text())
            same = stored.exponent == got.exponent
            ok &= same
            print(f"{name}: stored zeta^{stored.exponent}, search zeta^{got.exponent}")
        else:
            path.write_text(text)
            print(f"{name}: zeta^{got.exponent}, {len(res[1].steps)} steps")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
