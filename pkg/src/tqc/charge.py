"""zeta-charges of relator words in the Kashaev group.

Every K-word is first P-normalized: all P letters are pushed to the right
(relabelling the A/T letters they cross), leaving a word of unit letters
followed by one permutation sigma.  Rewrite rules replace a window of unit
letters; a rule may emit a transposition on its right-hand side, which is
pushed through the rest of the word in the same way.  Each application of a
rule lhs = zeta^d rhs in the forward direction adds d to the running charge,
so when the word reaches the empty word with sigma = id the charge n
satisfies  w = zeta^n.
"""

from __future__ import annotations

import heapq
import itertools
import os
import re
from dataclasses import dataclass, field
from importlib import resources
from typing import NamedTuple, Sequence

from tqc.dotted import (
    DottedTessellation,
    KLetter,
    KMoveError,
    QPermutation,
    apply_A,
    apply_kword,
    format_kword,
    invert_kword,
    parse_kword,
    standard_dotted,
)
from tqc.exactnum import ExtendedRational, parse_rational

DEFAULT_BUDGET = 10**6


def default_budget() -> int:
    env = os.environ.get("TQC_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class ChargeError(RuntimeError):
    pass


class ScriptError(ChargeError):
    pass


class NotRelatorError(ChargeError):
    pass


@dataclass(frozen=True)
class Charge:
    exponent: int

    def __int__(self):
        return self.exponent


@dataclass
class NotFound:
    expanded: int
    best_length: int
    best_word: str

    def __bool__(self):
        return False


# ------------------------------------------------------------------ letters
# A unit letter is ("A", e, j) or ("T", e, j, k) with e = +1/-1.

def _kl_to_unit(x: KLetter) -> tuple:
    return ("A", x.exp, x.idx[0]) if x.kind == "A" else ("T", x.exp, x.idx[0], x.idx[1])


def unit_to_kletter(u: tuple) -> KLetter:
    if u[0] == "A":
        return KLetter("A", (u[2],), u[1])
    return KLetter("T", (u[2], u[3]), u[1])


def _relabel(u: tuple, perm) -> tuple:
    if u[0] == "A":
        return ("A", u[1], perm(u[2]))
    return ("T", u[1], perm(u[2]), perm(u[3]))


def p_normalize(word) -> tuple[tuple, QPermutation]:
    """Rewrite ``word`` as (unit letters, sigma) meaning letters . P_sigma."""
    if isinstance(word, str):
        word = parse_kword(word)
    letters = []
    pi = QPermutation.identity()
    for x in word:
        if x.kind == "P":
            g = x.perm if x.exp > 0 else x.perm.inverse()
            pi = pi.compose(g)
        else:
            letters.append(_relabel(_kl_to_unit(x), pi) if not pi.is_identity() else _kl_to_unit(x))
    return tuple(letters), pi


def indices(u: tuple) -> tuple:
    return u[2:]


def commute(x: tuple, y: tuple) -> bool:
    return not set(x[2:]) & set(y[2:])


def inverse_unit(u: tuple) -> tuple:
    return (u[0], -u[1]) + u[2:]


def fmt_unit(u: tuple, names=None) -> str:
    name = (lambda i: str(names[i])) if names else str
    p = "'" if u[1] < 0 else ""
    return u[0] + "".join(f"[{name(i)}]" for i in u[2:]) + p


def fmt_letters(letters, names=None) -> str:
    return " ".join(fmt_unit(u, names) for u in letters) or "(empty)"


# ------------------------------------------------------------------ rules

class Pat(NamedTuple):
    kind: str
    exp: int
    vars: tuple


def _pat(text: str) -> tuple:
    out = []
    for m in re.finditer(r"([AT])((?:_[jkl])+)('?)", text):
        vs = tuple(m.group(2).split("_")[1:])
        out.append(Pat(m.group(1), -1 if m.group(3) else 1, vs))
    return tuple(out)


@dataclass(frozen=True)
class RewriteRule:
    name: str
    lhs: tuple
    rhs: tuple
    swap: tuple | None  # variables of the transposition trailing the rhs
    charge_delta: int
    derived: bool = False
    variables: tuple = field(default=())

    def describe(self) -> str:
        def side(p):
            return " ".join(x.kind + "".join(f"[{v}]" for v in x.vars) + ("'" if x.exp < 0 else "") for x in p) or "1"
        tail = f" P({' '.join(self.swap)})" if self.swap else ""
        z = f"zeta^{self.charge_delta} " if self.charge_delta else ""
        return f"{side(self.lhs)} = {z}{side(self.rhs)}{tail}"


def _rule(name, lhs, rhs, swap=None, delta=0, derived=False) -> RewriteRule:
    lp, rp = _pat(lhs), _pat(rhs)
    vs = []
    for p in lp + rp:
        for v in p.vars:
            if v not in vs:
                vs.append(v)
    return RewriteRule(name, lp, rp, tuple(swap) if swap else None, delta, derived, tuple(vs))


_BASE = [
    _rule("TAT", "T_j_k A_j T_k_j", "A_j A_k", ("j", "k"), +1),
    _rule("TATi", "T_k_j' A_j' T_j_k'", "A_j' A_k'", ("j", "k"), -1),
    _rule("A3", "A_j A_j A_j", ""),
    _rule("A3i", "A_j' A_j' A_j'", ""),
    _rule("A2", "A_j A_j", "A_j'"),
    _rule("A2i", "A_j' A_j'", "A_j"),
    _rule("pentagon", "T_k_l T_j_k", "T_j_k T_j_l T_k_l"),
    _rule("ATA", "A_j T_j_k A_k", "A_k T_k_j A_j"),
    _rule("ATAi", "A_k' T_j_k' A_j'", "A_j' T_k_j' A_k'"),
]

_DERIVED = [
    _rule("TAA", "T_j_k' A_j A_k", "A_j T_k_j", ("j", "k"), -1, derived=True),
    _rule("TAAA", "T_j_k' A_j A_j A_k", "A_j A_j A_k T_k_j'", derived=True),
    _rule("pentagon_inv", "T_j_k' T_k_l'", "T_k_l' T_j_l' T_j_k'", derived=True),
    _rule("TAAT", "T_k_j' A_j A_j T_j_k'", "A_k A_k A_j A_j", ("j", "k"), -1, derived=True),
]

SPECIAL = ("comm", "free")


def base_rules() -> list:
    _ensure_validated()
    return list(_BASE)


def derived_rules() -> list:
    _ensure_validated()
    return list(_DERIVED)


def all_rules() -> dict:
    return {r.name: r for r in _BASE + _DERIVED}


# ------------------------------------------------------------------ state

def _swap_fn(a, b):
    def f(i):
        return b if i == a else a if i == b else i
    return f


def _match(pattern: Sequence[Pat], window: Sequence[tuple], binding: dict) -> dict | None:
    if len(pattern) != len(window):
        return None
    b = dict(binding)
    for p, u in zip(pattern, window):
        if p.kind != u[0] or p.exp != u[1]:
            return None
        for v, i in zip(p.vars, u[2:]):
            if v in b:
                if b[v] != i:
                    return None
            else:
                b[v] = i
    vals = list(b.values())
    if len(set(vals)) != len(vals):
        return None
    return b


def _instantiate(pattern: Sequence[Pat], b: dict) -> tuple:
    return tuple((p.kind, p.exp) + tuple(b[v] for v in p.vars) for p in pattern)


def apply_rule(letters: tuple, sigma, rule: RewriteRule, pos: int, direction: str, binding: dict | None = None):
    """Rewrite at ``pos``; returns (letters, sigma, charge delta).

    ``sigma`` may be a QPermutation (labels are rationals) or a dict on ints.
    """
    fwd = direction == "fwd"
    if direction not in ("fwd", "rev"):
        raise ScriptError(f"direction must be fwd or rev, not {direction!r}")
    src, dst = (rule.lhs, rule.rhs) if fwd else (rule.rhs, rule.lhs)
    n = len(src)
    if pos < 0 or pos + n > len(letters):
        raise ScriptError(f"{rule.name}: position {pos} out of range")
    b = _match(src, letters[pos:pos + n], binding or {})
    if b is None:
        raise ScriptError(
            f"{rule.name} {direction} does not match at {pos}: found "
            f"{fmt_letters(letters[pos:pos + n])}")
    if any(v not in b for v in rule.variables):
        missing = [v for v in rule.variables if v not in b]
        raise ScriptError(f"{rule.name}: variables {missing} must be given with 'with'")
    new = _instantiate(dst, b)
    rest = letters[pos + n:]
    if rule.swap:
        a, c = b[rule.swap[0]], b[rule.swap[1]]
        f = _swap_fn(a, c)
        rest = tuple(_relabel(u, f) for u in rest)
        sigma = _compose_swap(sigma, a, c)
    delta = rule.charge_delta if fwd else -rule.charge_delta
    return letters[:pos] + new + rest, sigma, delta


def _compose_swap(sigma, a, c):
    """(a c) o sigma."""
    if isinstance(sigma, QPermutation):
        return QPermutation.transposition(a, c).compose(sigma)
    f = _swap_fn(a, c)
    out = {i: f(sigma.get(i, i)) for i in set(sigma) | {a, c}}
    return {i: v for i, v in out.items() if i != v}


def apply_special(letters: tuple, name: str, pos: int, direction: str):
    if direction != "fwd" and name == "free":
        raise ScriptError("free insertion is not supported; write the inverse pair explicitly")
    if pos < 0 or pos + 2 > len(letters):
        raise ScriptError(f"{name}: position {pos} out of range")
    x, y = letters[pos], letters[pos + 1]
    if name == "comm":
        if not commute(x, y):
            raise ScriptError(f"comm: {fmt_unit(x)} and {fmt_unit(y)} share an index")
        return letters[:pos] + (y, x) + letters[pos + 2:]
    if y != inverse_unit(x):
        raise ScriptError(f"free: {fmt_unit(x)} {fmt_unit(y)} is not an inverse pair")
    return letters[:pos] + letters[pos + 2:]


# ------------------------------------------------------------------ scripts

class Step(NamedTuple):
    rule: str
    pos: int
    direction: str
    binding: dict


@dataclass
class ProofScript:
    word: str
    steps: list
    comments: list = field(default_factory=list)

    def dumps(self) -> str:
        lines = [f"# {c}" for c in self.comments]
        lines.append(f"word: {self.word}")
        for s in self.steps:
            w = " ".join(f"{k}={v}" for k, v in sorted(s.binding.items()))
            lines.append(f"apply {s.rule} at {s.pos} {s.direction}" + (f" with {w}" if w else ""))
        return "\n".join(lines) + "\n"


_STEP_RE = re.compile(r"^apply\s+(\S+)\s+at\s+(\d+)(?:\s+(fwd|rev))?(?:\s+with\s+(.*))?$")


def parse_script(text: str) -> ProofScript:
    word = None
    steps = []
    comments = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if raw.strip().startswith("#"):
            comments.append(raw.strip()[1:].strip())
        if not line:
            continue
        if line.startswith("word:"):
            if word is not None:
                raise ScriptError(f"line {lineno}: second header")
            word = line[5:].strip()
            continue
        m = _STEP_RE.match(line)
        if not m:
            raise ScriptError(f"line {lineno}: cannot parse {raw!r}")
        binding = {}
        if m.group(4):
            for item in m.group(4).split():
                k, _, v = item.partition("=")
                if k not in ("j", "k", "l") or not v:
                    raise ScriptError(f"line {lineno}: bad binding {item!r}")
                binding[k] = parse_rational(v)
        steps.append(Step(m.group(1), int(m.group(2)), m.group(3) or "fwd", binding))
    if word is None:
        raise ScriptError("script has no 'word:' header")
    return ProofScript(word, steps, comments)


def check_script(s: ProofScript | str, rules: dict | None = None, trace: list | None = None) -> Charge:
    """Replay a script; return the accumulated charge iff it ends at the empty word."""
    if isinstance(s, str):
        s = parse_script(s)
    rules = all_rules() if rules is None else rules
    letters, sigma = p_normalize(s.word)
    total = 0
    for n, st in enumerate(s.steps, 1):
        try:
            if st.rule in SPECIAL:
                letters = apply_special(letters, st.rule, st.pos, st.direction)
            elif st.rule in rules:
                letters, sigma, d = apply_rule(letters, sigma, rules[st.rule], st.pos, st.direction, st.binding)
                total += d
            else:
                raise ScriptError(f"unknown rule {st.rule!r}")
        except ScriptError as exc:
            raise ScriptError(f"step {n}: {exc}; word is {fmt_letters(letters)}") from None
        if trace is not None:
            trace.append((st, fmt_letters(letters), total))
    if letters:
        raise ScriptError(f"residual word {fmt_letters(letters)}")
    if not sigma.is_identity():
        raise ScriptError(f"residual permutation {sigma!r}")
    return Charge(total)


# ------------------------------------------------------------------ search

def _lex_normal_form(letters: tuple) -> tuple:
    """Lexicographically least representative of the commutation class."""
    rest = list(letters)
    out = []
    while rest:
        best = None
        for i, u in enumerate(rest):
            if all(commute(u, rest[p]) for p in range(i)):
                if best is None or u < rest[best]:
                    best = i
        out.append(rest.pop(best))
    return tuple(out)


def _reach(letters: tuple) -> list:
    """reach[i]: bitset of later positions that depend on position i."""
    n = len(letters)
    reach = [0] * n
    for i in range(n - 1, -1, -1):
        r = 0
        x = letters[i]
        for j in range(i + 1, n):
            if not commute(x, letters[j]):
                r |= (1 << j) | reach[j]
        reach[i] = r
    return reach


def _matches(letters: tuple, pattern: Sequence[Pat], reach: list):
    """Every way to gather ``pattern`` into a factor up to commutation.

    Yields (swaps, gathered letters, position, binding).
    """
    n = len(letters)
    k = len(pattern)

    def rec(slot, picked, b):
        if slot == k:
            out = _arrange(letters, picked, reach)
            if out is not None:
                yield out + (b,)
            return
        p = pattern[slot]
        for q in range(n):
            u = letters[q]
            if u[0] != p.kind or u[1] != p.exp or q in picked:
                continue
            # q must not be forced before an earlier slot
            if any(q < r and reach[q] >> r & 1 for r in picked):
                continue
            b2 = _match((p,), (u,), b)
            if b2 is None:
                continue
            yield from rec(slot + 1, picked + [q], b2)

    yield from rec(0, [], {})


def _arrange(letters: tuple, picked: list, reach: list):
    lo, hi = min(picked), max(picked)
    chosen = set(picked)
    left, right = [], []
    for r in range(lo + 1, hi):
        if r in chosen:
            continue
        pred = any(p < r and reach[p] >> r & 1 for p in picked)
        succ = any(p > r and reach[r] >> p & 1 for p in picked)
        if pred and succ:
            return None
        (right if pred else left).append(r)
    order = list(range(lo)) + left + picked + right + list(range(hi + 1, len(letters)))
    cur = list(range(len(letters)))
    swaps = []
    for t, want in enumerate(order):
        i = cur.index(want)
        while i > t:
            a, c = letters[cur[i - 1]], letters[cur[i]]
            if not commute(a, c):
                return None
            cur[i - 1], cur[i] = cur[i], cur[i - 1]
            swaps.append(i - 1)
            i -= 1
    return swaps, tuple(letters[i] for i in cur), lo + len(left)


def _pull_left(letters: list, q: int, target: int, steps: list) -> None:
    for s in range(q - 1, target - 1, -1):
        letters[s], letters[s + 1] = letters[s + 1], letters[s]
        steps.append(Step("comm", s, "fwd", {}))


def _expand(letters: tuple, steps: list) -> tuple:
    """A'_j -> A_j A_j everywhere."""
    out = list(letters)
    i = 0
    while i < len(out):
        u = out[i]
        if u[0] == "A" and u[1] < 0:
            out[i:i + 1] = [("A", 1, u[2]), ("A", 1, u[2])]
            steps.append(Step("A2", i, "rev", {"j": u[2]}))
            i += 2
        else:
            i += 1
    return tuple(out)


def _simplify(letters: tuple):
    """Charge-free cleanup of a positive word (no A' letters).

    Cancels inverse T pairs and A_j^3 whenever the letters can be brought
    together by commutations.  Returns (letters, explicit steps).
    """
    steps = []
    cur = list(letters)
    changed = True
    while changed:
        changed = False
        n = len(cur)
        for p in range(n):
            x = cur[p]
            want = inverse_unit(x) if x[0] == "T" else x
            need = 1 if x[0] == "T" else 2
            found = []
            blockers = []
            for q in range(p + 1, n):
                y = cur[q]
                if y == want and all(commute(y, cur[b]) for b in blockers):
                    found.append(q)
                    if len(found) == need:
                        break
                    continue
                if not commute(x, y):
                    break
                blockers.append(q)
            if len(found) < need:
                continue
            for m, q in enumerate(found, 1):
                _pull_left(cur, q, p + m, steps)
            if need == 1:
                del cur[p:p + 2]
                steps.append(Step("free", p, "fwd", {}))
            else:
                del cur[p:p + 3]
                steps.append(Step("A3", p, "fwd", {"j": x[2]}))
            changed = True
            break
    return tuple(cur), steps


class _Move(NamedTuple):
    rule: RewriteRule
    direction: str
    pattern: tuple  # positive form of the matched side
    folds: tuple  # slots of the original side that are A' letters


def _positive(side: Sequence[Pat]):
    out, folds = [], []
    for n, p in enumerate(side):
        if p.kind == "A" and p.exp < 0:
            out.extend((Pat("A", 1, p.vars), Pat("A", 1, p.vars)))
            folds.append(n)
        else:
            out.append(p)
    return tuple(out), tuple(folds)


def _search_moves(rules: dict) -> list:
    moves = []
    seen = set()
    for name in ("TAA", "TAT", "TAAT", "TAAA", "ATA", "ATAi", "pentagon", "pentagon_inv", "TATi"):
        if name not in rules:
            continue
        r = rules[name]
        for direction in ("fwd", "rev"):
            side = r.lhs if direction == "fwd" else r.rhs
            if not side:
                continue
            pat, folds = _positive(side)
            other = _positive(r.rhs if direction == "fwd" else r.lhs)[0]
            sig = (pat, other, r.swap, r.charge_delta if direction == "fwd" else -r.charge_delta)
            if sig in seen:
                continue
            seen.add(sig)
            moves.append(_Move(r, direction, pat, folds))
    return moves


def _binding_str(b: dict, names) -> dict:
    return {k: names[v] for k, v in b.items()}


def search_charge(word, budget: int | None = None, rules: dict | None = None,
                  check_relator: bool = True, return_script: bool = False):
    """Best-first search for a derivation of ``word`` down to the empty word.

    Returns a Charge (and the explicit ProofScript when ``return_script``), or
    NotFound when the budget of node expansions is exhausted.  States are kept
    in positive form (A' written as A A) and deduplicated up to commutation.
    """
    budget = default_budget() if budget is None else budget
    text = word if isinstance(word, str) else format_kword(word)
    kw = parse_kword(word) if isinstance(word, str) else tuple(word)
    if check_relator:
        certify_relator(kw)
    letters, sigma = p_normalize(kw)
    rules = all_rules() if rules is None else rules
    names = sorted({i for u in letters for i in u[2:]}, key=ExtendedRational.cyc_key)
    code = {v: n for n, v in enumerate(names)}
    perm = {}
    if not sigma.is_identity():
        if not sigma.base.is_identity() or any(k not in code for k in sigma.patch):
            raise NotRelatorError("the trailing permutation is not supported on the word's labels")
        perm = {code[k]: code[v] for k, v in sigma.patch.items()}
    ints = tuple((u[0], u[1]) + tuple(code[i] for i in u[2:]) for u in letters)
    steps0 = []
    ints = _expand(ints, steps0)
    ints, simp = _simplify(ints)
    steps0 += simp
    moves = _search_moves(rules)
    start_key = (_lex_normal_form(ints), tuple(sorted(perm.items())))
    counter = itertools.count()
    heap = [(len(ints), 0, next(counter), ints, perm, 0, start_key)]
    parents = {start_key: (None, steps0)}
    seen = {start_key}
    best = (len(ints), ints)
    expanded = 0
    while heap and expanded < budget:
        _, depth, _, cur, cp, charge, key = heapq.heappop(heap)
        expanded += 1
        if not cur and not cp:
            steps = _unwind(parents, key)
            sc = ProofScript(text, [Step(s.rule, s.pos, s.direction, _binding_str(s.binding, names)) for s in steps])
            result = Charge(charge)
            return (result, sc) if return_script else result
        if len(cur) < best[0]:
            best = (len(cur), cur)
        reach = _reach(cur)
        for mv in moves:
            for swaps, gathered, p, b in _matches(cur, mv.pattern, reach):
                st = [Step("comm", s, "fwd", {}) for s in swaps]
                g = list(gathered)
                # fold A A back into A' where the rule side has A'
                at = p
                for n, pt in enumerate(mv.rule.lhs if mv.direction == "fwd" else mv.rule.rhs):
                    if n in mv.folds:
                        j = b[pt.vars[0]]
                        g[at:at + 2] = [("A", -1, j)]
                        st.append(Step("A2", at, "fwd", {"j": j}))
                    at += 1
                try:
                    nl, np_, d = apply_rule(tuple(g), cp, mv.rule, p, mv.direction, b)
                except ScriptError:
                    continue
                st.append(Step(mv.rule.name, p, mv.direction, {v: b[v] for v in mv.rule.variables if v in b}))
                nl = _expand(nl, st)
                nl, simp = _simplify(nl)
                st.extend(simp)
                nk = (_lex_normal_form(nl), tuple(sorted(np_.items())))
                if nk in seen:
                    continue
                seen.add(nk)
                parents[nk] = (key, st)
                prio = len(nl) * 4 + depth + 1
                heapq.heappush(heap, (prio, depth + 1, next(counter), nl, np_, charge + d, nk))
    return NotFound(expanded, best[0], fmt_letters(best[1], names))


def _unwind(parents, key):
    out = []
    while key is not None:
        prev, steps = parents[key]
        out = list(steps) + out
        key = prev
    return out


# ------------------------------------------------------------------ relator check

def _sample_states(labels) -> list:
    """Dotted states near the standard one on which relator words get tested."""
    labels = sorted(set(labels), key=ExtendedRational.cyc_key)[:4]
    states = []
    for powers in itertools.product(range(3), repeat=len(labels)):
        d = standard_dotted()
        for j, p in zip(labels, powers):
            if p:
                d = apply_A(d, j, p)
        states.append(d)
    return states


def certify_relator(word, extra_states: Sequence[DottedTessellation] = ()) -> int:
    """Check that ``word`` acts trivially wherever it applies; return how many states applied."""
    if isinstance(word, str):
        word = parse_kword(word)
    letters, _ = p_normalize(word)
    labels = {i for u in letters for i in u[2:]}
    applied = 0
    for d in list(extra_states) + _sample_states(labels):
        try:
            out = apply_kword(d, word)
        except KMoveError:
            continue
        applied += 1
        if out != d:
            raise NotRelatorError("the word moves a dotted tessellation, so it is not a relator")
    if not applied:
        raise NotRelatorError("the word applies to none of the sample dotted tessellations")
    return applied


# ------------------------------------------------------------------ fixtures

def load_fixture(name: str) -> ProofScript:
    text = resources.files("tqc").joinpath("fixtures", name).read_text()
    return parse_script(text)


DERIVED_FIXTURES = {
    "TAA": "derived_TAA.proof",
    "TAAA": "derived_TAAA.proof",
    "pentagon_inv": "derived_pentagon_inv.proof",
    "TAAT": "derived_TAAT.proof",
}

_VALIDATED = False


def relator_of_rule(rule: RewriteRule, binding: dict) -> tuple:
    """lhs . (rhs . P_swap)^-1 as a K-word."""
    lhs = tuple(unit_to_kletter(u) for u in _instantiate(rule.lhs, binding))
    rhs = tuple(unit_to_kletter(u) for u in _instantiate(rule.rhs, binding))
    tail = ()
    if rule.swap:
        a, c = binding[rule.swap[0]], binding[rule.swap[1]]
        tail = (KLetter("P", (), 1, QPermutation.transposition(a, c), f"swap({a},{c})"),)
    return lhs + invert_kword(rhs + tail)


def _ensure_validated() -> None:
    global _VALIDATED
    if _VALIDATED:
        return
    base = {r.name: r for r in _BASE}
    for r in _DERIVED:
        fname = DERIVED_FIXTURES[r.name]
        try:
            sc = load_fixture(fname)
        except FileNotFoundError:
            raise ChargeError(f"derived rule {r.name} has no stored derivation") from None
        got = check_script(sc, base)
        if got.exponent != r.charge_delta:
            raise ChargeError(f"derived rule {r.name}: derivation gives {got.exponent}, rule says {r.charge_delta}")
    _VALIDATED = True


# ------------------------------------------------------------------ T relators

T_RELATORS = {
    "pentagon": "(b a)^5",
    "alpha4": "a^4",
    "beta3": "b^3",
    "comm1": "[b a b, a^2 b a b a^2]",
    "comm2": "[b a b, a^2 b a^2 b a b a^2 b^2 a^2]",
}

SCRIPT_FIXTURES = {
    "pentagon": "pentagon.proof",
    "alpha4": "alpha4.proof",
    "beta3": "beta3.proof",
    "comm1": "comm1.proof",
    "comm2": "comm2.proof",
}


def t_relator_kword(name: str) -> tuple:
    from tqc.functor import bold_F
    return bold_F(T_RELATORS[name])


def relator_script(name: str) -> ProofScript:
    """The stored script for a T relator, checked to start from F of that relator."""
    sc = load_fixture(SCRIPT_FIXTURES[name])
    if p_normalize(sc.word) != p_normalize(t_relator_kword(name)):
        raise ScriptError(f"fixture for {name} does not start from the image of {T_RELATORS[name]}")
    return sc


def charge_of_T_relators(cross_check: bool = True, budget: int | None = None) -> tuple:
    """z-exponents (z = zeta^-1) of the five relators, in the order (beta alpha)^5, alpha^4, beta^3, commutators."""
    out = []
    for name in ("pentagon", "alpha4", "beta3", "comm1", "comm2"):
        got = check_script(relator_script(name))
        if cross_check and name in ("pentagon", "alpha4", "beta3"):
            found = search_charge(t_relator_kword(name), budget=budget)
            if not found:
                raise ChargeError(f"search did not reduce {name} within budget")
            if found.exponent != got.exponent:
                raise ChargeError(f"{name}: script gives {got.exponent}, search gives {found.exponent}")
        out.append(-got.exponent)
    return tuple(out)


__all__ = [
    "Charge", "NotFound", "ChargeError", "ScriptError", "NotRelatorError", "RewriteRule", "ProofScript",
    "Step", "base_rules", "derived_rules", "all_rules", "p_normalize", "check_script", "parse_script",
    "search_charge", "certify_relator", "charge_of_T_relators", "t_relator_kword", "relator_of_rule",
    "load_fixture", "relator_script", "T_RELATORS", "DEFAULT_BUDGET", "default_budget",
]
