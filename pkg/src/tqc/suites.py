"""Verification suites shared by ``tqc verify`` and the acceptance tests.

Each suite returns a report {"suite", "ok", "checks", "seconds"}; a check is
{"name", "ok", "detail"}.
"""

from __future__ import annotations

import itertools
import random
import time

from tqc.dotted import (
    A,
    KMoveError,
    P,
    QPermutation,
    T,
    apply_A,
    apply_T,
    apply_T_inv,
    apply_kword,
    standard_dotted,
)
from tqc.exactnum import parse_rational
from tqc.functor import bold_F, functor_object, gamma_alpha, gamma_beta
from tqc.marked import (
    LETTERS,
    MarkedTessellation,
    apply_tword,
    marked_equal,
    parse_tword,
    standard_marked,
    vertex_function,
)
from tqc.tessellation import from_polygon

Q = parse_rational

T_RELATOR_WORDS = (
    "(b a)^5",
    "a^4",
    "b^3",
    "[b a b, a^2 b a b a^2]",
    "[b a b, a^2 b a^2 b a b a^2 b^2 a^2]",
)

# the printed label tables for the two relabelling permutations
GAMMA_ALPHA_TABLE = {"-1": "-1", "1": "1", "-2": "2", "-1/2": "-2", "1/2": "-1/2", "2": "1/2",
                     "1/3": "-3/2", "3": "2/3"}
GAMMA_BETA_TABLE = {"-1": "-1", "1": "-1/2", "-2": "1", "-1/2": "-2", "1/2": "-2/3", "2": "-1/3",
                    "1/3": "-3/4", "3": "-1/4"}

OCTAGON_POLYGON = ("0", "1/3", "1/2", "1", "2", "inf", "-2", "-1")
OCTAGON_DIAGONALS = (("0", "-2"), ("1", "-2"), ("-2", "2"), ("1/3", "1"), ("0", "1"))
OCTAGON_DOE = ("-1", "0")
OCTAGON_VALUES = {"0": "-1", "inf": "0", "1": "-1/2", "-1": "-2"}

LABEL_POOL = tuple(Q(x) for x in ("1", "-1", "2", "-2", "1/2", "-1/2", "3", "-3", "1/3", "-1/3",
                                  "2/3", "-2/3", "3/2", "-3/2"))


def octagon_marked() -> MarkedTessellation:
    t = from_polygon(OCTAGON_POLYGON, OCTAGON_DIAGONALS)
    return MarkedTessellation(t, tuple(Q(v) for v in OCTAGON_DOE))


def _check(name, ok, detail=None) -> dict:
    return {"name": name, "ok": bool(ok), "detail": detail}


def _report(suite, checks, t0) -> dict:
    return {"suite": suite, "ok": all(c["ok"] for c in checks), "checks": checks,
            "seconds": round(time.perf_counter() - t0, 3)}


def random_tword(rng: random.Random, max_len: int = 8) -> tuple:
    return tuple(rng.choice(LETTERS) for _ in range(rng.randint(1, max_len)))


def random_marked(rng: random.Random, max_len: int = 10) -> MarkedTessellation:
    return apply_tword(standard_marked(), random_tword(rng, max_len))


def random_dotted(rng: random.Random, steps: int = 10):
    """A dotted tessellation reached from the functor image of a random marked one by random A/T moves."""
    d = functor_object(random_marked(rng, 6))
    for _ in range(steps):
        if rng.random() < 0.5:
            d = apply_A(d, rng.choice(LABEL_POOL), rng.choice((1, -1)))
        else:
            j, k = rng.sample(LABEL_POOL, 2)
            try:
                d = (apply_T if rng.random() < 0.5 else apply_T_inv)(d, j, k)
            except KMoveError:
                pass
    return d


# ------------------------------------------------------------------ relations

def _relation_families():
    """(name, generator of (lhs, rhs) K-word pairs over the label pool)."""
    pool = LABEL_POOL[:8]
    swaps = [QPermutation.transposition(j, k) for j, k in itertools.combinations(pool[:4], 2)]
    perms = [("ga", gamma_alpha()), ("gb", gamma_beta())] + [(f"swap{n}", g) for n, g in enumerate(swaps)]

    def a3():
        for j in pool:
            yield (A(j), A(j), A(j)), ()

    def a_inverse():
        for j in pool:
            yield (A(j, -1),), (A(j), A(j))

    def pentagon():
        for j, k, l in itertools.permutations(pool, 3):
            yield (T(k, l), T(j, k)), (T(j, k), T(j, l), T(k, l))

    def ata():
        for j, k in itertools.permutations(pool, 2):
            yield (A(j), T(j, k), A(k)), (A(k), T(k, j), A(j))

    def tat():
        for j, k in itertools.permutations(pool, 2):
            yield (T(j, k), A(j), T(k, j)), (A(j), A(k), P(QPermutation.transposition(j, k), f"swap({j},{k})"))

    def p_merge():
        for (n1, g1), (n2, g2) in itertools.product(perms, repeat=2):
            yield (P(g1, n1), P(g2, n2)), (P(g1.compose(g2), f"{n1}.{n2}"),)

    def index_change_a():
        for (n, g), j in itertools.product(perms, pool):
            yield (P(g, n), A(j)), (A(g(j)), P(g, n))

    def index_change_t():
        for (n, g), (j, k) in itertools.product(perms, itertools.permutations(pool, 2)):
            yield (P(g, n), T(j, k)), (T(g(j), g(k)), P(g, n))

    def commute_aa():
        for j, k in itertools.permutations(pool, 2):
            yield (A(j), A(k)), (A(k), A(j))

    def commute_at():
        for j, k, l in itertools.permutations(pool, 3):
            yield (A(l), T(j, k)), (T(j, k), A(l))

    def commute_tt():
        for j, k, l, m in itertools.permutations(LABEL_POOL[:10], 4):
            yield (T(j, k), T(l, m)), (T(l, m), T(j, k))

    return [("A^3 = 1", a3), ("A' = A^2", a_inverse), ("pentagon", pentagon), ("ATA", ata),
            ("TAT (with P)", tat), ("P merge", p_merge), ("P A = A P", index_change_a),
            ("P T = T P", index_change_t), ("A_j A_k = A_k A_j", commute_aa),
            ("A_l T_jk = T_jk A_l", commute_at), ("T_jk T_lm = T_lm T_jk", commute_tt)]


def check_k_relations(seed: int = 0, n_states: int = 40, min_cases: int = 30, cap: int = 120) -> list:
    rng = random.Random(seed)
    states = [standard_dotted()] + [random_dotted(rng) for _ in range(n_states)]
    # A-twisted copies make more T moves applicable
    for d in list(states[:10]):
        for j in LABEL_POOL[:4]:
            states.append(apply_A(d, j))
    applicable: dict = {}

    def first_applies(n, d, x):
        # memoized test of the first (rightmost) letter, which filters most candidates
        if x.kind != "T":
            return True
        key = (n, x.idx, x.exp)
        if key not in applicable:
            try:
                apply_kword(d, (x,))
                applicable[key] = True
            except KMoveError:
                applicable[key] = False
        return applicable[key]

    checks = []
    for name, gen in _relation_families():
        cases = failures = 0
        for lhs, rhs in gen():
            for n, d in enumerate(states):
                if not all(first_applies(n, d, w[-1]) for w in (lhs, rhs) if w):
                    continue
                try:
                    a = apply_kword(d, lhs)
                    b = apply_kword(d, rhs)
                except KMoveError:
                    continue
                cases += 1
                if a != b:
                    failures += 1
                if cases >= cap:
                    break
            if cases >= cap:
                break
        checks.append(_check(f"K relation {name}", failures == 0 and cases >= min_cases,
                             {"applicable": cases, "failures": failures}))
    return checks


def check_t_relators(seed: int = 0, n_random: int = 50) -> list:
    rng = random.Random(seed)
    starts = [standard_marked()] + [random_marked(rng) for _ in range(n_random)]
    checks = []
    for w in T_RELATOR_WORDS:
        word = parse_tword(w)
        bad = sum(not marked_equal(apply_tword(m, word), m) for m in starts)
        checks.append(_check(f"T relator {w}", bad == 0, {"states": len(starts), "failures": bad}))
    return checks


def suite_relations(seed: int = 0) -> dict:
    t0 = time.perf_counter()
    return _report("relations", check_t_relators(seed) + check_k_relations(seed), t0)


# ------------------------------------------------------------------ permutations

def composite_gamma() -> QPermutation:
    return QPermutation.transposition("-1/2", "1").compose(gamma_beta()).compose(gamma_alpha())


def table_mismatches(perm: QPermutation, table: dict) -> list:
    return [(k, v, str(perm(Q(k)))) for k, v in table.items() if perm(Q(k)) != Q(v)]


def suite_permutations() -> dict:
    t0 = time.perf_counter()
    ga, gb, g = gamma_alpha(), gamma_beta(), composite_gamma()
    ident = QPermutation.identity()
    checks = [
        _check("gamma_alpha^4 = id", (ga ** 4) == ident),
        _check("gamma_beta^3 = id", (gb ** 3) == ident),
        _check("gamma fixes -1, -1/2, 1", g.fixes(Q(-1), Q("-1/2"), Q(1))),
        _check("gamma^5 = id", (g ** 5) == ident),
        _check("(gamma_beta gamma_alpha)^5 != id", (gb.compose(ga) ** 5) != ident),
    ]
    for name, perm, table in (("gamma_alpha", ga, GAMMA_ALPHA_TABLE), ("gamma_beta", gb, GAMMA_BETA_TABLE)):
        bad = table_mismatches(perm, table)
        checks.append(_check(f"{name} matches printed table", not bad,
                             {"entries": len(table), "mismatches": [f"{k} -> {got} (table says {v})" for k, v, got in bad]}))
    return _report("permutations", checks, t0)


# ------------------------------------------------------------------ functor / vertex functions

def suite_functor(seed: int = 0, n: int = 30) -> dict:
    t0 = time.perf_counter()
    checks = [_check("F(standard marked) = standard dotted", functor_object(standard_marked()) == standard_dotted())]
    d = functor_object(octagon_marked())
    checks.append(_check("octagon image has six diff triangles", len(d.interior) == 6, {"interior": len(d.interior)}))
    rng = random.Random(seed)
    bad = []
    for _ in range(n):
        w = random_tword(rng, 8)
        lhs = functor_object(apply_tword(standard_marked(), w))
        rhs = apply_kword(standard_dotted(), bold_F(w))
        if lhs != rhs:
            bad.append(" ".join(w))
    checks.append(_check("equivariance F(w.tau*) = F(w).tau*_dot", not bad, {"words": n, "failures": bad}))
    return _report("functor", checks, t0)


def suite_vertex(seed: int = 0, n: int = 30) -> dict:
    t0 = time.perf_counter()
    checks = [_check("vertex function of standard is identity", vertex_function(standard_marked()).is_identity())]
    f = vertex_function(octagon_marked())
    got = {k: str(f(Q(k))) for k in OCTAGON_VALUES}
    checks.append(_check("octagon vertex values", all(f(Q(k)) == Q(v) for k, v in OCTAGON_VALUES.items()), got))
    rng = random.Random(seed)
    bad = 0
    for _ in range(n):
        g, h = random_tword(rng, 6), random_tword(rng, 6)
        fg = vertex_function(apply_tword(standard_marked(), g))
        fh = vertex_function(apply_tword(standard_marked(), h))
        fgh = vertex_function(apply_tword(standard_marked(), g + h))
        bad += fgh != fh.compose(fg)
    checks.append(_check("anti-homomorphism phi_gh = phi_h o phi_g", bad == 0, {"pairs": n, "failures": bad}))
    return _report("vertex", checks, t0)


# ------------------------------------------------------------------ charges and classes

def suite_charges(budget: int | None = None) -> dict:
    from tqc import charge as C
    from tqc.extensions import fs_class, params_from_exponents

    t0 = time.perf_counter()
    want = {"pentagon": -3, "alpha4": -2, "beta3": 0, "comm1": 0, "comm2": 0}
    checks = [_check("derived rules replay from base rules", bool(C.derived_rules()))]
    scripts = {}
    for name, n in want.items():
        got = C.check_script(C.relator_script(name)).exponent
        scripts[name] = got
        checks.append(_check(f"script charge of F({C.T_RELATORS[name]})", got == n, {"zeta": got, "expected": n}))
    for name in ("pentagon", "alpha4", "beta3"):
        found = C.search_charge(C.t_relator_kword(name), budget=budget)
        checks.append(_check(f"search charge of F({C.T_RELATORS[name]})", bool(found) and found.exponent == scripts[name],
                             {"zeta": found.exponent if found else None}))
    z = tuple(-scripts[k] for k in want)
    params = params_from_exponents(z)
    c = fs_class(params)
    checks.append(_check("z-exponents (3, 2, 0, 0)", tuple(params) == (3, 2, 0, 0), {"params": list(params)}))
    checks.append(_check("class 6 chi", tuple(c) == (6, 0), {"euler": c.euler, "gv": c.gv}))
    return _report("charges", checks, t0)


def suite_class(budget: int | None = None) -> dict:
    from tqc.extensions import ExtensionParams, fs_class, kashaev_extension

    t0 = time.perf_counter()
    k = kashaev_extension(budget=budget)
    ck = fs_class(k)
    cf = fs_class(ExtensionParams(1, 0, 0, 0))
    checks = [
        _check("Kashaev extension is T_(3,2,0,0)", tuple(k) == (3, 2, 0, 0), {"params": list(k)}),
        _check("its class is 6 chi", tuple(ck) == (6, 0), {"euler": ck.euler, "gv": ck.gv}),
        _check("Chekhov-Fock T_(1,0,0,0) has class 12 chi", tuple(cf) == (12, 0), {"euler": cf.euler, "gv": cf.gv}),
        _check("the two extensions are inequivalent", ck != cf, {"verdict": "inequivalent" if ck != cf else "equivalent"}),
    ]
    return _report("class", checks, t0)


def suite_sharp(budget: int | None = None) -> dict:
    from tqc.extensions import check_f_sharp_ab, check_k_sharp_dictionary, t_sharp_ab, t_star_ab

    t0 = time.perf_counter()
    checks = [
        _check("T*_ab is T_(1,0,0,0)", tuple(t_star_ab().params()) == (1, 0, 0, 0)),
        _check("T#_ab is T_(3,2,0,0)", tuple(t_sharp_ab().params()) == (3, 2, 0, 0)),
    ]
    for row in check_k_sharp_dictionary():
        checks.append(_check(f"K#_ab relator {row['relator']} under z -> zeta^-1", row["ok"], row))
    for row in check_f_sharp_ab(budget=budget):
        checks.append(_check(f"F# image of {row['relator']} = z^{row['z']}", row["ok"], row))
    return _report("sharp", checks, t0)


def suite_psib() -> dict:
    import cmath
    import math

    from tqc.qdilog import check_grid, psi_at_zero_closed_form, psi_b, zeta_const

    t0 = time.perf_counter()
    grid = check_grid()
    w = grid["worst"]
    checks = [
        _check("|Psi_b(x)| = 1 on the grid", w["unitarity"] < 1e-8, {"worst": w["unitarity"]}),
        _check("functional equations on the grid", w["functional"] < 1e-6, {"worst": w["functional"]}),
        _check("doubling W and N", w["doubling"] < 1e-9, {"worst": w["doubling"]}),
        _check("zeta_const(1) = exp(-i pi/3)", abs(zeta_const(1.0) - cmath.exp(-1j * math.pi / 3)) < 1e-15),
    ]
    err0 = max(abs(psi_b(0.0, b) - psi_at_zero_closed_form(b)) for b in (0.7, 1.1))
    checks.append(_check("Psi_b(0) against its closed form", err0 < 1e-9, {"error": err0}))
    return _report("psib", checks, t0)


SUITES = {
    "relations": suite_relations,
    "permutations": suite_permutations,
    "functor": suite_functor,
    "vertex": suite_vertex,
    "charges": suite_charges,
    "class": suite_class,
    "kashaev-class": suite_class,
    "sharp": suite_sharp,
    "psib": suite_psib,
}

__all__ = ["SUITES", "octagon_marked", "random_tword", "random_marked", "random_dotted", "composite_gamma",
           "GAMMA_ALPHA_TABLE", "GAMMA_BETA_TABLE", "T_RELATOR_WORDS", "check_k_relations", "check_t_relators",
           "table_mismatches"]
