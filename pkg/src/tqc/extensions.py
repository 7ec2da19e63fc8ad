"""Central extensions of T by Z: the classification formula and abelianized presentations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from tqc import charge as _charge

# relator words of the normal form T_{n,p,q,r}, in template order
TEMPLATE = (
    ("n", "(b a)^5"),
    ("p", "a^4"),
    ("q", "b^3"),
    ("r", "[b a b, a^2 b a b a^2]"),
    (None, "[b a b, a^2 b a^2 b a b a^2 b^2 a^2]"),
)

_CHARGE_NAMES = ("pentagon", "alpha4", "beta3", "comm1", "comm2")


class ExtensionParams(NamedTuple):
    n: int
    p: int
    q: int
    r: int


class ExtensionClass(NamedTuple):
    euler: int
    gv: int

    def __str__(self):
        parts = []
        if self.euler or not self.gv:
            parts.append(f"{self.euler}chi")
        if self.gv:
            parts.append(f"{self.gv}alpha")
        return " + ".join(parts)


def fs_class(e) -> ExtensionClass:
    n, p, q, r = e
    return ExtensionClass(12 * n - 15 * p - 20 * q - 60 * r, r)


def params_from_exponents(exps) -> ExtensionParams:
    """Read (n, p, q, r) off the z-exponents of the five template relators."""
    exps = tuple(exps)
    if len(exps) != 5:
        raise ValueError("need the z-exponents of all five template relators")
    if exps[4] != 0:
        raise ValueError(f"the last commutator must be trivial in T_(n,p,q,r), got z^{exps[4]}")
    return ExtensionParams(*exps[:4])


def kashaev_extension(budget: int | None = None) -> ExtensionParams:
    return params_from_exponents(_charge.charge_of_T_relators(budget=budget))


def classify_report(params: ExtensionParams, reference: ExtensionParams = ExtensionParams(1, 0, 0, 0)) -> dict:
    c, ref = fs_class(params), fs_class(reference)
    return {
        "params": list(params),
        "class": {"euler": c.euler, "gv": c.gv},
        "reference_params": list(reference),
        "reference_class": {"euler": ref.euler, "gv": ref.gv},
        "equivalent": c == ref,
    }


@dataclass(frozen=True)
class PresentedCentralExtension:
    """Generators plus relators ``word = z^e``; z is central."""

    name: str
    generators: tuple
    relators: tuple  # (label, word, z exponent)

    def central_relators(self) -> list:
        return [f"[{g}, z]" for g in self.generators]

    def exponent(self, label: str) -> int:
        for lab, _, e in self.relators:
            if lab == label:
                return e
        raise KeyError(label)

    def params(self) -> ExtensionParams:
        words = [w for _, w, _ in self.relators]
        if tuple(words) != tuple(w for _, w in TEMPLATE):
            raise ValueError(f"{self.name} is not written in the T_(n,p,q,r) template")
        return params_from_exponents(e for _, _, e in self.relators)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "generators": list(self.generators),
            "relators": [{"label": lab, "word": w, "z": e} for lab, w, e in self.relators],
            "central": self.central_relators(),
        }


def _t_presentation(name: str, exps) -> PresentedCentralExtension:
    labels = ("pentagon", "alpha4", "beta3", "comm1", "comm2")
    rels = tuple((lab, w, e) for lab, (_, w), e in zip(labels, TEMPLATE, exps))
    return PresentedCentralExtension(name, ("a", "b"), rels)


def t_star_ab() -> PresentedCentralExtension:
    return _t_presentation("T*_ab", (1, 0, 0, 0, 0))


def t_sharp_ab() -> PresentedCentralExtension:
    return _t_presentation("T#_ab", (3, 2, 0, 0, 0))


def k_sharp_ab() -> PresentedCentralExtension:
    # each relator is a lifted Kashaev rule lhs = z^e rhs
    rels = (
        ("A3", "A[j]^3", 0),
        ("pentagon", "T[k][l] T[j][k] = T[j][k] T[j][l] T[k][l]", 0),
        ("ATA", "A[j] T[j][k] A[k] = A[k] T[k][j] A[j]", 0),
        ("TAT", "T[j][k] A[j] T[k][j] = A[j] A[k] P(swap(j,k))", -1),
    )
    return PresentedCentralExtension("K#_ab", ("A[j]", "T[j][k]", "P(gamma)"), rels)


def sharp_presentations() -> tuple:
    return t_sharp_ab(), t_star_ab(), k_sharp_ab()


def z_to_zeta(e: int) -> int:
    """The dictionary z -> zeta^-1 on exponents."""
    return -e


def check_k_sharp_dictionary() -> list:
    """Compare K#_ab relators with the lifted Kashaev rules under z -> zeta^-1."""
    rules = _charge.all_rules()
    out = []
    for label, _, e in k_sharp_ab().relators:
        d = rules[label].charge_delta
        out.append({"relator": label, "z": e, "zeta": d, "ok": z_to_zeta(e) == d})
    return out


def check_f_sharp_ab(budget: int | None = None, cross_check: bool = True) -> list:
    """Push the T#_ab relators through F and compare zeta-charges with z-exponents.

    The images use the same letter formulas as F; a relator ``w = z^e`` holds
    in the image iff the zeta-charge of F(w) is -e.
    """
    report = []
    for (label, word, e), name in zip(t_sharp_ab().relators, _CHARGE_NAMES):
        got = _charge.check_script(_charge.relator_script(name)).exponent
        row = {"relator": word, "z": e, "expected_zeta": z_to_zeta(e), "script_zeta": got}
        if cross_check and name in ("pentagon", "alpha4", "beta3"):
            found = _charge.search_charge(_charge.t_relator_kword(name), budget=budget)
            row["search_zeta"] = found.exponent if found else None
        ok = got == z_to_zeta(e) and row.get("search_zeta", got) == got
        row["ok"] = ok
        report.append(row)
    return report


__all__ = [
    "ExtensionParams", "ExtensionClass", "PresentedCentralExtension", "fs_class", "kashaev_extension",
    "params_from_exponents", "classify_report", "sharp_presentations", "t_star_ab", "t_sharp_ab",
    "k_sharp_ab", "check_f_sharp_ab", "check_k_sharp_dictionary", "z_to_zeta", "TEMPLATE",
]
