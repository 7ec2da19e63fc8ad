import itertools

import pytest

from tqc import charge as C
from tqc.dotted import invert_kword, parse_kword
from tqc.exactnum import parse_rational
from tqc.functor import bold_F

LABEL_POOL = [parse_rational(x) for x in ("-1", "1", "2", "-2", "1/2")]
STRICT_RULES = {r.name: r for r in C.base_rules() + C.derived_rules()}


@pytest.mark.parametrize("name", sorted(STRICT_RULES))
def test_rules_are_sound_on_dotted_states(name):
    # lhs (rhs P)^-1 must act trivially wherever it applies, for every label assignment
    rule = STRICT_RULES[name]
    applied = 0
    for labels in itertools.permutations(LABEL_POOL, len(rule.variables)):
        word = C.relator_of_rule(rule, dict(zip(rule.variables, labels)))
        try:
            applied += C.certify_relator(word)
        except C.NotRelatorError as exc:
            assert "applies to none" in str(exc), (labels, exc)
    assert applied > 0


def test_rule_table():
    rules = C.all_rules()
    assert rules["TAT"].charge_delta == 1 and rules["TAT"].swap == ("j", "k")
    assert rules["pentagon"].charge_delta == 0
    assert rules["TAT"].describe() == "T[j][k] A[j] T[k][j] = zeta^1 A[j] A[k] P(j k)"
    assert "free" in C.SPECIAL and "comm" in C.SPECIAL


def test_single_rule_relator():
    w = parse_kword("T[1][2] A[1] T[2][1] P(swap(1,2))' A[2]' A[1]'")
    assert C.search_charge(w).exponent == 1


def test_empty_word_and_script():
    assert C.search_charge(()).exponent == 0
    assert C.check_script(C.ProofScript((), [])).exponent == 0
    assert C.check_script("word:\n").exponent == 0


@pytest.mark.parametrize("name, expected", [("alpha4", -2), ("pentagon", -3), ("beta3", 0), ("comm1", 0), ("comm2", 0)])
def test_scripts(name, expected):
    assert C.check_script(C.relator_script(name)).exponent == expected


@pytest.mark.parametrize("name", ["alpha4", "pentagon", "beta3"])
def test_search_agrees_with_script(name):
    found = C.search_charge(C.t_relator_kword(name))
    assert found and found.exponent == C.check_script(C.relator_script(name)).exponent


def test_search_inverse_negates():
    w = C.t_relator_kword("alpha4")
    assert C.search_charge(invert_kword(w)).exponent == 2


def test_charge_is_additive():
    w = C.t_relator_kword("alpha4") + C.t_relator_kword("beta3") + C.t_relator_kword("alpha4")
    assert C.search_charge(w).exponent == -4


def test_search_returns_checkable_script():
    found, script = C.search_charge(bold_F("a^4"), return_script=True)
    text = script.dumps()
    assert C.check_script(C.parse_script(text)).exponent == found.exponent == -2


def test_budget_exhaustion_reports_progress():
    res = C.search_charge(C.t_relator_kword("pentagon"), budget=3)
    assert isinstance(res, C.NotFound) and not res
    assert res.expanded <= 3 and res.best_length > 0


def test_non_relator_rejected():
    with pytest.raises(C.NotRelatorError):
        C.search_charge(parse_kword("A[1]"))


def test_script_errors_are_positional():
    script = C.relator_script("alpha4")
    bad = C.ProofScript(script.word, script.steps[:-1])
    with pytest.raises(C.ScriptError):
        C.check_script(bad)
    with pytest.raises(C.ScriptError, match="line 2"):
        C.parse_script("word: A[1] A[1] A[1]\nfrobnicate\n")
    wrong = "word: A[1] A[1] A[1]\napply pentagon at 0\n"
    with pytest.raises(C.ScriptError, match="step 1"):
        C.check_script(wrong)


def test_derived_rules_replay_from_base():
    base = {r.name: r for r in C.base_rules()}
    for r in C.derived_rules():
        sc = C.load_fixture(C.DERIVED_FIXTURES[r.name])
        assert C.check_script(sc, base).exponent == r.charge_delta


def test_p_normalize_pushes_permutations_right():
    w = parse_kword("P(swap(1,2)) A[1] P(swap(1,2))")
    letters, sigma = C.p_normalize(w)
    assert C.fmt_letters(letters) == "A[2/1]"
    assert sigma.is_identity()


def test_t_relator_charges():
    assert C.charge_of_T_relators(cross_check=False) == (3, 2, 0, 0, 0)


def test_budget_env(monkeypatch):
    monkeypatch.setenv("TQC_BUDGET", "123")
    assert C.default_budget() == 123
