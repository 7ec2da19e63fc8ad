import json
import subprocess
import sys

import pytest

from tqc.cli import main
from tqc.dotted import DottedTessellation, standard_dotted
from tqc.exactnum import INF, ONE, ZERO
from tqc.marked import MarkedTessellation, standard_marked
from tqc.render import RenderSpec, mu, render_marked
from tqc.tessellation import triangle

CENTRAL = "A[-1] T[-1][1]' A[1] P(ga)"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_act_marked_alpha(capsys):
    code, out, _ = run(capsys, "act", "marked", "a")
    assert code == 0
    data = json.loads(out)
    assert data["doe"] == ["1/1", "-1/1"]
    assert MarkedTessellation.from_json(data).doe == (ONE, -ONE)


def test_act_marked_empty(capsys):
    code, out, _ = run(capsys, "act", "marked", "")
    assert MarkedTessellation.from_json(json.loads(out)) == standard_marked()


def test_act_dotted(capsys):
    code, out, _ = run(capsys, "act", "dotted", "A[1]")
    d = DottedTessellation.from_json(json.loads(out))
    assert code == 0 and d.dot(triangle(ZERO, ONE, INF)) == INF


def test_act_errors(capsys):
    code, _, err = run(capsys, "act", "marked", "a c")
    assert code == 2 and "position 2" in err
    code, out, _ = run(capsys, "act", "dotted", "T[1][2]")
    assert code == 1 and "T needs" in out
    assert run(capsys, "frobnicate")[0] == 2


def test_charge_commands(capsys):
    code, out, _ = run(capsys, "--json", "charge", "T:(b a)^5")
    assert code == 0 and json.loads(out)["zeta"] == -3
    code, out, _ = run(capsys, "charge", "--json", "T:a^4")
    assert json.loads(out)["zeta"] == -2
    code, out, _ = run(capsys, "charge", "")
    assert code == 0 and out.strip() == "zeta^0"
    code, out, _ = run(capsys, "charge", "A[1]")
    assert code == 1


def test_charge_budget_and_scripts(capsys, tmp_path):
    code, out, _ = run(capsys, "--json", "charge", "T:(b a)^5", "--budget", "2")
    assert code == 1 and json.loads(out)["ok"] is False
    path = tmp_path / "a4.proof"
    code, _, _ = run(capsys, "charge", "T:a^4", "--emit-script", str(path))
    assert code == 0 and path.exists()
    code, out, _ = run(capsys, "--json", "charge", "T:a^4", "--script", str(path))
    data = json.loads(out)
    assert code == 0 and data["method"] == "script" and data["zeta"] == -2 and data["steps"] > 0
    code, out, _ = run(capsys, "charge", "T:b^3", "--script", str(path))
    assert code == 1 and "does not match" in out


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("TQC_BUDGET", "2")
    code, _, _ = run(capsys, "charge", "T:(b a)^5")
    assert code == 1


def test_classify(capsys):
    code, out, _ = run(capsys, "--json", "classify", "3", "2", "0", "0")
    data = json.loads(out)
    assert code == 0 and (data["euler"], data["gv"]) == (6, 0)
    assert data["equivalent_to_T_1000"] is False
    code, out, _ = run(capsys, "classify", "1", "0", "0", "0")
    assert out.strip() == "T_(1,0,0,0): 12chi"


def test_psib(capsys):
    code, out, _ = run(capsys, "--json", "psib", "--b", "0.7", "--z", "0.3+0.1i")
    data = json.loads(out)
    assert code == 0 and {"re", "im", "abs", "est_error"} <= set(data)
    assert abs(complex(data["re"], data["im"])) == pytest.approx(data["abs"])
    assert run(capsys, "psib", "--b", "0.7")[0] == 2
    assert run(capsys, "psib", "--b", "0.7", "--z", "zz")[0] == 2
    assert run(capsys, "psib", "--b", "-1", "--z", "0")[0] == 2


@pytest.mark.parametrize("suite", ["permutations"])
def test_verify_reports_failure(capsys, suite):
    code, out, _ = run(capsys, "--json", "verify", suite)
    data = json.loads(out)
    assert code == 1 and data["ok"] is False
    failed = [c["name"] for r in data["reports"] for c in r["checks"] if not c["ok"]]
    assert failed == ["gamma_alpha matches printed table"]


@pytest.mark.parametrize("suite", ["functor", "vertex", "class", "sharp", "psib"])
def test_verify_passes(capsys, suite):
    code, out, _ = run(capsys, "verify", suite)
    assert code == 0, out


def test_render_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for p in (a, b):
        assert run(capsys, "render", "dotted", CENTRAL, "-o", str(p), "--depth", "4")[0] == 0
    assert a.read_bytes() == b.read_bytes()
    text = a.read_text()
    assert text.startswith("<svg") and text.count('class="dot"') > 10
    code, out, _ = run(capsys, "act", "marked", "a b", "--emit", "svg", "--no-doe")
    assert code == 0 and 'class="doe"' not in out.split("</style>")[1]


def test_render_geometry():
    assert mu(ZERO) == -1 and mu(INF) == 1
    assert abs(mu(ONE) + 1j) < 1e-15
    svg = render_marked(standard_marked(), RenderSpec(depth=1))
    # the root edge 0 -> inf is a diameter, drawn straight
    assert 'class="doe" d="M24.00,240.00 L456.00,240.00"' in svg
    with pytest.raises(ValueError):
        RenderSpec(depth=0)


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "tqc", "classify", "0", "0", "0", "0"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "0chi" in out.stdout


def test_dotted_json_roundtrip(capsys):
    code, out, _ = run(capsys, "act", "dotted", CENTRAL)
    d = DottedTessellation.from_json(json.loads(out))
    assert d != standard_dotted()
    assert DottedTessellation.from_json(d.to_json()) == d
