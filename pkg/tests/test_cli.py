import json
import subprocess
import sys

import pytest

from motivic_chi.cli import CliConfig, main, run_eval, run_selftest
from motivic_chi.engine import Derivation
from motivic_chi.gw import GwValue


def test_g_mod_n_sqrt():
    status, out = run_eval(CliConfig(field="sqrt-minus-one", expr="GModN(A,2)"))
    assert status == 0
    assert out == "1<1>  (exact)"


def test_torus_generic():
    status, out = run_eval(CliConfig(field="generic", expr="Torus(2)"))
    assert (status, out) == (0, "2<1> - 2<-1>  (exact)")


def test_validation_failure():
    status, out = run_eval(CliConfig(expr="Smash(Gm, Point)"))
    assert status == 1
    assert "Smash requires pointed children" in out


@pytest.mark.parametrize(
    "cfg",
    [
        CliConfig(expr="Product(Gm"),
        CliConfig(expr="Gm", field="finite:9"),
        CliConfig(expr="Flag(A, 9)"),
        CliConfig(),
        CliConfig(expr="Gm", file="x.chi"),
        CliConfig(file="/nonexistent/file.chi"),
    ],
)
def test_input_errors_exit_1(cfg):
    assert run_eval(cfg)[0] == 1


def test_syntax_error_position():
    status, out = run_eval(CliConfig(expr="Product(Gm,\n Quux)"))
    assert status == 1 and "2:2" in out


def test_file_input(tmp_path):
    f = tmp_path / "gmodn.chi"
    f.write_text("# variety of maximal tori\nGModN(G, 2)\n", encoding="utf-8")
    status, out = run_eval(CliConfig(field="finite:3", file=str(f)))
    assert status == 0
    assert out == "1<1>  (mod (1-<-1>), unit)"


def test_json_round_trip():
    status, out = run_eval(CliConfig(field="finite:7", expr="GModT(B,2)", format="json", trace=True))
    assert status == 0
    obj = json.loads(out)
    assert list(obj) == ["expr", "model", "value", "derivation"]
    assert obj["model"] == "finite:7"
    value = GwValue.from_json(obj["value"])
    assert value.to_json() == obj["value"]
    d = Derivation.from_json(obj["derivation"])
    assert d.to_json() == obj["derivation"]
    assert d.value == value


def test_deterministic_output():
    cfg = CliConfig(field="real-closed", expr="MayerVietoris(Projective(2), Affine(2), Gm, Gm, Point, Point)",
                    trace=True)
    assert run_eval(cfg) == run_eval(cfg)


def test_trace_text():
    status, out = run_eval(CliConfig(field="generic", expr="Projective(1)", trace=True))
    assert status == 0
    assert "stratified" in out and "Affine(1) = 1<1>" in out


def test_main_prints(capsys):
    assert main(["--field", "sqrt-minus-one", "--expr", "Gm"]) == 0
    assert capsys.readouterr().out.strip() == "0  (exact)"
    assert main(["--expr", "Smash(Gm, Point)"]) == 1
    assert "pointed" in capsys.readouterr().err


def test_usage_error_exits_1():
    with pytest.raises(SystemExit) as info:
        main(["--format", "yaml", "--expr", "Gm"])
    assert info.value.code == 1


def test_selftest():
    status, report = run_selftest()
    assert status == 0
    lines = report.splitlines()
    assert lines[0].startswith("chi(G/N(T)) = 1 for A1..A7,B2..B6,C2..C6,D3..D6,G2,F4,E6")
    assert any(line.startswith("GW(F_3) relation 2(1-<-1>)=0") and line.endswith("PASS") for line in lines)
    assert any(line.startswith("Weyl order G2 = 12") and line.endswith("PASS") for line in lines)


def test_module_entry_point_no_color():
    env = {"CHI_COLOR": "0", "PATH": ""}
    out = subprocess.run(
        [sys.executable, "-m", "motivic_chi", "--field", "finite:5", "--expr", "GModN(G,2)"],
        capture_output=True, text=True, env=env, check=True,
    ).stdout
    assert out == "1<1>  (exact)\n"
    assert "\033" not in out
