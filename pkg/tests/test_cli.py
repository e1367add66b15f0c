from fractions import Fraction

import pytest

from plroots.cli import main
from plroots.constructions import default_step2_pair
from plroots.plcore import ETPL
from plroots.serialize import load, make_bundle, save

F = Fraction


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def pair_files(tmp_path):
    f, g = default_step2_pair()
    save(tmp_path / "f.json", "map", f)
    save(tmp_path / "g.json", "map", g)
    save(tmp_path / "id.json", "map", ETPL.identity())
    return tmp_path


def test_build_step2(tmp_path, capsys):
    code, out, _ = run(capsys, "build", "step2", "--out", str(tmp_path / "fg.json"))
    assert code == 0
    kind, payload = load(tmp_path / "fg.json")
    assert kind == "bundle" and set(payload["maps"]) >= {"f", "g"}


def test_build_step2_broken(tmp_path, capsys):
    f, _ = default_step2_pair()
    g = ETPL.from_points([(1, 1), (F(33, 32), F(41, 32)), (F(17, 16), F(21, 16)), (F(7, 4), 2), (3, 3)])
    save(tmp_path / "broken.json", "bundle", make_bundle("broken", {"f": f, "g": g}, {}))
    code, out, err = run(capsys, "build", "step2", "--f", str(tmp_path / "broken.json"))
    assert code == 2
    assert "Step 2 (4)" in out + err


def test_eval_examples(pair_files, capsys):
    d = pair_files
    assert run(capsys, "eval", "--map", str(d / "f.json"), "--at", "1")[1].strip() == "5/4"
    code, out, _ = run(capsys, "eval", "--word", "g f^-1", "--bind", f"f={d / 'f.json'}",
                       "--bind", f"g={d / 'g.json'}", "--at", "1/2")
    assert code == 0 and out.strip() == "2/5"
    assert run(capsys, "eval", "--map", str(d / "id.json"), "--at", "22/7")[1].strip() == "22/7"
    assert run(capsys, "eval", "--map", "id", "--at", "22/7")[1].strip() == "22/7"


def test_eval_usage_errors(pair_files, capsys):
    assert run(capsys, "eval", "--map", str(pair_files / "missing.json"), "--at", "1")[0] == 1
    assert run(capsys, "eval", "--map", "id", "--at", "one")[0] == 1
    assert run(capsys, "eval", "--at", "1")[0] == 1
    assert run(capsys, "frobnicate")[0] == 1


def test_square_root_and_mainsub(tmp_path, capsys):
    b = tmp_path / "b.json"
    assert run(capsys, "build", "square-root-of-f", "--h1", "id", "--h2", "id", "--out", str(b))[0] == 0
    code, out, _ = run(capsys, "verify", "mainsub", "--bundle", str(b))
    assert code == 0 and "-- 10/10 pass" in out


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "kernel-w")
    assert code == 0
    code, out, _ = run(capsys, "verify", "equation", "--trials", "3", "--seed", "7")
    assert code == 0 and "3/3" in out
    for suite in ("dyn-criterion", "nested", "hn", "zn", "lamplighter"):
        code, out, _ = run(capsys, "verify", suite, "--trials", "2", "--bound", "3", "--n", "2")
        assert code == 0, (suite, out)


def test_build_hn_and_formal_sqrt(tmp_path, capsys):
    code, out, _ = run(capsys, "build", "hn", "--word", "[s, t^-1 s t]", "--out", str(tmp_path / "h.json"))
    assert code == 0 and "u_1^1" in out
    code, out, _ = run(capsys, "build", "hn", "--word", "[s, t^-1 s t]", "--X", "1")
    assert code == 0 and "N_{1}: 1\n" in out
    code, _, _ = run(capsys, "build", "formal-sqrt", "--out", str(tmp_path / "p.json"))
    assert code == 0
    kind, P = load(tmp_path / "p.json")
    assert kind == "presentation" and len(P.generators) == 4


def test_reports_are_deterministic(capsys):
    a = run(capsys, "verify", "equation", "--trials", "2", "--seed", "11")[1]
    b = run(capsys, "verify", "equation", "--trials", "2", "--seed", "11")[1]
    assert a == b
