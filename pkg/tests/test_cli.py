import pytest

from fourblocks.cli import main

C4 = "p dig 4 4\na 1 2\na 3 2\na 3 4\na 1 4\n"
ROOTED = "p dig 5 6\na 1 2\na 1 3\na 2 4\na 3 4\na 3 5\na 2 5\n"


@pytest.fixture
def files(tmp_path):
    inst = tmp_path / "g.dig"
    inst.write_text(ROOTED)
    two_src = tmp_path / "c4.dig"
    two_src.write_text(C4)
    return tmp_path, inst, two_src


def test_certify_and_validate(files, capsys):
    tmp, inst, _ = files
    assert main(["certify", str(inst), "-k", "1", "--dot", str(tmp / "g.dot")]) == 0
    out = capsys.readouterr().out
    assert out.startswith("COLORING 18")
    (tmp / "g.cert").write_text(out)
    assert main(["validate", str(inst), str(tmp / "g.cert"), "-k", "1"]) == 0
    assert capsys.readouterr().out.strip() == "OK"
    assert "style=filled" in (tmp / "g.dot").read_text()


def test_validate_oracle_witness(files, capsys):
    tmp, inst, _ = files
    assert main(["oracle", str(inst), "-k", "1"]) == 0
    (tmp / "w.cert").write_text(capsys.readouterr().out)
    assert main(["validate", str(inst), str(tmp / "w.cert"), "-k", "1"]) == 0
    assert main(["validate", str(inst), str(tmp / "w.cert"), "-k", "2"]) == 1
    assert capsys.readouterr().out.splitlines()[-1].startswith("INVALID")
    assert main(["export-dot", str(inst), "--cert", str(tmp / "w.cert")]) == 0
    assert capsys.readouterr().out.count("subgraph P") == 4


def test_certify_two_sources(files, capsys):
    _, _, two_src = files
    assert main(["certify", str(two_src), "-k", "1"]) == 0
    assert capsys.readouterr().out == "NO-SPANNING-OUT-TREE\ne 1 3\n"


def test_oracle(files, capsys):
    _, inst, _ = files
    assert main(["oracle", str(inst), "-k", "2"]) == 0
    assert capsys.readouterr().out.strip() == "NONE"
    assert main(["oracle", str(inst), "-k", "1"]) == 0
    assert capsys.readouterr().out.startswith("WITNESS")


def test_gen_and_stdin(capsys, monkeypatch):
    import io
    assert main(["gen", "--model", "gnp", "--n", "6", "--seed", "3"]) == 0
    text = capsys.readouterr().out
    assert text.startswith("p dig 6")
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    assert main(["certify", "-", "-k", "2"]) == 0


def test_export_dot(files, capsys):
    _, inst, _ = files
    assert main(["export-dot", str(inst)]) == 0
    assert capsys.readouterr().out.startswith("digraph D {")


def test_fuzz(tmp_path, capsys):
    assert main(["fuzz", "--trials", "20", "--n", "7", "-k", "1,2", "--out", str(tmp_path),
                 "--no-figure"]) == 0
    assert "trials=20" in capsys.readouterr().out
    assert (tmp_path / "fuzz_trials.csv").exists()


def test_exit_codes(files, tmp_path, capsys):
    bad = tmp_path / "bad.dig"
    bad.write_text("p dig 2 1\na 1 1\n")
    assert main(["certify", str(bad), "-k", "1"]) == 2
    assert "line 2" in capsys.readouterr().err
    assert main(["certify", str(tmp_path / "missing.dig"), "-k", "1"]) == 2
    assert main(["certify", str(bad)]) == 2
    assert main(["certify", str(bad), "-k", "0"]) == 2
    big = tmp_path / "big.dig"
    big.write_text("p dig 20 0\n")
    assert main(["oracle", str(big), "-k", "1"]) == 3
    assert main(["fuzz", "--trials", "1", "--n", "30"]) == 2
    assert main([]) == 2


def test_fuzz_failure_exit_code(monkeypatch, capsys):
    import fourblocks.cli as cli
    from fourblocks.fuzz import fuzz_run

    from .test_fuzz import _reverse_p2

    monkeypatch.setattr(cli, "fuzz_run", lambda *a: fuzz_run(*a, corrupt=_reverse_p2))
    assert main(["fuzz", "--trials", "30", "--n", "7", "-k", "1"]) == 1
    assert "FAIL trial" in capsys.readouterr().out
