import json
from pathlib import Path

import pytest

from macroatlas.cli import main

CONFIG = str(Path(__file__).resolve().parent.parent / "configs" / "default.cfg")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- solve ----------------------------------------------------------------------

def test_solve_default_config(capsys):
    code, out, _ = run(capsys, "solve", "--config", CONFIG)
    assert code == 0
    assert "short-run" in out and "long-run" in out
    assert "Ybar" in out


def test_solve_json_output(capsys):
    code, out, _ = run(capsys, "solve", "--config", CONFIG, "--json")
    assert code == 0
    body = json.loads(out)
    assert set(body) == {"shortRun", "longRun"}
    assert abs(body["longRun"]["Y"] - body["longRun"]["Ybar"]) < 1e-8
    assert body["shortRun"]["Y"] < body["shortRun"]["Ybar"]


def test_solve_without_config_uses_defaults(capsys):
    code, out, _ = run(capsys, "solve", "--json")
    assert code == 0
    assert json.loads(out)["longRun"]["Y"] == pytest.approx(2456.57, abs=0.01)


def test_solve_invalid_config_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.cfg"
    bad.write_text("alpha = 1.5\n")
    code, _, err = run(capsys, "solve", "--config", str(bad))
    assert code == 2
    assert "alpha" in err


def test_solve_unreadable_config_exits_4(capsys):
    code, _, err = run(capsys, "solve", "--config", "/no/such/file.cfg")
    assert code == 4


def test_solve_convergence_failure_exits_3(tmp_path, capsys):
    cursed = tmp_path / "cursed.cfg"
    cursed.write_text("m = 1e9\n")  # labor market never clears
    code, _, err = run(capsys, "solve", "--config", str(cursed))
    assert code == 3
    assert "cross" in err


# -- shock ----------------------------------------------------------------------

def test_shock_money_supply_names_dirty_panels(capsys):
    code, out, _ = run(capsys, "shock", "--config", CONFIG,
                       "--field", "Ms", "--value", "1100")
    assert code == 0
    assert "LM Diagram (Liquidity-Money Diagram)" in out
    assert "before" in out and "after" in out and "delta" in out


def test_shock_technology_dirties_supply_panels(capsys):
    code, out, _ = run(capsys, "shock", "--field", "A", "--value", "1.1")
    assert code == 0
    for name in ("Marginal Product of Labor (MPL) Diagram",
                 "Labor Demand Diagram",
                 "Two-dimensional Production Function Diagram (Y-L Space)"):
        assert name in out


def test_shock_json(capsys):
    code, out, _ = run(capsys, "shock", "--field", "G", "--value", "320",
                       "--json")
    assert code == 0
    body = json.loads(out)
    assert body["plan"]["dirty"] == [27, 22, 23, 24, 19, 14, 20]
    assert body["after"]["Y"] > body["before"]["Y"]


def test_shock_rejects_garbage(capsys):
    code, _, err = run(capsys, "shock", "--field", "Ms", "--value", "lots")
    assert code == 2 and "lots" in err
    code, _, err = run(capsys, "shock", "--field", "Q", "--value", "1")
    assert code == 2 and "Q" in err


# -- export-graph -----------------------------------------------------------------

def test_export_graph_dot_deterministic(tmp_path, capsys):
    out1 = tmp_path / "a.dot"
    out2 = tmp_path / "b.dot"
    assert run(capsys, "export-graph", "--format", "dot", "--out", str(out1))[0] == 0
    assert run(capsys, "export-graph", "--format", "dot", "--out", str(out2))[0] == 0
    assert out1.read_bytes() == out2.read_bytes()
    text = out1.read_text()
    node_statements = [line for line in text.splitlines()
                       if "[label=" in line and "->" not in line]
    assert len(node_statements) == 27
    assert "digraph" in text


def test_export_graph_json_round_trips(tmp_path, capsys):
    from macroatlas.graph import BigPicture, canonical_graph

    out = tmp_path / "graph.json"
    code, _, _ = run(capsys, "export-graph", "--format", "json", "--out", str(out))
    assert code == 0
    assert BigPicture.from_json(out.read_text()) == canonical_graph()


def test_export_graph_io_error(tmp_path, capsys):
    code, _, err = run(capsys, "export-graph", "--format", "dot",
                       "--out", str(tmp_path / "missing" / "g.dot"))
    assert code == 4


# -- plot ---------------------------------------------------------------------------

def test_plot_solow_panel(tmp_path, capsys):
    out = tmp_path / "solow.svg"
    code, _, _ = run(capsys, "plot", "--node", "12", "--out", str(out),
                     "--config", CONFIG)
    assert code == 0
    svg = out.read_text()
    assert svg.startswith("<?xml")
    assert svg.count("<polyline") == 2
    assert ">k<" in svg and ">f(.)<" in svg
    assert "s·f(k)" in svg and "(n+δ)k" in svg
    assert "(4, 0.4)" in svg  # marked steady state


def test_plot_general_equilibrium_panel(tmp_path, capsys):
    out = tmp_path / "ge.svg"
    code, _, _ = run(capsys, "plot", "--node", "14", "--out", str(out))
    assert code == 0
    svg = out.read_text()
    for name in (">AD<", ">SRAS<", ">LRAS<"):
        assert name in svg
    assert "<circle" in svg


def test_plot_phillips_axis_labels(tmp_path, capsys):
    out = tmp_path / "pc.svg"
    assert run(capsys, "plot", "--node", "20", "--out", str(out))[0] == 0
    svg = out.read_text()
    assert ">U<" in svg and ">π<" in svg


def test_plot_deterministic_bytes(tmp_path, capsys):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    run(capsys, "plot", "--node", "14", "--out", str(a))
    run(capsys, "plot", "--node", "14", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_plot_with_shock_overlays_baseline(tmp_path, capsys):
    out = tmp_path / "islm.svg"
    code, _, _ = run(capsys, "plot", "--node", "24", "--out", str(out),
                     "--field", "Ms", "--value", "1100")
    assert code == 0
    svg = out.read_text()
    assert "stroke-dasharray" in svg
    assert "LM (baseline)" in svg


def test_plot_unknown_node_exits_2(tmp_path, capsys):
    code, _, _ = run(capsys, "plot", "--node", "99",
                     "--out", str(tmp_path / "x.svg"))
    assert code == 2


def test_plot_golden_file(tmp_path, capsys):
    import pathlib

    golden = pathlib.Path(__file__).parent / "data" / "node12_default.svg"
    out = tmp_path / "fresh.svg"
    run(capsys, "plot", "--node", "12", "--out", str(out), "--config", CONFIG)

    def normalize(text: str) -> list[str]:
        return [line.rstrip() for line in text.strip().splitlines()]

    assert normalize(out.read_text()) == normalize(golden.read_text())


def test_usage_error_exits_2(capsys):
    assert main(["plot", "--node", "12"]) == 2  # --out missing
    capsys.readouterr()
