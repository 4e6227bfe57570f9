import json
import subprocess
import sys

from knotfoam.cli import main
from knotfoam.foam import BLUE, RED, Binding, Facet, Foam, foam_to_json
from knotfoam.graphs import graph_to_json


def run_cli(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_braid_json(capsys):
    code, out, _err = run_cli(
        ["invariants", "--braid", "1 1 1", "--strands", "2", "--format", "json"],
        capsys,
    )
    assert code == 0
    record = json.loads(out)
    assert record["lee_rank"] == 2
    assert abs(record["s"]) == 2
    assert record["n_plus"] == 3 and record["n_minus"] == 0
    assert record["slice_genus_lower_bound"] == 1


def test_invariants_empty_pd(capsys):
    code, out, _err = run_cli(["invariants", "--pd", "", "--format", "json"], capsys)
    assert code == 0
    record = json.loads(out)
    assert record["jones"] == "q + q^-1"
    assert record["s"] == 0


def test_invariants_table_format(capsys):
    code, out, _err = run_cli(
        ["invariants", "--braid", "1 1 1", "--strands", "2"], capsys
    )
    assert code == 0
    assert "jones:" in out and "Z/2" in out


def test_skip_flags(capsys):
    code, out, _err = run_cli(
        ["invariants", "--pd", "", "--format", "json", "--skip", "lee"], capsys
    )
    assert code == 0
    record = json.loads(out)
    assert record["lee_rank"] is None and record["s"] is None


def test_requires_exactly_one_input(capsys):
    code, _out, err = run_cli(["invariants"], capsys)
    assert code == 2
    code, _out, err = run_cli(
        ["invariants", "--pd", "", "--braid", "1", "--strands", "2"], capsys
    )
    assert code == 2


def test_parse_error_exit_code(capsys):
    code, _out, err = run_cli(["invariants", "--pd", "garbage"], capsys)
    assert code == 2


def test_size_limit_exit_code(capsys):
    word = " ".join(["1"] * 15)
    code, _out, err = run_cli(
        ["invariants", "--braid", word, "--strands", "2"], capsys
    )
    assert code == 3


def test_cache_round_trip(tmp_path, capsys):
    args = ["invariants", "--pd", "", "--format", "json", "--cache", str(tmp_path)]
    code1, out1, _ = run_cli(args, capsys)
    code2, out2, err2 = run_cli(args, capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "cache hit" in err2
    assert len(list(tmp_path.iterdir())) == 1


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("KNOTFOAM_CACHE", str(tmp_path))
    code, _out, _err = run_cli(["invariants", "--pd", "", "--format", "json"], capsys)
    assert code == 0
    assert list(tmp_path.iterdir())


def test_eval_foam_red_sphere(tmp_path, capsys):
    path = tmp_path / "red_sphere.json"
    path.write_text(json.dumps(foam_to_json(Foam((Facet("r", RED),), ()))))
    code, out, _err = run_cli(["eval-foam", str(path)], capsys)
    assert code == 0
    assert out.splitlines() == ["-1", "symmetric: true"]


def test_eval_foam_dotted_blue_sphere(tmp_path, capsys):
    path = tmp_path / "dotted.json"
    path.write_text(json.dumps(foam_to_json(Foam((Facet("b", BLUE, dots=1),), ()))))
    code, out, _err = run_cli(["eval-foam", str(path)], capsys)
    assert code == 0
    assert out.splitlines()[0] == "-1"


def test_eval_foam_theta(tmp_path, capsys):
    theta = Foam(
        (
            Facet("U", BLUE, slots=("u",)),
            Facet("L", BLUE, slots=("l",)),
            Facet("R", RED, slots=("r",)),
        ),
        (Binding("beta", ("u", "l"), "r"),),
    )
    path = tmp_path / "theta.json"
    path.write_text(json.dumps(foam_to_json(theta)))
    code, out, _err = run_cli(["eval-foam", str(path)], capsys)
    assert code == 0
    assert out.splitlines()[0] == "0"


def test_eval_foam_schema_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"facets": [{"id": "b", "color": "blue", "squares": 1}]}')
    code, _out, err = run_cli(["eval-foam", str(path)], capsys)
    assert code == 2


def test_graph_dim_theta(tmp_path, capsys):
    from knotfoam.graphs import TrivalentGraph

    rotations = {"v1": ("ri1", "l1", "r1"), "v2": ("ri2", "r2", "l2")}
    pairing = {"l1": "l2", "l2": "l1", "ri1": "ri2", "ri2": "ri1",
               "r1": "r2", "r2": "r1"}
    colors = {"l1": "blue", "l2": "blue", "ri1": "blue", "ri2": "blue",
              "r1": "red", "r2": "red"}
    g = TrivalentGraph(rotations, pairing, colors)
    path = tmp_path / "theta_graph.json"
    path.write_text(json.dumps(graph_to_json(g)))
    code, out, _err = run_cli(["graph-dim", str(path)], capsys)
    assert code == 0
    assert out.splitlines() == ["q + q^-1", "matches circle count: true"]


def test_verify_relations(capsys):
    code, out, _err = run_cli(["verify-relations", "--max-dots", "1"], capsys)
    assert code == 0
    assert "relations hold" in out
    assert "FAIL" not in out


def test_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "knotfoam.cli", "invariants", "--pd", "",
         "--format", "json", "--skip", "lee"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["jones"] == "q + q^-1"
