import json
import subprocess
import sys

import pytest

from hosoya.caterpillar import expand_spec, parse_spec
from hosoya.cli import main
from hosoya.multigraph import canonical_tree_code, parse_edgelist


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestZ:
    @pytest.mark.parametrize(
        "argv, expected",
        [
            (["--spec", "D[3,1,2,4; 3,4,1]"], "102"),
            (["--cf", "[1; 3/1, 1/1, 3/1]"], "17"),
            (["--spec", "D[1]"], "1"),
        ],
    )
    def test_examples(self, capsys, argv, expected):
        code, out, _ = run(capsys, "z", *argv)
        assert code == 0
        assert out == expected + "\n"

    def test_counts(self, capsys):
        code, out, _ = run(capsys, "z", "--spec", "D[1,1,1,1; 2,2,2]", "--counts")
        assert code == 0
        assert out.splitlines() == ["11", "0 1", "1 6", "2 4"]

    def test_graph_file(self, tmp_path, capsys):
        path = tmp_path / "g.txt"
        path.write_text("v 4\ne 0 1 2\ne 1 2\ne 2 3 3\n")
        code, out, _ = run(capsys, "z", "--graph", str(path))
        assert (code, out) == (0, "13\n")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "z", "--spec", "D[3,3; 2]", "--counts", "--json")
        assert code == 0
        assert json.loads(out) == {"z": 11, "counts": [1, 6, 4]}

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "z", "--spec", "D[1,2")
        assert code == 2
        assert "position" in err

    def test_missing_file(self, capsys):
        code, _, _ = run(capsys, "z", "--graph", "/nonexistent/graph.txt")
        assert code == 2

    def test_cap_exceeded(self, tmp_path, capsys):
        path = tmp_path / "big.txt"
        path.write_text("v 30\n" + "".join(f"e {i} {i + 1}\n" for i in range(29)))
        code, _, err = run(capsys, "z", "--graph", str(path), "--counts")
        assert code == 3
        assert "error" in err

    def test_two_sources_rejected(self):
        with pytest.raises(SystemExit) as exc:
            main(["z", "--spec", "D[1]", "--cf", "[1]"])
        assert exc.value.code == 2


class TestConvert:
    def test_rational_to_spec(self, capsys):
        assert run(capsys, "convert", "--rational", "17/9", "--to", "spec")[:2] == (0, "D[1,1,8; 1,1]\n")

    def test_spec_to_cf(self, capsys):
        assert run(capsys, "convert", "--spec", "D[3,1,2,4;3,4,1]", "--to", "cf")[:2] == (
            0,
            "[3; 3/1, 4/2, 1/4]\n",
        )

    def test_star_to_dot(self, capsys):
        code, out, _ = run(capsys, "convert", "--spec", "D[17]", "--to", "dot")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("graph ") and lines[-1] == "}"
        assert sum("--" in line for line in lines) == 16
        nodes = {tok.strip(" ;") for line in lines if "--" in line for tok in line.split("--")}
        assert len(nodes) == 17

    def test_spec_cf_round_trip(self, capsys):
        _, cf, _ = run(capsys, "convert", "--spec", "D[2,5,1; 3,1]", "--to", "cf")
        _, spec, _ = run(capsys, "convert", "--cf", cf.strip(), "--to", "spec")
        assert spec == "D[2,5,1; 3,1]\n"

    def test_edgelist_round_trip(self, capsys):
        literal = "D[2,1,3; 4,2]"
        _, out, _ = run(capsys, "convert", "--spec", literal, "--to", "edgelist")
        g = parse_edgelist(out)
        assert canonical_tree_code(g) == canonical_tree_code(expand_spec(parse_spec(literal)))

    def test_bad_rational(self, capsys):
        assert run(capsys, "convert", "--rational", "17/0", "--to", "spec")[0] == 2


class TestInverse:
    def test_paper_seventeen(self, capsys):
        code, out, _ = run(capsys, "inverse", "17", "--mode", "paper")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 6
        assert [line.split("\t")[1] for line in lines] == [
            "q=1,16", "q=2,8,9,15", "q=3,5,12,14", "q=4,13", "q=6,11", "q=7,10"
        ]

    def test_one(self, capsys):
        code, out, _ = run(capsys, "inverse", "1")
        assert code == 0
        assert out.splitlines() == ["D[1]\tq=1\tvertices=1"]

    def test_exhaustive_superset(self, capsys):
        _, paper, _ = run(capsys, "inverse", "17", "--json")
        _, full, _ = run(capsys, "inverse", "17", "--mode", "exhaustive", "--json")
        paper_codes = {canonical_tree_code(expand_spec(parse_spec(c["spec"]))) for c in json.loads(paper)["classes"]}
        full_codes = {canonical_tree_code(expand_spec(parse_spec(c["spec"]))) for c in json.loads(full)["classes"]}
        assert paper_codes < full_codes

    def test_dot_dir(self, tmp_path, capsys):
        code, _, _ = run(capsys, "inverse", "17", "--dot", str(tmp_path / "out"))
        assert code == 0
        files = sorted((tmp_path / "out").glob("*.dot"))
        assert len(files) == 6
        assert all(f.read_text().rstrip().endswith("}") for f in files)

    @pytest.mark.parametrize("n", ["0", "-3", "x"])
    def test_invalid_n(self, n):
        with pytest.raises(SystemExit) as exc:
            main(["inverse", n])
        assert exc.value.code == 2


class TestSeq:
    def test_jacobsthal(self, capsys):
        assert run(capsys, "seq", "jacobsthal", "12")[:2] == (0, "0 1 1 3 5 11 21 43 85 171 341 683\n")

    def test_pell_lucas_graph(self, capsys):
        code, out, _ = run(capsys, "seq", "pell-lucas", "6", "--graph")
        assert code == 0
        assert "Q_5\t34\tD[2,2,2,2; 2,1,1]" in out.splitlines()

    def test_custom(self, capsys):
        assert run(capsys, "seq", "custom(1,1,0,1)", "8")[1] == "0 1 1 2 3 5 8 13\n"

    def test_unknown_family(self, capsys):
        assert run(capsys, "seq", "tribonacci", "5")[0] == 2


class TestVerify:
    def test_default_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "4", "--max-entry", "3")
        assert code == 0
        assert out.startswith("OK")

    def test_random_graphs(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "2", "--max-entry", "2", "--random", "20", "--json")
        payload = json.loads(out)
        assert code == 0 and payload["ok"] and payload["graphs_checked"] == 20


@pytest.mark.parametrize(
    "argv",
    [
        ["inverse", "23", "--mode", "exhaustive"],
        ["seq", "lucas", "10", "--graph", "--json"],
        ["convert", "--spec", "D[2,2; 3]", "--to", "dot"],
    ],
)
def test_deterministic_stdout(capsys, argv):
    outputs = {run(capsys, *argv)[1] for _ in range(3)}
    assert len(outputs) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hosoya", "z", "--spec", "D[2,2; 2]"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "6\n"
