import json

from rmcodes import codes as cd
from rmcodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCode:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "code", "3", "2", "1")
        assert code == 0
        assert "n = 8" in out and "k = 4" in out

    def test_mirrored_json(self, capsys):
        code, out, _ = run(capsys, "code", "2", "4", "1", "--variant", "omega_bar", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert (doc["n"], doc["k"], doc["variant"]) == (15, 6, "omega_bar")

    def test_usage_error(self, capsys):
        code, _, err = run(capsys, "code", "2", "2", "2")
        assert code == 2
        assert "error" in err

    def test_emit(self, capsys, tmp_path):
        path = tmp_path / "code.json"
        code, _, _ = run(capsys, "code", "3", "2", "1", "--emit", str(path))
        assert code == 0
        doc = json.loads(path.read_text())
        inst = cd.code_from_json(doc)
        assert inst.k == 4

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "code", "3", "2", "1", "--format", "csv")
        assert code == 0
        assert out.splitlines()[1] == "3,2,1,omega,8,4,4,4"

    def test_env_bound(self, capsys, monkeypatch):
        monkeypatch.setenv(cd.MAX_N_ENV, "5")
        code, _, err = run(capsys, "code", "3", "2", "1")
        assert code == 2 and "bound" in err
        code, _, _ = run(capsys, "code", "3", "2", "1", "--max-n", "100")
        assert code == 0


class TestBounds:
    def test_342_with_divisor_witness(self, capsys):
        code, out, _ = run(capsys, "bounds", "3", "4", "2", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["lower"]["value"] == 13
        assert doc["upper"] == {"value": 16, "via": "divisor-witness"}
        assert ["divisor_e", 16] in doc["witnesses"]

    def test_mirrored_binary_exact(self, capsys):
        code, out, _ = run(capsys, "bounds", "2", "5", "1", "--variant", "omega_bar", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["exact"]["value"] == 6

    def test_25_2_1(self, capsys):
        code, out, _ = run(capsys, "bounds", "25", "2", "1", "--format", "json")
        assert code == 0
        assert json.loads(out)["exact"]["value"] == 26

    def test_with_distance(self, capsys):
        code, out, _ = run(capsys, "bounds", "3", "2", "1", "--distance", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["exact"]["value"] == 4
        assert doc["exact"]["via"].startswith("enumeration:")

    def test_distance_budget_note(self, capsys):
        code, out, _ = run(
            capsys, "bounds", "3", "4", "2", "--distance", "--max-messages", "100", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["exact"] is None
        assert any("skipped" in note for note in doc["notes"])

    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "bounds", "3", "5", "1", "--variant", "omega_bar")
        assert code == 0
        assert "d_bar" in out and "upper = 10" in out


class TestSearchE:
    def test_342(self, capsys):
        code, out, _ = run(capsys, "search-e", "3", "4", "2", "--format", "json")
        assert code == 0
        assert json.loads(out)["divisors"] == [16, 40]

    def test_362_includes_13(self, capsys):
        code, out, _ = run(capsys, "search-e", "3", "6", "2", "--format", "json")
        assert 13 in json.loads(out)["divisors"]

    def test_empty(self, capsys):
        code, out, _ = run(capsys, "search-e", "2", "3", "1", "--max-e", "6", "--format", "json")
        assert json.loads(out)["divisors"] == []

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "search-e", "3", "4", "2", "--format", "csv")
        assert out.splitlines() == ["q,m,h,e", "3,4,2,16", "3,4,2,40"]


class TestTables:
    def test_csv_cells(self, capsys):
        code, out, _ = run(capsys, "tables", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "q,a,l,e,d_lower,d_upper"
        assert "7,2,3,9,8,13" in lines
        assert "25,22,23,47,26,49" in lines
        assert "8,,,,9,15" in lines  # emitted but with no admissible offsets

    def test_json_block_count(self, capsys):
        code, out, _ = run(capsys, "tables", "--format", "json")
        blocks = json.loads(out)
        assert [b["q"] for b in blocks] == [7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]

    def test_custom_range(self, capsys):
        code, out, _ = run(capsys, "tables", "--q-min", "13", "--q-max", "13", "--format", "json")
        blocks = json.loads(out)
        assert len(blocks) == 1
        assert [(r["a"], r["l"], r["e"]) for r in blocks[0]["rows"]] == [(5, 3, 18), (10, 11, 23)]


class TestVerifyPaper:
    def test_only_tables(self, capsys):
        code, out, _ = run(capsys, "verify-paper", "--only", "tables")
        assert code == 0
        assert "PASS" in out and "2.1" in out
        assert "FAIL" not in out

    def test_only_packing_json(self, capsys):
        code, out, _ = run(capsys, "verify-paper", "--only", "5", "--format", "json")
        assert code == 0
        results = json.loads(out)
        assert all(r["passed"] for r in results)

    def test_corrupted_golden_fails_the_gate(self, capsys, monkeypatch):
        from rmcodes import verify

        bogus = dict(verify.REFERENCE_TABLE_CELLS)
        bogus[7] = [(3, 3, 10)]
        monkeypatch.setattr(verify, "REFERENCE_TABLE_CELLS", bogus)
        code, out, _ = run(capsys, "verify-paper", "--only", "tables")
        assert code == 1
        assert "FAIL" in out and "(3, 3, 10)" in out


def test_deterministic_output(capsys):
    _, first, _ = run(capsys, "tables", "--format", "csv")
    _, second, _ = run(capsys, "tables", "--format", "csv")
    assert first == second
    _, b1, _ = run(capsys, "bounds", "3", "4", "2", "--format", "json")
    _, b2, _ = run(capsys, "bounds", "3", "4", "2", "--format", "json")
    assert b1 == b2
