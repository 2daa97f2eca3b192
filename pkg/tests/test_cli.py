import json

import pytest

from permdl.cli import build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestStats:
    def test_plain(self, capsys):
        code, out, _ = run(capsys, "stats", "6 9 8 4 1 3 7 2 5")
        assert code == 0
        assert out == (
            "permutation: 6 9 8 4 1 3 7 2 5\n"
            "descents: 4 at positions 2 3 4 7\n"
            "runs: 6 9 | 8 | 4 | 1 3 7 | 2 5\n"
            "min steps: 3\n"
        )

    def test_plain_no_descents(self, capsys):
        code, out, _ = run(capsys, "stats", "1 2 3")
        assert code == 0
        assert "descents: 0\n" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "stats", "6 9 8 4 1 3 7 2 5", "--format", "json")
        assert code == 0
        assert json.loads(out) == {
            "permutation": [6, 9, 8, 4, 1, 3, 7, 2, 5],
            "descent_count": 4,
            "descent_positions": [2, 3, 4, 7],
            "runs": [[6, 9], [8], [4], [1, 3, 7], [2, 5]],
            "min_steps": 3,
        }

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "stats", "3 1 4 2", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "statistic,value"
        assert "min_steps,2" in out

    def test_grid(self, capsys):
        code, out, _ = run(capsys, "stats", "3 1 4 2", "--grid")
        assert code == 0
        assert out.endswith(
            ". . o .\n"
            "o . . .\n"
            ". . . o\n"
            ". o . .\n"
        )

    def test_bfile_rejected(self, capsys):
        code, _, err = run(capsys, "stats", "2 1", "--format", "bfile")
        assert code == 2
        assert "error:" in err

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "stats", "1 x 2")
        assert code == 2
        assert "x" in err


class TestCheck:
    def test_minimal(self, capsys):
        code, out, _ = run(capsys, "check", "6 4 2 1 9 7 3 8 5", "-d", "6")
        assert code == 0
        assert out == "minimal with 6 descents\n"

    def test_not_minimal_diamond(self, capsys):
        code, out, _ = run(capsys, "check", "1 3 2", "-d", "1")
        assert code == 1
        assert out == (
            "not minimal: ascent at position 1 violates the diamond condition; "
            "removing position 1 (value 1) keeps the descent count at 1\n"
        )

    def test_not_minimal_count(self, capsys):
        code, out, _ = run(capsys, "check", "3 2 1", "-d", "1")
        assert code == 1
        assert out == "not minimal: has 2 descents, expected 1\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "check", "3 2 1", "-d", "2", "--format", "json")
        assert code == 0
        assert json.loads(out)["minimal"] is True


class TestEnumerate:
    def test_summary_plain(self, capsys):
        code, out, _ = run(capsys, "enumerate", "-d", "3")
        assert code == 0
        assert out == "# d=3 sizes 4..6\n4 1\n5 10\n6 5\ntotal 16\n"

    def test_summary_bfile(self, capsys):
        code, out, _ = run(capsys, "enumerate", "-d", "4", "--format", "bfile")
        assert code == 0
        assert out == "5 1\n6 32\n7 84\n8 14\n"

    def test_summary_csv(self, capsys):
        code, out, _ = run(capsys, "enumerate", "-d", "2", "--format", "csv")
        assert code == 0
        assert out == "n,count\n3,1\n4,2\n"

    def test_summary_json(self, capsys):
        code, out, _ = run(capsys, "enumerate", "-d", "3", "--format", "json")
        assert json.loads(out) == {"d": 3, "counts": {"4": 1, "5": 10, "6": 5}, "total": 16}

    def test_slice_listing(self, capsys):
        code, out, _ = run(capsys, "enumerate", "-d", "2", "-n", "4")
        assert code == 0
        assert out == "# d=2 n=4 count=2\n2 1 4 3\n3 1 4 2\n"

    def test_slice_limit(self, capsys):
        code, out, _ = run(capsys, "enumerate", "-d", "3", "-n", "5", "--limit", "3")
        assert code == 0
        assert out == (
            "# d=3 n=5 count=10\n2 1 5 4 3\n3 1 5 4 2\n3 2 1 5 4\n# truncated at 3\n"
        )

    def test_count_only_bfile(self, capsys):
        code, out, _ = run(capsys, "enumerate", "-d", "3", "-n", "6", "--count-only", "--format", "bfile")
        assert code == 0
        assert out == "6 5\n"

    def test_member_bfile_rejected(self, capsys):
        code, _, err = run(capsys, "enumerate", "-d", "3", "-n", "5", "--format", "bfile")
        assert code == 2
        assert "bfile" in err

    def test_bad_d(self, capsys):
        code, _, err = run(capsys, "enumerate", "-d", "0")
        assert code == 2


class TestScenario:
    def test_plain(self, capsys):
        code, out, _ = run(capsys, "scenario", "6 9 8 4 1 3 7 2 5")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "target: 6 9 8 4 1 3 7 2 5"
        assert lines[1] == "steps: 3"
        assert lines[-1] == "end: 6 9 8 4 1 3 7 2 5"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "scenario", "2 1", "--format", "json")
        assert code == 0
        assert json.loads(out) == {"n": 2, "steps": [[2]], "end": [2, 1]}


class TestEvolve:
    def test_golden(self, capsys):
        code, out, _ = run(capsys, "evolve", "-n", "6", "--steps", "3", "--seed", "1")
        assert code == 0
        assert out == (
            "n: 6\n"
            "steps: 3\n"
            "seed: 1\n"
            "step 1: keep 1 2 4 5 | 1 2 3 4 5 6 -> 1 2 4 5 3 6\n"
            "step 2: keep 1 2 5 | 1 2 4 5 3 6 -> 1 2 5 4 3 6\n"
            "step 3: keep 4 5 6 | 1 2 5 4 3 6 -> 5 4 6 1 2 3\n"
            "end: 5 4 6 1 2 3\n"
        )

    def test_deterministic(self, capsys):
        first = run(capsys, "evolve", "-n", "7", "--steps", "4", "--seed", "9")
        second = run(capsys, "evolve", "-n", "7", "--steps", "4", "--seed", "9")
        assert first == second


class TestBijectionCommands:
    def test_dyck_forward(self, capsys):
        code, out, _ = run(capsys, "bijection", "dyck", "UUDUUDDDUD")
        assert code == 0
        assert out == "3 1 6 2 7 4 8 5 10 9\n"

    def test_dyck_backward(self, capsys):
        code, out, _ = run(capsys, "bijection", "dyck", "3 1 6 2 7 4 8 5 10 9")
        assert code == 0
        assert out == "UUDUUDDDUD\n"

    def test_dyck_json(self, capsys):
        code, out, _ = run(capsys, "bijection", "dyck", "UDUD", "--format", "json")
        assert json.loads(out) == {"path": "UDUD", "permutation": [2, 1, 4, 3]}

    def test_dyck_bad_path(self, capsys):
        code, _, err = run(capsys, "bijection", "dyck", "UUDDDU")
        assert code == 2

    def test_phi1(self, capsys):
        code, out, _ = run(capsys, "bijection", "phi1", "-d", "7", "3,4,5,8")
        assert code == 0
        assert out == "8 5 4 3 9 7 6 2 1\n"

    def test_phi1_invert(self, capsys):
        code, out, _ = run(capsys, "bijection", "phi1", "--invert", "8 5 4 3 9 7 6 2 1")
        assert code == 0
        assert out == "3,4,5,8\n"

    def test_phi1_requires_d(self, capsys):
        code, _, err = run(capsys, "bijection", "phi1", "3,4,5,8")
        assert code == 2

    def test_phi2(self, capsys):
        code, out, _ = run(capsys, "bijection", "phi2", "-d", "5", "1,2,5")
        assert code == 0
        assert out == "7 6 2 1 5 4 3\ntype: D\n"

    def test_phi2_invert(self, capsys):
        code, out, _ = run(capsys, "bijection", "phi2", "--invert", "7 6 2 1 5 4 3")
        assert code == 0
        assert out == "1,2,5\n"

    def test_phi2_json_has_diamond(self, capsys):
        code, out, _ = run(capsys, "bijection", "phi2", "-d", "5", "1,2,5", "--format", "json")
        data = json.loads(out)
        assert data["type"] == "D"
        assert data["subset"] == [1, 2, 5]
        assert set(data["diamond"]) == {"ascent_position", "left", "bottom", "top", "right"}

    def test_interval_subset_rejected(self, capsys):
        code, _, err = run(capsys, "bijection", "phi1", "-d", "3", "2,3")
        assert code == 2

    def test_tree(self, capsys):
        code, out, _ = run(capsys, "bijection", "tree", "--depth", "3")
        assert code == 0
        assert out == (
            "2 1\n"
            "  2 1 4 3\n"
            "    2 1 4 3 6 5\n"
            "    2 1 5 3 6 4\n"
            "  3 1 4 2\n"
            "    3 1 4 2 6 5\n"
            "    3 1 5 2 6 4\n"
            "    4 1 5 2 6 3\n"
            "level sizes: 1 2 5\n"
        )

    def test_tree_json(self, capsys):
        code, out, _ = run(capsys, "bijection", "tree", "--depth", "2", "--format", "json")
        data = json.loads(out)
        assert data["root"]["perm"] == [2, 1]
        assert [k["perm"] for k in data["root"]["children"]] == [[2, 1, 4, 3], [3, 1, 4, 2]]


class TestPoset:
    def test_ladder(self, capsys):
        code, out, _ = run(capsys, "poset", "--ladder", "2")
        assert code == 0
        assert out == "1 -> 3\n2 -> 1\n2 -> 4\n4 -> 3\n"

    def test_composition(self, capsys):
        code, out, _ = run(capsys, "poset", "--composition", "1,2")
        assert code == 0
        assert out == "1 -> 3\n2 -> 1\n2 -> 4\n4 -> 3\n5 -> 4\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "poset", "--ladder", "1", "--format", "json")
        assert json.loads(out) == {"size": 2, "covers": [[2, 1]]}

    def test_requires_exactly_one_source(self, capsys):
        code, _, err = run(capsys, "poset")
        assert code == 2
        code, _, err = run(capsys, "poset", "--ladder", "2", "--composition", "1,1")
        assert code == 2


class TestParser:
    def test_jobs_env_default(self, monkeypatch):
        monkeypatch.setenv("PERMDL_JOBS", "3")
        args = build_parser().parse_args(["enumerate", "-d", "2"])
        assert args.jobs == 3

    def test_jobs_env_garbage_falls_back(self, monkeypatch):
        monkeypatch.setenv("PERMDL_JOBS", "many")
        args = build_parser().parse_args(["enumerate", "-d", "2"])
        assert args.jobs == 1

    def test_unknown_command_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_jobs_must_be_positive(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["enumerate", "-d", "2", "--jobs", "0"])
        assert exc.value.code == 2
