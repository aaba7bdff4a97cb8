import json

import pytest

from gsur import BicoloringFamily, PointSet, SetCoverInstance, fileio
from gsur.cli import main


def write_instance(tmp_path, name, ps, fam):
    path = tmp_path / name
    fileio.write_instance(path, ps, fam)
    return str(path)


def line_instance(tmp_path, colorings, name="inst.json"):
    n = len(colorings[0])
    ps = PointSet([(float(i),) for i in range(1, n + 1)])
    return write_instance(tmp_path, name, ps, BicoloringFamily(colorings))


def run(capsys, argv):
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


class TestGen:
    def test_prefix_to_stdout(self, capsys):
        code, out, _ = run(capsys, ["gen", "--family", "prefix", "--n", "4"])
        assert code == 0
        obj = json.loads(out)
        assert obj["bicolorings"] == ["RBBB", "RRBB", "RRRB"]

    def test_m_restricted_to_file(self, tmp_path, capsys):
        dest = tmp_path / "inst.json"
        code, out, _ = run(
            capsys,
            ["gen", "--family", "m-restricted", "--n", "9", "--m", "3",
             "--out", str(dest)],
        )
        assert code == 0 and out == ""
        ps, fam = fileio.read_instance(dest)
        assert ps.n == 9 and len(fam) == 6

    def test_2k_tight(self, capsys):
        code, out, _ = run(capsys, ["gen", "--family", "2k-tight", "--k", "2"])
        assert code == 0
        assert json.loads(out)["bicolorings"] == ["BRRRB"]

    def test_embedded_line_default_direction(self, capsys):
        code, out, _ = run(
            capsys, ["gen", "--family", "embedded-line", "--n", "3", "--d", "3"]
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["dim"] == 3
        assert obj["points"][0] == [1.0, 1.0, 1.0]

    def test_from_set_cover(self, tmp_path, capsys):
        sc_path = tmp_path / "sc.json"
        sc_path.write_text(
            fileio.set_cover_to_text(SetCoverInstance(2, [[0], [1]]))
        )
        code, out, _ = run(
            capsys,
            ["gen", "--family", "from-set-cover", "--set-cover", str(sc_path)],
        )
        assert code == 0
        assert len(json.loads(out)["points"]) == 6

    def test_missing_parameter_is_usage_error(self, capsys):
        code, _, err = run(capsys, ["gen", "--family", "prefix"])
        assert code == 2
        assert err.strip()

    def test_bad_family_value_exits_two(self, capsys):
        with pytest.raises(SystemExit) as ei:
            main(["gen", "--family", "mystery"])
        assert ei.value.code == 2


class TestConstructAndVerify:
    def test_adjacent_round_trip(self, tmp_path, capsys):
        inst = line_instance(tmp_path, ["RRBB", "RBBB"])
        sol = tmp_path / "sol.json"
        code, _, _ = run(
            capsys, ["construct", inst, "--method", "adjacent", "--out", str(sol)]
        )
        assert code == 0
        doc = json.loads(sol.read_text())
        assert doc["method"] == "adjacent" and doc["verified"] is True
        code, _, err = run(capsys, ["verify", inst, str(sol)])
        assert code == 0
        assert "ok" in err

    def test_size2k_qualifying(self, tmp_path, capsys):
        inst = line_instance(tmp_path, ["RRRRRRBBBBBB"])
        code, out, _ = run(capsys, ["construct", inst, "--method", "size2k", "--k", "2"])
        assert code == 0
        assert json.loads(out)["size"] == 9

    def test_size2k_refusal_exits_three(self, tmp_path, capsys):
        inst = line_instance(tmp_path, ["BRRRB"])
        code, _, err = run(capsys, ["construct", inst, "--method", "size2k", "--k", "2"])
        assert code == 3
        assert "offending bicoloring index: 0" in err

    def test_m_restricted(self, tmp_path, capsys):
        inst = line_instance(tmp_path, ["RRRBBBBBB", "BBRRRRRRB"])
        code, out, _ = run(
            capsys, ["construct", inst, "--method", "m-restricted", "--m", "3"]
        )
        assert code == 0
        assert json.loads(out)["size"] == 6

    def test_balls_on_plane_instance(self, tmp_path, capsys):
        ps = PointSet([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)])
        inst = write_instance(tmp_path, "tri.json", ps, BicoloringFamily(["RBB", "BRR"]))
        code, out, _ = run(capsys, ["construct", inst, "--method", "balls"])
        assert code == 0
        doc = json.loads(out)
        assert doc["size"] == 2
        assert all(r["type"] == "ball" for r in doc["ranges"])

    def test_boxes_without_separating_axis_exits_three(self, tmp_path, capsys):
        ps = PointSet([(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)])
        inst = write_instance(tmp_path, "sq.json", ps, BicoloringFamily(["RBBR"]))
        code, _, err = run(capsys, ["construct", inst, "--method", "boxes"])
        assert code == 3

    def test_verify_failure_lists_indices(self, tmp_path, capsys):
        inst = line_instance(tmp_path, ["RRBB", "RBBB", "BBBR"])
        sol = tmp_path / "sol.json"
        from gsur import GSur, IndexInterval

        sol.write_text(fileio.gsur_document_text(GSur([IndexInterval(0, 1)], {})))
        code, _, err = run(capsys, ["verify", inst, str(sol)])
        assert code == 1
        assert "first failing bicoloring index: 0" in err
        assert "0 2" in err.replace("all failing indices: ", "")

    def test_missing_file_exits_two(self, capsys):
        code, _, err = run(capsys, ["verify", "/nonexistent/a.json", "/nonexistent/b.json"])
        assert code == 2


class TestSolve:
    def test_exact_default(self, tmp_path, capsys):
        inst = line_instance(tmp_path, ["RBBB", "RRBB", "RRRB"])
        code, out, _ = run(capsys, ["solve", inst])
        assert code == 0
        doc = json.loads(out)
        assert doc["method"] == "exact" and doc["optimal"] is True
        assert doc["size"] == 3
        assert isinstance(doc["runtime_seconds"], float)

    def test_greedy_never_smaller_than_exact(self, tmp_path, capsys):
        inst = line_instance(tmp_path, ["RRBBRB", "BRBRBR", "RBBBBR", "RRRBBB"])
        code_e, out_e, _ = run(capsys, ["solve", inst, "--exact"])
        code_g, out_g, _ = run(capsys, ["solve", inst, "--greedy"])
        assert code_e == 0 and code_g == 0
        assert json.loads(out_g)["size"] >= json.loads(out_e)["size"]
        assert json.loads(out_g)["optimal"] is False

    def test_candidate_specs(self, tmp_path, capsys):
        inst = line_instance(tmp_path, ["RRBB", "RBBB"])
        for spec in ("all-intervals", "adjacent", "pairs-2k=1"):
            code, out, _ = run(capsys, ["solve", inst, "--candidates", spec])
            assert code == 0
            assert json.loads(out)["candidates"] == spec

    def test_candidates_from_file(self, tmp_path, capsys):
        from gsur import IndexInterval

        inst = line_instance(tmp_path, ["RBBB"])
        cand = tmp_path / "cands.json"
        cand.write_text(fileio.candidates_to_text([IndexInterval(0, 1)]))
        code, out, _ = run(
            capsys, ["solve", inst, "--candidates", f"file={cand}"]
        )
        assert code == 0
        assert json.loads(out)["size"] == 1

    def test_infeasible_exits_four(self, tmp_path, capsys):
        inst = line_instance(tmp_path, ["RBBB", "BBBR"])
        cand = tmp_path / "cands.json"
        from gsur import IndexInterval

        cand.write_text(fileio.candidates_to_text([IndexInterval(1, 2)]))
        code, _, err = run(
            capsys, ["solve", inst, "--candidates", f"file={cand}"]
        )
        assert code == 4
        assert "0 1" in err

    def test_budget_exceeded_exits_five(self, tmp_path, capsys):
        inst = line_instance(tmp_path, ["RBBB", "RRBB", "RRRB"])
        code, _, err = run(capsys, ["solve", inst, "--budget", "2"])
        assert code == 5

    def test_budget_satisfied(self, tmp_path, capsys):
        inst = line_instance(tmp_path, ["RBBB", "RRBB", "RRRB"])
        code, out, _ = run(capsys, ["solve", inst, "--budget", "3"])
        assert code == 0
        assert json.loads(out)["budget"] == 3

    def test_deterministic_modulo_runtime(self, tmp_path, capsys):
        inst = line_instance(tmp_path, ["RRBBRB", "BRBRBR"])
        _, out1, _ = run(capsys, ["solve", inst])
        _, out2, _ = run(capsys, ["solve", inst])
        a, b = json.loads(out1), json.loads(out2)
        a.pop("runtime_seconds"), b.pop("runtime_seconds")
        assert a == b


class TestReduce:
    def test_forward(self, tmp_path, capsys):
        sc_path = tmp_path / "sc.json"
        sc_path.write_text(
            fileio.set_cover_to_text(
                SetCoverInstance(5, [[0, 1, 2], [0, 1, 3], [2, 3, 4], [0, 2, 3]])
            )
        )
        code, out, _ = run(capsys, ["reduce", str(sc_path)])
        assert code == 0
        obj = json.loads(out)
        assert len(obj["points"]) == 14
        assert obj["bicolorings"][0] == "RBBBRBBBBBBBRB"

    def test_extract_round_trip(self, tmp_path, capsys):
        sc_path = tmp_path / "sc.json"
        sc_path.write_text(
            fileio.set_cover_to_text(
                SetCoverInstance(5, [[0, 1, 2], [0, 1, 3], [2, 3, 4], [0, 2, 3]])
            )
        )
        inst = tmp_path / "reduced.json"
        assert main(["reduce", str(sc_path), "--out", str(inst)]) == 0
        capsys.readouterr()
        sol = tmp_path / "sol.json"
        assert main(["solve", str(inst), "--out", str(sol)]) == 0
        capsys.readouterr()
        code, out, _ = run(
            capsys, ["reduce", str(sc_path), "--extract", str(sol)]
        )
        assert code == 0
        chosen = json.loads(out)["chosen_sets"]
        assert len(chosen) == 2

    def test_extract_infeasible_solution_exits_one(self, tmp_path, capsys):
        from gsur import GSur, IndexInterval

        sc_path = tmp_path / "sc.json"
        sc_path.write_text(
            fileio.set_cover_to_text(SetCoverInstance(2, [[0], [1]]))
        )
        sol = tmp_path / "sol.json"
        sol.write_text(fileio.gsur_document_text(GSur([IndexInterval(0, 1)], {})))
        code, _, err = run(capsys, ["reduce", str(sc_path), "--extract", str(sol)])
        assert code == 1
        assert "failing" in err


class TestGabriel:
    def test_edge_list(self, tmp_path, capsys):
        ps = PointSet([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)])
        inst = write_instance(tmp_path, "tri.json", ps, BicoloringFamily(["RBB"]))
        code, out, _ = run(capsys, ["gabriel", inst])
        assert code == 0
        assert out == "0 1\n0 2\n"

    def test_tree_flag(self, tmp_path, capsys):
        ps = PointSet([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)])
        inst = write_instance(tmp_path, "sq.json", ps, BicoloringFamily(["RBBB"]))
        code, out, _ = run(capsys, ["gabriel", inst, "--tree"])
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 3

    def test_near_boundary_warning(self, tmp_path, capsys):
        ps = PointSet([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)])
        inst = write_instance(tmp_path, "tri.json", ps, BicoloringFamily(["RBB"]))
        _, _, err = run(capsys, ["gabriel", inst])
        assert "boundary" in err


class TestSimulate:
    def test_discrete_csv(self, capsys):
        code, out, err = run(
            capsys,
            ["simulate", "--model", "discrete", "--m", "2", "--n", "20",
             "--trials", "5", "--seed", "1"],
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "trial_index,t_stat,s_stat,event_e"
        assert len(lines) == 7  # header + 5 trials + summary
        assert lines[-1].startswith("summary,")
        assert "P(S=2)" in err and "P(E)" in err

    def test_continuous_csv(self, capsys):
        code, out, _ = run(
            capsys,
            ["simulate", "--model", "continuous", "--m", "1", "--n", "3",
             "--trials", "4", "--seed", "9"],
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "trial_index,m_len,l_len"
        assert len(lines) == 6

    def test_summary_only(self, capsys):
        code, out, _ = run(
            capsys,
            ["simulate", "--model", "discrete", "--m", "1", "--n", "10",
             "--trials", "50", "--seed", "3", "--summary-only"],
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 2
        assert lines[1].startswith("summary,")

    def test_deterministic(self, capsys):
        argv = ["simulate", "--model", "discrete", "--m", "2", "--n", "15",
                "--trials", "10", "--seed", "11"]
        _, out1, _ = run(capsys, argv)
        _, out2, _ = run(capsys, argv)
        assert out1 == out2

    def test_bad_params_exit_two(self, capsys):
        code, _, err = run(
            capsys,
            ["simulate", "--model", "discrete", "--m", "0", "--n", "5"],
        )
        assert code == 2


class TestParserBasics:
    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit) as ei:
            main(["transmogrify"])
        assert ei.value.code == 2

    def test_no_arguments(self):
        with pytest.raises(SystemExit) as ei:
            main([])
        assert ei.value.code == 2

    def test_module_entry_point(self):
        import subprocess
        import sys

        proc = subprocess.run(
            [sys.executable, "-m", "gsur", "gen", "--family", "prefix", "--n", "3"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "RBB" in proc.stdout
