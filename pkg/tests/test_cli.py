"""Command-line surface: output bytes, exit codes, budgets, file handling."""

import csv
import io

import pytest

from oddminors.cli import BENCH_COLUMNS, run

C5 = "5\n0 1\n0 4\n1 2\n2 3\n3 4\n"
K4 = "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
PATH4 = "4\n0 1\n1 2\n2 3\n"


class TestGen:
    def test_cycle_edge_list(self):
        code, out, err = run(["gen", "cycle", "5"])
        assert (code, out, err) == (0, C5, "")

    def test_dimacs_format(self):
        code, out, _ = run(["gen", "cycle", "4", "--format", "dimacs"])
        assert code == 0
        assert out == "p edge 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n"

    def test_gnp_seeded(self):
        code, out, _ = run(["gen", "gnp", "6", "0.5", "--seed", "7"])
        assert code == 0
        assert out == "6\n0 1\n0 2\n0 5\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n"

    def test_unknown_generator(self):
        code, out, err = run(["gen", "moebius", "7"])
        assert code == 2
        assert out == ""
        assert "error:" in err


class TestGraphInput:
    def test_stdin_and_file_agree(self, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text(C5)
        from_stdin = run(["partition"], stdin_text=C5)
        from_file = run(["partition", "-i", str(path)])
        assert from_stdin == from_file

    def test_dimacs_autodetected(self):
        code, out, _ = run(["partition"], stdin_text="p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n")
        assert code == 0
        assert "0: A=0,2 B=1,3" in out

    def test_garbage_graph(self):
        code, _, err = run(["partition"], stdin_text="5\n0 one\n")
        assert code == 2
        assert "error:" in err

    def test_missing_input_file(self):
        code, _, err = run(["partition", "-i", "/nonexistent/g.txt"])
        assert code == 2
        assert "cannot read" in err


class TestPipelineCommands:
    def test_partition_output(self):
        code, out, _ = run(["partition"], stdin_text=C5)
        assert code == 0
        assert out == "0: A=0,2 B=1,3\n1: A=4 B=\nPASS\n"

    def test_quotient_output(self):
        code, out, _ = run(["quotient"], stdin_text=C5)
        assert code == 0
        assert out == "2\n0 1\nw 0 1 : 0 3 4\n"

    def test_color_exact(self):
        code, out, _ = run(["color", "--mode", "exact"], stdin_text=K4)
        assert code == 0
        assert out.startswith("palette 4\n")

    def test_color_heuristic(self):
        code, out, _ = run(["color", "--mode", "heuristic"], stdin_text=C5)
        assert code == 0
        assert out == "palette 3\n0 0\n1 1\n2 0\n3 1\n4 2\n"

    def test_color_composed_is_default(self):
        explicit = run(["color", "--mode", "composed"], stdin_text=C5)
        default = run(["color"], stdin_text=C5)
        assert explicit == default
        assert default[1].startswith("palette ")

    def test_color_bad_mode(self):
        code, _, _ = run(["color", "--mode", "magic"], stdin_text=C5)
        assert code == 2

    def test_find_minor_certificate(self):
        code, out, _ = run(["find-minor", "-t", "3"], stdin_text=C5)
        assert code == 0
        assert out == (
            "trees 3\n"
            "T 1: 0,1,2 / 0-1,1-2\n"
            "T 2: 3 /\n"
            "T 3: 4 /\n"
            "conn 1 2 : 2 3\n"
            "conn 1 3 : 0 4\n"
            "conn 2 3 : 3 4\n"
        )

    def test_find_minor_not_found(self):
        code, out, _ = run(["find-minor", "-t", "3"], stdin_text=PATH4)
        assert code == 1
        assert out == "NOT FOUND\n"

    def test_find_odd_minor_bipartite(self):
        code, out, _ = run(["find-odd-minor", "-t", "3"], stdin_text="4\n0 1\n1 2\n2 3\n0 3\n")
        assert code == 1
        assert out == "NOT FOUND\n"

    def test_find_odd_minor_certificate_verifies(self, tmp_path):
        code, out, _ = run(["find-odd-minor", "-t", "3"], stdin_text=C5)
        assert code == 0
        assert "parity" in out
        cert = tmp_path / "cert.txt"
        cert.write_text(out)
        code, out, _ = run(["verify", "--cert", str(cert)], stdin_text=C5)
        assert (code, out) == (0, "PASS\n")

    def test_lift_by_search(self):
        code, out, _ = run(["lift", "-t", "2"], stdin_text=C5)
        assert code == 0
        assert "parity 0 : 1" in out

    def test_lift_not_found(self):
        code, out, _ = run(["lift", "-t", "5"], stdin_text=C5)
        assert (code, out) == (1, "NOT FOUND\n")

    def test_lift_from_certificate_file(self, tmp_path):
        quotient_cert = tmp_path / "qcert.txt"
        quotient_cert.write_text(
            "trees 2\nT 1: 0 /\nT 2: 1 /\nconn 1 2 : 0 1\n"
        )
        code, out, _ = run(["lift", "--cert", str(quotient_cert)], stdin_text=C5)
        assert code == 0
        lifted = tmp_path / "lifted.txt"
        lifted.write_text(out)
        code, out, _ = run(["verify", "--cert", str(lifted)], stdin_text=C5)
        assert (code, out) == (0, "PASS\n")

    def test_lift_rejects_odd_certificate(self, tmp_path):
        odd = tmp_path / "odd.txt"
        odd.write_text(run(["find-odd-minor", "-t", "2"], stdin_text=C5)[1])
        code, _, err = run(["lift", "--cert", str(odd)], stdin_text=C5)
        assert code == 2
        assert "plain expansion certificate" in err

    def test_report_found(self):
        code, out, _ = run(["report", "-t", "2"], stdin_text=C5)
        assert code == 0
        assert "K2-expansion in quotient: found" in out
        assert "verification: PASS" in out

    def test_report_not_found(self):
        code, out, _ = run(["report", "-t", "3"], stdin_text="4\n0 1\n1 2\n2 3\n0 3\n")
        assert code == 0
        assert "quotient is K3-expansion-free" in out
        assert "chi(quotient) = 1" in out


class TestVerifySubcommand:
    def test_partition_round_trip(self, tmp_path):
        art = tmp_path / "p.txt"
        art.write_text(run(["partition"], stdin_text=C5)[1].removesuffix("PASS\n"))
        code, out, _ = run(["verify", "--partition", str(art)], stdin_text=C5)
        assert (code, out) == (0, "PASS\n")

    def test_quotient_round_trip(self, tmp_path):
        art = tmp_path / "q.txt"
        art.write_text(run(["quotient"], stdin_text=C5)[1])
        code, out, _ = run(["verify", "--quotient", str(art)], stdin_text=C5)
        assert (code, out) == (0, "PASS\n")

    def test_coloring_round_trip(self, tmp_path):
        art = tmp_path / "c.txt"
        art.write_text(run(["color"], stdin_text=C5)[1])
        code, out, _ = run(["verify", "--coloring", str(art)], stdin_text=C5)
        assert (code, out) == (0, "PASS\n")

    def test_corrupted_coloring_fails(self, tmp_path):
        art = tmp_path / "c.txt"
        art.write_text("palette 1\n0 0\n1 0\n2 0\n3 0\n4 0\n")
        code, out, _ = run(["verify", "--coloring", str(art)], stdin_text=C5)
        assert code == 1
        assert out.startswith("FAIL")

    def test_corrupted_certificate_fails(self, tmp_path):
        art = tmp_path / "cert.txt"
        art.write_text("trees 2\nT 1: 0 /\nT 2: 2 /\nconn 1 2 : 0 2\n")
        code, out, _ = run(["verify", "--cert", str(art)], stdin_text=C5)
        assert code == 1
        assert "non-edge" in out

    def test_exactly_one_artifact_required(self, tmp_path):
        code, _, _ = run(["verify"], stdin_text=C5)
        assert code == 2
        a = tmp_path / "a.txt"
        a.write_text(run(["color"], stdin_text=C5)[1])
        code, _, _ = run(
            ["verify", "--coloring", str(a), "--partition", str(a)], stdin_text=C5
        )
        assert code == 2


class TestBudgets:
    def test_flag_trips_budget(self):
        code, out, err = run(["find-minor", "-t", "3", "--max-assignments", "1"], stdin_text=C5)
        assert code == 3
        assert out == ""
        assert "error:" in err

    def test_env_var_trips_budget(self, monkeypatch):
        monkeypatch.setenv("ODDMINORS_MAX_ASSIGNMENTS", "1")
        code, _, _ = run(["find-minor", "-t", "3"], stdin_text=C5)
        assert code == 3

    def test_flag_overrides_env(self, monkeypatch):
        monkeypatch.setenv("ODDMINORS_MAX_ASSIGNMENTS", "1")
        code, _, _ = run(
            ["find-minor", "-t", "3", "--max-assignments", "100000"], stdin_text=C5
        )
        assert code == 0

    def test_bad_env_value(self, monkeypatch):
        monkeypatch.setenv("ODDMINORS_MAX_NODES", "lots")
        code, _, err = run(["color", "--mode", "exact"], stdin_text=C5)
        assert code == 2
        assert "ODDMINORS_MAX_NODES" in err

    def test_exact_coloring_vertex_budget(self):
        big = run(["gen", "cycle", "40"])[1]
        code, _, err = run(["color", "--mode", "exact"], stdin_text=big)
        assert code == 3
        assert "color_heuristic" in err


class TestBench:
    def test_grid_shape_and_ratio(self):
        code, out, err = run(
            ["bench", "--n", "4,5", "--p", "0.5", "--seeds", "1..2"]
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == list(BENCH_COLUMNS)
        assert len(rows) == 1 + 4
        for n, p, seed, parts, chi_h, composed, chi_g, ratio in rows[1:]:
            assert int(parts) >= 1
            assert int(composed) <= 2 * int(chi_h)
            assert int(chi_g) <= int(composed)
            assert ratio == f"{int(composed) / int(chi_h):.4f}"

    def test_seed_list_forms_agree(self):
        ranged = run(["bench", "--n", "4", "--p", "0.3", "--seeds", "1..3"])
        listed = run(["bench", "--n", "4", "--p", "0.3", "--seeds", "1,2,3"])
        assert ranged == listed

    def test_budget_blanks_not_errors(self):
        # Sparse seed has 10 parts (quotient over budget, whole row blank);
        # dense seed has 3 (only the chi(G) column blanks out).  n = 18
        # exceeds the vertex budget either way.  Exit stays 0.
        code, out, _ = run(
            ["bench", "--n", "18", "--p", "0.05,0.5", "--seeds", "1",
             "--max-vertices", "4"]
        )
        assert code == 0
        sparse, dense = list(csv.reader(io.StringIO(out)))[1:]
        assert sparse[4:] == ["", "", "", ""]
        assert dense[4] != "" and dense[7] != "" and dense[6] == ""

    def test_empty_grid_rejected(self):
        code, _, err = run(["bench", "--n", "", "--p", "0.5", "--seeds", "1"])
        assert code == 2
        assert "error:" in err


class TestUsage:
    def test_unknown_command(self):
        code, _, _ = run(["frobnicate"])
        assert code == 2

    def test_missing_required_t(self):
        code, _, _ = run(["find-minor"], stdin_text=C5)
        assert code == 2

    def test_runs_are_deterministic(self):
        for argv in (["report", "-t", "2"], ["bench", "--n", "5", "--p", "0.5", "--seeds", "3"]):
            first = run(argv, stdin_text=C5)
            second = run(argv, stdin_text=C5)
            assert first == second
