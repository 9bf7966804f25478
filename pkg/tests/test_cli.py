"""Command-line interface: JSON reports, exit codes, DOT exports,
campaign lines.  Everything runs in-process through main(argv)."""

import json
import subprocess
import sys

import pytest

from compseq import (
    GeneratorSpec,
    converges,
    format_edge_list,
    format_matrix,
    random_instance,
)
from compseq.cli import main
from conftest import (
    cycle4_feeders,
    period3_matrix,
    three_chain_parallel,
    two_chain,
)


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_matrix_input_convergent(self, write, capsys):
        path = write("a.mat", format_matrix(period3_matrix()))
        code, out, err = run(capsys, "analyze", path)
        assert code == 0 and err == ""
        report = json.loads(out)
        assert report["schema"] == 1
        assert report["input"]["format"] == "matrix"
        assert report["input"]["n"] == 4
        assert report["chain"]["eta"] == 1
        comp = report["chain"]["components"][0]
        assert comp["vertices"] == [1, 2, 3, 4]
        assert comp["trivial"] is False
        assert comp["kappa"] == 3
        assert comp["classes"] == [[1], [2, 4], [3]]
        assert report["verdict"] == {
            "converged": True,
            "rule": "NontrivialTail",
            "witness": None,
        }
        assert report["skeleton"] == {"class_counts": [3], "edges": []}
        assert report["limit"] == {"source": "analytic", "edges": [[2, 4]]}
        assert report["jbd"]["holds"] is True

    def test_edge_list_input_divergent(self, write, capsys):
        path = write("d.el", format_edge_list(cycle4_feeders(2)))
        code, out, err = run(capsys, "analyze", path)
        assert code == 2
        report = json.loads(out)
        assert report["input"]["format"] == "edge-list"
        assert report["verdict"] == {
            "converged": False,
            "rule": "TrailingCondition",
            "witness": {"j1": 1, "j2": 2, "excluded_residue": 0},
        }
        assert report["skeleton"] is None
        assert report["limit"] is None
        assert report["jbd"] is None

    def test_simulate_fallback(self, write, capsys):
        path = write("c.el", format_edge_list(cycle4_feeders(4)))
        code, out, _ = run(capsys, "analyze", path, "--simulate-fallback")
        assert code == 0
        report = json.loads(out)
        assert report["skeleton"] is None
        assert report["limit"]["source"] == "simulated"
        assert report["limit"]["edges"] == [
            [1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4],
        ]
        assert report["jbd"] == {
            "source": "simulated",
            "holds": True,
            "failing_level": None,
            "detail": None,
        }

    def test_no_fallback_without_flag(self, write, capsys):
        path = write("c.el", format_edge_list(cycle4_feeders(4)))
        code, out, _ = run(capsys, "analyze", path)
        assert code == 0
        report = json.loads(out)
        assert report["limit"] is None and report["jbd"] is None

    def test_missing_file(self, capsys):
        code, out, err = run(capsys, "analyze", "/nonexistent/input.el")
        assert code == 1 and out == ""
        assert err.startswith("error:")

    def test_malformed_input(self, write, capsys):
        code, _, err = run(capsys, "analyze", write("bad", "what is this\n"))
        assert code == 1
        assert "line 1" in err

    def test_self_loop_matrix(self, write, capsys):
        code, _, err = run(capsys, "analyze", write("loop.mat", "2\n11\n10\n"))
        assert code == 1
        assert "self-loop on vertex 1" in err

    def test_not_linearly_connected(self, write, capsys):
        text = "4 4\n1 2\n2 1\n3 4\n4 3\n"
        code, _, err = run(capsys, "analyze", write("nc.el", text))
        assert code == 1
        assert "no arcs from component 1 to component 2" in err

    def test_deterministic_output(self, write, capsys):
        path = write("a.el", format_edge_list(two_chain()))
        _, first, _ = run(capsys, "analyze", path)
        _, second, _ = run(capsys, "analyze", path)
        assert first == second

    def test_exit_codes_follow_verdicts(self, write, capsys):
        for seed in range(12):
            d = random_instance(GeneratorSpec(eta=1 + seed % 3, sizes=(1, 4), seed=seed))
            path = write(f"g{seed}.el", format_edge_list(d))
            code, out, _ = run(capsys, "analyze", path)
            verdict = converges(d)
            assert code == (0 if verdict.converged else 2)
            report = json.loads(out)
            assert report["verdict"]["converged"] == verdict.converged
            assert report["verdict"]["rule"] == verdict.rule


class TestVerifyCommand:
    def test_campaign_line(self, capsys):
        code, out, _ = run(capsys, "verify", "--count", "3", "--seed", "9")
        assert code == 0
        assert out == "verified 3/3 instances (seed 9, eta 1..4, sizes 1..5, nontrivial-only)\n"

    def test_zero_count_is_vacuous_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "--count", "0")
        assert code == 0
        assert out.startswith("verified 0/0 instances (seed 0,")

    def test_allow_trivial_note(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--count", "2", "--allow-trivial", "--sizes", "1..3"
        )
        assert code == 0
        assert "allow-trivial" in out

    def test_single_value_ranges(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--count", "2", "--eta", "2", "--sizes", "2..3"
        )
        assert code == 0
        assert "eta 2," in out

    def test_bad_range(self, capsys):
        code, _, err = run(capsys, "verify", "--eta", "5..2")
        assert code == 1 and "--eta" in err

    def test_negative_count(self, capsys):
        code, _, err = run(capsys, "verify", "--count", "-1")
        assert code == 1 and "--count" in err

    def test_sizes_too_small_without_trivial(self, capsys):
        code, _, err = run(capsys, "verify", "--sizes", "1")
        assert code == 1 and "cannot fit" in err


class TestExport:
    def test_cs_graph_dot(self, write, capsys):
        path = write("p.el", format_edge_list(three_chain_parallel()))
        code, out, _ = run(capsys, "export", path, "--what", "cs-graph")
        assert code == 0
        assert out == (
            "graph skeleton {\n"
            "  rankdir=LR;\n"
            '  { rank=same; "1_1"; "1_2"; }\n'
            '  { rank=same; "2_1"; "2_2"; }\n'
            '  { rank=same; "3_1"; "3_2"; }\n'
            '  "1_1" -- "2_1";\n'
            '  "1_2" -- "2_2";\n'
            '  "2_1" -- "3_1";\n'
            '  "2_2" -- "3_2";\n'
            "}\n"
        )

    def test_limit_dot_names_figure_edge(self, write, capsys):
        path = write("a.mat", format_matrix(period3_matrix()))
        code, out, _ = run(capsys, "export", path, "--what", "limit")
        assert code == 0
        assert '"2" -- "4";' in out
        assert out.count("--") == 1

    def test_limit_dot_two_chain(self, write, capsys):
        path = write("t.el", format_edge_list(two_chain()))
        code, out, _ = run(capsys, "export", path, "--what", "limit")
        assert code == 0
        assert out == (
            "graph limit {\n"
            '  "1";\n'
            '  "2";\n'
            '  "3";\n'
            '  "4";\n'
            '  "1" -- "3";\n'
            '  "2" -- "4";\n'
            "}\n"
        )

    def test_competition_dot_three_cycle_has_no_edges(self, write, capsys):
        path = write("c3.el", "3 3\n1 2\n2 3\n3 1\n")
        code, out, _ = run(capsys, "export", path, "--what", "competition", "1")
        assert code == 0
        assert out == 'graph competition {\n  "1";\n  "2";\n  "3";\n}\n'

    def test_competition_dot_two_step(self, write, capsys):
        path = write("a.mat", format_matrix(period3_matrix()))
        code, out, _ = run(capsys, "export", path, "--what", "competition", "2")
        assert code == 0
        assert '"2" -- "4";' in out and out.count("--") == 1

    def test_competition_needs_step_count(self, write, capsys):
        path = write("t.el", format_edge_list(two_chain()))
        code, _, err = run(capsys, "export", path, "--what", "competition")
        assert code == 1 and "step count" in err

    def test_bad_step_count(self, write, capsys):
        path = write("t.el", format_edge_list(two_chain()))
        for bad in ("x", "0", "-3"):
            code, _, err = run(capsys, "export", path, "--what", "competition", bad)
            assert code == 1 and "step count" in err

    def test_unknown_target(self, write, capsys):
        path = write("t.el", format_edge_list(two_chain()))
        code, _, err = run(capsys, "export", path, "--what", "everything")
        assert code == 1 and "cs-graph, limit, or competition" in err

    def test_extra_argument_rejected(self, write, capsys):
        path = write("t.el", format_edge_list(two_chain()))
        code, _, err = run(capsys, "export", path, "--what", "limit", "3")
        assert code == 1 and "no extra argument" in err

    def test_trivial_component_refused(self, write, capsys):
        path = write("f.el", format_edge_list(cycle4_feeders(2)))
        for what in ("cs-graph", "limit"):
            code, _, err = run(capsys, "export", path, "--what", what)
            assert code == 1 and "component 2 is trivial" in err

    def test_deterministic_output(self, write, capsys):
        path = write("p.el", format_edge_list(three_chain_parallel()))
        _, first, _ = run(capsys, "export", path, "--what", "cs-graph")
        _, second, _ = run(capsys, "export", path, "--what", "cs-graph")
        assert first == second


class TestEntryPoint:
    def test_module_invocation(self, write):
        path = write("a.mat", format_matrix(period3_matrix()))
        proc = subprocess.run(
            [sys.executable, "-m", "compseq", "analyze", path],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["verdict"]["converged"] is True
