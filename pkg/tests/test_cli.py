import json

from regext import (
    TutteViolator,
    add_matching,
    build,
    format_graph6,
    is_valid_matching,
    parse_graph6,
)
from regext.cli import main
from regext.families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    balloon_cubic_pair,
    petersen_graph,
)


def run_cli(capsys, argv, stdin_lines=None, monkeypatch=None):
    if stdin_lines is not None:
        import io
        import sys

        monkeypatch.setattr(sys, "stdin", io.StringIO("\n".join(stdin_lines) + "\n"))
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out.splitlines(), out.err


def json_lines(lines):
    return [json.loads(line) for line in lines]


class TestExtendCommand:
    def test_c6_succeeds(self, capsys, monkeypatch):
        g6 = format_graph6(cycle_graph(6))
        code, out, _ = run_cli(capsys, ["extend", "--json", "--certificates"],
                               [g6], monkeypatch)
        assert code == 0
        header, result, summary = json_lines(out)
        assert header["kind"] == "header" and header["command"] == "extend"
        assert result["ok"] and result["final_r"] == 3
        final = parse_graph6(result["final"])
        steps = result["trace"]["steps"]
        cur = cycle_graph(6)
        for step in steps:
            cur = add_matching(cur, [tuple(e) for e in step])
        assert cur == final
        assert summary["ok"] == 1 and summary["failed"] == 0

    def test_k33_fails_with_violator(self, capsys, monkeypatch):
        g6 = format_graph6(complete_bipartite(3, 3))
        code, out, _ = run_cli(capsys, ["extend", "--json"], [g6], monkeypatch)
        assert code == 1
        _, result, summary = json_lines(out)
        assert not result["ok"]
        assert result["violator"] == {"type": "tutte-violator", "s": [], "odd_count": 2}
        assert summary["failed"] == 1

    def test_target_r(self, capsys, monkeypatch, tmp_path):
        g = build(8, list(complete_graph(4).edges())
                  + [(u + 4, v + 4) for u, v in complete_graph(4).edges()]
                  + [(i, i + 4) for i in range(4)])
        path = tmp_path / "in.g6"
        path.write_text(format_graph6(g) + "\n")
        code, out, _ = run_cli(capsys, ["extend", "--input", str(path),
                                        "--target-r", "7", "--json"])
        assert code == 0
        result = json_lines(out)[1]
        assert result["final_r"] == 7
        assert parse_graph6(result["final"]) == complete_graph(8)

    def test_parse_error_exit_2(self, capsys, monkeypatch):
        code, out, err = run_cli(capsys, ["extend"], ["C~", "!!notgraph6!!"],
                                 monkeypatch)
        assert code == 2
        assert "line 2" in err

    def test_nonregular_error(self, capsys, monkeypatch):
        g6 = format_graph6(build(3, [(0, 1)]))
        code, out, _ = run_cli(capsys, ["extend"], [g6], monkeypatch)
        assert code == 1

    def test_dirac_strategy_passthrough(self, capsys, monkeypatch):
        g6 = format_graph6(cycle_graph(6))
        code, out, _ = run_cli(capsys, ["extend", "--strategy", "dirac", "--json"],
                               [g6], monkeypatch)
        assert code == 0
        assert json_lines(out)[1]["final_r"] == 3

    def test_dirac_strategy_error_on_dense(self, capsys, monkeypatch):
        g6 = format_graph6(complete_bipartite(3, 3))
        code, out, _ = run_cli(capsys, ["extend", "--strategy", "dirac", "--json"],
                               [g6], monkeypatch)
        assert code == 1
        assert "r < n/2" in json_lines(out)[1]["error"]

    def test_log_env_var(self, capsys, monkeypatch):
        monkeypatch.setenv("REGEXT_LOG", "debug")
        code, _, _ = run_cli(capsys, ["gen", "--n", "4", "--r", "2"])
        assert code == 0


class TestCheckCommand:
    def test_c6(self, capsys, monkeypatch):
        code, out, _ = run_cli(capsys, ["check", "--json"],
                               [format_graph6(cycle_graph(6))], monkeypatch)
        assert code == 0
        result = json_lines(out)[1]
        rules = {v["rule"]: v for v in result["verdicts"]}
        assert rules["T1-Dirac"]["applies"]
        assert rules["T1-Dirac"]["conclusion"] == "extendable"

    def test_k33_witness(self, capsys, monkeypatch):
        code, out, _ = run_cli(capsys, ["check", "--json"],
                               [format_graph6(complete_bipartite(3, 3))], monkeypatch)
        assert code == 0
        rules = {v["rule"]: v for v in json_lines(out)[1]["verdicts"]}
        t4 = rules["T4-Impossible"]
        assert t4["applies"]
        assert sorted(map(len, (t4["witness"]["part_a"], t4["witness"]["part_b"]))) \
            == [3, 3]

    def test_nonregular_exit_1(self, capsys, monkeypatch):
        code, _, _ = run_cli(capsys, ["check"],
                             [format_graph6(build(3, [(0, 1)]))], monkeypatch)
        assert code == 1


class TestMatchCommand:
    def test_petersen(self, capsys, monkeypatch):
        code, out, _ = run_cli(capsys, ["match", "--json", "--certificates"],
                               [format_graph6(petersen_graph())], monkeypatch)
        assert code == 0
        result = json_lines(out)[1]
        assert result["perfect"] and result["size"] == 5
        m = frozenset(tuple(e) for e in result["matching"])
        assert is_valid_matching(petersen_graph(), m, perfect=True)

    def test_odd_cycle_violator(self, capsys, monkeypatch):
        code, out, _ = run_cli(capsys, ["match", "--json"],
                               [format_graph6(cycle_graph(5))], monkeypatch)
        assert code == 1
        result = json_lines(out)[1]
        assert not result["perfect"] and result["size"] == 2
        assert result["violator"]["s"] == []


class TestAnalyzeCommand:
    def test_balloon_graph(self, capsys, monkeypatch):
        code, out, _ = run_cli(capsys, ["analyze", "--json"],
                               [format_graph6(balloon_cubic_pair())], monkeypatch)
        assert code == 0
        result = json_lines(out)[1]
        assert result["bridges"] == [[4, 9]]
        assert result["b"] == 2
        assert result["r"] == 3 and result["connected"]
        assert sorted(map(len, result["balloons"])) == [5, 5]
        assert result["clique_number"] == 3

    def test_certificates_revalidate(self, capsys, monkeypatch):
        # every graph6 string in a report re-parses to a graph on which the
        # attached certificate validates
        g6 = format_graph6(complete_bipartite(3, 3))
        code, out, _ = run_cli(capsys, ["extend", "--json"], [g6], monkeypatch)
        result = json_lines(out)[1]
        host = parse_graph6(result["graph6"])
        from regext import complement

        v = TutteViolator(frozenset(result["violator"]["s"]),
                          result["violator"]["odd_count"])
        assert v.verify(complement(host))


class TestGenCommand:
    def test_enumerate_known_count(self, capsys):
        code, out, _ = run_cli(capsys, ["gen", "--n", "6", "--r", "3", "--enumerate"])
        assert code == 0
        assert len(out) == 2
        for line in out:
            assert parse_graph6(line).n == 6

    def test_sampling_deterministic(self, capsys):
        code, out1, _ = run_cli(capsys, ["gen", "--n", "12", "--r", "3",
                                         "--count", "3", "--seed", "9"])
        code, out2, _ = run_cli(capsys, ["gen", "--n", "12", "--r", "3",
                                         "--count", "3", "--seed", "9"])
        assert out1 == out2 and len(out1) == 3

    def test_parity_error_exit_2(self, capsys):
        code, _, err = run_cli(capsys, ["gen", "--n", "5", "--r", "3"])
        assert code == 2 and "odd" in err

    def test_pipes_into_match(self, capsys, monkeypatch):
        code, out, _ = run_cli(capsys, ["gen", "--n", "8", "--r", "3",
                                        "--count", "2", "--seed", "1"])
        code, out2, _ = run_cli(capsys, ["match"], out, monkeypatch)
        assert code in (0, 1)
        assert len(out2) == 3  # two results plus summary


class TestVerifyCommand:
    def test_ineq_rule(self, capsys):
        code, out, _ = run_cli(capsys, ["verify", "--rule", "INEQ",
                                        "--r-range", "16..40"])
        assert code == 0
        assert "counterexamples 0" in out[0]

    def test_t1_exhaustive_small(self, capsys):
        code, out, _ = run_cli(capsys, ["verify", "--rule", "T1",
                                        "--n-range", "4..8", "--json"])
        assert code == 0
        summary = json_lines(out)[-1]
        assert summary["failed"] == 0 and summary["checked"] == 17

    def test_l_rule_small(self, capsys):
        code, out, _ = run_cli(capsys, ["verify", "--rule", "L",
                                        "--r-range", "17",
                                        "--n-range", "18..20",
                                        "--samples", "3", "--json"])
        assert code == 0
        summary = json_lines(out)[-1]
        assert summary["failed"] == 0 and summary["checked"] == 6

    def test_jobs_pool_matches_serial(self, capsys):
        argv = ["verify", "--rule", "T1", "--n-range", "4..8", "--json"]
        _, serial, _ = run_cli(capsys, argv)
        _, pooled, _ = run_cli(capsys, argv + ["--jobs", "2"])
        strip = lambda lines: [json.loads(l) for l in lines
                               if json.loads(l)["kind"] != "header"]
        assert strip(serial) == strip(pooled)

    def test_reports_byte_identical(self, capsys, monkeypatch):
        argv = ["check", "--json"]
        lines = [format_graph6(g) for g in
                 (cycle_graph(6), complete_bipartite(3, 3), complete_graph(4))]
        _, out1, _ = run_cli(capsys, argv, lines, monkeypatch)
        _, out2, _ = run_cli(capsys, argv, lines, monkeypatch)
        assert out1 == out2
