import json

from sctop.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestComplete:
    def test_finite_chain_json(self, capsys):
        code, out, _ = run(capsys, "complete",
                           "--space", "finite { elems: a,b; leq: a<b }",
                           "--json")
        assert code == 0
        obj = json.loads(out)
        assert obj["completion_size"] == 2
        assert obj["new_points"] == 0
        assert obj["eta"] == [["a", "{a}"], ["b", "{a,b}"]]
        assert all(obj["witnesses"].values())

    def test_symbolic_omega(self, capsys):
        code, out, _ = run(capsys, "complete", "--space", "omega")
        assert code == 0
        assert "omega_plus_one" in out
        assert "new points: w" in out

    def test_cap_exceeded_exit_code(self, capsys):
        code, _, err = run(capsys, "complete", "--space",
                           "finite { elems: a,b,c,d,e }")
        assert code == 3
        assert "cap" in err


class TestQueries:
    def test_info(self, capsys):
        code, out, _ = run(capsys, "info", "--space",
                           "finite { elems: a,b,t; leq: a<t, b<t }", "--json")
        assert code == 0
        obj = json.loads(out)
        assert obj["strongly_complete"] and obj["sober"] and obj["dcpo"]

    def test_irr_finite(self, capsys):
        code, out, _ = run(capsys, "irr", "--space",
                           "finite { elems: a,b; leq: a<b }")
        assert code == 0
        assert "{a,b}" in out

    def test_irr_symbolic_descriptor(self, capsys):
        code, out, _ = run(capsys, "irr", "--space", "omega",
                           "--descriptor", "tail:5")
        assert code == 0
        assert "sup absent" in out

    def test_irr_johnstone_whole(self, capsys):
        code, out, _ = run(capsys, "irr", "--space", "johnstone",
                           "--descriptor", "whole")
        assert code == 0
        assert "irreducible True" in out and "directed False" in out

    def test_si_finite(self, capsys):
        code, out, _ = run(capsys, "si", "--space",
                           "finite { elems: a,b; leq: a<b }")
        assert code == 0
        assert "equals the original topology: True" in out

    def test_si_symbolic(self, capsys):
        code, out, _ = run(capsys, "si", "--space", "omega", "--open", "tail:3")
        assert code == 0
        assert "SI-open True" in out

    def test_iclosure(self, capsys):
        code, out, _ = run(capsys, "iclosure", "--space",
                           "finite { elems: a,b,t; leq: a<t, b<t }",
                           "--subset", "a,b")
        assert code == 0
        assert "cl_I({a,b}) = {a,b}" in out

    def test_checkmap_swap(self, capsys):
        code, out, _ = run(capsys, "checkmap", "--map",
                           "map { from: finite { elems: a,b; leq: a<b }; "
                           "to: finite { elems: a,b; leq: a<b }; "
                           "pairs: a -> b, b -> a }", "--json")
        assert code == 0
        obj = json.loads(out)
        assert not obj["flags"]["continuous"]
        assert "continuous" in obj["witnesses"]

    def test_extend_identity(self, capsys):
        code, out, _ = run(capsys, "extend", "--map",
                           "map { from: finite { elems: a,b; leq: a<b }; "
                           "to: finite { elems: a,b; leq: a<b }; "
                           "pairs: a -> a, b -> b }", "--json")
        assert code == 0
        obj = json.loads(out)
        assert obj["factors_through_unit"]

    def test_truncate(self, capsys, tmp_path):
        out_path = tmp_path / "t.dot"
        code, out, _ = run(capsys, "truncate", "--space", "omega", "-n", "3",
                           "--out", str(out_path), "--json")
        assert code == 0
        obj = json.loads(out)
        assert obj["size"] == 3
        assert out_path.read_text().startswith("digraph")


class TestVerify:
    def test_small_suite_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-size", "2",
                           "--suite", "finite-collapse")
        assert code == 0
        assert "all suites passed" in out

    def test_report_dir(self, capsys, tmp_path):
        report = tmp_path / "report"
        code, _, _ = run(capsys, "verify", "--max-size", "2",
                         "--suite", "finite-collapse", "--suite", "dsl-io",
                         "--report-dir", str(report))
        assert code == 0
        csv_text = (report / "results.csv").read_text()
        assert csv_text.splitlines()[0] == "suite,name,passed,checked,witness"
        assert "finite-collapse" in csv_text
        assert (report / "summary.png").stat().st_size > 0

    def test_json_mode_is_byte_identical(self, capsys):
        _, out1, _ = run(capsys, "verify", "--max-size", "2",
                         "--suite", "dsl-io", "--json")
        _, out2, _ = run(capsys, "verify", "--max-size", "2",
                         "--suite", "dsl-io", "--json")
        assert out1 == out2

    def test_unknown_suite(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "nope")
        assert code == 2
        assert "unknown suite" in err


class TestSearchDelta:
    def test_honest_no_witness_report(self, capsys):
        code, out, _ = run(capsys, "search-delta", "--samples", "3",
                           "--max-size", "4")
        assert code == 0
        assert "no witness found" in out
        assert "not a proof" in out

    def test_deterministic_for_fixed_seed(self, capsys):
        _, out1, _ = run(capsys, "search-delta", "--samples", "3",
                         "--max-size", "4", "--seed", "7", "--json")
        _, out2, _ = run(capsys, "search-delta", "--samples", "3",
                         "--max-size", "4", "--seed", "7", "--json")
        assert out1 == out2


class TestExitCodes:
    def test_parse_error_is_2(self, capsys):
        code, _, err = run(capsys, "info", "--space", "finite { elems }")
        assert code == 2
        assert "expected" in err

    def test_semantic_error_is_2(self, capsys):
        code, _, _ = run(capsys, "info", "--space",
                         "finite { elems: a, b; leq: a<b, b<a }")
        assert code == 2

    def test_usage_error_is_2(self, capsys):
        assert main([]) == 2

    def test_cap_flag_lowers_cap(self, capsys):
        code, _, _ = run(capsys, "irr", "--space",
                         "finite { elems: a,b,t; leq: a<t, b<t }", "--cap", "2")
        assert code == 3


class TestExport:
    def test_export_dot_json_fig(self, capsys, tmp_path):
        dot = tmp_path / "x.dot"
        fig = tmp_path / "x.png"
        code, _, _ = run(capsys, "export", "--space",
                         "finite { elems: a,b,t; leq: a<t, b<t }",
                         "--out", str(dot), "--fig", str(fig))
        assert code == 0
        assert dot.read_text().count("->") == 2
        assert fig.stat().st_size > 0
        jout = tmp_path / "x.json"
        code, _, _ = run(capsys, "export", "--space",
                         "finite { elems: a,b; leq: a<b }",
                         "--out", str(jout))
        assert code == 0
        assert json.loads(jout.read_text())["kind"] == "space"

    def test_export_symbolic_rejected(self, capsys, tmp_path):
        code, _, err = run(capsys, "export", "--space", "omega",
                           "--out", str(tmp_path / "x.dot"))
        assert code == 2
        assert "truncate" in err
