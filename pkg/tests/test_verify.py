from sctop.verify import (SUITES, CheckResult, results_to_obj, run_suites,
                          search_delta_counterexample, write_csv)


def test_registry_names_are_stable():
    assert set(SUITES) == {"finite-collapse", "elementary", "continuity",
                           "hyperspace", "universal-property", "catalog",
                           "dsl-io"}


def test_run_suites_clamps_map_populations():
    results = run_suites(["finite-collapse", "dsl-io"], max_size=2)
    assert all(r.passed for r in results)
    assert {r.suite for r in results} == {"finite-collapse", "dsl-io"}


def test_check_result_line_format():
    r = CheckResult("s", "n", False, 3, "w")
    assert r.line() == "FAIL  s/n  (3 checks)  [w]"
    assert CheckResult("s", "n", True, 3).line() == "pass  s/n  (3 checks)"


def test_results_obj_shape():
    obj = results_to_obj([CheckResult("s", "n", True, 1)])
    assert obj == [{"suite": "s", "name": "n", "passed": True,
                    "checked": 1, "witness": ""}]


def test_write_csv(tmp_path):
    path = tmp_path / "r.csv"
    write_csv([CheckResult("s", "n", True, 1)], str(path))
    lines = path.read_text().splitlines()
    assert lines[0] == "suite,name,passed,checked,witness"
    assert lines[1] == "s,n,1,1,"


def test_search_delta_reports_honestly():
    report = search_delta_counterexample(samples=4, max_size=5, seed=3,
                                         trunc_n=4)
    assert report["witness"] is None
    assert report["spaces_checked"] == 4 + 7
    assert report["pairs_checked"] > 0
