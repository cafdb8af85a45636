import json
from pathlib import Path

import jsonschema

from ckforms.cli import main

from helpers import FIXTURES

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "report-schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    # round-trip: parse -> re-emit -> byte-identical
    assert json.dumps(report, indent=2, sort_keys=True) + "\n" == out
    return code, report


def test_info_examples(capsys):
    code, report = run_json(capsys, "info", "sl(7,R)")
    assert code == 0
    part = report["details"]["parts"][0]
    assert part["real_rank"] == 6 and part["ahyp_rank"] == 3

    code, report = run_json(capsys, "info", "so(3,3)")
    assert code == 0
    part = report["details"]["parts"][0]
    assert part["restricted_system"] == "D3" and part["ahyp_rank"] == 2


def test_info_parse_error_exit_2(capsys):
    assert main(["info", "so(1,1)"]) == 2
    assert main(["info", "not-an-algebra"]) == 2


def test_table1_rows(capsys):
    code, report = run_json(capsys, "table1", "2")
    assert code == 0
    assert report["verdict"] == "Complete"
    rows = {r["algebra"]: r for r in report["details"]["rows"]}
    assert (rows["sl(5,R)"]["ahyp_rank"], rows["sl(5,R)"]["real_rank"]) == (2, 4)
    assert (rows["so(5,5)"]["ahyp_rank"], rows["so(5,5)"]["real_rank"]) == (4, 5)
    assert (rows["su*(6)"]["ahyp_rank"], rows["su*(6)"]["real_rank"]) == (1, 2)
    assert all(c["passed"] for c in report["checks"])


def test_table1_kmax_validation(capsys):
    assert main(["table1", "0"]) == 2


def test_check_proper_catalog(capsys):
    code, report = run_json(capsys, "check-proper", "sl(11,R)", "so(4,7)", "so(5,5)")
    assert code == 0
    assert report["verdict"] == "ObstructionFound"
    by_name = {c["name"]: c for c in report["checks"]}
    assert not by_name["ahyp_rank"]["passed"]
    assert by_name["ahyp_rank"]["lhs"] == 8 and by_name["ahyp_rank"]["rhs"] == 5


def test_check_proper_embedded(capsys):
    code, report = run_json(
        capsys, "check-proper", "--system", "A,4",
        "--ah", str(FIXTURES / "a4_ah.vec"), "--al", str(FIXTURES / "a4_al_meets.vec"))
    assert code == 0
    assert report["verdict"] == "NotProper"
    assert report["witnesses"][0]["vector"] == ["1", "0", "0", "0", "-1"]

    code, report = run_json(
        capsys, "check-proper", "--system", "A,4",
        "--ah", str(FIXTURES / "a4_ah.vec"), "--al", str(FIXTURES / "a4_al_clear.vec"))
    assert code == 0
    assert report["verdict"] == "Proper"
    assert report["witnesses"] == []


def test_check_proper_cap_exit_3(capsys):
    code = main(["check-proper", "--system", "F,4", "--cap", "100",
                 "--ah", str(FIXTURES / "f4_h.vec"), "--al", str(FIXTURES / "f4_l.vec")])
    assert code == 3


def test_check_proper_usage_errors(capsys):
    assert main(["check-proper", "sl(3,R)"]) == 2
    assert main(["check-proper", "--system", "A,4"]) == 2
    assert main(["check-proper", "--system", "Q,9",
                 "--ah", str(FIXTURES / "a4_ah.vec"),
                 "--al", str(FIXTURES / "a4_al_meets.vec")]) == 2
    assert main(["check-proper", "--system", "A,4",
                 "--ah", "/nonexistent/file.vec",
                 "--al", str(FIXTURES / "a4_al_meets.vec")]) == 2


def test_standard_form_verdicts(capsys):
    code, report = run_json(capsys, "standard-form", "sl(11,R)", "so(4,7)")
    assert code == 0
    assert report["verdict"] == "NoStandardForm"
    assert report["details"]["required_d"] == 37
    assert report["details"]["max_achievable"] == 30
    assert report["witnesses"] == []

    code, report = run_json(capsys, "standard-form", "sl(13,R)", "sp(5,R)")
    assert code == 0
    assert report["verdict"] == "NoStandardForm"

    code, report = run_json(capsys, "standard-form", "sl(9,R)", "so(3,6)")
    assert code == 0
    assert report["verdict"] == "Inconclusive"
    assert any(w["parts"] == ["e6(-26)"] for w in report["witnesses"])


def test_standard_form_degenerate_exit_2(capsys):
    assert main(["standard-form", "sl(3,R)", "so(4,7)"]) == 2


def test_verdict_never_changes_exit_code(capsys):
    assert main(["check-proper", "sl(11,R)", "so(4,7)", "so(5,5)"]) == 0
    assert main(["check-proper", "sl(11,R)", "so(4,7)", "e6(-26)"]) == 0
    assert main(["standard-form", "sl(9,R)", "so(3,6)"]) == 0


def test_output_is_deterministic(capsys):
    runs = []
    for _ in range(2):
        code, out = run(capsys, "standard-form", "sl(11,R)", "so(4,7)", "--json")
        assert code == 0
        runs.append(out)
    assert runs[0] == runs[1]
    runs = []
    for _ in range(2):
        code, out = run(capsys, "check-proper", "--system", "A,4",
                        "--ah", str(FIXTURES / "a4_ah.vec"),
                        "--al", str(FIXTURES / "a4_al_meets.vec"))
        assert code == 0
        runs.append(out)
    assert runs[0] == runs[1]


def test_human_output_mentions_verdict(capsys):
    code, out = run(capsys, "standard-form", "sl(11,R)", "so(4,7)")
    assert code == 0 and "verdict: NoStandardForm" in out
    code, out = run(capsys, "info", "sl(7,R)")
    assert code == 0 and "a-hyperbolic rank : 3" in out
