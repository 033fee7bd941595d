import json
import subprocess
import sys
import textwrap

import pytest

from orbicheck.cli import (
    Report,
    ReportRow,
    evaluate_scenario,
    main,
    parse_matrix,
    parse_poly,
    parse_report,
    parse_scalar,
    parse_scenario,
    render,
    run_builtin,
    run_examples,
)
from orbicheck.cli.main import builtin_text
from orbicheck.errors import ScenarioError
from orbicheck.exactnum import CycMatrix, CycNum, RatPoly, rotation

GOLDEN_MD = """\
| Example | Suborbifold | Full | Saturated | Split | Image of Orbifold Embedding |
|---|---|---|---|---|---|
| 1 | Yes | Yes | Yes | Yes | Yes |
| 2 | Yes | Yes | Yes | Yes | Yes |
| 3 | Yes | No | Yes | Yes | Yes |
| 4 | Yes | No | Yes | Yes | Yes |
| 5 | Yes | Yes | Yes | No | No |
| 6 | Yes | No | No | Yes | No |
| 7 | Yes | No | Yes | No | No |
| 8 | No | — | — | — | No |
"""

SCREW = textwrap.dedent("""\
    scenario: screw
    charts:
      C2:
        generators: ["diag(i, -1)"]
    subcharts:
      axis:
        chart: C2
        subspace: [[0, 1]]
        expect: [Yes, Yes, Yes, No, No]
    """)


def write(tmp_path, text, name="s.yaml"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


# ---------------------------------------------------------------- expressions

def test_scalar_grammar():
    z8 = CycNum.zeta(8)
    assert parse_scalar("(zeta(8)+zeta(8)^-1)/2") == (z8 + z8 ** -1) / 2
    assert parse_scalar("3/4") == CycNum.rational(3) / 4
    assert parse_scalar("-zeta(3)^2*2") == -2 * CycNum.zeta(3) ** 2
    assert parse_scalar(7) == 7


def test_matrix_builders():
    assert parse_matrix("rotation(4)") == CycMatrix([[0, -1], [1, 0]])
    assert parse_matrix("rotation(8)^2") == rotation(4)
    assert parse_matrix("rotation(8)*rotation(8)") == rotation(4)
    assert parse_matrix("reflection(0)") == CycMatrix.diag([-1, 1])
    assert parse_matrix("reflection(2, 3)") == CycMatrix.diag([1, 1, -1])
    assert parse_matrix("permutation(1, 2, 0)") @ (1, 0, 0) == (0, 1, 0)
    assert parse_matrix("blockdiag(rotation(4), diag(-1))").shape == (3, 3)
    assert parse_matrix([[0, 1], ["1/2", "i"]])[1, 1] == CycNum.zeta(4)


def test_rotation8_entries():
    r = parse_matrix("rotation(8)")
    z = CycNum.zeta(8)
    assert r[0, 0] == (z + z ** -1) / 2


def test_polynomials():
    t = RatPoly.t()
    assert parse_poly("t^2/2") == RatPoly([0, 0, "1/2"])
    assert parse_poly("t - 2/3*t^3") == t - RatPoly.const("2/3") * t ** 3
    assert parse_poly([0, 1, 2]) == t + 2 * t ** 2


@pytest.mark.parametrize("text", ["zeta(8", "foo(2)", "x + 1", "1.5", "rotation(4)"])
def test_bad_scalars(text):
    with pytest.raises(ScenarioError):
        parse_scalar(text)


def test_parse_error_has_position():
    with pytest.raises(ScenarioError) as err:
        parse_scalar("zeta(8")
    assert err.value.line == 1 and err.value.column is not None


# ---------------------------------------------------------------- scenarios

def test_parse_builtin_scenarios():
    for k in range(1, 9):
        scn = parse_scenario(builtin_text(f"example-{k}.yaml"))
        assert scn.name == f"example-{k}"
        assert len(scn.table) == 1


def test_product_and_diagonal():
    scn = parse_scenario(builtin_text("example-7.yaml"))
    assert scn.charts["OxO"].group.order == 16
    shape = scn.subcharts[0].shape
    assert (0, 1, 0, 1) in shape.space


def test_undefined_chart_reference_is_named():
    text = SCREW.replace("chart: C2", "chart: C3")
    with pytest.raises(ScenarioError, match="'C3'") as err:
        parse_scenario(text)
    assert err.value.path == "subcharts.axis.chart"


def test_undefined_product_reference():
    text = SCREW.replace('C2:\n    generators: ["diag(i, -1)"]',
                         'C2:\n    generators: ["diag(i, -1)"]\n  P:\n    product: [C2, Q]')
    with pytest.raises(ScenarioError, match="'Q'"):
        parse_scenario(text)


def test_malformed_yaml_reports_line():
    with pytest.raises(ScenarioError) as err:
        parse_scenario("scenario: x\ncharts: [\n", "bad.yaml")
    assert err.value.line is not None and "bad.yaml" in str(err.value)


def test_bad_vector_length_has_field_path():
    with pytest.raises(ScenarioError) as err:
        parse_scenario(SCREW.replace("[[0, 1]]", "[[0, 1, 0]]"))
    assert err.value.path == "subcharts.axis.subspace[0]"


def test_bad_expected_value():
    with pytest.raises(ScenarioError, match="expected Yes, No or -"):
        parse_scenario(SCREW.replace("No, No]", "No, Maybe]"))


def test_lambda_not_preserving_shape():
    text = SCREW.replace("subspace: [[0, 1]]", "subspace: [[1, 1]]").replace(
        "expect", "lambda: [\"diag(i, -1)\"]\n    expect")
    scn = parse_scenario(text)
    with pytest.raises(ScenarioError, match="subcharts.axis"):
        evaluate_scenario(scn)


def test_yes_no_as_yaml_booleans_and_mapping():
    text = SCREW.replace("expect: [Yes, Yes, Yes, No, No]",
                         "expect: {suborbifold: true, full: yes, saturated: Yes, split: no, embeddable: false}")
    scn = parse_scenario(text)
    assert scn.subcharts[0].expect == ("Yes", "Yes", "Yes", "No", "No")


# ---------------------------------------------------------------- evaluation and reports

def test_evaluate_without_table_gives_one_row_per_subchart():
    res = evaluate_scenario(parse_scenario(SCREW))
    assert [r.label for r in res.rows] == ["screw/axis"]
    assert res.rows[0].verdicts == ("Yes", "Yes", "Yes", "No", "No")
    assert res.records[0].oracle_agrees is True
    assert res.mismatches() == []


def test_aggregate_row_for_rotation_chain():
    (res,) = [r for r in run_builtin() if r.name == "example-6"]
    assert len(res.records) == 3
    assert all(r.verdicts == ("Yes", "No", "No", "Yes", "No") for r in res.records)
    assert res.rows[0].verdicts == ("Yes", "No", "No", "Yes", "No")


def test_run_examples_rows():
    rows = run_examples()
    assert [r.label for r in rows] == [str(k) for k in range(1, 9)]
    assert rows[4].verdicts == ("Yes", "Yes", "Yes", "No", "No")
    assert rows[5].verdicts == ("Yes", "No", "No", "Yes", "No")
    assert rows[7].verdicts == ("No", "—", "—", "—", "No")


def test_render_md_golden():
    assert render(Report(run_examples()), "md") == GOLDEN_MD


def test_render_empty():
    assert render(Report([]), "md").splitlines() == GOLDEN_MD.splitlines()[:2]
    assert render(Report([]), "tsv").count("\n") == 1


def test_tsv_and_md_row_counts_match():
    rep = Report(run_examples())
    md = render(rep, "md").splitlines()
    tsv = render(rep, "tsv").splitlines()
    assert len(md) - 2 == len(tsv) - 1 == 8


def test_unknown_format():
    with pytest.raises(ValueError, match="unknown format"):
        render(Report([]), "html")


def test_json_round_trip_and_fields():
    results = run_builtin()
    rep = Report([r for res in results for r in res.rows], [r for res in results for r in res.records])
    text = render(rep, "json")
    assert render(parse_report(text), "json") == text
    doc = json.loads(text)
    rec = next(r for r in doc["subcharts"] if r["scenario"] == "example-5")
    assert set(rec) == {"scenario", "subchart", "orders", "names", "verdicts", "witness"}
    assert rec["orders"] == {"omega": 2, "lambda": 4, "gamma_p": 2}
    assert rec["names"] == {"omega": "Z2", "lambda": "Z4", "gamma_p": "Z2"}
    assert "no complement" in rec["witness"]


def test_md_escapes_pipes():
    row = ReportRow("a|b", ("Yes",) * 5, "n", "w|x")
    assert "a\\|b" in render(Report([row]), "md", witness=True)


# ---------------------------------------------------------------- command line

def test_check_success(tmp_path, capsys):
    assert main(["check", write(tmp_path, SCREW)]) == 0
    assert "| screw/axis | Yes | Yes | Yes | No | No |" in capsys.readouterr().out


def test_check_mismatch_prints_diff(tmp_path, capsys):
    path = write(tmp_path, SCREW.replace("No, No]", "Yes, Yes]"))
    assert main(["check", path]) == 1
    err = capsys.readouterr().err
    assert "MISMATCH screw/axis: expected Yes/Yes/Yes/Yes/Yes, got Yes/Yes/Yes/No/No" in err


def test_check_parse_error_exit_code(tmp_path, capsys):
    assert main(["check", write(tmp_path, "scenario: [\n")]) == 2
    assert main(["check", str(tmp_path / "missing.yaml")]) == 2
    assert "error:" in capsys.readouterr().err


def test_check_cap_exit_code(tmp_path):
    path = write(tmp_path, SCREW.replace('"diag(i, -1)"', '"rotation(8)"'))
    assert main(["check", path, "--cap", "4"]) == 3


def test_examples_command(capsys):
    assert main(["examples"]) == 0
    assert capsys.readouterr().out == GOLDEN_MD


def test_examples_identical_across_parallelism(capsys):
    main(["examples", "--format", "json"])
    serial = capsys.readouterr().out
    main(["examples", "--format", "json", "--jobs", "3"])
    assert capsys.readouterr().out == serial


def test_explain_screw_axis(tmp_path, capsys):
    assert main(["explain", write(tmp_path, SCREW), "--subchart", "axis"]) == 0
    out = capsys.readouterr().out
    assert "sequence: 1 -> Z2 -> Z4 -> Z2 -> 1 (not split)" in out
    assert "|omega|=2 |lambda|=4 |gamma_p|=2" in out
    assert "non-split certificate" in out


def test_explain_split_case_prints_theta(capsys):
    from importlib import resources
    path = resources.files("orbicheck.cli").joinpath("scenarios", "example-3.yaml")
    assert main(["explain", str(path), "--subchart", "diagonal"]) == 0
    out = capsys.readouterr().out
    assert "theta:" in out and "complete embedding: yes" in out


def test_explain_unknown_subchart(tmp_path):
    assert main(["explain", write(tmp_path, SCREW), "--subchart", "nope"]) == 2


def test_figures_are_written(tmp_path, capsys):
    from importlib import resources
    grid = tmp_path / "grid.png"
    assert main(["examples", "--figure", str(grid)]) == 0
    assert grid.read_bytes()[:4] == b"\x89PNG"
    portrait = tmp_path / "p.png"
    path = resources.files("orbicheck.cli").joinpath("scenarios", "example-4.yaml")
    assert main(["explain", str(path), "--subchart", "touch", "--figure", str(portrait)]) == 0
    assert portrait.read_bytes()[:4] == b"\x89PNG"


def test_console_script_subprocess():
    proc = subprocess.run([sys.executable, "-m", "orbicheck.cli.main", "examples", "--format", "tsv"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0].split("\t")[-1] == "Image of Orbifold Embedding"
