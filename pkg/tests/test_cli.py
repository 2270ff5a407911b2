"""Command-line behavior: exact rendering, schema, routes, and exit codes.

Core claims:
    - every documented invocation produces the documented exact values
    - JSON records share the command/params/results(/consistency) shape and
      all numbers round-trip through Fraction parsing
    - CSV output carries the same rows under a header
    - probabilities must be rational strings; decimals and bad ranges exit 2
    - verification failures exit 1, empty suite selection exits 0
"""

import json
from fractions import Fraction

from pathpairs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def values(record, **match):
    out = []
    for row in record["results"]:
        if all(row.get(k) == v for k, v in match.items()):
            out.append(row)
    return out


def test_nkr_all_routes_consistent(capsys):
    record = run_json(capsys, "nkr", "--n", "3", "--r", "1", "--k", "0", "--method", "all")
    assert record["command"] == "nkr"
    assert record["consistency"] is True
    rows = record["results"]
    assert {row["provenance"] for row in rows} == {"formula-a", "formula-b", "series", "oracle"}
    assert all(row["value"] == "2" for row in rows)


def test_nkr_table_top_entry_from_oracle(capsys):
    record = run_json(capsys, "nkr", "--n", "2", "--r", "1")
    assert [(row["k"], row["value"]) for row in record["results"]] == [("0", "2"), ("1", "2")]
    assert record["results"][0]["provenance"] == "formula-a"
    assert record["results"][1]["provenance"] == "oracle"


def test_nkr_large_frozen_value(capsys):
    record = run_json(
        capsys, "nkr", "--n", "17", "--r", "9", "--k", "5", "--method", "formula-a"
    )
    assert record["results"] == [{"k": "5", "value": "75598380", "provenance": "formula-a"}]


def test_nkr_range_error_exits_2(capsys):
    code, _, err = run(capsys, "nkr", "--n", "3", "--r", "5")
    assert code == 2
    assert "error:" in err


def test_nkr_oracle_cap(capsys):
    code, _, err = run(capsys, "nkr", "--n", "20", "--r", "3", "--method", "oracle")
    assert code == 2
    assert "--unsafe-nmax" in err


def test_mrs_table_with_oracle(capsys):
    record = run_json(capsys, "mrs", "--n", "2", "--r", "0", "--s", "1", "--method", "all")
    assert record["consistency"] is True
    assert values(record, k="0", provenance="formula")[0]["value"] == "1"
    assert values(record, k="1", provenance="oracle")[0]["value"] == "1"


def test_mrs_equal_endpoints_formula_only(capsys):
    record = run_json(capsys, "mrs", "--n", "3", "--r", "1", "--s", "1", "--k", "2")
    assert record["results"][0]["value"] == "4"  # rectangle count at k-1 = 1
    code, _, err = run(capsys, "mrs", "--n", "3", "--r", "1", "--s", "1", "--method", "oracle")
    assert code == 2
    assert "r < s" in err


def test_fnk_probability_field(capsys):
    record = run_json(capsys, "fnk", "--n", "8", "--k", "0")
    row = record["results"][0]
    assert row["value"] == "12870"
    assert Fraction(row["probability"]) == Fraction(12870, 4 ** 8)


def test_fnk_table_round_trips(capsys):
    record = run_json(capsys, "fnk", "--n", "5", "--method", "all")
    assert record["consistency"] is True
    total = sum(Fraction(row["value"]) for row in record["results"] if row["provenance"] == "formula")
    assert total == 4 ** 5


def test_pnk_exact_thirds(capsys):
    record = run_json(capsys, "pnk", "--n", "2")
    assert [row["probability"] for row in record["results"]] == ["1/3", "2/3"]


def test_diag_values(capsys):
    record = run_json(capsys, "diag", "--n", "3")
    assert [(row["k"], row["value"]) for row in record["results"]] == [("0", "4"), ("1", "8")]


def test_avg_exact_and_float(capsys):
    record = run_json(capsys, "avg", "--n", "1")
    row = record["results"][0]
    assert row["value"] == "1/2"
    assert row["value_float"] == 0.5


def test_barrier_all_routes(capsys):
    record = run_json(
        capsys, "barrier", "--a", "1", "--b", "1", "--x", "0", "--p", "1/2", "--method", "all"
    )
    assert record["consistency"] is True
    assert [row["value"] for row in record["results"]] == ["1/2", "1/2", "1/2"]
    assert [row["provenance"] for row in record["results"]] == ["dp", "single-walker", "formula"]


def test_barrier_axis_start_and_corollary_sum(capsys):
    record = run_json(capsys, "barrier", "--a", "0", "--b", "0", "--x", "3", "--p", "2/5")
    assert all(row["value"] == "1" for row in record["results"])
    record = run_json(
        capsys, "barrier", "--a", "2", "--b", "1", "--x", "1", "--p", "1/2", "--method", "formula"
    )
    assert record["results"][0]["value"] == "5/8"


def test_barrier_rejects_decimals_and_bad_ranges(capsys):
    code, _, err = run(capsys, "barrier", "--a", "1", "--b", "1", "--x", "0", "--p", "0.5")
    assert code == 2
    assert "p/q" in err
    code, _, err = run(capsys, "barrier", "--a", "1", "--b", "1", "--x", "0", "--p", "7/5")
    assert code == 2


def test_barrier_level_file(capsys, tmp_path):
    level = tmp_path / "levels.txt"
    level.write_text("1/2\n1/3\n2/7\n")
    record = run_json(
        capsys,
        "barrier", "--a", "1", "--b", "0", "--x", "1",
        "--level-file", str(level), "--method", "all",
    )
    # the closed form needs a constant rate, so only two routes appear
    assert [row["provenance"] for row in record["results"]] == ["dp", "single-walker"]
    assert record["consistency"] is True


def test_barrier_level_file_diagnostics(capsys, tmp_path):
    level = tmp_path / "levels.txt"
    level.write_text("1/2\nnot-a-rational\n")
    code, _, err = run(
        capsys, "barrier", "--a", "1", "--b", "0", "--x", "0", "--level-file", str(level)
    )
    assert code == 2
    assert "levels.txt:2" in err
    code, _, err = run(
        capsys, "barrier", "--a", "1", "--b", "0", "--x", "0",
        "--level-file", str(tmp_path / "missing.txt"),
    )
    assert code == 2


def test_barrier_requires_exactly_one_rate_source(capsys, tmp_path):
    code, _, err = run(capsys, "barrier", "--a", "1", "--b", "0", "--x", "0")
    assert code == 2
    level = tmp_path / "levels.txt"
    level.write_text("1/2\n")
    code, _, err = run(
        capsys, "barrier", "--a", "1", "--b", "0", "--x", "0",
        "--p", "1/2", "--level-file", str(level),
    )
    assert code == 2


def test_bijection_correspondence_table(capsys):
    record = run_json(capsys, "bijection", "--r", "1", "--s", "2")
    assert record["nonmeeting"] == 1
    assert record["one_meeting"] == 2
    assert record["consistency"] is True
    row = record["results"][0]
    assert row["source"] == "NNE|ENN"
    assert {row["image_1"], row["image_2"]} == {"NEN|ENN", "NNE|NEN"}
    record = run_json(capsys, "bijection", "--r", "2", "--s", "2")
    assert record["nonmeeting"] == 3 and record["one_meeting"] == 6
    record = run_json(capsys, "bijection", "--r", "1", "--s", "1")
    assert record["nonmeeting"] == 1 and record["one_meeting"] == 2


def test_verify_all_smoke(capsys):
    from pathpairs.verify import SUITE_NAMES

    record = run_json(capsys, "verify", "--all", "--nmax", "3")
    assert [row["check"] for row in record["results"]] == list(SUITE_NAMES)
    assert all(row["status"] == "pass" for row in record["results"])
    assert record["consistency"] is True


def test_verify_single_suite(capsys):
    record = run_json(capsys, "verify", "--suite", "theorem1", "--nmax", "5")
    assert record["results"][0]["check"] == "theorem1"
    assert record["results"][0]["status"] == "pass"


def test_verify_none_is_empty_success(capsys):
    record = run_json(capsys, "verify", "--suite", "none")
    assert record["results"] == []


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2
    assert "unknown suites" in err


def test_verify_csv_format(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "theorem1", "--nmax", "4", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split(",")[:3] == ["check", "status", "instances"]
    assert lines[1].startswith("theorem1,pass,")


def test_csv_rows_match_json(capsys):
    code, out, _ = run(capsys, "nkr", "--n", "3", "--r", "1", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,value,provenance"
    assert lines[1] == "0,2,formula-a"
    record = run_json(capsys, "nkr", "--n", "3", "--r", "1")
    assert len(lines) - 1 == len(record["results"])


def test_every_emitted_number_round_trips(capsys):
    record = run_json(capsys, "pnk", "--n", "6", "--method", "all")
    for row in record["results"]:
        assert Fraction(row["probability"]) <= 1
        assert Fraction(row["count"]) == Fraction(row["probability"]) * Fraction(924)  # C(12,6)
