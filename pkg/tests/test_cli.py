"""CLI contract: exit codes, formats, round-trips, determinism."""

import json
import subprocess
import sys

import pytest

from bundle_census.sweep import (
    BoxTooLarge,
    ResultRecord,
    SweepSpec,
    evaluate_classes,
    parse_bounds,
    run_sweep,
)


def run_cli(*args, env=None):
    import os

    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(
        [sys.executable, "-m", "bundle_census", *args],
        capture_output=True,
        text=True,
        env=full_env,
        timeout=120,
    )


class TestCheckCommand:
    def test_satisfied_exits_zero(self):
        proc = run_cli("check", "--classes", "0,0,0", "--N", "3")
        assert proc.returncode == 0
        assert "satisfied" in proc.stdout

    def test_unsatisfied_exits_one(self):
        proc = run_cli("check", "--classes", "1,1,0", "--N", "3")
        assert proc.returncode == 1
        assert "1/2" in proc.stdout
        assert "NOT integral" in proc.stdout

    def test_integer_root_construction(self):
        proc = run_cli("check", "--classes", "5,6,0", "--N", "3")
        assert proc.returncode == 0

    def test_malformed_classes(self):
        proc = run_cli("check", "--classes", "1,x,3")
        assert proc.returncode == 2
        assert "error" in proc.stderr.lower()

    def test_no_implicit_padding(self):
        proc = run_cli("check", "--classes", "1,1", "--N", "3")
        assert proc.returncode == 2

    def test_defaults_to_length(self):
        proc = run_cli("check", "--classes", "5,6")
        assert proc.returncode == 0


class TestCountCommand:
    def test_count_two_with_note(self):
        proc = run_cli("count", "--rank", "2", "--dim", "3", "--classes", "0,0")
        assert proc.returncode == 0
        assert "count: 2" in proc.stdout
        assert "exactly one" in proc.stdout and "CP^4" in proc.stdout

    def test_odd_first_class(self):
        proc = run_cli("count", "--rank", "4", "--dim", "5", "--classes", "1,0,0,0")
        assert proc.returncode == 0
        assert "count: 1" in proc.stdout

    def test_unsupported_regime(self):
        proc = run_cli("count", "--rank", "3", "--dim", "6", "--classes", "1,2,3")
        assert proc.returncode == 0
        assert "count: unknown" in proc.stdout
        assert "unsupported" in proc.stdout

    def test_nonexistent_tuple_shows_failure(self):
        proc = run_cli("count", "--rank", "2", "--dim", "3", "--classes", "1,1")
        assert proc.returncode == 0
        assert "count: 0" in proc.stdout
        assert "1/2" in proc.stdout

    def test_wrong_class_count(self):
        proc = run_cli("count", "--rank", "2", "--dim", "3", "--classes", "1,2,3,4")
        assert proc.returncode == 2


class TestSweepCommand:
    def test_rank_two_parity_pattern(self):
        proc = run_cli("sweep", "--rank", "2", "--dim", "3",
                       "--bounds", "-2:2,-2:2", "--format", "json")
        assert proc.returncode == 0
        *records, summary = [json.loads(line) for line in proc.stdout.splitlines()]
        assert summary["summary"]["total"] == 25
        for rec in records:
            c1, c2 = rec["classes"]
            assert (rec["count"] == 0) == (c1 * c2 % 2 == 1)

    def test_line_bundle_sweep_all_one(self):
        proc = run_cli("sweep", "--rank", "1", "--dim", "4",
                       "--bounds", "-3:3", "--format", "json")
        *records, summary = [json.loads(line) for line in proc.stdout.splitlines()]
        assert len(records) == 7
        assert all(rec["count"] == 1 for rec in records)
        assert summary["summary"]["count_1"] == 7

    def test_lexicographic_order(self):
        proc = run_cli("sweep", "--rank", "2", "--dim", "3",
                       "--bounds", "0:1,0:1", "--format", "json")
        *records, _ = [json.loads(line) for line in proc.stdout.splitlines()]
        assert [rec["classes"] for rec in records] == [[0, 0], [0, 1], [1, 0], [1, 1]]

    def test_empty_interval_rejected(self):
        proc = run_cli("sweep", "--rank", "2", "--dim", "3", "--bounds", "2:1,0:1")
        assert proc.returncode == 2

    def test_malformed_bounds_rejected(self):
        proc = run_cli("sweep", "--rank", "2", "--dim", "3", "--bounds", "1,2")
        assert proc.returncode == 2

    def test_oversize_box_refused(self):
        proc = run_cli("sweep", "--rank", "2", "--dim", "3",
                       "--bounds", "-2:2,-2:2", "--max-tuples", "10")
        assert proc.returncode == 2
        assert "cap" in proc.stderr

    def test_env_cap_override(self):
        proc = run_cli("sweep", "--rank", "2", "--dim", "3",
                       "--bounds", "-2:2,-2:2", "--format", "csv",
                       env={"BUNDLE_CENSUS_MAX_TUPLES": "10"})
        assert proc.returncode == 2
        proc = run_cli("sweep", "--rank", "2", "--dim", "3",
                       "--bounds", "-2:2,-2:2", "--format", "csv",
                       env={"BUNDLE_CENSUS_MAX_TUPLES": "100"})
        assert proc.returncode == 0

    def test_garbage_env_cap_is_usage_error(self):
        proc = run_cli("sweep", "--rank", "2", "--dim", "3",
                       "--bounds", "0:1,0:1",
                       env={"BUNDLE_CENSUS_MAX_TUPLES": "lots"})
        assert proc.returncode == 2
        assert "BUNDLE_CENSUS_MAX_TUPLES" in proc.stderr

    def test_csv_shape(self):
        proc = run_cli("sweep", "--rank", "2", "--dim", "3",
                       "--bounds", "1:1,1:1", "--format", "csv")
        lines = proc.stdout.splitlines()
        assert lines[0] == "classes,count,regime,failing_r,extension"
        assert lines[1] == "1;1,0,corank_one,3=1/2,false"

    def test_deterministic_across_workers(self):
        args = ("sweep", "--rank", "2", "--dim", "3",
                "--bounds", "-3:3,-3:3", "--format", "json")
        single = run_cli(*args, "--jobs", "1")
        multi = run_cli(*args, "--jobs", "4")
        assert single.returncode == multi.returncode == 0
        assert single.stdout == multi.stdout

    def test_stable_range_sweep(self):
        proc = run_cli("sweep", "--rank", "3", "--dim", "2",
                       "--bounds", "0:1,0:1", "--format", "json")
        *records, _ = [json.loads(line) for line in proc.stdout.splitlines()]
        assert {rec["regime"] for rec in records} == {"stable_range"}


class TestDiagnoseCommand:
    def test_integer_roots_agree(self):
        proc = run_cli("diagnose", "--classes", "5,6,0", "--N", "3")
        assert proc.returncode == 0
        assert "agree" in proc.stdout

    def test_half_value_agrees(self):
        proc = run_cli("diagnose", "--classes", "1,1,0")
        assert proc.returncode == 0
        assert "1/2" in proc.stdout

    def test_zero_case(self):
        proc = run_cli("diagnose", "--classes", "0,0,0")
        assert proc.returncode == 0


class TestRecordRoundTrip:
    def test_json_round_trip(self):
        for classes in [(0, 0), (1, 1), (-3, 5)]:
            rec = evaluate_classes(2, 3, classes)
            again = ResultRecord.from_json_dict(json.loads(json.dumps(rec.to_json_dict())))
            assert again == rec

    def test_unknown_round_trip(self):
        rec = evaluate_classes(3, 6, (1, 2, 3))
        assert rec.count is None
        again = ResultRecord.from_json_dict(json.loads(json.dumps(rec.to_json_dict())))
        assert again == rec

    def test_big_integers_become_strings(self):
        rec = evaluate_classes(2, 3, (2**60, 1))
        data = rec.to_json_dict()
        assert data["classes"][0] == str(2**60)
        assert ResultRecord.from_json_dict(json.loads(json.dumps(data))) == rec


class TestSweepModule:
    def test_tuple_count(self):
        spec = SweepSpec(2, 3, ((-2, 2), (-2, 2)))
        assert spec.tuple_count() == 25

    def test_box_too_large(self):
        spec = SweepSpec(2, 3, ((-2, 2), (-2, 2)), max_tuples=3)
        with pytest.raises(BoxTooLarge):
            list(run_sweep(spec))

    def test_parse_bounds(self):
        assert parse_bounds("-1:2,0:0") == ((-1, 2), (0, 0))
        with pytest.raises(ValueError):
            parse_bounds("1-2")

    def test_wrong_interval_count(self):
        with pytest.raises(ValueError):
            SweepSpec(2, 3, ((-1, 1),))

    def test_parallel_matches_serial(self):
        spec1 = SweepSpec(2, 3, ((-2, 2), (-2, 2)), jobs=1)
        spec4 = SweepSpec(2, 3, ((-2, 2), (-2, 2)), jobs=4)
        assert list(run_sweep(spec1)) == list(run_sweep(spec4))
