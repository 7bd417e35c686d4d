import csv
import io
import json

import pytest

from theta_forge.errors import ParameterDomain, UnknownCheck
from theta_forge.identities import (
    CSV_HEADER,
    REGISTRY,
    CheckReport,
    check_names,
    run_check,
    run_suite,
    suite_plan,
    threshold_scan,
)


class TestRunCheck:
    """Single registry rows."""

    def test_conj43_theorem_range(self):
        r = run_check("conj43", {"S": 1, "R": 3, "k": 3}, 300)
        assert r.status == "pass" and r.tag == "theorem"
        assert r.range == (0, 300)

    def test_conj43_conjecture_range(self):
        r = run_check("conj43", {"S": 2, "R": 5, "k": 9}, 250)
        assert r.tag == "conjecture" and r.passed

    def test_tgen(self):
        assert run_check("tgen", {"m": 5, "s": 1}, 150).passed

    def test_b6_remark(self):
        r = run_check("b6_strict_remark", {"k": 1}, 100)
        assert r.passed
        assert r.extra["equality_at"][0] >= 2

    def test_b6_remark_k2(self):
        r = run_check("b6_strict_remark", {"k": 2}, 60)
        assert r.extra["equality_at"][:5] == [7, 8, 9, 10, 11]

    @pytest.mark.parametrize("name,params", [
        ("euler_pentagonal", {}),
        ("shanks_trunc", {"k": 2}),
        ("wang_yee_nonneg", {"R": 5, "S": 2, "m": 3}),
        ("ak_yk", {"S": 2, "R": 4, "k": 1}),
        ("a13_b3", {"k": 2, "n_max": 30}),
        ("conj_2s", {"k": 3}),
        ("cor_bq", {}),
        ("b3_thm", {"k": 2}),
        ("staircase_id", {"m": 4, "s": 3}),
        ("kmr38", {"a": 3}),
        ("wsf1", {}),
        ("wsf2", {}),
        ("tplus_nonneg", {"R": 5, "S": 1, "k": 2}),
        ("tminus_nonpos", {"R": 5, "S": 1, "k": 2}),
        ("merca_u", {"xi": "g", "S": 2, "sign": 1, "k": 1, "n_max": 25}),
    ])
    def test_rows_pass(self, name, params):
        r = run_check(name, params, 120)
        assert r.passed, r.witness

    def test_kmr38_support(self):
        r = run_check("kmr38", {"a": 1}, 40)
        from math import isqrt
        assert r.extra["support"] == [j for j in range(41) if isqrt(16 * j + 1) ** 2 == 16 * j + 1]
        assert r.extra["support"][:4] == [0, 3, 5, 14]

    def test_conj615_third_fails_with_witness(self):
        r = run_check("conj615_third", {"R": 2, "S": 1, "k": 1}, 50)
        assert r.status == "fail" and r.tag == "conjecture"
        assert r.witness["index"] == 0
        assert r.extra["nonpositive"] is True

    def test_merca_u_minus_fails(self):
        r = run_check("merca_u", {"xi": "g", "S": 1, "sign": -1, "k": 1, "n_max": 10}, 50)
        assert r.status == "fail" and r.witness["index"] == 3

    def test_unknown(self):
        with pytest.raises(UnknownCheck):
            run_check("nope", {})

    def test_bad_params(self):
        with pytest.raises(ParameterDomain):
            run_check("conj43", {"S": 2, "R": 4})
        with pytest.raises(ParameterDomain):
            run_check("conj43", {"S": 2, "R": 4, "k": 1, "z": 1})
        with pytest.raises(ParameterDomain):
            run_check("conj43", {"S": 5, "R": 4, "k": 1})
        with pytest.raises(ParameterDomain):
            run_check("tgen", {"m": 3, "s": "x"})


class TestThreshold:
    """Eventual non-negativity of the c_k family."""

    def test_k1_is_zero(self):
        r = threshold_scan("ck_threshold", {"k": 1}, 100)
        assert r.status == "threshold" and r.threshold == 0

    @pytest.mark.parametrize("k,n0", [(2, 1), (3, 9), (4, 21), (5, 9), (6, 29)])
    def test_values(self, k, n0):
        assert threshold_scan("ck_threshold", {"k": k}, 400).threshold == n0

    def test_vacuous_range(self):
        r = threshold_scan("ck_threshold", {"k": 4}, 20)
        assert r.status == "fail"
        assert r.witness["index"] == 20

    def test_other_rows_rejected(self):
        with pytest.raises(UnknownCheck):
            threshold_scan("tgen", {"m": 3, "s": 1})


class TestSuite:
    """Tag selection and batch runs."""

    def test_none(self):
        assert run_suite("none") == []
        assert suite_plan([]) == []

    def test_plan_covers_registry(self):
        assert {name for name, _ in suite_plan("all")} == set(check_names()) == set(REGISTRY)

    def test_tags_partition_plan(self):
        assert len(suite_plan("theorems")) + len(suite_plan("conjectures")) == len(suite_plan("all"))

    def test_bad_tag(self):
        with pytest.raises(ParameterDomain):
            suite_plan("maybe")

    def test_small_conjecture_run(self):
        seen = []
        out = run_suite("conjectures", 30, progress=seen.append)
        assert out == seen
        assert all(r.tag == "conjecture" for r in out)
        failing = {r.name for r in out if not r.passed}
        assert failing == {"conj615_third"}


class TestReport:
    """Serialisation of check reports."""

    def test_json(self):
        r = run_check("conj615_third", {"R": 3, "S": 1, "k": 1}, 20)
        d = json.loads(r.to_json())
        assert d["status"] == "fail" and d["witness"]["index"] == 1
        assert d["params"] == {"R": 3, "S": 1, "k": 1}

    def test_csv(self):
        r = run_check("tgen", {"m": 3, "s": 1}, 20)
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(CSV_HEADER)
        w.writerow(r.csv_row())
        rows = list(csv.reader(io.StringIO(buf.getvalue())))
        assert rows[1][0] == "tgen"
        assert len(rows[0]) == len(rows[1])

    def test_fail_needs_witness(self):
        with pytest.raises(ValueError):
            CheckReport("x", {}, (0, 1), "fail")
