import json
import math
import os
import subprocess

import pytest

import landenkit as lk


def test_special_functions():
    assert lk.gauss_2f1(0.5, 0.5, 1.5, 0.25).value == pytest.approx(math.pi / 3, rel=1e-12)
    assert lk.elliptic_k(0.5).value == pytest.approx(1.68575035481259604287, rel=1e-14)
    assert lk.kummer_phi(1, 1, 1).value == pytest.approx(math.e, rel=1e-12)
    assert lk.bessel_u(1, -4, 1).value == pytest.approx(2.27958530233606726744, rel=1e-12)
    assert lk.closed_form("log_form", 0.64) == pytest.approx(0.625 * math.log(9), rel=1e-14)
    assert lk.pochhammer(0.5, 3) == pytest.approx(1.875)


def test_errors_are_typed():
    with pytest.raises(lk.ParamError):
        lk.gauss_2f1(1, 1, 0, 0.5)
    with pytest.raises(lk.DomainError):
        lk.gauss_2f1(1, 1, 1, 1.5)
    with pytest.raises(lk.RegionMismatch):
        lk.sweep_thm21(1, 1, 1, "ineq3")
    assert issubclass(lk.DomainError, lk.Error)


def test_identities_and_regions():
    assert lk.check_identity_first(0.5).rel_residual <= 1e-9
    assert lk.check_transf(1, 0.5, 0.5).rel_residual <= 1e-12
    assert lk.psi_descend(lk.psi_descend(0.37)) == pytest.approx(0.37, abs=1e-15)
    assert lk.classify_thm21(0.1, 0.1, 0.1)["branch"] == "Outside"
    verdict = lk.classify_thm21(0.5, 0.5, 1)
    assert verdict["branch"] == "IncreasingBranch" and verdict["boundary"]
    probe = lk.seq_probe("alpha", 0.1, 0.1, 0.1)
    assert probe["classification"] == "NonMonotone" and probe["first_violation"] == 2


def test_sweeps():
    rep = lk.sweep_thm21(1, 1, 1, "ineq1")
    assert rep.theorem_id == "2.1:ineq1"
    assert len(rep.records) == 97 and rep.n_violations == 0
    assert rep.to_csv().splitlines()[0] == "r,lhs,rhs,margin,verdict"
    data = json.loads(rep.to_json())
    assert data["n_violations"] == 0 and data["params"] == {"a": 1, "b": 1, "c": 1}
    bad = lk.sweep_kummer(1, 1, override_region=True)
    assert bad.records[49].verdict == "Violated"
    assert all(r.verdict == "Holds" for rep in lk.elementary_checks() for r in rep.records)


def test_cli_entry_point():
    code, out, _ = lk.run_cli(["classify", "--theorem", "2.1", "--a", "0.1", "--b", "0.1", "--c", "0.1"])
    assert code == 0 and out.splitlines()[0] == "Outside"
    code, _, _ = lk.run_cli(["sweep", "--theorem", "2.1", "--direction", "ineq3",
                             "--a", "1", "--b", "1", "--c", "1", "--override"])
    assert code == 1


@pytest.mark.skipif("LANDENKIT_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_executable():
    proc = subprocess.run([os.environ["LANDENKIT_CLI"], "eval", "--fn", "2f1", "--a", "0.5", "--b", "0.5",
                           "--c", "1.5", "--x", "0.25"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "value 1.0471975511" in proc.stdout
