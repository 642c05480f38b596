import pytest

from relclass import campaigns
from relclass.campaigns import (cohn_tower, cross_check_forms, recheck_witness, scan_aac, scan_m_divides_y,
                                stephens_evidence, sweep_theorem_3_1, verify_theorem_1_1)


def test_verify_small():
    res = verify_theorem_1_1(25)
    assert res.passed
    by_f = {it["f"]: it for it in res.items if it["type"] == "prime"}
    assert by_f[2]["h"] == 2 and by_f[23]["h"] == 23
    assert by_f[2]["mechanism"] == by_f[23]["mechanism"] == "unit-in-order"
    assert by_f[5]["mechanism"] == "half-power" and by_f[5]["half_power"]
    four = next(it for it in res.items if it["f"] == 4)
    assert four["via_prime"] == 2 and four["h"] % 2 == 0 and four["h"] > 1


def test_verify_rejects_bad_bound():
    with pytest.raises(ValueError):
        verify_theorem_1_1(1)


def test_scan_small():
    assert [it["m"] for it in scan_m_divides_y(45).items] == []
    assert [it["m"] for it in scan_m_divides_y(2000).items] == [46, 430, 1817]


def test_scan_prefix_and_methods():
    small = [it["m"] for it in scan_m_divides_y(500).items]
    big = scan_m_divides_y(5000)
    assert [m for m in (it["m"] for it in big.items) if m <= 500] == small
    assert big.items == scan_m_divides_y(5000, modular=True).items


def test_aac_small():
    res = scan_aac(100)
    assert res.counts["aac_counterexamples"] == res.counts["mordell_counterexamples"] == 0
    five = next(it for it in res.items if it["p"] == 5)
    assert five["y_mod_p"] == 1


def test_cohn_small():
    res = cohn_tower(3)
    assert res.passed
    assert [it["H_forms"] for it in res.items] == [1, 1, 1]
    res = cohn_tower(4)
    assert res.items[-1]["H_forms"] is None  # 5^9 is above the enumeration cutoff


def test_sweep():
    res = sweep_theorem_3_1(45)
    assert res.passed and res.counts["skipped"] == 0
    ten = next(it for it in res.items if it["m"] == 10)
    assert ten["f"] == 2 and ten["h"] == 1
    res = sweep_theorem_3_1(50)
    assert next(it for it in res.items if it["m"] == 46)["reason"] == "m | y"


def test_witnesses_recheck():
    for it in sweep_theorem_3_1(300).items:
        if it["status"] == "witness":
            assert recheck_witness(it["m"], it["f"])
    assert recheck_witness(10, 5)
    assert not recheck_witness(10, 3)
    assert not recheck_witness(46, 23)


def test_cross_check_small():
    res = cross_check_forms(2000)
    assert res.passed
    pair = next(it for it in res.items if (it["d0"], it["f"]) == (184, 2))
    assert pair["H_forms"] == pair["h_plus_rel"] == 2
    assert all(it["H_forms"] == 1 for it in res.items if it["f"] == 1)


def test_stephens_evidence_small():
    res = stephens_evidence(50, fields=(46, 430, 1817))
    assert res.passed
    assert res.counts["min_h_46"] >= 2
    # conductor 2 is trivial for 1817 since 2 splits there
    assert next(it for it in res.items if (it["m"], it["f"]) == (1817, 2))["h"] == 1


def test_parallel_determinism():
    serial = scan_m_divides_y(3000, jobs=1).items
    assert scan_m_divides_y(3000, jobs=2).items == serial
    assert verify_theorem_1_1(200, jobs=2).items == verify_theorem_1_1(200, jobs=1).items


def test_default_jobs(monkeypatch):
    monkeypatch.setenv("RELCLASS_JOBS", "3")
    assert campaigns.default_jobs() == 3
    monkeypatch.delenv("RELCLASS_JOBS")
    assert campaigns.default_jobs() >= 1
