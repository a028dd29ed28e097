import pytest

from qorbit import Letter, apply_letter, arith, make
from qorbit.claims import (
    CLAIMS,
    ClaimReport,
    check_lemma_3_5,
    check_thm_3_6,
    replay,
    run_claim,
    verify_lemma_3_1,
    verify_table1,
    verify_thm_2_4,
    verify_thm_2_8,
)
from qorbit.orbits import enumerate_ambiguous


def test_table1():
    r = verify_table1()
    assert r.status == "confirmed"
    assert r.statistics["matched_rows"] == 8
    assert r.statistics["tau_15"] == 48 and r.statistics["tau_30"] == 80
    assert {"n": 30, "rep": "(0+√30)/1", "length": 24, "word": "(yx)^5(y2x)^2(yx)^5", "ok": True} in r.statistics["rows"]


def test_thm_2_4_small_and_large():
    r = verify_thm_2_4([15, 30, 210])
    assert r.status == "confirmed"
    assert [it["realized"] for it in r.statistics["items"]] == [4, 4, 8]
    assert verify_thm_2_4([1155, 2310]).status == "confirmed"


def test_thm_2_4_n105_refuted_with_replayable_counterexample():
    # three odd primes, but the labels realise only 4 of the 8 sign patterns
    r = verify_thm_2_4([105])
    assert r.status == "refuted"
    assert r.counterexamples[0]["realized"] == 4
    assert replay(r)


def test_thm_2_4_inapplicable_items():
    r = verify_thm_2_4([16, 8])
    assert r.status == "inapplicable"


def test_thm_2_8():
    r = verify_thm_2_8([3, 5, 7])
    assert r.status == "confirmed"
    assert [it["orbits"] for it in r.statistics["items"]] == [2, 2, 2]
    assert verify_thm_2_8([4]).status == "inapplicable"


def test_lemma_3_1():
    r = verify_lemma_3_1([3, 5, 7, 11, 13])
    assert r.status == "confirmed"
    assert verify_lemma_3_1([4]).status == "inapplicable"


def test_lemma_3_1_spot_values():
    # (yx)^2 [0,0,1] = [2,4,1] mod 5; (yx)^3 [0,0,3] = [2,6,3] mod 7
    alpha = make(0, 1, 5)
    for _ in range(2):
        alpha = apply_letter(Letter.YX, alpha)
    assert tuple(v % 5 for v in alpha.triple) == (2, 4, 1)
    alpha = make(0, 3, 21)
    for _ in range(3):
        alpha = apply_letter(Letter.YX, alpha)
    assert tuple(v % 7 for v in alpha.triple) == (2, 6, 3)


def test_lemma_3_5_n7_p3():
    r = check_lemma_3_5(7, 3)
    assert r.status == "refuted"
    assert r.statistics["forward"] == "confirmed"
    assert r.statistics["converse"] == "refuted"
    assert {"alpha": {"a": 0, "b": -7, "c": 1, "n": 7}, "direction": "converse", "legendre_n": 1} in r.counterexamples
    assert replay(r)


def test_lemma_3_5_n15_p3_zero_regime():
    r = check_lemma_3_5(15, 3)
    assert r.statistics["regime"] == "n=0 mod p"
    assert r.statistics["scanned"] == 48
    assert r.status == "confirmed"
    assert r.statistics["converse"] == "inapplicable"


def test_thm_3_6_n7_p3():
    r = check_thm_3_6(7, 3)
    assert r.status == "refuted"
    assert {"alpha": {"a": 1, "b": -3, "c": 2, "n": 7}, "step": "y2x", "labels": [-1, 1]} in r.counterexamples
    assert apply_letter(Letter.YYX, make(1, 2, 7)).triple == (-2, -3, 1)
    assert replay(r)


def test_thm_3_6_regimes():
    assert check_thm_3_6(15, 3).status == "confirmed"
    assert check_thm_3_6(15, 3).statistics["regime"] == "n=0 mod p"
    # 5 is a non-residue mod 3
    assert check_thm_3_6(5, 3).status == "inapplicable"


def test_thm_3_6_zero_regime_has_no_violations():
    for n in range(3, 200):
        for p in arith.odd_prime_factors(n):
            if arith.is_square(n):
                continue
            assert check_thm_3_6(n, p).statistics["violations"] == 0


def test_thm_3_3_small_range():
    r = run_claim("thm3.3", nmax=120)
    assert r.status == "confirmed"
    assert not r.counterexamples


@pytest.mark.parametrize("claim", CLAIMS)
def test_every_claim_runs_and_replays(claim):
    r = run_claim(claim, nmax=60)
    assert isinstance(r, ClaimReport)
    assert r.status in ("confirmed", "refuted", "inapplicable")
    if r.status == "refuted":
        assert r.counterexamples
    assert replay(r)


def test_reports_deterministic():
    assert run_claim("thm3.6").to_json() == run_claim("thm3.6").to_json()
    assert run_claim("illu3.9").to_json() == run_claim("illu3.9").to_json()


def test_parallel_matches_serial():
    serial = run_claim("thm2.4", ns=[15, 30, 105, 210])
    parallel = run_claim("thm2.4", ns=[15, 30, 105, 210], jobs=2)
    assert serial.to_json() == parallel.to_json()


def test_illu_3_9_notes():
    r = run_claim("illu3.9")
    assert r.status == "confirmed"
    checks = {c["check"]: c for c in r.statistics["checks"]}
    assert checks["tau"]["observed"] == 124
    assert checks["l_equation"]["observed"] == "l^2-l-9=0"
    assert checks["k_equation"]["observed"] == "k^2-37=0"
    orders = [c["order"] for c in r.statistics["checks"] if "order" in c]
    assert orders == ["rightmost-first", "rightmost-first", "leftmost-first only", "leftmost-first only"]


def test_counterexamples_are_ambiguous_elements():
    r = check_thm_3_6(7, 3)
    amb = enumerate_ambiguous(7)
    for cx in r.counterexamples:
        assert make(cx["alpha"]["a"], cx["alpha"]["c"], 7) in amb
