from fractions import Fraction

import pytest

import virasoro


def test_singular_vector_level_two():
    (sv,) = virasoro.singular_vectors(Fraction(-22, 5), Fraction(-1, 5), 2)
    assert sv["text"] == "1*L-1^2 - 2/5*L-2"
    assert sv["integral"] == "5*L-1^2 - 2*L-2"


def test_reducibility_degree():
    assert virasoro.reducibility_degree("1/2", "1/16", 4) == 2
    assert virasoro.reducibility_degree("7/3", "-2/9", 4) is None


def test_ppoly_methods_agree():
    args = ("-22/5", "-1/5", "1/3", "2/7")
    assert virasoro.ppoly(*args, method="phi")[0]["coefficients"] == virasoro.ppoly(*args, method="elim")[0]["coefficients"]


def test_verdicts():
    assert virasoro.verdict(0, Fraction(6, 5), Fraction(-22, 5), 0)["status"] == "Reducible"
    assert virasoro.verdict(Fraction(1, 2), Fraction(6, 5), Fraction(-22, 5), 0)["status"] == "Irreducible"
    v = virasoro.verdict(0, "1/2", "1/2", 0)
    assert v["status"] == "Reducible" and "1/2" in v["subquotient_weights"]


def test_fusion_and_tables():
    assert virasoro.fusion(3, 4, 1, 2, 1, 2) == [(1, 1), (2, 1)]  # (1,3) is stored as (2,1)
    table = virasoro.minimal_table(2, 5)
    assert table["c"] == "-22/5" and len(table["labels"]) == 2
    assert len(virasoro.reducible_pairs(3, 4, 1, 2)["reducible_pairs"]) >= 1


def test_oracle_finds_gap():
    ev = virasoro.oracle("-22/5", 0, 0, "6/5", window=4, level_max=6)
    assert ev["kind"] == "EVIDENCE" and any(s["gap"] for s in ev["steps"])


def test_replay_single_case():
    assert "sg-identity" in virasoro.replay_case_ids()
    (case,) = virasoro.replay("sg-identity")
    assert case["pass"]


def test_errors():
    with pytest.raises(ValueError):
        virasoro.verdict("1/0", 0, 0, 0)
    with pytest.raises(ValueError):
        virasoro.fusion(2, 4, 1, 1, 1, 1)
    with pytest.raises(TypeError):
        virasoro.reducibility_degree(0.5, 0)
