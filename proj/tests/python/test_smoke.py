import pytest

import legch


def render(poly):
    if not poly["terms"]:
        return "0"
    return " + ".join("*".join(w) if w else "1" for w in poly["terms"])


def test_trefoil_differential():
    d = legch.dga(torus=(3, 2), names="position")["differential"]
    assert render(d["a_1"]) == "1 + b_1 + b_3 + b_1*b_2*b_3"
    assert render(d["a_2"]) == "b_2 + b_1*b_2 + b_2*b_3 + b_2*b_3*b_1*b_2"


def test_unknot_and_bad_letter():
    assert render(legch.dga(strands=1, word="")["differential"]["a_1"]) == "0"
    with pytest.raises(ValueError):
        legch.dga(strands=2, word="3")


def test_augmentation_of_torus_3_4():
    a = legch.augment(torus=(3, 4))
    assert [(c["label"], c["position"]) for c in a["augmentation"]] == [
        ("(1,1,1)", 3),
        ("(2,1,1)", 5),
        ("(3,1,1)", 7),
    ]
    assert a["checks"]["ok"]
    assert "style=dashed" in legch.augment_dot(torus=(3, 4))


def test_pure_braid_has_empty_augmentation():
    assert legch.augment(strands=2, word="1,1")["augmentation"] == []


def test_orbit_period():
    r = legch.orbit(3, 4)
    assert r["minimal_period"] == 7
    assert legch.minimal_period(r["sequence"]) == 7


def test_monodromy_maps_agree():
    assert legch.closed_form_mu(3, 2) == legch.period_composition(3, 2)
    assert legch.identities(2, 3)["all_hold"]


def test_sequences():
    assert legch.count_D(5) == 1806
    assert len(legch.enumerate_D(3)) == 6


def test_certify():
    r = legch.certify(torus=(2, 3))
    assert r["summary"]["failed"] == 0
    assert any(c["name"] == "order" and "order 5" in c["details"] for c in r["checks"])
    with pytest.raises(ValueError):
        legch.certify(torus=(2, 4))
    small = legch.certify(torus_range=4, config={"workers": 1})
    assert small["summary"]["failed"] == 0


def test_moves_are_chain_maps():
    moves = legch.toy_moves()
    assert [m["name"] for m in moves] == ["III_a", "III_b", "II^-1", "II"]
    assert all(m["chain_map"] for m in moves)


def test_invariants():
    inv = legch.closure_invariants(torus=(3, 2))
    assert inv["tb"] == 1 and inv["rotation"] == 0
