import pytest

import rotary


def test_field_arithmetic():
    phi = (rotary.AlgReal(1) + rotary.sqrt(5)) / rotary.AlgReal(2)
    assert str(phi) == "1/2+1/2*sqrt(5)"
    assert phi * phi == phi + rotary.AlgReal(1)
    assert rotary.AlgReal("sqrt(2)") > rotary.AlgReal("7/5")
    assert abs(float(phi) - 1.6180339887) < 1e-9


def test_rational_angles():
    for c in ["1", "sqrt(3)/2", "sqrt(2)/2", "1/2", "0", "-1/2", "-1"]:
        assert rotary.is_rational_angle(c)
    for c in ["1/3", "4/9", "2/5"]:
        assert not rotary.is_rational_angle(c)
    assert rotary.rational_angle_witness("1/2") == "pi/3"


def test_diameter_and_path():
    d = rotary.diameter("4/5")
    assert d["diameter"] == 3
    assert str(d["t_k"]) == "-44/125"
    e1, e2 = rotary.Point.basis(0), rotary.Point.basis(1)
    path = rotary.witness_path("4/5", e1, e2)
    assert len(path) == 4 and path[0] == e1 and path[-1] == e2
    for a, b in zip(path, path[1:]):
        assert rotary.is_edge("4/5", a, b)
    assert rotary.graph_distance("7/8", e1, e2) == 4


def test_equidistant_and_witness():
    p, q = rotary.Point(1, 0, 0), rotary.Point(0, 1, 0)
    o = rotary.equidistant_point(p, q, "3/5")
    assert rotary.dist_cos(o, p) == rotary.AlgReal("3/5")
    assert rotary.dist_cos(o, q) == rotary.AlgReal("3/5")
    w = rotary.ell_n_witness(p, rotary.ell_n_partner(p, "4/5", 3), "4/5", 3)
    assert w["verified"] and len(w["chain"]) == 4


def test_fixed_point():
    m = rotary.random_rational_orthogonal(7)
    f = rotary.fixed_point(m)
    assert rotary.apply(m, f) == f
    assert rotary.fixed_point([[0, 1, 0], [0, 0, 1], [2, 0, 0]]) is not None


def test_finite():
    assert rotary.orbit_count(["(0 1)"], 4) == 3
    assert rotary.cauchy_frobenius(["(0 1 2 3)"]) == "1"
    assert rotary.jordan_witness(["(0 1 2)"]) == "(0 1 2)"
    v = rotary.rotary_verdict(5, [(i, (i + 1) % 5) for i in range(5)])
    assert v["verified"] and not v["rotarily_transitive"]
    counts = rotary.census_counts(4)
    assert [c["graphs"] for c in counts] == [1, 2, 4, 11]
    assert all(c["rotarily_transitive"] == (1 if c["n"] == 1 else 0) for c in counts)


def test_errors():
    with pytest.raises(rotary.RotaryError, match="negative_sqrt"):
        rotary.AlgReal("sqrt(-1)")
    with pytest.raises(ValueError):
        rotary.diameter("3/2")
