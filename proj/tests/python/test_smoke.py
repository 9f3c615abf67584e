import json

import filtralab as fl


def test_ideal_arithmetic_and_colength():
    R = fl.Ring(["x", "y"])
    m2 = fl.Ideal(R, [[2, 0], [1, 1], [0, 2]])
    assert m2.colength() == 3
    assert m2.is_m_primary()
    m4 = m2 ** 2
    assert m4 == fl.Ideal(R, [[4, 0], [3, 1], [2, 2], [1, 3], [0, 4]])
    assert (m2 * fl.Ideal(R, [[0, 0]])) == m2


def test_marley_fit():
    R = fl.Ring(["X", "Y", "Z"])
    I = fl.Ideal(R, [[3, 0, 0], [0, 3, 0], [0, 0, 3], [2, 1, 0],
                     [1, 2, 0], [0, 1, 2], [1, 1, 1]])
    F = fl.Filtration.adic([I])
    s = fl.fit(F)
    assert s["e"] == [27, 18, 4, -1]
    assert s["postulation"] == 0
    assert F.hilbert([1]) == 14


def test_ratliff_rush_gap():
    R = fl.Ring(["x", "y"])
    I = fl.Ideal(R, [[4, 0], [3, 1], [1, 3], [0, 4]])
    tilde = fl.ratliff_rush(I)
    assert tilde.contains([2, 2])
    assert tilde == fl.Ideal(R, [[4, 0], [3, 1], [2, 2], [1, 3], [0, 4]])


def test_integral_closure():
    R = fl.Ring(["x", "y"])
    I = fl.Ideal(R, [[3, 0], [0, 3]])
    assert fl.integral_closure(I) == fl.Ideal(
        R, [[3, 0], [2, 1], [1, 2], [0, 3]])
    assert fl.newton_membership([2, 1], I, 1)
    assert not fl.newton_membership([2, 0], I, 1)


def test_checkers():
    R = fl.Ring(["x", "y"])
    m = fl.Ideal(R, [[1, 0], [0, 1]])
    F = fl.Filtration.adic([m])
    assert fl.check_northcott(F)["verdict"] == "verified"
    r = fl.check_huneke_ooishi(F, [m])
    assert r["verdict"] == "verified"
    R3 = fl.Ring(["x", "y", "z"])
    I = fl.Ideal(R3, [[2, 0, 0], [0, 2, 0], [0, 0, 2]])
    assert fl.check_normal_e3(I)["verdict"] == "verified"


def test_quotient_ring_dimension():
    Q = fl.Ring(["x1", "x2", "x3", "x4"], quotient=[[0, 0, 0, 3]], cm=True)
    assert Q.dimension == 3


def test_run_instance_text():
    text = """
ring R = poly(x, y);
ideal I = [x^2, x*y, y^2];
filtration F = adic(I);
task coeffs F expect [4, 1, 0];
task verify northcott F expect verified;
"""
    doc = json.loads(fl.run_instance_text(text))
    assert doc["tool"] == "filtralab"
    assert all(t["status"] == "ok" for t in doc["tasks"])
    assert doc["tasks"][0]["result"]["e"] == ["4", "1", "0"]
