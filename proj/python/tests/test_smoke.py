import json

import pytest

import autf


def test_convention_and_generators():
    assert autf.convention().describe() == "x0=standard phi=+1 y-side=positive"
    x0 = autf.eval("x0")
    assert (x0 * x0.inverse()).is_identity()
    assert autf.eval("w0") == autf.eval("y0 z0")
    assert autf.eval("x0")("3") == "4"


def test_json_round_trip():
    g = autf.eval("w0^-4 x1^4 w0^4")
    doc = json.loads(g.to_json())
    assert doc["type"] == "epmap"
    assert autf.EPMap.from_json(g.to_json()) == g
    tree = json.loads(g.tree_json())
    assert tree["type"] == "eptreepair"


def test_tree_route_matches():
    for w in ["x0 w1^-1 y0", "z1 x1^2 w0", "[y0, z1] x0"]:
        assert autf.tree_route(w) == autf.eval(w)


def test_profile_and_membership():
    p = autf.profile(autf.eval("w0^-4 x1^4 w0^4"))
    assert (p["a"], p["b"]) == (0, 31)
    assert autf.membership(autf.eval("x1"))["in_Fx"]
    with pytest.raises(autf.MembershipError):
        autf.profile(autf.eval("y0"))
    with pytest.raises(autf.ParseError):
        autf.eval("q3")


def test_lab():
    rows = autf.rn_sweep(6)
    assert [r["carets"] for r in rows] == [0, 7, 13, 21, 31, 43, 57]
    f_x = autf.relator_suite("F_X")
    assert all(r["pass"] for r in f_x)
    t = {r["relator"]: r for r in autf.relator_suite("T_SET")}
    assert not t["t3"]["pass"] and t["t3"]["witness"] == "x1^-1"
    assert autf.undistortion_check(3)["pass"]
    assert autf.sphere_sizes(3) == [1, 8, 48, 280]
    audit = autf.ball_audit(3)
    assert audit["pass"] and audit["K"] == (5, 1)
    assert len(autf.calibration_survivors()) == 1
    assert autf.calibration_survivors(printed=True) == []
    with pytest.raises(autf.UnknownName):
        autf.relator_suite("NOPE")
