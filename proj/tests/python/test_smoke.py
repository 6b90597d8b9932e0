import qbf

CAYLEY = """
vertices 2
arrow a1: 1 -> 2
beta 2 2
alpha 1 0
"""

D4 = """
vertices 4
arrow a1: 1 -> 4
arrow a2: 2 -> 4
arrow a3: 3 -> 4
beta 1 1 2 2
alpha 1 1 1 1
"""

D5_DECOMP = """
vertices 5
arrow a1: 2 -> 1
arrow a2: 3 -> 2
arrow a3: 3 -> 4
arrow a4: 2 -> 5
beta 3 6 5 3 4
"""


def test_cayley_slice_and_reflect_agree():
    r1 = qbf.bfn(CAYLEY, method="slice")
    r2 = qbf.bfn(CAYLEY, method="reflect")
    assert r1["ok"] and r2["ok"]
    assert r1["b"]["expanded"] == r2["b"]["expanded"]
    assert r1["b"]["expanded"] == "s^2 + 3*s + 2"


def test_cayley_oracle_verify():
    rep = qbf.verify(CAYLEY, method="slice")
    assert rep["match"]


def test_d4_value():
    r = qbf.bfn(D4)
    assert r["ok"]
    # (s+1)^2 (s+2)^2
    factors = {(tuple(f["coeffs"]), f["shift"]): f["mult"] for f in r["b"]["factors"]}
    assert factors == {((1,), "1"): 2, ((1,), "2"): 2}


def test_decompose_d5():
    d = qbf.decompose(D5_DECOMP, dn_diagram=True)
    summands = {(tuple(root), mult) for root, mult in d["summands"]}
    assert summands == {
        ((1, 1, 1, 1, 0), 1),
        ((0, 1, 1, 1, 1), 2),
        ((1, 2, 1, 0, 1), 1),
        ((1, 1, 1, 0, 1), 1),
    }
    assert "o" in d["diagram"]


def test_info_roots():
    meta = qbf.info(D4)
    assert meta["class"] == "Dynkin"
    assert meta["subtype"] == "D4"
    assert len(meta["positive_roots"]) == 12
    assert meta["weights"][0]["sigma"] == [1, 1, 1, -2]


def test_parse_error():
    import pytest

    with pytest.raises(qbf.InputError):
        qbf.bfn("vertices 2\narrow a1: 1 -> 2\nbeta 1 2\nalpha 1 0\n")
