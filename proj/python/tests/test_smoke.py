import pytest

import gpea


def test_d4_round_trip():
    d4 = gpea.parse_model("gpea 4\nsum 1 2 3\nsum 2 1 3\n")
    assert len(d4) == 4
    assert d4.top() == 3
    assert d4.oplus(1, 2) == 3
    assert d4.oplus(1, 1) is None
    assert gpea.serialize_model(d4) == "gpea 4\nsum 1 2 3\nsum 2 1 3\n"


def test_invalid_model():
    assert "GPEA4" in gpea.violations("gpea 2\nsum 1 1 0\n")
    with pytest.raises(gpea.InvalidModel):
        gpea.parse_model("gpea 2\nsum 1 1 0\n")


def test_structure():
    d4, v3 = gpea.model_d4(), gpea.model_v3()
    assert len(gpea.exocenter(d4)) == 4
    assert len(gpea.exocenter(v3)) == 2
    assert gpea.center(d4) == [0, 1, 2, 3]
    assert gpea.center(v3) == [0]
    assert gpea.is_cogpea(v3)
    assert gpea.closure_gamma(v3, [1, 2]) == [0, 1, 2]
    assert gpea.fundamental(d4, [0, 1, 2, 3]) == [[0, 1, 2, 3], [0], [0]]


def test_enumeration():
    assert [len(gpea.enumerate_gpeas(n)) for n in range(1, 5)] == [1, 1, 2, 5]
    with pytest.raises(gpea.UsageError):
        gpea.enumerate_gpeas(0)


def test_laws_and_cli():
    ids = gpea.law_ids()
    assert "EXCprop.iv" in ids and "decompos.uniqueness" in ids
    results = gpea.verify_laws(gpea.model_d4(), "d4")
    assert len(results) == len(ids)
    assert all(r["pass"] for r in results)
    with pytest.raises(gpea.UsageError):
        gpea.verify_laws(gpea.chain(2), "e2", ["no-such-law"])
    status, out, _ = gpea.run(["--format", "machine", "enumerate", "--order", "3"])
    assert status == 0
    assert "total=4" in out
