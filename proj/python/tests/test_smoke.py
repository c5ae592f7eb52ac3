import json
import os
import pathlib

import jsonschema
import pytest

import homlink

ROOT = pathlib.Path(__file__).resolve().parents[2]
FIXTURES = pathlib.Path(os.environ.get("HOMLINK_FIXTURES", ROOT / "fixtures"))
SCHEMA = json.loads((ROOT / "schemas" / "report.schema.json").read_text())

EX22 = ["z^3", "x*y*z", "x^3*y", "x^4", "y^6", "y^5*z", "x*y^5"]
EX23 = ["z^3", "x*y*z", "x^3*y", "x^4", "y^6", "y^5*z + x^2*y^4", "x*y^5"]


@pytest.fixture
def ring():
    return homlink.Ring(["x", "y", "z"])


def validate(report):
    jsonschema.Draft202012Validator(SCHEMA).validate(report)


def test_parse_and_ring(ring):
    assert ring.variables == ["x", "y", "z"]
    assert ring.field == "QQ"
    assert homlink.parse(ring, "(x+y)^2") == "x^2 + 2*x*y + y^2"
    with pytest.raises(homlink.ParseError):
        homlink.parse(ring, "x + w")


def test_example_22_invariants(ring):
    I = homlink.Ideal(ring, EX22)
    assert homlink.hilbert(I)["h_vector"] == [1, 3, 6, 8, 7, 6, 2]
    b = homlink.betti(I)
    assert b[(2, 8)] == 2 and b[(2, 9)] == 2 and b[(1, 8)] == 2
    assert homlink.regularity(I) == 6
    assert homlink.height(I) == 3 and homlink.krull_dim(I) == 0
    assert homlink.is_cohen_macaulay(I)
    scan = homlink.monomial_scan(I)
    assert scan["verdict"] == "not-licci"
    assert sorted(scan["fixpoint_sharp"]) == ["x*y^4", "x*z", "y^4*z"]
    assert scan["sharp_height"] == 2


def test_first_link_of_example_23(ring):
    I = homlink.Ideal(ring, EX23)
    assert homlink.mindeg(I) == [3, 4, 6]
    step = homlink.link(I, ["z^3", "x^4", "y^6"])
    assert step["minimal"] and step["back_verified"]
    assert step["target"] == homlink.Ideal(ring, ["z^3", "x^3*y", "x^4", "x^3*z - x*y*z^2", "y^5"])
    assert homlink.quotient(homlink.Ideal(ring, ["z^3", "x^4", "y^6"]), I) == step["target"]
    with pytest.raises(homlink.LinkError):
        homlink.link(I, ["x^3", "y^6", "z^3"])
    assert homlink.find_reg_seq(I, [3, 4, 6], 5) is not None


def test_chain_verify_fixture():
    rep = homlink.chain_verify((FIXTURES / "ex2.3.chain").read_text())
    assert rep["minimally_licci"]
    assert len(rep["steps"]) == 6
    assert all(s["expect_matched"] for s in rep["steps"])
    rep24 = homlink.chain_verify((FIXTURES / "thm2.4.chain").read_text())
    assert rep24["complete"] and not rep24["all_minimal"]
    assert rep24["steps"][0]["min_degrees"] == [3, 3, 6]


def test_construction_small():
    c = homlink.construct_thm32([1, 4, 5, 8], seed=7)
    I = c["ideal"]
    assert homlink.height(I) == 3
    assert homlink.hilbert(I)["degree"] == 28
    assert set(c["forms"]) == {"L1", "L2", "F1", "F2", "F3", "F4"}


@pytest.mark.parametrize(
    "args",
    [
        ["gb", "--ideal", "{fx}/ex2.2.ideal"],
        ["hilbert", "--ideal", "{fx}/ex2.2.ideal", "--max-degree", "8"],
        ["betti", "--ideal", "{fx}/ex2.2.ideal"],
        ["height", "--ideal", "{fx}/ex2.2.ideal"],
        ["mindeg", "--ideal", "{fx}/ex2.2.ideal"],
        ["link", "--ideal", "{fx}/ex2.2.ideal", "--degrees", "3,4,6"],
        ["socle-check", "--ideal", "{fx}/ex2.2.ideal", "--degrees", "3,4,6"],
        ["monomial-scan", "--ideal", "{fx}/ex2.2.ideal"],
        ["chain-verify", "--chain", "{fx}/thm2.4.chain"],
        ["reproduce", "ex2.2", "--fixtures", "{fx}"],
        ["reproduce", "ex2.3", "--fixtures", "{fx}"],
        ["reproduce", "thm2.4", "--fixtures", "{fx}"],
        ["gb", "--ideal", "{fx}/does-not-exist.ideal"],
    ],
)
def test_cli_reports_validate(args):
    args = [a.format(fx=FIXTURES) for a in args]
    code, report, out, _ = homlink.run_cli(["--format", "json"] + args)
    validate(report)
    assert json.loads(out) == report
    assert report["verdict"]["exit_code"] == code
    assert code in (0, 1, 2)


def test_reproduce_exit_codes():
    expected = {"ex2.2": 1, "ex2.3": 0, "thm2.4": 1}
    for rid, code in expected.items():
        got, report, _, _ = homlink.run_cli(["reproduce", rid, "--fixtures", str(FIXTURES)])
        assert got == code, rid
        assert report["results"]["reproduced"] is True


def test_schema_rejects_malformed_report():
    _, report, _, _ = homlink.run_cli(["--format", "json", "height", "--ideal", str(FIXTURES / "ex2.2.ideal")])
    report["schema_version"] = "2.0"
    with pytest.raises(jsonschema.ValidationError):
        validate(report)
    del report["schema_version"]
    with pytest.raises(jsonschema.ValidationError):
        validate(report)
