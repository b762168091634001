import json
import os
from pathlib import Path

import pytest

import l2bs

DATA = Path(os.environ.get("L2BS_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def test_describe_group():
    g = l2bs.describe_group("SO,3,3")
    assert (g["dim_x"], g["deficiency"], g["q"]) == (9, 1, 4)


def test_olbrich_profile():
    p = l2bs.olbrich_profile(14, 2)
    assert sorted(p["alpha"]) == ["7", "8"]
    assert p["alpha"]["7"]["value"] == 2


def test_restrict_unitary_type():
    r = l2bs.restrict(str(DATA / "indices" / "su31_type.json"))
    assert r["type"] == "BC1"
    assert [(x["coeffs"], x["multiplicity"]) for x in r["positive"]] == [([1], 4), ([2], 1)]


def test_restrict_from_dict():
    idx = {"base": {"type": "G", "rank": 2}, "orbits": [[1], [2]], "distinguished": [[1], [2]]}
    assert l2bs.restrict(idx)["type"] == "G2"
    assert len(l2bs.parabolics(idx)) == 4


def test_ns_bound_and_certificate():
    r = l2bs.ns_bound(str(DATA / "indices" / "gp_so33.json"))
    assert r["bound"] == 4
    assert any(step["rule"] == "betti-witness" for step in r["certificate"])


def test_errors_map_to_exceptions():
    with pytest.raises(l2bs.PreconditionFailed):
        l2bs.ns_bound(str(DATA / "indices" / "su31_type.json"))
    with pytest.raises(l2bs.CertificateFailure) as exc:
        l2bs.ns_bound(str(DATA / "indices" / "gp_so33.json"), levi="SO,3,2")
    assert exc.value.code == "dim_mismatch"
    with pytest.raises(l2bs.InvalidInput):
        l2bs.describe_group("SL,1")
    assert issubclass(l2bs.InvalidInput, l2bs.Error)


def test_torsion_and_corners():
    assert l2bs.torsion_verdict("SO,3,1")["constant"]["coefficient"] == "-1/6"
    assert sum(s["contribution"] for s in l2bs.corner_strata(4)) == 0


def test_density_circle():
    r = l2bs.estimate_density("builtin:circle", 0, samples=20000, workers=2)
    assert 0.45 <= r["novikov_shubin"]["value"] <= 0.55
    again = l2bs.estimate_density("builtin:circle", 0, samples=20000, workers=1)
    assert again["estimate"]["density"] == r["estimate"]["density"]


def test_qforms():
    assert l2bs.isotropy("1,1,-2")["witness"] == [1, 1, 1]
    rep = l2bs.pipeline(7)
    assert rep["invariant"]["bound"] == 4
    assert rep["invariant"]["restricted_type"] == "A1"


def test_run_cli():
    code, out, err = l2bs.run_cli(["corner", "strata", "--l", "2"])
    assert code == 0 and err == ""
    assert json.loads(out)["results"]["count"] == 4
