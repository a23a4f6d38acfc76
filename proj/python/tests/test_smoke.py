import os
import pathlib

import pytest

import fubench

SOURCE = pathlib.Path(os.environ.get("FUBENCH_SOURCE_DIR", pathlib.Path(__file__).resolve().parents[2]))
STORE = SOURCE / "fixtures" / "store"


def test_constants():
    assert fubench.c_elec() == pytest.approx(1.24e-4, rel=0.01)
    assert fubench.transfer_intensity() == pytest.approx(52.0, rel=0.01)
    f = fubench.EmissionFactors()
    f.grid_intensity = 890.0
    assert fubench.c_elec(f) == pytest.approx(2 * fubench.c_elec())
    assert f.to_dict()["grid_intensity"] == 890.0


def test_breakdown_and_projection():
    c = fubench.emission_breakdown(100.0, 1.0, 10.0)
    assert c.embodied_network_g == pytest.approx(0.21 * c.use_network_g)
    assert c.total_g == pytest.approx(c.use_user_g + c.use_network_g + c.embodied_user_g + c.embodied_network_g)
    p = fubench.scale_projection(0.496, 2e9, 12)
    assert p.annual_saving_t == pytest.approx(11904)
    assert p.flight_equivalents == pytest.approx(11904 / 1.32)
    with pytest.raises(ValueError):
        fubench.scale_projection(0.1, 0, 1)


def test_stats():
    assert fubench.quantile_type7([4, 1, 3, 2], 0.5) == 2.5
    r = fubench.iqr_filter([1, 2, 3, 4, 5, 6, 100])
    assert r["dropped"] == [100]
    assert fubench.iqr_filter(r["retained"])["dropped"] == []
    with pytest.raises(fubench.InsufficientData):
        fubench.iqr_filter([1, 2])
    v = fubench.welch_t_test([1, 2, 3, 4], [2, 3, 4, 5])
    assert v.statistic < 0 and 0 < v.p_value < 1
    assert fubench.normality_check(list(range(500))).significant


def test_compare_fixtures():
    doc = fubench.compare_json(str(STORE), "outlook", "proton", units=["Session"], projections=[(3.5e6, 32000)])
    total = doc["emissions"]["per_unit"]["Session"]["total_g"]
    assert total == pytest.approx(0.106, rel=0.02)
    assert len(doc["emissions"]["projections"]) == 1
    assert fubench.compare(str(STORE), "outlook", "proton", format="csv").startswith("section,unit,key,value\n")
    with pytest.raises(fubench.MissingSeries):
        fubench.compare(str(STORE), "outlook", "proton:adblock", units=["Session"])
    assert fubench.condition_key("lat50+pgp") == "pgp+lat50"
