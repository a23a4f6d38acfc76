"""Functional-unit energy, traffic and CO2e benchmarking."""

import json

from ._core import (
    EmissionComponents,
    EmissionFactors,
    InsufficientData,
    MissingSeries,
    ScaleProjection,
    TestVerdict,
    c_elec,
    compare,
    condition_key,
    emission_breakdown,
    iqr_filter,
    normality_check,
    quantile_type7,
    scale_projection,
    transfer_intensity,
    welch_t_test,
)


def compare_json(store, baseline, variant, **kwargs):
    """compare() parsed into a dict."""
    return json.loads(compare(store, baseline, variant, format="json", **kwargs))


__all__ = [
    "EmissionComponents",
    "EmissionFactors",
    "InsufficientData",
    "MissingSeries",
    "ScaleProjection",
    "TestVerdict",
    "c_elec",
    "compare",
    "compare_json",
    "condition_key",
    "emission_breakdown",
    "iqr_filter",
    "normality_check",
    "quantile_type7",
    "scale_projection",
    "transfer_intensity",
    "welch_t_test",
]
