"""Freezes SciPy reference values for the statistics tests.

Run from the repository root:  python3 tests/oracles/make_stats_reference.py
Writes tests/data/stats_reference.json. The C++ tests never import SciPy; they
compare against the values frozen here.
"""
import json
import pathlib

import numpy as np
import scipy
from scipy import stats

rng = np.random.default_rng(20240611)

welch = []
shapes = [
    (100, 100, 10.0, 12.0, 1.0, 1.0),  # means 10 vs 12, sd 1
    (100, 100, 5.0, 5.1, 1.0, 1.0),
    (30, 45, 0.0, 0.3, 1.0, 2.5),
    (12, 8, 100.0, 97.0, 4.0, 9.0),
    (250, 180, 6072.0, 5954.65, 310.0, 290.0),
    (5, 5, 1.0, 1.0, 0.1, 0.1),
    (2, 3, 3.0, 4.0, 1.0, 0.5),
    (60, 60, 22.9, 22.77, 0.8, 0.7),
    (100, 40, -3.0, -2.0, 0.5, 3.0),
    (1000, 999, 0.0, 0.01, 1.0, 1.0),
]
for na, nb, ma, mb, sa, sb in shapes:
    a = rng.normal(ma, sa, na)
    b = rng.normal(mb, sb, nb)
    r = stats.ttest_ind(a, b, equal_var=False)
    welch.append({"a": a.tolist(), "b": b.tolist(), "t": float(r.statistic), "p": float(r.pvalue)})

gauss = rng.normal(50.0, 5.0, 500)
ramp = np.arange(1, 501, dtype=float)
normality = []
for name, xs in [("gaussian500", gauss), ("ramp500", ramp)]:
    r = stats.normaltest(xs)
    normality.append({"name": name, "values": xs.tolist(), "k2": float(r.statistic), "p": float(r.pvalue)})

out = {"generator": f"scipy {scipy.__version__}", "welch": welch, "normality": normality}
path = pathlib.Path("tests/data/stats_reference.json")
path.write_text(json.dumps(out, indent=None))
print("wrote", path, "gaussian p", normality[0]["p"], "ramp p", normality[1]["p"])
