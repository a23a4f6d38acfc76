#!/usr/bin/env python3
"""Writes fixtures/store: per-run results whose series means equal the
reference session means for each mail service and condition.

Each series holds 100 designed runs, 3 runs with inflated machine energy and
2 failed runs. Duration and power patterns are orthogonal, so the mean of
energy/duration equals mean energy / mean duration.
"""

import argparse
import json
import pathlib

import numpy as np
from scipy.stats import norm

N = 100
SHARES = {
    "Login": 0.14,
    "NoAttachment": 0.16,
    "Attachment": 0.22,
    "Read": 0.09,
    "Reply": 0.15,
    "Delete": 0.03,
    "Logout": 0.10,
}
ORDER = ["Login", "NoAttachment", "Attachment", "Read", "Reply", "Read", "Delete", "Logout"]

# (service, condition key): session energy J, duration s, network MB
SESSIONS = {
    ("outlook", "baseline"): (6072.0, 265.2, 15.12),
    ("outlook", "adblock"): (5954.65, 261.51, 13.85),
    ("gmail", "baseline"): (6281.0, 275.0, 16.5),
    ("proton", "baseline"): (5563.0, 235.0, 7.0),
    ("selfhosted", "baseline"): (4104.0 / 1.1346, 152.494, 6.5),
    ("selfhosted", "pgp"): (4104.0, 180.0, 13.2171),
    ("selfhosted", "lat50"): (3641.0, 154.98, 6.55),
    ("selfhosted", "pgp+lat50"): (4128.0, 187.0, 13.3),
}

SD_DURATION = 0.03
SD_POWER = 0.02
SD_NETWORK = 0.04


def condition_json(key):
    c = {"adblock": False, "tracking_profile": "permissive", "pgp": False, "injected_latency_ms": 0}
    if key != "baseline":
        for part in key.split("+"):
            if part == "adblock":
                c["adblock"] = True
            elif part == "restrictive":
                c["tracking_profile"] = "restrictive"
            elif part == "pgp":
                c["pgp"] = True
            elif part.startswith("lat"):
                c["injected_latency_ms"] = int(part[3:])
    return c


def iqr_keep(x):
    keep = np.arange(len(x))
    while True:
        v = x[keep]
        q1, q3 = np.quantile(v, [0.25, 0.75])
        lo, hi = q1 - 1.5 * (q3 - q1), q3 + 1.5 * (q3 - q1)
        nxt = keep[(v >= lo) & (v <= hi)]
        if len(nxt) == len(keep):
            return keep
        keep = nxt


def unit_pattern(rng):
    base = norm.ppf((np.arange(N) + 0.5) / N)
    return (base - base.mean()) / base.std()


def patterns(rng):
    """Unit-sd, zero-mean duration/power/network patterns; power orthogonal to duration."""
    while True:
        z = rng.permutation(unit_pattern(rng))
        w = rng.permutation(unit_pattern(rng))
        w = w - w.mean() - (w @ z) / (z @ z) * z
        w = w / w.std()
        v = rng.permutation(unit_pattern(rng))
        energy = (1 + SD_DURATION * z) * (1 + SD_POWER * w)
        if len(iqr_keep(energy)) == N:
            return z, w, v


def build_series(service, key, energy, duration, mb, rng, t0):
    z, w, v = patterns(rng)
    power = energy / duration
    runs = []
    t = t0
    for i in range(N + 5):
        run_id = f"{service}-{key}-{i:03d}"
        kind = "designed" if i < N else ("hot" if i < N + 3 else "failed")
        j = i if i < N else i - N
        session_s = duration * (1 + SD_DURATION * z[j])
        session_w = power * (1 + SD_POWER * w[j])
        session_mb = mb * (1 + SD_NETWORK * v[j])
        if kind == "hot":
            session_w *= 3.0
        results = []
        cursor = t
        spans = {}
        for name in ORDER:
            span_ns = int(round(session_s * SHARES[name] * 1e9))
            if name not in spans:
                spans[name] = (cursor, cursor + span_ns)
            cursor += span_ns + 1000
        session_start = t
        session_end = t + int(round(session_s * 1e9))
        for name in list(SHARES) + ["Session"]:
            share = 1.0 if name == "Session" else SHARES[name]
            start, end = (session_start, session_end) if name == "Session" else spans[name]
            secs = (end - start) / 1e9
            e = session_w * secs
            r = {
                "unit": name,
                "run_id": run_id,
                "started_at_ns": start,
                "ended_at_ns": end,
                "energy_j": {"machine": e, "cpu": 0.4 * e, "memory": 0.05 * e},
                "network_bytes": session_mb * share * 1e6,
            }
            if kind == "failed":
                r["error"] = "step 9 (line 21, click #send): timeout after 10000 ms waiting for #send"
                if name not in ("Attachment", "Session"):
                    r["error"] = "run invalid: step 9 (line 21, click #send) failed"
            results.append(r)
        runs.append(results)
        t = session_end + 2_000_000_000
    return runs, t


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "store"))
    ap.add_argument("--seed", type=int, default=5563)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    root = pathlib.Path(args.out)
    t = 1_000_000_000_000
    for (service, key), (energy, duration, mb) in SESSIONS.items():
        runs, t = build_series(service, key, energy, duration, mb, rng, t)
        d = root / service / key
        d.mkdir(parents=True, exist_ok=True)
        header = {"schema": "fubench.results", "version": 1, "service": service, "condition": condition_json(key)}
        with open(d / "results.jsonl", "w") as f:
            f.write(json.dumps(header, separators=(",", ":")) + "\n")
            for results in runs:
                for r in results:
                    f.write(json.dumps(r, separators=(",", ":")) + "\n")
        print(f"{service}/{key}: {len(runs)} runs")


if __name__ == "__main__":
    main()
