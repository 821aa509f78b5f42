#!/usr/bin/env python3
"""Recomputes report summaries from the raw data in an assertlint JSON report.

usage: check_summaries.py ASSERTLINT_BINARY FIXTURE_DIR
"""
import json
import math
import subprocess
import sys


def type7(xs, p):
    h = (len(xs) - 1) * p
    lo = math.floor(h)
    if lo + 1 >= len(xs):
        return xs[-1]
    return xs[lo] + (h - lo) * (xs[lo + 1] - xs[lo])


def median(xs):
    n = len(xs)
    if n % 2 == 1:
        return xs[n // 2]
    return (xs[n // 2 - 1] + xs[n // 2]) / 2.0


def mean(xs):
    total = 0.0
    for x in xs:
        total = total + x
    return total / len(xs)


def round2(x):
    return math.copysign(math.floor(abs(x * 100.0) + 0.5), x * 100.0) / 100.0


def mode(xs):
    counts = {}
    for x in xs:
        key = round2(x)
        counts[key] = counts.get(key, 0) + 1
    best = max(counts.values())
    return min(k for k, c in counts.items() if c == best)


def expected_summary(values, with_mode):
    xs = sorted(values)
    out = {"n": len(xs)}
    keys = ["min", "q1", "median", "mean", "q3", "max"] + (["mode"] if with_mode else [])
    if not xs:
        for k in keys:
            out[k] = None
        return out
    out.update(min=xs[0], q1=type7(xs, 0.25), median=median(xs), mean=mean(xs), q3=type7(xs, 0.75), max=xs[-1])
    if with_mode:
        out["mode"] = mode(xs)
    return out


def check(report, label):
    failures = 0
    for category, entry in report["readability"].items():
        want = expected_summary(entry["raw_scores"], True)
        for key, value in want.items():
            if entry[key] != value:
                print(f"{label}: readability {category} {key}: report {entry[key]!r}, oracle {value!r}")
                failures += 1
    for metric, entry in report["project_summary"].items():
        want = expected_summary([p[metric] for p in report["projects"]], False)
        for key, value in want.items():
            if entry[key] != value:
                print(f"{label}: project_summary {metric} {key}: report {entry[key]!r}, oracle {value!r}")
                failures += 1
    scored = sum(len(e["raw_scores"]) for e in report["readability"].values())
    if scored == 0:
        print(f"{label}: no scores to check")
        failures += 1
    return failures, scored


def main():
    binary, fixtures = sys.argv[1], sys.argv[2]
    runs = {
        "default": ["scan", "--format", "json", "--per-subdir", fixtures],
        "helpers": ["scan", "--format", "json", "--per-subdir", "--include-helpers", fixtures],
    }
    failures = 0
    for label, args in runs.items():
        proc = subprocess.run([binary] + args, capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"{label}: exit {proc.returncode}: {proc.stderr}")
            failures += 1
            continue
        f, scored = check(json.loads(proc.stdout), label)
        failures += f
        print(f"{label}: checked {scored} scores, {len(json.loads(proc.stdout)['projects'])} projects")
    print("ok" if failures == 0 else f"{failures} mismatches")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
