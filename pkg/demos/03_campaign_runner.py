"""Reproducible verification campaigns from a JSON config.

A campaign is a list of checks with instances and parameters, plus one
master seed.  Each check gets its own deterministic seed derived from the
master seed and its position, so results do not depend on how many worker
processes run the campaign or in which order checks finish.  The runner
writes one JSON report per check, a summary, and (separately) CSV tables
for plotting.  Exit status: 0 when all hard checks pass, 1 when one
fails, 2 for configuration problems.

Run with:  python3 demos/03_campaign_runner.py
"""

import json
import tempfile
from pathlib import Path

from ncfourier import emit_plot_data, load_config, run_campaign

out_root = Path(tempfile.mkdtemp(prefix="ncfourier_demo_"))
print(f"writing everything under {out_root}")

config_doc = {
    "seed": 42,
    # keep the demo quick; production campaigns use more restarts
    "estimator": {"restarts": 3, "max_iters": 50, "tol": 1e-7},
    "checks": [
        {"check": "lemma_constants", "trials": 200},
        {"check": "inversion_plancherel", "instance": "Q8", "trials": 100},
        {"check": "hausdorff_young", "instance": "Z16", "params": {"p": 1.5}, "trials": 100},
        # a ladder: same check and parameters across growing instances,
        # tied together by a label so the summary fits a slope to them
        {"check": "multiplier_bound", "instance": "Z8", "params": {"p": 1.5, "q": 2.0}, "trials": 25, "ladder": "z"},
        {"check": "multiplier_bound", "instance": "Z16", "params": {"p": 1.5, "q": 2.0}, "trials": 25, "ladder": "z"},
        {"check": "multiplier_bound", "instance": "Z32", "params": {"p": 1.5, "q": 2.0}, "trials": 25, "ladder": "z"},
        # the L1 norms of the lacunary profiles dip once around K = 5,
        # so the growth window starts above it
        {"check": "endpoint", "params": {"k_list": [4, 5, 6, 7, 8, 9, 10, 11, 12], "m": 16384, "growth_window": [8, 12], "min_growth": 0.03}},
    ],
}
config_path = out_root / "campaign.json"
config_path.write_text(json.dumps(config_doc, indent=2))

print()
print("=== run ===")
config = load_config(config_path)
code, summary = run_campaign(config, out_root / "out")
for row in summary["checks"]:
    kind = "hard" if row["hard"] else "mon."
    ratio = "" if row["max_ratio"] is None else f"  max_ratio={row['max_ratio']:.6g}"
    print(f"  [{'ok' if row['passed'] else 'FAIL'}] {row['index']:03d} {row['check']:<22} ({kind}){ratio}")
print(f"exit code {code}; every hard check passed: {summary['all_hard_passed']}")
slope = summary["ladders"]["z"]["slope"]
print(f"ladder 'z' slope {slope:.4f} (bounded means <= {summary['max_bounded_slope']})")

print()
print("=== what lands on disk ===")
for p in sorted((out_root / "out").rglob("*")):
    if p.is_file():
        print(f"  {p.relative_to(out_root)}")

report = json.loads((out_root / "out" / "reports" / "006_endpoint.json").read_text())
print()
print("the endpoint report, trimmed:")
print(f"  check={report['check']} passed={report['passed']} hard={report['hard']}")
for row in report["series"][:3]:
    print(f"  K={row['K']}  l1={row['l1']:.6f}  weak={row['weak_norm']:.1f}")

print()
print("=== determinism ===")
code2, _ = run_campaign(config, out_root / "again")
same = all(
    (out_root / "out" / rel).read_bytes() == (out_root / "again" / rel).read_bytes()
    for rel in [p.relative_to(out_root / "out") for p in (out_root / "out").rglob("*") if p.is_file()]
)
print(f"second run byte-identical: {same}")

print()
print("=== plot tables ===")
written = emit_plot_data(out_root / "out", out_root / "plots")
for name in written:
    print(f"  plots/{name}")
print()
print("head of the ladder table:")
for line in (out_root / "plots" / "ladder_z.csv").read_text().splitlines()[:5]:
    print(f"  {line}")
