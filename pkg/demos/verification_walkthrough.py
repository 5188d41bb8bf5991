"""Seeded oracle runs that check each characterization against its definition."""
import json
import time

from discountorder.oracle import TrialConfig, patience_instance_count, run_suites

cfg = TrialConfig(seed=42, trials=300, horizon_max=6, grid_denominator=6, instances=1000)
print("patience bank at T=4:", patience_instance_count(4, TrialConfig(seed=42, trials=cfg.instances)))

for name in ("dominance", "serenity", "patience", "relation"):
    start = time.perf_counter()
    rep = run_suites(name, cfg)["suites"][name]
    print(f"{name:<10} passed={rep['passed']}  {time.perf_counter() - start:.2f}s")
    print("   ", json.dumps(rep.get("counts", rep.get("sampled")), default=str))
