"""Run a verification sweep programmatically and emit the JSON report."""
import json

from wittquant import ModularConfig, run_suites

cfg = ModularConfig(p=3, n=2, eta=(1, 1), q=0, seed=0)
reports = run_suites("twist,hopf,restricted,dims", modular_cfg=cfg)

for rep in reports:
    status = "pass" if rep.passed else "FAIL"
    print(f"{rep.suite:<12} {status:<6} {len(rep.checks)} checks in {rep.elapsed_ms} ms")
    for c in rep.checks:
        if c.status != "pass":
            print(f"  {c.name}: {c.status} {c.counterexample or ''}")

payload = [rep.to_json_dict() for rep in reports]
print()
print(json.dumps(payload[0], indent=2)[:400], "...")
