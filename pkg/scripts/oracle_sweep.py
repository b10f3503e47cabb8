"""Run the invariant suite and both oracles over every quotient of the given groups.

    python3 scripts/oracle_sweep.py A2 B2 G2
Exit status is 1 if any check fails.
"""
import json
import sys
import time

from eqsc.checks import run_checks
from eqsc.parabolic import all_parabolics, build_quotient


def main(groups):
    bad = 0
    for g in groups:
        for dp in all_parabolics(int(g[1:])):
            pq = build_quotient(g, dp)
            for oracle in (None, "billey", "gkm"):
                t = time.perf_counter()
                rep = run_checks(pq, oracle=oracle)
                label = ",".join(str(i + 1) for i in dp) or "-"
                print(f"{g} P={label:6} {oracle or 'suite':7} checked={rep.checked:6} "
                      f"failed={rep.failed} ({time.perf_counter() - t:.2f} s)", flush=True)
                if not rep.ok:
                    bad += 1
                    print(json.dumps(rep.examples[:3], indent=1))
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:] or ["A2", "B2"]))
