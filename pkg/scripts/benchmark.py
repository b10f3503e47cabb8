"""Time full-table computation per quotient, with and without pruning.

    python3 scripts/benchmark.py A2 B2 G2 A3 --no-prune-too
"""
import argparse
import time

from eqsc.engine import EqlrEngine
from eqsc.parabolic import all_parabolics, build_quotient


def bench(group, dp, prune, threads):
    pq = build_quotient(group, dp)
    t = time.perf_counter()
    eng = EqlrEngine(pq, prune=prune, threads=threads)
    eng.ensure_up_to(2 * pq.dim)
    return pq.size, len(eng.table), time.perf_counter() - t


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("groups", nargs="+")
    ap.add_argument("--no-prune-too", action="store_true")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    print(f"{'group':6} {'Delta_P':10} {'|W^P|':>6} {'prune':>6} {'cells':>8} {'sec':>8}")
    for g in args.groups:
        rank = int(g[1:])
        for dp in all_parabolics(rank):
            for prune in (True, False) if args.no_prune_too else (True,):
                size, cells, sec = bench(g, dp, prune, args.threads)
                label = ",".join(str(i + 1) for i in dp) or "-"
                print(f"{g:6} {label:10} {size:6} {str(prune):>6} {cells:8} {sec:8.2f}", flush=True)


if __name__ == "__main__":
    main()
