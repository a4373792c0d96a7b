"""Pilot run fixing the witness-count floor for the G(256, 1/2) end-to-end test.

Uses graph seeds disjoint from the test seeds, records the smallest witness
count seen and stores ``floor = pilot_min - margin`` in tests/data.
"""

import argparse
import json
from pathlib import Path

from distinct_degrees import randomized_witness, random_graph

DATA = Path(__file__).resolve().parent.parent / "tests" / "data" / "witness_target.json"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--first-seed", type=int, default=1000)
    ap.add_argument("--graphs", type=int, default=20)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--margin", type=int, default=2)
    ap.add_argument("--out", type=Path, default=DATA)
    args = ap.parse_args()
    counts = []
    for s in range(args.first_seed, args.first_seed + args.graphs):
        g = random_graph(256, 0.5, s)
        counts.append(randomized_witness(g, args.trials, s).distinct_count)
    record = {
        "n": 256,
        "p": 0.5,
        "graph_seeds": [args.first_seed, args.first_seed + args.graphs - 1],
        "trials": args.trials,
        "pilot_counts": counts,
        "pilot_min": min(counts),
        "margin": args.margin,
        "target": min(counts) - args.margin,
    }
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(record, indent=2) + "\n")
    print(json.dumps(record))


if __name__ == "__main__":
    main()
