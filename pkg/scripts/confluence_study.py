"""Strategy agreement over several seeds and size bounds.

    python3 scripts/confluence_study.py data/unit2.json --seeds 0 1 2 --samples 500
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field

from rbenvelope import build_hat, load_algebra
from rbenvelope.reducer import confluence_sample


@dataclass
class StudyConfig:
    file: str = "data/unit2.json"
    seeds: list = field(default_factory=lambda: [0, 1, 2])
    samples: int = 500
    bounds: list = field(default_factory=lambda: [(4, 1), (6, 2), (7, 3)])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("file")
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--samples", type=int, default=StudyConfig.samples)
    cfg = StudyConfig(**vars(ap.parse_args(argv)))
    H = build_hat(load_algebra(cfg.file))
    bad = 0
    for d, r in cfg.bounds:
        for seed in cfg.seeds:
            t0 = time.perf_counter()
            rep = confluence_sample(H, cfg.samples, d, r, seed)
            bad += len(rep.failures)
            print(f"deg<={d} rdeg<={r} seed={seed}: {len(rep.failures)} disagreements "
                  f"in {cfg.samples} ({time.perf_counter() - t0:.1f}s)")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
