"""Bounded composition checks over a grid of bounds; writes one JSON line per run.

    python3 scripts/gsb_scan.py data/running.json data/unit2.json --max-deg 4 --max-rdeg 2
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from rbenvelope import build_hat, load_algebra
from rbenvelope.gsb import verify_gsb


@dataclass
class ScanConfig:
    files: list = field(default_factory=lambda: ["data/running.json"])
    max_deg: int = 4
    max_rdeg: int = 2
    jobs: int = 1
    out: str | None = None


def scan(cfg: ScanConfig):
    for path in cfg.files:
        H = build_hat(load_algebra(path))
        for d in range(1, cfg.max_deg + 1):
            for r in range(cfg.max_rdeg + 1):
                t0 = time.perf_counter()
                rep = verify_gsb(H, d, r, jobs=cfg.jobs)
                yield {
                    "file": path, "max_deg": d, "max_rdeg": r,
                    "relations": rep.params["relations"], "compositions": rep.params["compositions"],
                    "failures": len(rep.failures), "seconds": round(time.perf_counter() - t0, 2),
                }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("files", nargs="+")
    ap.add_argument("--max-deg", type=int, default=ScanConfig.max_deg)
    ap.add_argument("--max-rdeg", type=int, default=ScanConfig.max_rdeg)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out")
    cfg = ScanConfig(**vars(ap.parse_args(argv)))
    sink = open(cfg.out, "w") if cfg.out else sys.stdout
    print(json.dumps({"config": asdict(cfg)}), file=sink)
    bad = 0
    for row in scan(cfg):
        bad += row["failures"]
        print(json.dumps(row), file=sink, flush=True)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
