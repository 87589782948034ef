"""Count irreducible words (a linear basis of the quotient) per (letters, R's) bucket.

    python3 scripts/irreducible_counts.py data/unit2.json --max-deg 5 --max-rdeg 2
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from dataclasses import dataclass

from rbenvelope.reducer import is_irreducible
from rbenvelope.words import deg_r, weight, words_up_to
from rbenvelope.textio import load_algebra


@dataclass
class CountConfig:
    file: str = "data/running.json"
    max_deg: int = 5
    max_rdeg: int = 2


def count(cfg: CountConfig) -> tuple[Counter, Counter]:
    n = load_algebra(cfg.file).n
    irr, total = Counter(), Counter()
    for w in words_up_to(n, cfg.max_deg, cfg.max_rdeg):
        key = (weight(w), deg_r(w))
        total[key] += 1
        irr[key] += is_irreducible(w)
    return irr, total


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("file")
    ap.add_argument("--max-deg", type=int, default=CountConfig.max_deg)
    ap.add_argument("--max-rdeg", type=int, default=CountConfig.max_rdeg)
    cfg = CountConfig(**vars(ap.parse_args(argv)))
    irr, total = count(cfg)
    print("letters  R's  irreducible  words")
    for key in sorted(total):
        print(f"{key[0]:7d}  {key[1]:3d}  {irr[key]:11d}  {total[key]:5d}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
