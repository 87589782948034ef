"""Normal forms of R(y_b x_b^l) for small l, next to the closed formula.

    python3 scripts/yx_table.py data/running.json --max-l 5
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from rbenvelope import Envelope, load_algebra
from rbenvelope.envelope import yx_sides
from rbenvelope.textio import print_expr


@dataclass
class TableConfig:
    file: str = "data/running.json"
    max_l: int = 5


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("file")
    ap.add_argument("--max-l", type=int, default=TableConfig.max_l)
    cfg = TableConfig(**vars(ap.parse_args(argv)))
    env = Envelope.of(load_algebra(cfg.file))
    status = 0
    for beta in range(1, env.H.n + 1):
        for l in range(cfg.max_l + 1):
            sides = yx_sides(l, beta, env.H)
            direct, closed = env.nf(sides["R(yx^l)"]), env.nf(sides["closed"])
            mark = "ok" if direct == closed else "MISMATCH"
            status |= direct != closed
            print(f"b={beta} l={l} [{mark}]  R(y{beta} x{beta}^{l}) = {print_expr(direct)}")
    return status


if __name__ == "__main__":
    sys.exit(main())
