#!/usr/bin/env python3
"""Survey of skew bracoid equivalence and isomorphism classes over every star
group of order up to 8.

Equivalence classes correspond to transitive subgroups of the holomorph;
isomorphism classes group those by automorphism conjugacy.  Usage:

    python scripts/classify_small.py [--max-n 8]
"""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from bracoid import (  # noqa: E402
    direct_product,
    make_cyclic,
    make_dihedral,
    make_quaternion,
)
from bracoid.classify import enumerate_classes  # noqa: E402

GROUPS = [
    ("C1", make_cyclic(1)),
    ("C2", make_cyclic(2)),
    ("C3", make_cyclic(3)),
    ("C4", make_cyclic(4)),
    ("C2xC2", direct_product(make_cyclic(2), make_cyclic(2))),
    ("C5", make_cyclic(5)),
    ("C6", make_cyclic(6)),
    ("D3", make_dihedral(3)),
    ("C7", make_cyclic(7)),
    ("C8", make_cyclic(8)),
    ("C4xC2", direct_product(make_cyclic(4), make_cyclic(2))),
    ("C2xC2xC2", direct_product(direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2))),
    ("D4", make_dihedral(4)),
    ("Q8", make_quaternion()),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    args = parser.parse_args()

    print(f"{'N':>10} {'|N|':>4} {'classes':>8} {'regular':>8} {'iso':>5} {'time':>7}")
    for name, N in GROUPS:
        if N.order > args.max_n:
            continue
        t0 = time.time()
        records = enumerate_classes(N, name)
        regular = sum(1 for r in records if r.lambda_image_order == N.order)
        iso = len({r.isomorphism_class_id for r in records})
        print(
            f"{name:>10} {N.order:>4} {len(records):>8} {regular:>8} {iso:>5} "
            f"{time.time() - t0:>6.1f}s"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
