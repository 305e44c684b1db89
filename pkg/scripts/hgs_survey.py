#!/usr/bin/env python3
"""Hopf-Galois structure counts over the trivial intermediate field, i.e. the
skew braces carried by each group of order up to 8, grouped by star type.

Usage:

    python scripts/hgs_survey.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from bracoid import (  # noqa: E402
    abstract_groups_of_order,
    coset_space,
    enumerate_hgs,
    hgs_isomorphism_classes,
)

from classify_small import GROUPS  # noqa: E402


def main() -> int:
    grand_structures = grand_classes = 0
    for name, G in GROUPS:
        space = coset_space(G, (0,))
        structures = enumerate_hgs(space)
        classes = hgs_isomorphism_classes(space, structures)
        by_type = {}
        for cls in classes:
            star = structures[cls[0]].star
            tname = next(
                t for t, T in abstract_groups_of_order(G.order) if T.is_isomorphic_to(star)
            )
            by_type.setdefault(tname, [0, 0])
            by_type[tname][0] += 1
            by_type[tname][1] += len(cls)
        parts = ", ".join(
            f"{t}: {c[1]} in {c[0]} classes" for t, c in sorted(by_type.items())
        )
        print(f"{name:>10} ({len(structures):3d} structures, {len(classes):2d} classes)  {parts}")
        grand_structures += len(structures)
        grand_classes += len(classes)
    print(f"\ntotal: {grand_structures} structures in {grand_classes} isomorphism classes")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
