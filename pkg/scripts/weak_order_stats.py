"""Length distribution, weak-order relations and disjoint-inversion pairs per Weyl group.

    python scripts/weak_order_stats.py A2 B2 G2 A3 B3 C3
"""

import argparse
import collections
import csv
import sys
from dataclasses import dataclass, field

from liebialg.rootsys import build_root_system
from liebialg.weyl import DEFAULT_CAP, WeylGroup


@dataclass
class StatsConfig:
    types: list[str] = field(default_factory=lambda: ["A1", "A2", "B2", "G2", "A3", "B3", "C3"])
    weyl_cap: int = DEFAULT_CAP


def stats(t: str, cap: int) -> dict:
    W = WeylGroup(build_root_system(t), cap)
    els = W.elements
    lengths = collections.Counter(len(w.word) for w in els)
    masks = [W.inversion_mask(w) for w in els]
    disjoint = sum(not (a & b) for a in masks for b in masks)
    relations = sum(bin(W.upper_set_mask(u)).count("1") for u in els)
    return {
        "type": t,
        "order": len(els),
        "pairs": len(els) ** 2,
        "disjoint_pairs": disjoint,
        "weak_relations": relations,
        "involutions": sum(W.is_involution(w) for w in els),
        "poincare": " ".join(str(lengths[k]) for k in range(max(lengths) + 1)),
    }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("types", nargs="*", default=StatsConfig().types)
    p.add_argument("--weyl-cap", type=int, default=DEFAULT_CAP)
    a = p.parse_args(argv)
    cfg = StatsConfig(a.types, a.weyl_cap)
    out = [stats(t, cfg.weyl_cap) for t in cfg.types]
    w = csv.DictWriter(sys.stdout, fieldnames=list(out[0]))
    w.writeheader()
    w.writerows(out)


if __name__ == "__main__":
    main()
