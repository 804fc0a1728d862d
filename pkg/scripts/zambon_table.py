"""Tabulate u_beta and u_-beta for every positive long root.

    python scripts/zambon_table.py A2 B2 G2 F4
"""

import argparse
import csv
import sys
from dataclasses import dataclass, field

from liebialg.bialgebra import Double
from liebialg.chevalley import build_algebra
from liebialg.rootsys import build_root_system
from liebialg.weyl import WeylGroup
from liebialg.zambon import orbit_pairs, reflection_inversions, zambon_as_l


@dataclass
class TableConfig:
    types: list[str] = field(default_factory=lambda: ["A1", "A2", "A3", "B2", "C3", "G2", "F4"])


def rows(cfg: TableConfig):
    for t in cfg.types:
        g = build_algebra(build_root_system(t))
        d, W = Double(g, check=False), WeylGroup(g.root_system)
        for beta in g.root_system.long_positive_roots:
            for sign in (1, -1):
                res = zambon_as_l(d, W, beta, sign)
                yield {
                    "type": t,
                    "beta": " ".join(map(str, beta)),
                    "sign": sign,
                    "inversions": len(reflection_inversions(g, beta)),
                    "orbits": len(orbit_pairs(g, beta)),
                    "dim": res.u.dim,
                    "lambda": str(res.leading_coefficient),
                    "closed_form": res.closed_form_match,
                    "as_l": res.as_l_match,
                    "coisotropic": res.candidate.coisotropic,
                }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("types", nargs="*", default=TableConfig().types)
    cfg = TableConfig(p.parse_args(argv).types)
    writer = None
    for row in rows(cfg):
        if writer is None:
            writer = csv.DictWriter(sys.stdout, fieldnames=list(row))
            writer.writeheader()
        writer.writerow(row)


if __name__ == "__main__":
    main()
