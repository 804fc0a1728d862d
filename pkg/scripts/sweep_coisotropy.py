"""Sweep l_{V,u,v} over every (u, v) and the V battery, one CSV row per type.

    python scripts/sweep_coisotropy.py A1 A2 B2 G2 --seed 0
"""

import argparse
import csv
import sys
import time
from dataclasses import dataclass, field

from liebialg.verify import Context, suite_coisotropy, suite_s_criterion, suite_z_criterion


@dataclass
class SweepConfig:
    types: list[str] = field(default_factory=lambda: ["A1", "A2", "B2", "G2"])
    seed: int = 0
    with_s: bool = True
    with_z: bool = True


def sweep(cfg: SweepConfig):
    for t in cfg.types:
        ctx = Context(t, cfg.seed)
        start = time.perf_counter()
        res = suite_coisotropy(ctx)
        row = {
            "type": t,
            "weyl_order": len(ctx.W.elements),
            "battery": len(ctx.battery),
            "candidates": res.notes["candidates"],
            "coisotropic": res.notes["coisotropic_candidates"],
            "l_failures": res.failures,
        }
        if cfg.with_s:
            row["s_failures"] = suite_s_criterion(ctx).failures
        if cfg.with_z:
            z = suite_z_criterion(ctx)
            row["z_failures"] = z.failures
            row["z_counterexample"] = z.notes["converse_counterexample"] or ""
        row["seconds"] = round(time.perf_counter() - start, 2)
        yield row


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("types", nargs="*", default=SweepConfig().types)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-s", action="store_true")
    p.add_argument("--no-z", action="store_true")
    a = p.parse_args(argv)
    cfg = SweepConfig(a.types, a.seed, not a.no_s, not a.no_z)
    writer = None
    for row in sweep(cfg):
        if writer is None:
            writer = csv.DictWriter(sys.stdout, fieldnames=list(row))
            writer.writeheader()
        writer.writerow(row)
        sys.stdout.flush()


if __name__ == "__main__":
    main()
