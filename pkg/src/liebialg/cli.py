"""Command-line front end.

    liebialg roots A2
    liebialg pairs B2 --format csv
    liebialg coiso A2 --V Htheta --u e --v s1*s2*s1 --recipe l
    liebialg zambon G2 --beta highest --sign -1
    liebialg verify A2 --format json --seed 0

Exit status: 0 on success, 1 when a verification check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .bialgebra import Double, build_l, build_s, build_z, candidate_json, rank_pi
from .chevalley import build_algebra
from .linalg import Subspace
from .rootsys import CartanTypeError, RootError, build_root_system, height
from .verify import run_all
from .weyl import DEFAULT_CAP, WeylCapExceeded, WeylGroup, WordError
from .zambon import ShortRootError, zambon_as_l, zambon_json

COMMANDS = ("roots", "pairs", "coiso", "zambon", "verify")
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    cartan_type: str
    command: str
    output_format: str = "text"
    seed: int = 0
    weyl_cap: int = DEFAULT_CAP
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.output_format not in FORMATS:
            raise ValueError(f"unknown format {self.output_format!r}")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        return cls(**d)

    def to_argv(self) -> list[str]:
        argv = [self.command, self.cartan_type, "--format", self.output_format,
                "--seed", str(self.seed), "--weyl-cap", str(self.weyl_cap)]
        for k, v in self.options.items():
            if v is not None:
                argv += [f"--{k}", str(v)]
        return argv


# -- output ------------------------------------------------------------------

def render_table(columns: list[str], rows: list[dict], fmt: str, summary: dict | None = None) -> str:
    if fmt == "json":
        doc = {"columns": columns, "rows": rows}
        if summary:
            doc["summary"] = summary
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=columns)
        w.writeheader()
        for r in rows:
            w.writerow({k: _cell(v) for k, v in r.items()})
        return buf.getvalue()
    cells = [[_cell(r[c]) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines += ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells]
    if summary:
        lines.append("")
        lines += [f"{k}: {_cell(v)}" for k, v in summary.items()]
    return "\n".join(lines) + "\n"


def render_document(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["key", "value"])
        for k, v in doc.items():
            w.writerow([k, v if isinstance(v, str) else json.dumps(v)])
        return buf.getvalue()
    return "".join(f"{k}: {v if isinstance(v, str) else json.dumps(v)}\n" for k, v in doc.items())


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return "" if v is None else str(v)


# -- commands -----------------------------------------------------------------

def cmd_roots(cfg: RunConfig) -> tuple[str, int]:
    rs = build_root_system(cfg.cartan_type)
    rows = []
    for i, r in enumerate(rs.roots):
        rows.append({"index": i, "coords": list(r), "height": height(r),
                     "sign": "+" if i < rs.npos else "-",
                     "length": "long" if rs.is_long(r) else "short",
                     "norm": str(rs.form(r, r))})
    cols = ["index", "coords", "height", "sign", "length", "norm"]
    return render_table(cols, rows, cfg.output_format), 0


def cmd_pairs(cfg: RunConfig) -> tuple[str, int]:
    rs = build_root_system(cfg.cartan_type)
    W = WeylGroup(rs, cfg.weyl_cap)
    w0 = W.long_element
    rows, disjoint = [], 0
    for u in W.elements:
        for v in W.elements:
            dj = W.disjoint_inversions(u, v)
            disjoint += dj
            rows.append({"u": u.name, "v": v.name, "len_u": len(u.word), "len_v": len(v.word),
                         "disjoint": dj, "rank_pi": rank_pi(W, u, v),
                         "weak_leq_u_vw0": W.weak_leq(u, W.multiply(v, w0))})
    cols = ["u", "v", "len_u", "len_v", "disjoint", "rank_pi", "weak_leq_u_vw0"]
    summary = {"pairs": len(rows), "disjoint_pairs": disjoint}
    return render_table(cols, rows, cfg.output_format, summary), 0


def parse_v_spec(spec: str, rs) -> Subspace:
    r = rs.rank
    spec = spec.strip()
    if spec == "0":
        return Subspace.zero(r)
    if spec == "full":
        return Subspace.full(r)
    if spec == "Htheta":
        return Subspace.span([rs.coroot(rs.highest_root)], r)
    rows = []
    for part in spec.split(";"):
        try:
            row = [Fraction(x) for x in part.split(",")]
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"malformed V row {part!r}") from None
        if len(row) != r:
            raise UsageError(f"V row {part!r} needs {r} coroot coordinates")
        rows.append(row)
    return Subspace.span(rows, r)


def cmd_coiso(cfg: RunConfig) -> tuple[str, int]:
    opts = cfg.options
    rs = build_root_system(cfg.cartan_type)
    g = build_algebra(rs)
    d = Double(g)
    W = WeylGroup(rs, cfg.weyl_cap)
    u, v = W.parse(opts.get("u") or "e"), W.parse(opts.get("v") or "e")
    recipe = (opts.get("recipe") or "l").lower()
    if recipe == "z":
        c = build_z(d, W, u, v)
    else:
        V = parse_v_spec(opts.get("V") or "0", rs)
        c = build_l(d, V, u, v) if recipe == "l" else build_s(d, W, V, u, v)
    doc = candidate_json(c, W)
    return render_document(doc, cfg.output_format), 0


def parse_beta_spec(spec: str, rs):
    spec = spec.strip()
    if spec == "highest":
        return rs.highest_root
    if spec in ("short-simple", "long-simple"):
        want_long = spec == "long-simple"
        for a in rs.simple_roots:
            if rs.is_long(a) == want_long:
                return a
        raise UsageError(f"{rs.cartan_type} has no {spec.split('-')[0]} simple root")
    if spec.startswith("a") and spec[1:].isdigit():
        i = int(spec[1:])
        if not 1 <= i <= rs.rank:
            raise UsageError(f"simple root index {i} out of range")
        return rs.simple_roots[i - 1]
    if spec.startswith("r") and spec[1:].isdigit():
        i = int(spec[1:])
        if not 0 <= i < len(rs.roots):
            raise UsageError(f"root index {i} out of range")
        return rs.roots[i]
    try:
        coords = tuple(int(x) for x in spec.split(","))
    except ValueError:
        raise UsageError(f"cannot parse beta {spec!r}") from None
    if not rs.is_root(coords):
        raise UsageError(f"{coords} is not a root")
    return coords


def cmd_zambon(cfg: RunConfig) -> tuple[str, int]:
    opts = cfg.options
    rs = build_root_system(cfg.cartan_type)
    beta = parse_beta_spec(opts.get("beta") or "highest", rs)
    sign = int(opts.get("sign") or 1)
    if sign not in (1, -1):
        raise UsageError("sign must be 1 or -1")
    if not rs.is_long(beta):
        raise UsageError(f"{beta} is not a long root; the construction requires a long root")
    if not rs.is_positive(beta):
        raise UsageError(f"{beta} is not a positive root")
    g = build_algebra(rs)
    d = Double(g)
    res = zambon_as_l(d, WeylGroup(rs, cfg.weyl_cap), beta, sign)
    doc = zambon_json(res, g)
    ok = res.closed_form_match and res.as_l_match
    return render_document(doc, cfg.output_format), 0 if ok else 1


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    results = run_all(cfg.cartan_type, cfg.seed, cfg.weyl_cap)
    ok = all(r.passed for r in results)
    fmt = cfg.output_format
    if fmt == "json":
        doc = {"type": cfg.cartan_type, "seed": cfg.seed, "passed": ok,
               "suites": [r.to_json() for r in results]}
        return json.dumps(doc, indent=2) + "\n", 0 if ok else 1
    rows = [{"suite": r.name, "checks": r.checks, "failures": r.failures, "passed": r.passed}
            for r in results]
    summary = {"type": cfg.cartan_type, "seed": cfg.seed, "passed": ok}
    out = render_table(["suite", "checks", "failures", "passed"], rows, fmt,
                       summary if fmt == "text" else None)
    return out, 0 if ok else 1


HANDLERS = {"roots": cmd_roots, "pairs": cmd_pairs, "coiso": cmd_coiso,
            "zambon": cmd_zambon, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("cartan_type", metavar="TYPE", help='Cartan type, e.g. "A2" or "B2xA1"')
    common.add_argument("--format", dest="output_format", choices=FORMATS, default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for the random V battery")
    common.add_argument("--weyl-cap", type=int, default=DEFAULT_CAP,
                        help="refuse to enumerate Weyl groups larger than this")
    common.add_argument("--out", default=None, help="write output to FILE instead of stdout")

    p = argparse.ArgumentParser(prog="liebialg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("roots", parents=[common], help="list roots")
    sub.add_parser("pairs", parents=[common], help="tabulate ordered pairs (u, v) of W")
    c = sub.add_parser("coiso", parents=[common], help="build l/s/z and decide coisotropy")
    c.add_argument("--V", default="0", help='"0", "full", "Htheta" or rows "a,b;c,d" in coroot coordinates')
    c.add_argument("--u", default="e", help='Weyl word, e.g. "s1*s2"')
    c.add_argument("--v", default="e")
    c.add_argument("--recipe", choices=("l", "s", "z"), default="l")
    z = sub.add_parser("zambon", parents=[common], help="Zambon subalgebra for a long root")
    z.add_argument("--beta", default="highest",
                   help='"highest", "aN", "rN", "short-simple", "long-simple" or coords "1,2"')
    z.add_argument("--sign", type=int, choices=(1, -1), default=1)
    sub.add_parser("verify", parents=[common], help="run every verification suite")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    opts = {}
    for k in ("V", "u", "v", "recipe", "beta", "sign"):
        if hasattr(ns, k):
            opts[k] = getattr(ns, k)
    return RunConfig(ns.cartan_type, ns.command, ns.output_format, ns.seed, ns.weyl_cap, opts)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        text, status = HANDLERS[cfg.command](cfg)
    except (UsageError, CartanTypeError, RootError, ShortRootError, WordError,
            WeylCapExceeded, ValueError) as exc:
        parser.exit(2, f"liebialg: error: {exc}\n")
    if ns.out:
        with open(ns.out, "w", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
