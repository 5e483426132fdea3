"""Exhibit GK-dimension-2 Hopf subalgebras: the (f, xi, beta) data from
conjugates of a skew-primitive, and closure evidence for the spans."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from hopfforge.growth import verify_hopf_subalgebra
from hopfforge.parsing import parse_element
from hopfforge.presets import build
from hopfforge.solver import find_subalgebra_data, subalgebra_identity

# (preset, group-like g, skew-primitive y)
CASES = [("E:n=1", "x0", "y"), ("E:n=2", "x0", "x1*y*x1^-1"), ("A:b=1,xi=2", "g", "y"),
         ("A:b=2,xi=-1/3", "g", "y"), ("C:m=2", "g", "y"), ("C:m=3", "g", "y")]


@dataclass
class Config:
    relation_cap: int = 8
    closure_cap: int = 4


def main() -> None:
    cfg = Config()
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--relation-cap", type=int, default=cfg.relation_cap)
    ap.add_argument("--closure-cap", type=int, default=cfg.closure_cap)
    args = ap.parse_args()
    cfg = Config(args.relation_cap, args.closure_cap)
    for sel, g, y in CASES:
        H = build(sel)
        gw = H.gen(g)
        d = find_subalgebra_data(H, gw, parse_element(y, H), cfg.relation_cap)
        identity = not subalgebra_identity(H, gw, d.f, d.xi, d.beta, d.b)
        ginv = parse_element(f"{g}^-1", H)
        rep = verify_hopf_subalgebra(H, [parse_element(g, H), ginv, d.f], cfg.closure_cap)
        print(f"{sel:16s} {d.describe(H):40s} identity={identity} closed@{cfg.closure_cap}={rep.ok} dims={rep.dims}")


if __name__ == "__main__":
    main()
