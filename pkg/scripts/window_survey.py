"""Skew-primitive spaces of F(t) over a grid of pairs (x^a, x^c).

Writes one CSV row per pair: dimension, maximal y-degree and how the basis
classifies (degree-0 vs degree-1 forms).
"""
from __future__ import annotations

import argparse
import csv
import time
from dataclasses import dataclass
from pathlib import Path

from hopfforge.freealg import from_runs
from hopfforge.presets import free_pointed
from hopfforge.solver import Window, classify_skew_primitive, poly_y_degree, skew_primitive_space


@dataclass
class Config:
    ts: tuple = (1, 2)
    pair_bound: int = 3
    max_y: int = 2
    E: int = 2
    out: Path = Path("results/window_survey.csv")


def run(cfg: Config) -> list[dict]:
    rows = []
    for t in cfg.ts:
        H = free_pointed(t)
        for a in range(-cfg.pair_bound, cfg.pair_bound + 1):
            for c in range(-cfg.pair_bound, cfg.pair_bound + 1):
                t0 = time.perf_counter()
                S = skew_primitive_space(H, from_runs([(0, a)]), from_runs([(0, c)]), Window(cfg.max_y, cfg.E))
                kinds = [classify_skew_primitive(H, b).y_degree for b in S.basis]
                rows.append({
                    "t": t, "a": a, "c": c, "dimension": S.dimension,
                    "max_y_degree": max((poly_y_degree(H, b) for b in S.basis), default=0),
                    "degree0": kinds.count(0), "degree1": kinds.count(1),
                    "seconds": round(time.perf_counter() - t0, 3),
                })
    return rows


def main() -> None:
    cfg = Config()
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t", type=int, nargs="+", default=list(cfg.ts))
    ap.add_argument("--pair-bound", type=int, default=cfg.pair_bound)
    ap.add_argument("--max-y", type=int, default=cfg.max_y)
    ap.add_argument("--E", type=int, default=cfg.E)
    ap.add_argument("--out", type=Path, default=cfg.out)
    args = ap.parse_args()
    cfg = Config(tuple(args.t), args.pair_bound, args.max_y, args.E, args.out)
    rows = run(cfg)
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    with cfg.out.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)
    worst = max(r["max_y_degree"] for r in rows)
    print(f"{len(rows)} pairs, {sum(r['dimension'] for r in rows)} solutions, max y-degree {worst}")
    print(f"wrote {cfg.out}")


if __name__ == "__main__":
    main()
