"""Compute dim span(V^n) / ball sizes for the presets and archive them with
their GK-degree estimates."""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from hopfforge.freealg import NcPoly
from hopfforge.growth import ball_growth, gk_estimate, span_dimension_sequence
from hopfforge.parsing import parse_element
from hopfforge.presets import build

SPAN_CASES = {
    "A:b=1,xi=2": ["g", "g^-1", "y"],
    "C:m=2": ["g", "g^-1", "y"],
    "C:m=3": ["g", "g^-1", "y"],
    "Zn:n=2": ["x", "x^-1", "y", "y^-1"],
    "E:n=0": ["x0", "x0^-1", "y"],
    "E:n=1": ["x0", "x0^-1", "x1", "x1^-1", "y"],
    "E:n=2": ["x0", "x0^-1", "x1", "x1^-1", "x2", "x2^-1", "y"],
    "env:sl2": ["h", "e", "f"],
    "F:t=1": ["x", "x^-1", "y"],
}
BALL_CASES = {"Zn:n=2": None, "heis": ["x", "y"], "zxz2": None}


@dataclass
class Config:
    N: int = 16
    N_free: int = 10
    out: Path = Path("results/growth_sequences.json")
    cases: list = field(default_factory=lambda: list(SPAN_CASES))


def run(cfg: Config) -> dict:
    report = {"config": {k: str(v) for k, v in asdict(cfg).items()}, "span": {}, "ball": {}}
    for sel in cfg.cases:
        H = build(sel)
        V = [NcPoly.scalar(1)] + [parse_element(s, H) for s in SPAN_CASES[sel]]
        N = cfg.N_free if sel.startswith("F:") else cfg.N
        t0 = time.perf_counter()
        D = span_dimension_sequence(H, V, N)
        est = gk_estimate(D).to_json()
        est["seconds"] = round(time.perf_counter() - t0, 2)
        est["truncated"] = D.truncated
        report["span"][sel] = est
        print(f"{sel:14s} {est.get('degree', 'superpolynomial')!s:>16}  {D.dims[-1]}")
    for sel, gens in BALL_CASES.items():
        D = ball_growth(build(sel), cfg.N, gens)
        report["ball"][sel] = gk_estimate(D).to_json()
        print(f"{sel + ' ball':14s} {report['ball'][sel].get('degree')!s:>16}  {D.dims[-1]}")
    return report


def main() -> None:
    cfg = Config()
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--N", type=int, default=cfg.N)
    ap.add_argument("--N-free", type=int, default=cfg.N_free)
    ap.add_argument("--out", type=Path, default=cfg.out)
    ap.add_argument("--cases", nargs="*", default=cfg.cases, choices=list(SPAN_CASES))
    args = ap.parse_args()
    cfg = Config(args.N, args.N_free, args.out, args.cases)
    report = run(cfg)
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    cfg.out.write_text(json.dumps(report, indent=1) + "\n")
    print(f"wrote {cfg.out}")


if __name__ == "__main__":
    main()
