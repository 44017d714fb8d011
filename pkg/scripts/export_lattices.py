"""Write the exponent sets and level sets of one list-decoding plan.

    python3 scripts/export_lattices.py --q 16 --d 81 --r 8 --outdir out
"""

from dataclasses import dataclass
from pathlib import Path

from _config import parse_config
from hypcodes.lattice import build_hyp_set
from hypcodes.listdecode import plan


@dataclass(frozen=True)
class ExportConfig:
    q: int = 16
    m: int = 2
    d: int = 81
    r: int = 8
    mode: str = "strict"
    outdir: str = "lattices"


def run(cfg: ExportConfig) -> list[Path]:
    out = Path(cfg.outdir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    H = build_hyp_set(cfg.q, cfg.m, cfg.d)
    path = out / f"hyp_q{cfg.q}_m{cfg.m}_d{cfg.d}.txt"
    path.write_text(H.serialize())
    written.append(path)
    p = plan(cfg.q, cfg.m, cfg.d, cfg.r, cfg.mode)
    if p is None:
        print(f"radius {cfg.r} is infeasible")
        return written
    for i, L in enumerate(p.levels):
        path = out / f"level_q{cfg.q}_d{cfg.d}_r{cfg.r}_{cfg.mode}_{i}.txt"
        path.write_text(L.serialize())
        written.append(path)
    return written


if __name__ == "__main__":
    cfg = parse_config(ExportConfig, __doc__)
    for p in run(cfg):
        print(p)
