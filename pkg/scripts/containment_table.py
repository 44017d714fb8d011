"""Table of RM and cube brackets, decoding radii and list radius for a
range of designed distances.

    python3 scripts/containment_table.py --q 16 --m 2 --d 40 81 150
"""

from dataclasses import dataclass

from _config import parse_config
from hypcodes.decoders import IntermediatePlan, cube_radius
from hypcodes.lattice import build_hyp_set, build_rm_set, containment_report, rm_min_distance
from hypcodes.listdecode import max_radius, unique_radius_via_welch


@dataclass(frozen=True)
class TableConfig:
    q: int = 16
    m: int = 2
    d: tuple = (40, 81, 120, 150)
    list_radius: bool = True


def row(cfg: TableConfig, d: int) -> dict:
    q, m = cfg.q, cfg.m
    rep = containment_report(q, m, d)
    H = build_hyp_set(q, m, d)
    out = {
        "d": d,
        "k": len(H),
        "t_hyp": (H.footprint_bound() - 1) // 2,
        "rm_in": rep.s_largest_rm,
        "rm_out": rep.s_smallest_rm,
        "t_super": (rm_min_distance(q, m, rep.s_smallest_rm) - 1) // 2 if rep.s_smallest_rm < m * (q - 1) else 0,
        "coset_extra": len(H.difference(build_rm_set(q, m, rep.s_largest_rm))),
        "cube_out": rep.s_smallest_cube,
        "t_cube": cube_radius(q, rep.s_smallest_cube, m),
    }
    if m == 2:
        p = IntermediatePlan.build(q, d)
        out["inter_extra"], out["t_inter"] = p.extra, p.radius
    if cfg.list_radius:
        out["welch_r"] = unique_radius_via_welch(q, m, d)
        out["list_r"] = max_radius(q, m, d).r_star
    return out


if __name__ == "__main__":
    cfg = parse_config(TableConfig, __doc__)
    rows = [row(cfg, d) for d in cfg.d]
    cols = list(rows[0])
    print("  ".join(f"{c:>11s}" for c in cols))
    for r in rows:
        print("  ".join(f"{r.get(c, ''):>11}" for c in cols))
