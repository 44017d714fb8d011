"""Seeded list-decoding trials: codeword plus errors, list statistics.

    python3 scripts/list_decode_trials.py --q 16 --d 81 --r 8 --trials 20
"""

import time
from collections import Counter
from dataclasses import dataclass

import numpy as np

from _config import parse_config
from hypcodes import code_build, corrupt, encode, gf, random_message
from hypcodes.lattice import build_hyp_set
from hypcodes.listdecode import list_decode_full, max_radius


@dataclass(frozen=True)
class ListTrialConfig:
    q: int = 16
    m: int = 2
    d: int = 81
    r: int = 0  # 0: largest feasible radius
    mode: str = "strict"
    trials: int = 20
    seed: int = 0


def run(cfg: ListTrialConfig) -> dict:
    F = gf(cfg.q)
    C = code_build(F, build_hyp_set(cfg.q, cfg.m, cfg.d))
    r = cfg.r or max_radius(cfg.q, cfg.m, cfg.d, cfg.mode).r_star
    recovered, sizes = 0, Counter()
    t0 = time.perf_counter()
    plan = None
    for i in range(cfg.trials):
        seed = cfg.seed + i
        c = encode(C, random_message(C, np.random.default_rng(seed)))
        y, _ = corrupt(c, r, seed, cfg.q)
        res = list_decode_full(F, cfg.m, cfg.d, y, r, cfg.mode)
        plan = res.plan
        recovered += any(np.array_equal(e.codeword, c) for e in res.entries)
        sizes[len(res.entries)] += 1
    return {"radius": r, "t": plan.t, "levels": plan.sizes, "recovered": f"{recovered}/{cfg.trials}",
            "list_sizes": dict(sizes), "seconds_per_decode": round((time.perf_counter() - t0) / cfg.trials, 3)}


if __name__ == "__main__":
    cfg = parse_config(ListTrialConfig, __doc__)
    print(cfg)
    for k, v in run(cfg).items():
        print(f"{k}: {v}")
