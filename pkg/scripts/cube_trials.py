"""Seeded trials of the recursive cube decoder on a hyperbolic code.

    python3 scripts/cube_trials.py --q 32 --d 225 --trials 50
"""

import time
from collections import Counter
from dataclasses import dataclass

import numpy as np

from _config import parse_config
from hypcodes import code_build, corrupt, encode, gf, random_message
from hypcodes.decoders import CubeDecoder, decode_supercode
from hypcodes.lattice import build_hyp_set, cube_hyp_bounds


@dataclass(frozen=True)
class CubeTrialConfig:
    q: int = 8
    m: int = 2
    d: int = 25
    trials: int = 200
    errors: int = -1  # -1: the cube decoder's radius
    seed: int = 0


def run(cfg: CubeTrialConfig) -> dict:
    F = gf(cfg.q)
    H = code_build(F, build_hyp_set(cfg.q, cfg.m, cfg.d))
    s = cube_hyp_bounds(cfg.q, cfg.m, cfg.d)[1]
    dec = CubeDecoder(F, s, cfg.m)
    t = dec.radius if cfg.errors < 0 else cfg.errors
    outcome, calls = Counter(), Counter()
    t0 = time.perf_counter()
    for i in range(cfg.trials):
        seed = cfg.seed + i
        c = encode(H, random_message(H, np.random.default_rng(seed)))
        y, _ = corrupt(c, t, seed, cfg.q)
        res = decode_supercode(H, dec, y)
        if res is None:
            outcome["failure"] += 1
        else:
            outcome["correct" if np.array_equal(res.codeword, c) else "wrong"] += 1
            calls[res.oracle_calls["rs"]] += 1
    return {"cube_s": s, "radius": dec.radius, "errors": t, "outcome": dict(outcome),
            "rs_calls": dict(calls), "seconds": round(time.perf_counter() - t0, 2)}


if __name__ == "__main__":
    cfg = parse_config(CubeTrialConfig, __doc__)
    print(cfg)
    for k, v in run(cfg).items():
        print(f"{k}: {v}")
