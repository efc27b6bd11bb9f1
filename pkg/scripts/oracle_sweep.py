"""Random sweep: compare series coefficients with brute-force counts.

    python scripts/oracle_sweep.py --seeds 200 --rows 2 --nmax 4 --dmax 5
"""
import argparse
import random
import time
from dataclasses import dataclass

from inc_hilbert.hilbert import Problem, brute_counts, hilbert_series
from inc_hilbert.monomial import Monomial
from inc_hilbert.polyrat import taylor


@dataclass
class SweepConfig:
    seeds: int = 50
    rows: int = 2
    max_gens: int = 3
    max_width: int = 2
    max_degree: int = 3
    nmax: int = 4
    dmax: int = 5
    minimize: bool = True


def random_gens(rng, cfg):
    r = rng.randint(1, cfg.rows)
    gens = []
    for _ in range(rng.randint(1, cfg.max_gens)):
        exps = {}
        for _ in range(rng.randint(1, cfg.max_degree)):
            k = (rng.randint(1, r), rng.randint(0, cfg.max_width))
            exps[k] = exps.get(k, 0) + 1
        gens.append(Monomial.from_dict(r, exps))
    return r, tuple(gens)


def sweep(cfg: SweepConfig) -> int:
    failures = 0
    states = []
    t0 = time.perf_counter()
    for seed in range(cfg.seeds):
        r, gens = random_gens(random.Random(seed), cfg)
        p = Problem(r, gens)
        res = hilbert_series(p, reduce=cfg.minimize)
        states.append(res.dfa_states)
        if taylor(res.series, cfg.nmax, cfg.dmax) != brute_counts(p, cfg.nmax, cfg.dmax):
            failures += 1
            print(f"seed {seed}: MISMATCH r={r} gens={[str(g) for g in gens]}")
    dt = time.perf_counter() - t0
    print(f"{cfg.seeds} problems, {failures} mismatches, "
          f"max DFA states {max(states)}, mean {sum(states) / len(states):.1f}, {dt:.2f}s")
    return failures


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(SweepConfig()).items():
        if isinstance(default, bool):
            ap.add_argument(f"--no-{name}", dest=name, action="store_false")
        else:
            ap.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int, default=default)
    cfg = SweepConfig(**vars(ap.parse_args()))
    raise SystemExit(1 if sweep(cfg) else 0)


if __name__ == "__main__":
    main()
