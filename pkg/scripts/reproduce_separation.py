"""Separate the two sextic monodromies through SL(2, Z/m).

    python3 scripts/reproduce_separation.py --modulus 32 --json out.json
"""

import argparse
import json
import logging
import time
from dataclasses import asdict, dataclass

from hurwitzmon import datasets
from hurwitzmon.groups import DEFAULT_CAP
from hurwitzmon.hurwitz import OrbitConfig, compare_monodromies
from hurwitzmon.representations import sl2_mod_rep


@dataclass
class SeparationConfig:
    first: str = "paper-sqrt2"
    second: str = "paper-neg-sqrt2"
    modulus: int = 32
    cap: int = DEFAULT_CAP
    early_exit: bool = True


def run(cfg: SeparationConfig) -> dict:
    rep = sl2_mod_rep(cfg.modulus)
    M1 = datasets.to_factorization(datasets.dataset(cfg.first))
    M2 = datasets.to_factorization(datasets.dataset(cfg.second))
    start = time.perf_counter()
    report = compare_monodromies(M1, M2, rep, OrbitConfig(cap=cfg.cap, early_exit=cfg.early_exit))
    out = report.to_dict()
    out["seconds"] = round(time.perf_counter() - start, 2)
    out["config"] = asdict(cfg)
    return out


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--modulus", type=int, default=32)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--json")
    args = p.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    result = run(SeparationConfig(modulus=args.modulus, cap=args.cap))
    for key in ("verdict", "orbit_size", "orbit_classes", "other_orbit_size",
                "other_orbit_classes", "seconds"):
        print(f"{key}: {result[key]}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(result, fh, indent=2)


if __name__ == "__main__":
    main()
