"""Write a seeded corpus of graph instances for experiments.

Every file is reproducible from (family, params, seed) alone; the manifest
records that triple per instance, so a corpus can be rebuilt or extended
without storing anything but this script's arguments.
"""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from cycledec import (
    gen_class_G,
    gen_class_H,
    gen_class_H_prime,
    gen_closed_necklace,
    gen_cycle,
    gen_eulerian_multiedge,
    gen_random_eulerian,
    script_to_text,
    write_graph,
)


@dataclass
class CorpusConfig:
    out: Path
    seed: int
    per_family: int
    min_n: int
    max_n: int


def family_instances(cfg: CorpusConfig):
    span = cfg.max_n - cfg.min_n + 1
    for i in range(cfg.per_family):
        n = cfg.min_n + (i * 17) % span
        seed = cfg.seed + i
        yield f"multiedge-{max(1, n // 2)}-s{seed}", gen_eulerian_multiedge(max(1, n // 2)), None
        yield f"cycle-{max(2, n)}-s{seed}", gen_cycle(max(2, n)), None
        yield f"necklace-{max(2, n)}-s{seed}", gen_closed_necklace(max(2, n)), None
        g, script = gen_class_G(max(2, n), seed)
        yield f"classG-{max(2, n)}-s{seed}", g, script
        yield f"classH-{max(2, n)}-s{seed}", gen_class_H(max(2, n), seed), None
        yield f"classHprime-{n}-s{seed}", gen_class_H_prime(n, seed), None
        yield f"randomEulerian-{n}x2-s{seed}", gen_random_eulerian(n, 2, seed), None


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="corpus", metavar="DIR")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--per-family", type=int, default=10)
    parser.add_argument("--min-n", type=int, default=2)
    parser.add_argument("--max-n", type=int, default=30)
    args = parser.parse_args(argv)

    cfg = CorpusConfig(
        out=Path(args.out),
        seed=args.seed,
        per_family=args.per_family,
        min_n=args.min_n,
        max_n=args.max_n,
    )
    if cfg.min_n < 1 or cfg.max_n < cfg.min_n:
        print("error: need 1 <= min-n <= max-n", file=sys.stderr)
        return 2
    cfg.out.mkdir(parents=True, exist_ok=True)

    lines = []
    count = 0
    for name, g, script in family_instances(cfg):
        (cfg.out / f"{name}.graph").write_text(write_graph(g))
        if script is not None:
            (cfg.out / f"{name}.script").write_text(script_to_text(script))
        lines.append(f"file={name}.graph n={g.n} m={g.m}")
        count += 1
    (cfg.out / "manifest.txt").write_text("\n".join(lines) + "\n")
    print(f"wrote {count} instances to {cfg.out}/")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
