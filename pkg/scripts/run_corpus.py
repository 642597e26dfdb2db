"""Compute every corpus polytope, check it against brute force, and print a table.

    python3 scripts/run_corpus.py [--out table.tsv] [--seed N] [--multiple 3]
"""

import argparse
import sys
import time
from dataclasses import dataclass, replace
from typing import Optional

from ehrhart.corpus import CorpusConfig, build_corpus
from ehrhart.engine import ehrhart, mcmullen_check
from ehrhart.oracle import closed_count, interior_count
from ehrhart.quasipoly import qp_eval


@dataclass
class RunConfig:
    corpus: CorpusConfig = CorpusConfig()
    multiple: int = 3  # check t = 0 .. multiple * denominator
    out: Optional[str] = None


def run(cfg: RunConfig) -> list[dict]:
    rows = []
    for e in build_corpus(cfg.corpus):
        P = e.polytope
        start = time.perf_counter()
        res = ehrhart(P)
        elapsed = time.perf_counter() - start
        T = cfg.multiple * P.denominator
        closed_ok = all(qp_eval(res.qp, t) == closed_count(P, t) for t in range(T + 1))
        interior_ok = all(res.interior_qp(t) == interior_count(P, t) for t in range(1, T + 1))
        rows.append({
            "name": e.name,
            "dim": P.dim,
            "ambient": P.ambient_dim,
            "denominator": P.denominator,
            "period": res.qp.period,
            "i_indices": ",".join(map(str, res.i_indices)),
            "closed": closed_ok,
            "interior": interior_ok,
            "mcmullen": mcmullen_check(P, res.qp).ok,
            "seconds": round(elapsed, 3),
        })
    return rows


def format_table(rows: list[dict]) -> str:
    cols = list(rows[0])
    lines = ["\t".join(cols)]
    lines += ["\t".join(str(r[c]) for c in cols) for r in rows]
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=CorpusConfig.seed)
    ap.add_argument("--multiple", type=int, default=3)
    ap.add_argument("--out")
    args = ap.parse_args(argv)
    cfg = RunConfig(replace(CorpusConfig(), seed=args.seed), args.multiple, args.out)
    rows = run(cfg)
    table = format_table(rows)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(table)
    sys.stdout.write(table)
    bad = [r["name"] for r in rows if not (r["closed"] and r["interior"] and r["mcmullen"])]
    print(f"{len(rows)} polytopes, {len(bad)} failing, {sum(r['seconds'] for r in rows):.1f} s computing")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
