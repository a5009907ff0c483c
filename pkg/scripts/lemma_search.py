"""Exhaustive best-zone search over binary pairs of even length.

For each N, reports the best zone width found, whether N is a Golay length,
the best width the direct construction reaches at that length (if any) and
how many enumerated pairs have an out-of-zone |AACS| below 4.

    python3 scripts/lemma_search.py --n 2 4 6 8 10 12 --workers 4
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from zcpgbf import exhaustive_search
from zcpgbf.verify import is_golay_length, max_claimed_zcz


@dataclass(frozen=True)
class SearchConfig:
    lengths: tuple[int, ...] = (2, 4, 6, 8, 10)
    workers: int = 1
    cap: int | None = None
    histogram: bool = field(default=False)


def construction_zcz(n: int) -> int | None:
    m = (n - 2).bit_length()
    if m >= 4 and 2 ** (m - 1) + 2 == n:
        return max_claimed_zcz(m)
    return None


def run(cfg: SearchConfig) -> list[dict]:
    rows = []
    for n in cfg.lengths:
        res = exhaustive_search(n, cap=cfg.cap, workers=cfg.workers)
        row = {
            "N": n,
            "best_zcz": res.best_zcz,
            "golay_length": is_golay_length(n),
            "construction_zcz": construction_zcz(n),
            "pairs": res.pairs_examined,
            "floor_violations": res.floor_violations,
        }
        if cfg.histogram:
            row["zcz_histogram"] = {str(k): v for k, v in sorted(res.zcz_histogram.items())}
        rows.append(row)
        print(json.dumps(row), flush=True)
    return rows


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=list(SearchConfig.lengths))
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--cap", type=int)
    ap.add_argument("--histogram", action="store_true")
    a = ap.parse_args()
    try:
        run(SearchConfig(tuple(a.n), a.workers, a.cap, a.histogram))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
