"""Plot the AACS of a constructed pair (needs the ``plot`` extra).

    python3 scripts/plot_profile.py --m 6 --pi 2,0,1,3 --out ex2.png
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from zcpgbf import Theorem1Params, aacs_profile, claimed_zcz, theorem1_pair  # noqa: E402
from zcpgbf.construct import Permutation  # noqa: E402


@dataclass(frozen=True)
class PlotConfig:
    m: int = 6
    q: int = 2
    pi: tuple[int, ...] = (2, 0, 1, 3)
    out: str = "profile.png"


def plot(cfg: PlotConfig) -> None:
    p = Theorem1Params(cfg.m, cfg.q, cfg.pi)
    prof = aacs_profile(theorem1_pair(p))
    taus = range(-prof.N + 1, prof.N)
    vals = [prof[abs(t)].complex() for t in taus]
    z = claimed_zcz(p)
    fig, ax = plt.subplots(figsize=(8, 3.5))
    ax.stem(list(taus), [abs(v) for v in vals], basefmt=" ")
    ax.axvspan(-z + 0.5, z - 0.5, color="tab:green", alpha=0.12, label=f"claimed zone, Z={z}")
    ax.set_xlabel("shift")
    ax.set_ylabel("|AACS|")
    ax.set_title(f"m={cfg.m}, q={cfg.q}, pi={cfg.pi}, N={prof.N}")
    ax.legend(loc="upper right")
    fig.tight_layout()
    fig.savefig(cfg.out, dpi=150)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=PlotConfig.m)
    ap.add_argument("--q", type=int, default=PlotConfig.q)
    ap.add_argument("--pi", default=None)
    ap.add_argument("--out", default=PlotConfig.out)
    a = ap.parse_args()
    pi = Permutation.parse(a.pi).image if a.pi else tuple(range(a.m - 2))
    plot(PlotConfig(a.m, a.q, tuple(pi), a.out))
    print(a.out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
