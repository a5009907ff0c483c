"""Command-line front end.

Exit codes: 0 when every asserted claim holds, 1 on a claim violation,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .construct import (
    Permutation,
    SequencePair,
    Theorem1Params,
    claimed_zcz,
    gdj_gbf,
    theorem1_pair,
)
from .corr import aacs_profile, profile_csv
from .gbf import (
    PhaseSequence,
    format_sequence,
    parse_gbf,
    parse_sequence,
    to_sequence,
    truncate,
)
from .verify import (
    COMPARISON_TABLE,
    SEARCH_CAP_ENV,
    exhaustive_search,
    ratio_table,
    search_cap,
    verify_zcp,
)

EXIT_OK, EXIT_CLAIM, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# pair files


def format_pair(pair: SequencePair) -> str:
    head = "" if pair.q == 2 else f"q={pair.q}\n"
    return head + format_sequence(pair.a) + "\n" + format_sequence(pair.b) + "\n"


def parse_pair(text: str) -> SequencePair:
    """Two sequence lines, optionally preceded by ``q=<q>``; ``#`` starts a comment."""
    q = 2
    seqs: list[PhaseSequence] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("q="):
            if seqs:
                raise UsageError(f"line {lineno}: q header must precede the sequences")
            try:
                q = int(line[2:])
            except ValueError:
                raise UsageError(f"line {lineno}: bad q header {line!r}") from None
            continue
        try:
            seqs.append(parse_sequence(line, q))
        except ValueError as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
    if len(seqs) != 2:
        raise UsageError(f"expected 2 sequences, found {len(seqs)}")
    try:
        return SequencePair(*seqs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read_text(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _write(path: Path, text: str) -> None:
    path.write_text(text, encoding="utf-8", newline="\n")


def _int_list(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _load_pair(args) -> SequencePair:
    if args.gbf:
        fa, fb = (parse_gbf(_read_text(p)) for p in args.gbf)
        a, b = to_sequence(fa), to_sequence(fb)
        if args.truncate:
            a, b = truncate(a, args.truncate), truncate(b, args.truncate)
        return SequencePair(a, b)
    if not args.pair_file:
        raise UsageError("give a pair file or --gbf FILE FILE")
    return parse_pair(_read_text(args.pair_file))


# ---------------------------------------------------------------------------
# subcommands


def _theorem1_params(args) -> Theorem1Params:
    cfg: dict = {}
    if args.params:
        try:
            cfg = json.loads(_read_text(args.params))
        except json.JSONDecodeError as exc:
            raise UsageError(f"{args.params}: {exc}") from None
    m = args.m if args.m is not None else cfg.get("m")
    if m is None:
        raise UsageError("m is required (--m or params file)")
    q = args.q if args.q is not None else cfg.get("q", 2)
    pi = _int_list(args.pi) if args.pi is not None else cfg.get("pi")
    e = _int_list(args.e) if args.e is not None else cfg.get("e")
    f_off = _int_list(args.f) if args.f is not None else cfg.get("f")
    if m == 3 and not args.experimental_m3:
        raise UsageError("m must be >= 4 for the direct construction (pass --experimental-m3 to build the degenerate m=3 object)")
    return Theorem1Params(int(m), int(q), pi, e, f_off, experimental_m3=args.experimental_m3)


def _params_echo(p: Theorem1Params) -> dict:
    return {"m": p.m, "q": p.q, "pi": list(p.pi.image), "e": list(p.e), "f": list(p.f_off)}


def cmd_generate(args) -> int:
    p = _theorem1_params(args)
    pair = theorem1_pair(p)
    claim = claimed_zcz(p) if p.m >= 4 else None
    report = verify_zcp(pair, claim, corollary1=p.m >= 4, params=_params_echo(p))
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        _write(out / "pair.txt", format_pair(pair))
        _write(out / "profile.csv", profile_csv(aacs_profile(pair)))
        _write(out / "report.json", json.dumps(report.to_dict(), indent=2) + "\n")
        print(f"wrote {out}/pair.txt, profile.csv, report.json", file=sys.stderr)
    else:
        sys.stdout.write(format_pair(pair))
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK if report.ok else EXIT_CLAIM


def cmd_verify(args) -> int:
    pair = _load_pair(args)
    report = verify_zcp(pair, args.claimed, corollary1=args.corollary1)
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK if report.ok else EXIT_CLAIM


def cmd_correlate(args) -> int:
    pair = _load_pair(args)
    text = profile_csv(aacs_profile(pair))
    if args.out:
        _write(Path(args.out), text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_search(args) -> int:
    cap = args.cap if args.cap is not None else search_cap()

    def progress(done: int, total: int) -> None:
        print(f"\rshard {done}/{total}", end="", file=sys.stderr)
        if done == total:
            print(file=sys.stderr)

    result = exhaustive_search(args.n, cap=cap, workers=args.workers, progress=progress)
    print(json.dumps(result.to_dict(), indent=2))
    return EXIT_OK


def _fmt(v, col: str = "") -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, bool):
        if col == "direct":
            return "direct" if v else "indirect"
        return str(v).lower()
    return str(v)


def _render(rows: list[dict], fmt: str) -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    if fmt == "json":
        return json.dumps([{c: _fmt(r[c], c) for c in cols} for r in rows], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_fmt(r[c], c) for c in cols])
        return buf.getvalue()
    cells = [[_fmt(r[c], c) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    rows = ratio_table(args.m_min, args.m_max)
    for r in rows:
        r["matches_closed_form"] = r["deviation"] == r["closed_form_deviation"]
    out = _render(rows, args.format)
    if args.format == "text":
        out += "\n" + _render(COMPARISON_TABLE, "text")
    else:
        out += _render(COMPARISON_TABLE, args.format)
    sys.stdout.write(out)
    return EXIT_OK if all(r["matches_closed_form"] for r in rows) else EXIT_CLAIM


EXAMPLES = {
    "ex1": {"signs": "+++-++-+", "truncated": "++-++-"},
    "ex2": {"m": 6, "pi": (2, 0, 1, 3), "length": 34, "zcz": 25, "exact": True},
    "ex3": {"m": 5, "pi": (1, 2, 0), "length": 18, "zcz": 10, "exact": False},
}


def _check(label: str, expected, got) -> bool:
    ok = expected == got
    print(f"{'OK ' if ok else 'BAD'} {label}: expected {expected}, got {got}")
    return ok


def cmd_example(args) -> int:
    gold = EXAMPLES[args.name]
    if args.name == "ex1":
        s = to_sequence(gdj_gbf(3, 2, Permutation.identity(3)))
        ok = _check("Psi(f)", gold["signs"], s.signs())
        ok &= _check("Psi_1(f)", gold["truncated"], truncate(s, 1).signs())
        return EXIT_OK if ok else EXIT_CLAIM
    p = Theorem1Params(gold["m"], 2, gold["pi"])
    pair = theorem1_pair(p)
    report = verify_zcp(pair, claimed_zcz(p), corollary1=True, params=_params_echo(p))
    print(format_pair(pair), end="")
    ok = _check("length", gold["length"], report.length)
    if gold["exact"]:
        ok &= _check("ZCZ width", gold["zcz"], report.actual_zcz)
    else:
        ok &= _check("ZCZ width >= claim", True, report.actual_zcz >= gold["zcz"])
        print(f"    actual ZCZ width {report.actual_zcz}")
    ok &= _check(
        "out-of-zone |AACS| values", True, set(report.out_of_zone_magnitudes) <= {0, 4}
    )
    print(f"    histogram {report.to_dict()['out_of_zone_magnitudes']}")
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        _write(out / "pair.txt", format_pair(pair))
        _write(out / "profile.csv", profile_csv(aacs_profile(pair)))
        _write(out / "report.json", json.dumps(report.to_dict(), indent=2) + "\n")
    return EXIT_OK if ok and report.ok else EXIT_CLAIM


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="zcpgbf",
        description="Build and verify Z-complementary pairs from generalized Boolean functions.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build the direct EB-ZCP for given parameters")
    g.add_argument("--m", type=int)
    g.add_argument("--q", type=int)
    g.add_argument("--pi", help="permutation of 0..m-3 as a comma-separated image list")
    g.add_argument("--e", help="offsets on x_0..x_{m-3}, comma-separated")
    g.add_argument("--f", help="offsets on the complemented x_0..x_{m-3}, comma-separated")
    g.add_argument("--params", help="JSON file with keys m, q, pi, e, f")
    g.add_argument("--out", help="directory for pair.txt, profile.csv, report.json")
    g.add_argument("--experimental-m3", action="store_true")
    g.set_defaults(func=cmd_generate)

    for name, func, helptext in (
        ("verify", cmd_verify, "report ZCZ width and out-of-zone magnitudes of a pair"),
        ("correlate", cmd_correlate, "write the AACS profile CSV of a pair"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("pair_file", nargs="?", help="pair file ('-' for stdin)")
        sp.add_argument("--gbf", nargs=2, metavar="FILE", help="build the pair from two GBF files")
        sp.add_argument("--truncate", type=int, default=0, help="drop L entries at both ends (with --gbf)")
        if name == "verify":
            sp.add_argument("--claimed", type=int)
            sp.add_argument("--corollary1", action="store_true", help="assert out-of-zone magnitude 4 (q=2)")
        else:
            sp.add_argument("--out")
        sp.set_defaults(func=func)

    s = sub.add_parser("search", help="exhaustive search for the best binary ZCZ width")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--cap", type=int, help=f"override the length cap (env {SEARCH_CAP_ENV})")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_search)

    t = sub.add_parser("table", help="exact ZCZ ratio table and comparison rows")
    t.add_argument("--m-min", type=int, default=4)
    t.add_argument("--m-max", type=int, default=12)
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")
    t.set_defaults(func=cmd_table)

    x = sub.add_parser("example", help="reproduce a worked example")
    x.add_argument("name", choices=sorted(EXAMPLES))
    x.add_argument("--out")
    x.set_defaults(func=cmd_example)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
