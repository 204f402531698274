"""Command-line front end: build and serialize indexes, report index
statistics, run count/locate/lems/mems queries, and self-test against the
brute-force oracles.

Exit codes: 0 success, 2 usage error, 3 I/O failure, 4 malformed index,
5 internal consistency error.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Optional, TextIO

from .errors import (IndexFormatError, InternalConsistencyError,
                     LemIndexError, PatternError)
from .matching import (compute_matching_statistics, long_lem_query,
                       long_lem_query_direct)
from .optbwtrl import Optbwtrl, build_optbwtrl, load_index, save_index
from .oracles import naive_lems, naive_mems, naive_occurrences
from .textcore import (Text, build_rlbwt, build_suffix_structures,
                       load_text_file, validate_text)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_FORMAT = 4
EXIT_INTERNAL = 5


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lemidx",
        description="BWT-runs compressed index with long locally-maximal "
                    "exact match queries")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_text_opts(p, required=False):
        p.add_argument("-t", "--text", help="text file to index")
        p.add_argument("--fasta", action="store_true",
                       help="treat the text file as FASTA-like records")
        p.add_argument("-d", "--balance", type=int, default=2, metavar="D",
                       help="interval balancing parameter (default 2)")
        if not required:
            p.add_argument("-x", "--index", help="serialized index file")

    def add_pattern_opts(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("-p", "--pattern", help="inline pattern")
        g.add_argument("--pattern-file", help="pattern file (lines, or FASTA records)")

    def add_output_opts(p):
        p.add_argument("-o", "--output", help="output file (default stdout)")
        p.add_argument("--header", action="store_true", help="emit a TSV header row")

    p_build = sub.add_parser("build", help="build an index file from a text")
    add_text_opts(p_build, required=True)
    p_build.add_argument("-o", "--output", required=True, help="index file to write")

    p_stats = sub.add_parser("stats", help="print index statistics")
    add_text_opts(p_stats)

    for name, help_text in (("count", "count pattern occurrences"),
                            ("locate", "list pattern occurrence positions")):
        p_q = sub.add_parser(name, help=help_text)
        add_text_opts(p_q)
        add_pattern_opts(p_q)
        add_output_opts(p_q)

    p_lems = sub.add_parser("lems", help="enumerate long locally maximal exact matches")
    add_text_opts(p_lems)
    add_pattern_opts(p_lems)
    add_output_opts(p_lems)
    p_lems.add_argument("-L", "--min-length", type=int, default=1, metavar="L",
                        help="minimum match length (default 1)")
    p_lems.add_argument("--direct", action="store_true",
                        help="recompute broken windows by backward search "
                             "instead of using matching statistics")

    p_mems = sub.add_parser("mems", help="enumerate maximal exact matches (oracle, desk scale)")
    p_mems.add_argument("-t", "--text", required=True)
    p_mems.add_argument("--fasta", action="store_true")
    add_pattern_opts(p_mems)
    add_output_opts(p_mems)
    p_mems.add_argument("-L", "--min-length", type=int, default=1, metavar="L")

    p_self = sub.add_parser("selftest", help="run oracle-equivalence suites on random instances")
    p_self.add_argument("--cases", type=int, default=60)
    p_self.add_argument("--seed", type=int, default=20240817)

    return parser


def _encode_arg(parser: argparse.ArgumentParser, value: str) -> bytes:
    try:
        return value.encode("latin-1")
    except UnicodeEncodeError:
        parser.error("patterns must be single-byte text")


def _read_patterns(parser, args) -> list[tuple[str, bytes]]:
    """(name, pattern) pairs; a single unnamed pattern gets an empty name."""
    if args.pattern is not None:
        return [("", _encode_arg(parser, args.pattern))]
    try:
        with open(args.pattern_file, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise LemIndexError(f"cannot read pattern file: {exc}") from exc
    if data.startswith(b">"):
        out = []
        name = ""
        chunks: list[bytes] = []
        for line in data.splitlines():
            if line.startswith(b">"):
                if chunks:
                    out.append((name, b"".join(chunks)))
                name = line[1:].split()[0].decode("latin-1") if line[1:].strip() else ""
                chunks = []
            else:
                chunks.append(line.strip())
        if chunks:
            out.append((name, b"".join(chunks)))
    else:
        out = [(str(i + 1), line) for i, line in enumerate(data.splitlines()) if line]
    if not out:
        raise PatternError("pattern file contains no patterns")
    if len(out) == 1:
        out = [("", out[0][1])]
    return out


class _Workspace:
    """Lazily built text structures and index for one invocation."""

    def __init__(self, args, parser):
        self.args = args
        self.parser = parser
        self.text: Optional[Text] = None
        self.structures = None
        self.index: Optional[Optbwtrl] = None

    def load(self, need_text: bool, reason: str = "") -> None:
        args = self.args
        if args.text is not None:
            self.text = load_text_file(args.text, fasta=args.fasta)
            self.structures = build_suffix_structures(self.text)
            rl = build_rlbwt(self.structures)
            self.index = build_optbwtrl(self.structures, rl, d=args.balance)
        elif getattr(args, "index", None) is not None:
            if need_text:
                self.parser.error(f"{reason} requires --text, not --index")
            self.index = load_index(args.index)
        else:
            self.parser.error("one of --text or --index is required")


def _open_output(path: Optional[str]) -> TextIO:
    return open(path, "w") if path else sys.stdout


def _emit_rows(args, header: list[str], rows: list[tuple]) -> None:
    out = _open_output(args.output)
    try:
        if args.header:
            print("\t".join(header), file=out)
        for row in rows:
            print("\t".join(str(v) for v in row), file=out)
    finally:
        if out is not sys.stdout:
            out.close()


def _cmd_build(args, parser) -> int:
    ws = _Workspace(args, parser)
    ws.load(need_text=True, reason="build")
    save_index(ws.index, args.output)
    summary = ws.index.summary()
    print(f"indexed n={summary['n']} r={summary['r']} sigma={summary['sigma']} "
          f"-> {args.output}", file=sys.stderr)
    return EXIT_OK


def _cmd_stats(args, parser) -> int:
    ws = _Workspace(args, parser)
    ws.load(need_text=False)
    for key, value in ws.index.summary().items():
        if isinstance(value, float):
            value = f"{value:.4f}"
        print(f"{key}\t{value}")
    return EXIT_OK


def _pattern_rows(patterns, fn) -> tuple[list[str], list[tuple]]:
    """Apply fn to each pattern; prefix rows with the pattern name when
    more than one pattern is queried."""
    named = len(patterns) > 1
    rows = []
    for name, pat in patterns:
        for row in fn(pat):
            rows.append((name, *row) if named else row)
    return (["pattern"] if named else []), rows


def _cmd_count(args, parser) -> int:
    ws = _Workspace(args, parser)
    ws.load(need_text=False)
    patterns = _read_patterns(parser, args)
    prefix, rows = _pattern_rows(patterns, lambda pat: [(ws.index.count(pat),)])
    _emit_rows(args, prefix + ["count"], rows)
    return EXIT_OK


def _cmd_locate(args, parser) -> int:
    ws = _Workspace(args, parser)
    ws.load(need_text=False)
    patterns = _read_patterns(parser, args)
    prefix, rows = _pattern_rows(
        patterns, lambda pat: [(pos,) for pos in sorted(ws.index.locate(pat))])
    _emit_rows(args, prefix + ["position"], rows)
    return EXIT_OK


def _cmd_lems(args, parser) -> int:
    if args.min_length < 1:
        parser.error("--min-length must be >= 1")
    ws = _Workspace(args, parser)
    if not args.direct and getattr(args, "index", None) and args.text is None:
        parser.error("lems from a serialized index requires --direct "
                     "(matching statistics need the text)")
    ws.load(need_text=not args.direct, reason="lems")
    patterns = _read_patterns(parser, args)

    def run(pat: bytes):
        if args.direct:
            found = long_lem_query_direct(ws.index, pat, args.min_length)
        else:
            ms = compute_matching_statistics(ws.structures, ws.index, pat)
            found = long_lem_query(ws.index, pat, ms, args.min_length)
        return sorted(found)

    prefix, rows = _pattern_rows(patterns, run)
    _emit_rows(args, prefix + ["p_start", "t_start", "len"], rows)
    return EXIT_OK


def _cmd_mems(args, parser) -> int:
    if args.min_length < 1:
        parser.error("--min-length must be >= 1")
    text = load_text_file(args.text, fasta=args.fasta)
    patterns = _read_patterns(parser, args)
    prefix, rows = _pattern_rows(
        patterns,
        lambda pat: sorted(m for m in naive_mems(pat, text) if m.len >= args.min_length))
    _emit_rows(args, prefix + ["p_start", "t_start", "len"], rows)
    return EXIT_OK


def _random_text(rng: random.Random, max_n: int) -> bytes:
    sigma = rng.choice([2, 4])
    letters = b"acgt"[:sigma]
    n0 = rng.randint(1, max_n)
    if rng.random() < 0.5:
        return bytes(rng.choice(letters) for _ in range(n0))
    base = bytes(rng.choice(letters) for _ in range(max(2, n0 // 8)))
    rep = (base * (n0 // len(base) + 1))[:n0]
    return bytes(b if rng.random() > 0.03 else rng.choice(letters) for b in rep)


def _cmd_selftest(args, parser) -> int:
    rng = random.Random(args.seed)
    failures = 0

    def report(name: str, ok: bool, detail: str = "") -> None:
        nonlocal failures
        line = f"{'PASS' if ok else 'FAIL'}: {name}"
        if detail:
            line += f" ({detail})"
        print(line)
        if not ok:
            failures += 1

    mismatch = 0
    for _ in range(args.cases):
        text = validate_text(_random_text(rng, 300))
        s = build_suffix_structures(text)
        ix = build_optbwtrl(s, build_rlbwt(s), d=rng.choice([2, 3]))
        for tp in range(1, text.n + 1):
            v = ix.f_phi.interval_of(tp)
            x = ix.f_phi_inv.interval_of(tp)
            if (ix.phi_step(tp, v).pos != s.phi[tp]
                    or ix.phi_inv_step(tp, x).pos != s.phi_inv[tp]
                    or ix.plcp_at(tp, v) != s.plcp[tp]):
                mismatch += 1
        pat = _random_text(rng, 40).rstrip(b"$") or b"a"
        occ = naive_occurrences(pat, text)
        if ix.count(pat) != len(occ) or sorted(ix.locate(pat)) != occ:
            mismatch += 1
        min_len = rng.randint(1, 10)
        ms = compute_matching_statistics(s, ix, pat)
        got = set(long_lem_query(ix, pat, ms, min_len))
        got_direct = set(long_lem_query_direct(ix, pat, min_len))
        want = naive_lems(pat, text, min_len)
        if got != want or got_direct != want:
            mismatch += 1
        mems = {m for m in naive_mems(pat, text) if m.len >= min_len}
        if not mems <= want:
            mismatch += 1
    report("oracle equivalence (phi/plcp, count/locate, long LEMs, MEM containment)",
           mismatch == 0, f"{args.cases} cases, {mismatch} mismatches")
    return EXIT_OK if failures == 0 else 1


_COMMANDS = {
    "build": _cmd_build,
    "stats": _cmd_stats,
    "count": _cmd_count,
    "locate": _cmd_locate,
    "lems": _cmd_lems,
    "mems": _cmd_mems,
    "selftest": _cmd_selftest,
}


def run(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, parser)
    except InternalConsistencyError as exc:
        print(f"lemidx: internal consistency error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except IndexFormatError as exc:
        print(f"lemidx: malformed index: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except LemIndexError as exc:
        print(f"lemidx: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"lemidx: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
