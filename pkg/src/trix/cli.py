"""trix command line: build, stats, search, bidi, gen, verify.

Exit status: 0 success, 1 search miss or verification failure, 2 usage,
parse or size-limit errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import bundle, gen, oracle
from .index import TrieIndex
from .search import SymbolError, count, find, occurrences, parse_script, run_script
from .trie import TrieError, ascii_charset, encode_words, format_trie, parse_trie, trie_from_strings
from .verify import Verifier, minimize, seeded_instance, seeded_trie

OK, FAIL, USAGE = 0, 1, 2


class CliError(Exception):
    """Reported on stderr with exit status 2."""


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def index_from_bytes(data: bytes, charset: str | None = None) -> TrieIndex:
    """Accepts an index file, a TRIE v1 file or a newline-delimited word list."""
    if data.startswith(bundle.MAGIC):
        return bundle.loads(data)
    text = data.decode("utf-8")
    if text.lstrip().startswith("TRIE"):
        return TrieIndex.build(parse_trie(text))
    words = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if charset == "ascii":
        if any(not w.isascii() for w in words):
            raise TrieError("--charset ascii given but the input has non-ASCII characters")
        chars = ascii_charset(words)
        return TrieIndex.build(trie_from_strings(encode_words(words, chars), len(chars)), chars)
    try:
        seqs = [tuple(int(tok) for tok in w.replace(",", " ").split()) for w in words]
    except ValueError:
        raise TrieError("word list is not integer symbols; pass --charset ascii for text") from None
    if any(a < 1 for s in seqs for a in s):
        raise TrieError("symbols must be positive integers")
    return TrieIndex.build(trie_from_strings(seqs))


def load_index(path: str, charset: str | None = None) -> TrieIndex:
    return index_from_bytes(_read(path), charset)


def _force_limit() -> None:
    os.environ["TRIX_LIMIT"] = str(2 ** 62)


# -- subcommands ---------------------------------------------------------------

def cmd_build(args: argparse.Namespace) -> int:
    index = load_index(args.input, args.charset)
    data = bundle.dumps(index)
    if args.out == "-":
        sys.stdout.buffer.write(data)
    else:
        Path(args.out).write_bytes(data)
        print(f"wrote {args.out}: n={index.aug.n} stree_nodes={index.st.node_count} "
              f"bytes={len(data)}")
    return OK


def stats_report(index: TrieIndex, full: bool) -> dict[str, int]:
    aug = index.aug
    if full:
        report = oracle.measure(aug)
    else:
        report = {
            "n": aug.n, "n_aug": aug.n_aug, "sigma": aug.sigma,
            "stree_b_nodes": index.st.node_count,
            "stree_b_edges": index.st.edge_count,
            "sa_b_len": len(index.st.sa),
        }
    for k, v in index.dawg.storage().items():
        report[f"implicit_{k}"] = v
    return report


def cmd_stats(args: argparse.Namespace) -> int:
    if args.force:
        _force_limit()
    index = load_index(args.input, args.charset)
    if args.full and index.aug.n_aug > oracle.desk_limit():
        raise CliError(f"{index.aug.n_aug} nodes exceeds the desk-scale limit "
                       f"{oracle.desk_limit()}; use --force or raise TRIX_LIMIT")
    report = stats_report(index, args.full)
    if args.json:
        print(json.dumps(report, sort_keys=False))
    else:
        width = max(len(k) for k in report)
        for k, v in report.items():
            print(f"{k:<{width}}  {v}")
    return OK


def _print_hits(pairs: list[tuple[int, int]]) -> None:
    print(f"count {len(pairs)}")
    for u, v in sorted(pairs):
        print(f"{u} {v}")


def cmd_search(args: argparse.Namespace) -> int:
    index = load_index(args.index, args.charset)
    try:
        pattern = index.encode(args.pattern)
        for a in pattern:
            if not 1 <= a <= index.sigma:
                raise SymbolError(f"symbol {a} outside [1..{index.sigma}]")
    except (ValueError, SymbolError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("count 0")
        return FAIL
    hits = find(index, pattern)
    _print_hits(hits)
    return OK if hits else FAIL


def cmd_bidi(args: argparse.Namespace) -> int:
    index = load_index(args.index, args.charset)
    text = _read(args.script).decode("utf-8")
    try:
        ops = parse_script(text, index)
        cursor, done = run_script(index, ops)
    except SymbolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("count 0")
        return FAIL
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if cursor is None:
        print(f"fail at step {done + 1}")
        print("count 0")
        return FAIL
    print(f"ok after {done} steps, length {cursor.length}")
    _print_hits(occurrences(index, cursor))
    return OK if count(index, cursor) else FAIL


def cmd_gen(args: argparse.Namespace) -> int:
    fn, names = gen.FAMILIES[args.family]
    missing = [k for k in names if getattr(args, k) is None and k != "seed"]
    if missing:
        raise CliError(f"{args.family} needs --{' --'.join(missing)}")
    kwargs = {k: (getattr(args, k) if getattr(args, k) is not None else 0) for k in names}
    try:
        trie = fn(**kwargs)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    text = format_trie(trie)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return OK


def _failing(trie) -> bool:
    return not all(r.ok for r in Verifier(TrieIndex.build(trie)).run(50))


def _report(label: str, results, out) -> bool:
    ok = all(r.ok for r in results)
    print(f"{'PASS' if ok else 'FAIL'} {label}", file=out)
    for r in results:
        if not r.ok:
            print(f"  {r.name}:", file=out)
            for msg in r.failures:
                print(f"    {msg}", file=out)
    return ok


def cmd_verify(args: argparse.Namespace) -> int:
    if args.force:
        _force_limit()
    if args.index is None and args.seeds is None:
        raise CliError("verify needs an index file or --seeds")
    all_ok = True
    if args.index is not None:
        index = load_index(args.index, args.charset)
        if index.aug.n_aug > oracle.desk_limit():
            raise CliError(f"{index.aug.n_aug} nodes exceeds the desk-scale limit; use --force")
        results = Verifier(index).run()
        ok = _report(args.index, results, sys.stdout)
        if not ok:
            trie = index.trie
            if _failing(trie):
                small = minimize(trie, _failing)
                print("minimized counterexample:")
                sys.stdout.write(format_trie(small))
            else:
                print("a fresh build of the same trie passes: the stored index is corrupt")
        all_ok &= ok
    for seed in range(args.seeds or 0):
        n, sigma = seeded_instance(seed)
        trie = seeded_trie(seed)
        results = Verifier(TrieIndex.build(trie)).run(args.scripts)
        ok = _report(f"seed {seed} (n={n}, sigma={sigma})", results, sys.stdout)
        if not ok:
            small = minimize(trie, _failing)
            print("minimized counterexample:")
            sys.stdout.write(format_trie(small))
        all_ok &= ok
    print("all checks passed" if all_ok else "verification FAILED")
    return OK if all_ok else FAIL


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trix", description="Trie suffix-tree / implicit DAWG index.")
    sub = p.add_subparsers(dest="command", required=True)

    def charset(sp):
        sp.add_argument("--charset", choices=["ascii"],
                        help="map characters of a word list to symbols by rank")

    sp = sub.add_parser("build", help="build an index file")
    sp.add_argument("input", help="TRIE v1 file or word list ('-' for stdin)")
    sp.add_argument("--out", "-o", required=True)
    charset(sp)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("stats", help="size statistics")
    sp.add_argument("input", help="index, TRIE v1 file or word list")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--full", action="store_true", help="add oracle-backed counts of all six structures")
    sp.add_argument("--force", action="store_true", help="ignore the desk-scale node limit")
    charset(sp)
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("search", help="all occurrences of a pattern")
    sp.add_argument("index")
    sp.add_argument("pattern", help="characters (with a charset) or integer symbols")
    charset(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("bidi", help="run an L/R extension script")
    sp.add_argument("index")
    sp.add_argument("script", help="file with 'L <sym>' / 'R <sym>' lines ('-' for stdin)")
    charset(sp)
    sp.set_defaults(func=cmd_bidi)

    sp = sub.add_parser("gen", help="write a generated trie as TRIE v1")
    sp.add_argument("family", choices=sorted(gen.FAMILIES))
    for name in ("n", "sigma", "k", "m", "depth", "seed"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--out", "-o")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="run the oracle invariant suite")
    sp.add_argument("index", nargs="?")
    sp.add_argument("--seeds", type=int, help="also check this many seeded random tries")
    sp.add_argument("--scripts", type=int, default=200, help="search scripts per instance")
    sp.add_argument("--force", action="store_true")
    charset(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (CliError, TrieError, bundle.BundleError, oracle.OracleLimitError,
            UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
