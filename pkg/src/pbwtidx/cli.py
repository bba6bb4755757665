"""Command-line front end: build, query, dump, with oracle-backed --verify.

Exit codes: 0 on success (an empty query result is a success), 1 on I/O
failure or a --verify mismatch, 2 on usage or validation errors.
"""

import argparse
import os
import sys

from .alphabet import Alphabet
from .collection import parse_collection
from .errors import ModeMismatchError, PbwtIndexError, PermutationNotStoredError
from .fm import FmIndex, SentinelText, fm_build, count_trace, lf_step, locate_with_steps
from .indexfile import load_index, save_index
from .oracle import naive_positional, naive_substring
from .positional import PositionalIndex, StoragePolicy, build_index, default_stride, query

_RED = "\x1b[31m"
_RESET = "\x1b[0m"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pbwtidx",
                                     description="Positional and substring search indexes")
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="build an index file")
    build.add_argument("--mode", choices=["positional", "substring"], required=True)
    build.add_argument("--input", help="collection file, one string per line; - for stdin")
    build.add_argument("--text", help="text to index (path or literal), substring mode")
    build.add_argument("--alphabet", default="ACGT", help="ordered symbol string (default ACGT)")
    build.add_argument("--policy", choices=["full", "sampled", "none"], default="sampled")
    build.add_argument("--stride", type=int, help="sampled-policy stride (default ceil(lg n))")
    build.add_argument("--sa-stride", type=int, dest="sa_stride",
                       help="suffix-array sample spacing (default ceil(lg n))")
    build.add_argument("--output", required=True, help="index file to write")
    build.set_defaults(handler=cmd_build)

    qry = sub.add_parser("query", help="query an index file")
    qsub = qry.add_subparsers(dest="query_type", required=True)

    qpos = qsub.add_parser("positional", help="strings containing the pattern at a position")
    qpos.add_argument("--index", required=True)
    qpos.add_argument("--pattern", required=True)
    qpos.add_argument("--position", type=int, required=True)
    qpos.add_argument("--strategy", choices=["binary", "backward", "rebuild"], default="backward")
    qpos.add_argument("--trace", action="store_true", help="print j f_j l_j per backward step")
    qpos.add_argument("--verify", action="store_true", help="cross-check against the brute-force scan")
    qpos.add_argument("--count-only", action="store_true", dest="count_only")
    qpos.add_argument("--sorted", action="store_true", dest="sorted_output",
                      help="sort matches ascending instead of rank order")
    qpos.set_defaults(handler=cmd_query_positional)

    qsub_p = qsub.add_parser("substring", help="occurrence positions of the pattern in the text")
    qsub_p.add_argument("--index", required=True)
    qsub_p.add_argument("--pattern", required=True)
    qsub_p.add_argument("--trace", action="store_true", help="print step f l per backward step")
    qsub_p.add_argument("--verify", action="store_true")
    qsub_p.add_argument("--count-only", action="store_true", dest="count_only")
    qsub_p.set_defaults(handler=cmd_query_substring)

    dump = sub.add_parser("dump", help="print index internals")
    dump.add_argument("what", choices=["pi", "pbwt", "bwt"])
    dump.add_argument("--index", required=True)
    dump.set_defaults(handler=cmd_dump)

    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def cmd_build(args) -> int:
    alphabet = Alphabet(symbols=args.alphabet)
    if args.mode == "positional":
        if not args.input:
            raise PbwtIndexError("positional build needs --input")
        collection = parse_collection(_read_input(args.input), alphabet)
        if args.policy == "sampled":
            policy = StoragePolicy.sampled(args.stride or default_stride(collection.n))
        else:
            if args.stride is not None:
                raise PbwtIndexError(f"--stride only applies to the sampled policy, not {args.policy!r}")
            policy = StoragePolicy(args.policy)
        index = build_index(collection, policy)
        written = save_index(index, args.output)
        policy_desc = policy.kind + (f"(stride={policy.stride})" if policy.stride else "")
        print(f"n={collection.n} len={collection.length} sigma={alphabet.sigma} "
              f"policy={policy_desc} bytes={written}")
        return 0
    if not args.text:
        raise PbwtIndexError("substring build needs --text")
    literal = args.text
    if os.path.exists(literal):
        with open(literal, "r", encoding="ascii") as fh:
            literal = fh.read().strip()
    st = SentinelText(text=literal, alphabet=alphabet)
    stride = args.sa_stride or default_stride(st.n)
    index = fm_build(st, stride)
    written = save_index(index, args.output)
    print(f"n={st.n} sigma={alphabet.sigma} sa-stride={stride} bytes={written}")
    return 0


def _load_positional(path: str) -> PositionalIndex:
    index = load_index(path)
    if not isinstance(index, PositionalIndex):
        raise ModeMismatchError("index was built for substring queries")
    return index


def _load_substring(path: str) -> FmIndex:
    index = load_index(path)
    if not isinstance(index, FmIndex):
        raise ModeMismatchError("index was built for positional queries")
    return index


def _interval_fields(interval) -> str:
    if interval.is_empty:
        return "- -"
    return f"{interval.f} {interval.l}"


def cmd_query_positional(args) -> int:
    index = _load_positional(args.index)
    interval, matches, trace = query(index, args.pattern, args.position,
                                     strategy=args.strategy, with_trace=args.trace)
    if args.trace and trace:
        for j, step in trace:
            print(f"{j} {_interval_fields(step)}")
    if args.count_only:
        print(interval.width)
    else:
        for i in sorted(matches) if args.sorted_output else matches:
            print(i)
    if args.verify:
        expected = naive_positional(index.collection, args.pattern, args.position)
        if sorted(matches) != expected:
            print(f"verify: MISMATCH index={sorted(matches)} oracle={expected}", file=sys.stderr)
            return 1
    return 0


def cmd_query_substring(args) -> int:
    index = _load_substring(args.index)
    trace = count_trace(index, args.pattern)
    interval = trace[-1][1]
    if args.trace:
        for step, iv in trace:
            print(f"{step} {_interval_fields(iv)}")
    positions, _ = locate_with_steps(index, interval)
    if args.count_only:
        print(interval.width)
    else:
        for p in sorted(positions):
            print(p)
    if args.verify:
        expected = naive_substring(index.text, args.pattern)
        if sorted(positions) != expected:
            print(f"verify: MISMATCH index={sorted(positions)} oracle={expected}", file=sys.stderr)
            return 1
    return 0


def _color_enabled() -> bool:
    mode = os.environ.get("PBWT_IDX_COLOR", "auto").strip().lower()
    if mode == "never":
        return False
    return sys.stdout.isatty()


def cmd_dump(args) -> int:
    index = load_index(args.index)
    if args.what == "bwt":
        if not isinstance(index, FmIndex):
            raise ModeMismatchError("dump bwt needs a substring index")
        if _color_enabled():
            # a BWT character sits on the sampling grid exactly when its
            # LF image is a sampled row, mirroring the highlighted figures
            chars = []
            for row, c in enumerate(index.bwt):
                if lf_step(index, row) in index.sa_samples:
                    chars.append(f"{_RED}{c}{_RESET}")
                else:
                    chars.append(c)
            print("".join(chars))
        else:
            print(index.bwt)
        return 0
    if not isinstance(index, PositionalIndex):
        raise ModeMismatchError(f"dump {args.what} needs a positional index")
    if args.what == "pi":
        for j in range(index.length):
            if j not in index.stored_perms:
                raise PermutationNotStoredError(
                    f"pi_{j} is not retained under policy {index.policy.kind!r}; rebuild with --policy full")
        for i in range(index.n):
            print("\t".join(str(int(index.stored_perms[j][i])) for j in range(index.length)))
        return 0
    for i in range(index.n):
        print("\t".join(index.matrix.column_string(j)[i] for j in range(index.length)))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except PbwtIndexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint():
    raise SystemExit(main())
