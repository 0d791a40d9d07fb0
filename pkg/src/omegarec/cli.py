"""Command line front end.

Artifacts go to standard output; statistics and diagnostics go to standard
error.  Exit codes: 0 ok, 1 negative result (non-member, non-equivalent, or
an uncertifiable pair), 2 error.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .buchi import BuchiAutomaton, ba_accepts_up, nfa_accepts, thm6_automaton
from .certify import certify_lower_bound
from .conversions import (
    ba_to_strong,
    ba_to_weak,
    nfa_to_recognizer,
    weak_to_ba,
    weak_to_strong_general,
    weak_to_strong_simple,
)
from .errors import CertificationError, FormatError, PreconditionError, CapacityError
from .formats import (
    dump_automaton,
    dump_certificate,
    dump_recognizer,
    dump_semigroup,
    parse_artifact,
    parse_word,
    parse_word_list,
    render_word,
)
from .recognizers import (
    FiniteWordRecognizer,
    Morphism,
    StrongRecognizer,
    UPWord,
    WeakRecognizer,
    complement,
    equivalent,
    syntactic_quotient,
    syntactic_quotient_finite,
    up_member_strong,
    up_member_weak,
)
from .semigroups import FiniteSemigroup, greens
from .table1 import table1_report
from .witnesses import leftzero_recognizer, theorem8_recognizer


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def _parse_word_args(tokens: list[str]) -> tuple[tuple[str, ...], tuple[str, ...] | None]:
    u = v = None
    for tok in tokens:
        if tok.startswith("u="):
            u = parse_word(tok[2:])
        elif tok.startswith("v="):
            v = parse_word(tok[2:])
        else:
            raise FormatError(f"word arguments look like u=<token> v=<token>, got {tok!r}")
    if u is None:
        raise FormatError("missing u=<token>")
    return u, v


def _size_of(obj) -> int:
    if isinstance(obj, BuchiAutomaton):
        return obj.states
    if isinstance(obj, Morphism):
        return obj.target.size
    if isinstance(obj, (WeakRecognizer, StrongRecognizer, FiniteWordRecognizer)):
        return obj.h.target.size
    return obj.size


def _stats(args, message: str):
    print(message, file=sys.stderr)


def _cmd_member(args) -> int:
    artifact = parse_artifact(_read(args.file))
    u, v = _parse_word_args(args.word)
    if isinstance(artifact, BuchiAutomaton):
        if v is None:
            result = nfa_accepts(artifact, u)
        else:
            result = ba_accepts_up(artifact, UPWord(u, v))
    elif isinstance(artifact, WeakRecognizer):
        if v is None:
            raise FormatError("an omega-word needs v=<token>")
        result = up_member_weak(artifact, UPWord(u, v))
    elif isinstance(artifact, StrongRecognizer):
        if v is None:
            raise FormatError("an omega-word needs v=<token>")
        result = up_member_strong(artifact, UPWord(u, v))
    elif isinstance(artifact, FiniteWordRecognizer):
        if v is not None:
            raise FormatError("finite-word recognizers take u=<token> only")
        result = artifact.member(u)
    else:
        raise FormatError("member needs a recognizer or an automaton")
    print("true" if result else "false")
    return 0 if result else 1


_CONVERSIONS = {
    "ba-weak": (BuchiAutomaton, ba_to_weak, dump_recognizer),
    "ba-strong": (BuchiAutomaton, ba_to_strong, dump_recognizer),
    "nfa-rec": (BuchiAutomaton, nfa_to_recognizer, dump_recognizer),
    "weak-ba": (WeakRecognizer, weak_to_ba, dump_automaton),
    "weak-strong": (WeakRecognizer, weak_to_strong_general, dump_recognizer),
    "weak-strong-simple": (WeakRecognizer, weak_to_strong_simple, dump_recognizer),
}


def _cmd_convert(args) -> int:
    want, fn, dump = _CONVERSIONS[args.kind]
    artifact = parse_artifact(_read(args.file))
    if not isinstance(artifact, want):
        raise FormatError(f"conversion {args.kind} expects a {want.__name__}")
    result = fn(artifact)
    _stats(args, f"sizes: in={_size_of(artifact)} out={_size_of(result)}")
    sys.stdout.write(dump(result))
    return 0


def _cmd_complement(args) -> int:
    artifact = parse_artifact(_read(args.file))
    if not isinstance(artifact, StrongRecognizer):
        raise FormatError("complement expects a strong recognizer")
    sys.stdout.write(dump_recognizer(complement(artifact)))
    return 0


def _cmd_minimize(args) -> int:
    artifact = parse_artifact(_read(args.file))
    if isinstance(artifact, StrongRecognizer):
        result, _ = syntactic_quotient(artifact)
    elif isinstance(artifact, FiniteWordRecognizer):
        result, _ = syntactic_quotient_finite(artifact)
    else:
        raise FormatError("minimize expects a strong or finite-word recognizer")
    _stats(args, f"sizes: in={_size_of(artifact)} out={_size_of(result)}")
    sys.stdout.write(dump_recognizer(result))
    return 0


def _strongify(artifact) -> StrongRecognizer:
    if isinstance(artifact, BuchiAutomaton):
        return ba_to_strong(artifact)
    if isinstance(artifact, WeakRecognizer):
        return weak_to_strong_general(artifact)
    if isinstance(artifact, StrongRecognizer):
        return artifact
    raise FormatError("equiv expects automata or weak/strong recognizers")


def _cmd_equiv(args) -> int:
    a = _strongify(parse_artifact(_read(args.left)))
    b = _strongify(parse_artifact(_read(args.right)))
    same = equivalent(a, b)
    print("equivalent" if same else "different")
    return 0 if same else 1


def _cmd_green(args) -> int:
    artifact = parse_artifact(_read(args.file))
    if not isinstance(artifact, FiniteSemigroup):
        raise FormatError("green expects a semigroup")
    data = greens(artifact)
    for label, classes in (("r", data.r_classes), ("l", data.l_classes),
                           ("j", data.j_classes), ("h", data.h_classes)):
        for cid, members in enumerate(classes):
            print(f"{label}-class {cid}: " + " ".join(str(s) for s in members))
    return 0


def _cmd_certify(args) -> int:
    words = parse_word_list(_read(args.words))
    artifact = parse_artifact(_read(args.oracle))
    if isinstance(artifact, BuchiAutomaton):
        oracle = lambda w: ba_accepts_up(artifact, w)
    elif isinstance(artifact, WeakRecognizer):
        oracle = lambda w: up_member_weak(artifact, w)
    elif isinstance(artifact, StrongRecognizer):
        oracle = lambda w: up_member_strong(artifact, w)
    else:
        raise FormatError("certify oracle must be an automaton or a recognizer")
    alphabet = artifact.alphabet if isinstance(artifact, BuchiAutomaton) else artifact.h.alphabet
    try:
        cert = certify_lower_bound(oracle, words, alphabet=alphabet, lmax=args.lmax,
                                   oracle_name=args.oracle)
    except CertificationError as exc:
        u, v = exc.pair
        print(f"uncertified pair: {render_word(u)} {render_word(v)}", file=sys.stderr)
        return 1
    _stats(args, f"certified bound: {cert.claimed_bound} (oracle {cert.oracle_name})")
    sys.stdout.write(dump_certificate(cert))
    return 0


def _cmd_witness(args) -> int:
    if args.family == "thm6":
        sys.stdout.write(dump_automaton(thm6_automaton(args.n)))
    elif args.family == "thm8":
        _, rec = theorem8_recognizer(args.n)
        sys.stdout.write(dump_recognizer(rec))
    else:
        sys.stdout.write(dump_recognizer(leftzero_recognizer(args.n)))
    return 0


def _cmd_table1(args) -> int:
    report = table1_report(args.n, out_dir=args.out_dir)
    sys.stdout.write(report)
    if args.out_dir:
        _stats(args, f"report and figure written to {args.out_dir}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omegarec",
        description="omega-regular languages via finite semigroups: membership, "
                    "conversions, complementation, and size-bound certification")
    parser.add_argument("--version", action="version", version=f"omegarec {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("member", help="decide membership of a word")
    p.add_argument("file")
    p.add_argument("--word", nargs="+", required=True, metavar="u=TOK [v=TOK]")
    p.set_defaults(fn=_cmd_member)

    p = sub.add_parser("convert", help="run one of the constructions")
    p.add_argument("kind", choices=sorted(_CONVERSIONS))
    p.add_argument("file")
    p.set_defaults(fn=_cmd_convert)

    p = sub.add_parser("complement", help="complement a strong recognizer")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_complement)

    p = sub.add_parser("minimize", help="syntactic quotient of a recognizer")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_minimize)

    p = sub.add_parser("equiv", help="language equivalence (strongifies inputs)")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(fn=_cmd_equiv)

    p = sub.add_parser("green", help="print Green's relation classes")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_green)

    p = sub.add_parser("certify", help="certify a word list pairwise distinct")
    p.add_argument("words", help="file with one word per line")
    p.add_argument("--oracle", required=True, help="automaton or recognizer file")
    p.add_argument("--lmax", type=int, default=2, help="context length cap")
    p.set_defaults(fn=_cmd_certify)

    p = sub.add_parser("witness", help="emit a witness-family artifact")
    p.add_argument("family", choices=["thm6", "thm8", "leftzero"])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_witness)

    p = sub.add_parser("table1", help="run the bound report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out-dir", default=None,
                   help="also write the report and a figure here")
    p.set_defaults(fn=_cmd_table1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (FormatError, PreconditionError, CapacityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
