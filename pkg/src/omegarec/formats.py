"""Textual artifact formats.

All artifacts are line oriented with whitespace-separated tokens; parsing is
strict and anything after the expected payload is an error.  Words on the
command line and in word lists write one token per letter joined by '.' when
letters are longer than one character and plain concatenation otherwise; '-'
spells the empty word.
"""

from __future__ import annotations

from typing import Iterable

from .buchi import BuchiAutomaton
from .certify import LowerBoundCertificate, Witness
from .errors import FormatError
from .recognizers import (
    FiniteWordRecognizer,
    Morphism,
    StrongRecognizer,
    UPWord,
    WeakRecognizer,
)
from .semigroups import FiniteSemigroup, LinkedPair, linked_pairs


def render_word(w: Iterable[str]) -> str:
    w = tuple(w)
    if not w:
        return "-"
    if all(len(a) == 1 for a in w):
        return "".join(w)
    return ".".join(w)


def parse_word(token: str) -> tuple[str, ...]:
    if token == "-":
        return ()
    if "." in token:
        return tuple(part for part in token.split(".") if part)
    return tuple(token)


def parse_up_word(u_token: str, v_token: str) -> UPWord:
    return UPWord(parse_word(u_token), parse_word(v_token))


class _Lines:
    def __init__(self, text: str):
        self.lines = [ln.strip() for ln in text.splitlines()]
        self.pos = 0

    def peek(self) -> str | None:
        while self.pos < len(self.lines) and not self.lines[self.pos]:
            self.pos += 1
        if self.pos >= len(self.lines):
            return None
        return self.lines[self.pos]

    def take(self) -> str:
        line = self.peek()
        if line is None:
            raise FormatError("unexpected end of input")
        self.pos += 1
        return line

    def expect_end(self):
        if self.peek() is not None:
            raise FormatError(f"trailing garbage: {self.peek()!r}")


def _ints(tokens: list[str], what: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers in {what}: {tokens!r}") from None


def _parse_semigroup_block(lines: _Lines) -> FiniteSemigroup:
    head = lines.take().split()
    if len(head) != 2 or head[0] != "semigroup":
        raise FormatError(f"expected 'semigroup <n>', got {' '.join(head)!r}")
    n = _ints(head[1:], "semigroup header")[0]
    if n <= 0:
        raise FormatError("semigroup size must be positive")
    rows = []
    for _ in range(n):
        row = _ints(lines.take().split(), "semigroup row")
        if len(row) != n:
            raise FormatError(f"semigroup row needs {n} entries, got {len(row)}")
        rows.append(row)
    names = None
    nxt = lines.peek()
    if nxt is not None and nxt.split()[0] == "names":
        tokens = lines.take().split()[1:]
        if len(tokens) != n:
            raise FormatError(f"names line needs {n} tokens, got {len(tokens)}")
        names = tokens
    return FiniteSemigroup.from_rows(rows, names=names)


def parse_semigroup(text: str) -> FiniteSemigroup:
    lines = _Lines(text)
    sg = _parse_semigroup_block(lines)
    lines.expect_end()
    return sg


def dump_semigroup(sg) -> str:
    out = [f"semigroup {sg.size}"]
    for s in range(sg.size):
        out.append(" ".join(str(x) for x in sg.row(s)))
    if getattr(sg, "names", None):
        out.append("names " + " ".join(sg.names))
    return "\n".join(out) + "\n"


def _parse_morphism_block(lines: _Lines):
    head = lines.take()
    if head != "morphism":
        raise FormatError(f"expected 'morphism', got {head!r}")
    alpha = lines.take().split()
    if not alpha or alpha[0] != "alphabet" or len(alpha) < 2:
        raise FormatError("expected 'alphabet <letters>'")
    alphabet = tuple(alpha[1:])
    image = {}
    for _ in alphabet:
        parts = lines.take().split()
        if len(parts) != 3 or parts[0] != "letter":
            raise FormatError(f"expected 'letter <a> <id>', got {' '.join(parts)!r}")
        if parts[1] in image:
            raise FormatError(f"duplicate letter line for {parts[1]!r}")
        image[parts[1]] = _ints(parts[2:], "letter image")[0]
    sg = _parse_semigroup_block(lines)
    for a in alphabet:
        if a not in image:
            raise FormatError(f"letter {a!r} missing an image line")
        if not 0 <= image[a] < sg.size:
            raise FormatError(f"letter image {image[a]} out of range")
    return Morphism(alphabet, sg, image)


def parse_recognizer(text: str):
    """Morphism followed by accept lines; the accept flavor picks the type:
    none (bare Morphism), accept-weak, accept-strong, or accept-fin."""
    lines = _Lines(text)
    morphism = _parse_morphism_block(lines)
    weak = []
    strong = {}
    fin = []
    while lines.peek() is not None:
        parts = lines.take().split()
        kind = parts[0]
        if kind == "accept-weak" and len(parts) == 3:
            s, e = _ints(parts[1:], "accept-weak")
            weak.append(LinkedPair(s, e))
        elif kind == "accept-strong" and len(parts) == 4:
            s, e, v = _ints(parts[1:], "accept-strong")
            if v not in (0, 1):
                raise FormatError("accept-strong value must be 0 or 1")
            strong[LinkedPair(s, e)] = bool(v)
        elif kind == "accept-fin" and len(parts) == 2:
            fin.append(_ints(parts[1:], "accept-fin")[0])
        else:
            raise FormatError(f"trailing garbage: {' '.join(parts)!r}")
    kinds = sum(1 for group in (weak, strong, fin) if group)
    if kinds > 1:
        raise FormatError("mixed accept flavors in one artifact")
    if weak:
        return WeakRecognizer(morphism, frozenset(weak))
    if strong:
        return StrongRecognizer(morphism, strong)
    if fin:
        return FiniteWordRecognizer(morphism, frozenset(fin))
    return morphism


def _dump_morphism_block(h: Morphism) -> list[str]:
    out = ["morphism", "alphabet " + " ".join(h.alphabet)]
    for a in h.alphabet:
        out.append(f"letter {a} {h.image[a]}")
    out.append(dump_semigroup(h.target).rstrip("\n"))
    return out


def dump_recognizer(rec) -> str:
    if isinstance(rec, Morphism):
        return "\n".join(_dump_morphism_block(rec)) + "\n"
    out = _dump_morphism_block(rec.h)
    if isinstance(rec, WeakRecognizer):
        for s, e in sorted(rec.accept):
            out.append(f"accept-weak {s} {e}")
    elif isinstance(rec, StrongRecognizer):
        image = set(rec.h.image_ids)
        for pair in linked_pairs(rec.h.target):
            if pair.s in image and pair.e in image:
                out.append(f"accept-strong {pair.s} {pair.e} {int(rec.accept[pair])}")
    elif isinstance(rec, FiniteWordRecognizer):
        for s in sorted(rec.accept):
            out.append(f"accept-fin {s}")
    else:
        raise FormatError(f"cannot serialize {type(rec).__name__}")
    return "\n".join(out) + "\n"


def parse_automaton(text: str) -> BuchiAutomaton:
    lines = _Lines(text)
    head = lines.take().split()
    if len(head) != 2 or head[0] != "automaton":
        raise FormatError(f"expected 'automaton <n>', got {' '.join(head)!r}")
    n = _ints(head[1:], "automaton header")[0]
    alpha = lines.take().split()
    if not alpha or alpha[0] != "alphabet" or len(alpha) < 2:
        raise FormatError("expected 'alphabet <letters>'")
    init = lines.take().split()
    if not init or init[0] != "initial":
        raise FormatError("expected 'initial <ids>'")
    final = lines.take().split()
    if not final or final[0] != "final":
        raise FormatError("expected 'final <ids>'")
    transitions = set()
    while lines.peek() is not None:
        parts = lines.take().split()
        if len(parts) != 4 or parts[0] != "trans":
            raise FormatError(f"trailing garbage: {' '.join(parts)!r}")
        p, q = _ints([parts[1], parts[3]], "transition")
        transitions.add((p, parts[2], q))
    return BuchiAutomaton(n, tuple(alpha[1:]), frozenset(transitions),
                          frozenset(_ints(init[1:], "initial")),
                          frozenset(_ints(final[1:], "final")))


def dump_automaton(aut: BuchiAutomaton) -> str:
    out = [f"automaton {aut.states}"]
    out.append("alphabet " + " ".join(aut.alphabet))
    out.append("initial " + " ".join(str(q) for q in sorted(aut.initial)))
    out.append("final " + " ".join(str(q) for q in sorted(aut.final)))
    for p, a, q in sorted(aut.transitions):
        out.append(f"trans {p} {a} {q}")
    return "\n".join(out) + "\n"


def parse_artifact(text: str):
    """Dispatch on the first token: semigroup, morphism, or automaton."""
    lines = _Lines(text)
    head = lines.peek()
    if head is None:
        raise FormatError("empty artifact")
    kind = head.split()[0]
    if kind == "semigroup":
        return parse_semigroup(text)
    if kind == "morphism":
        return parse_recognizer(text)
    if kind == "automaton":
        return parse_automaton(text)
    raise FormatError(f"unknown artifact kind {kind!r}")


def parse_word_list(text: str) -> list[tuple[str, ...]]:
    words = []
    for ln in text.splitlines():
        ln = ln.strip()
        if ln:
            words.append(parse_word(ln))
    return words


def dump_certificate(cert: LowerBoundCertificate) -> str:
    out = []
    for (u, v), w in cert.witnesses.items():
        parts = [f"pair {render_word(u)} {render_word(v)} kind {w.kind}",
                 f"x {render_word(w.x)}", f"y {render_word(w.y)}"]
        if w.kind == 1:
            parts.append(f"z {render_word(w.z)}")
        out.append(" ".join(parts))
    return "\n".join(out) + "\n"
