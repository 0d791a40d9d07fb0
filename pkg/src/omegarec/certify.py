"""Lower-bound certification for weak recognizers.

Two nonempty words u, v must have distinct images under every morphism weakly
recognizing L whenever a context witness of one of two kinds holds:

  kind 1:  x u y z^w and x v y z^w disagree on membership (z nonempty),
  kind 2:  x (u y)^w in L while x (u y v y)^w and x (v y u y)^w are not
           (or the same with u and v exchanged).

A verified witness for every pair of a word list certifies the list size as a
lower bound on the size of any weakly recognizing semigroup for L.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

from .conversions import nfa_to_recognizer
from .errors import CertificationError, FormatError, PreconditionError
from .recognizers import UPWord, syntactic_quotient_finite, word

Oracle = Callable[[UPWord], bool]


@dataclass(frozen=True)
class Witness:
    kind: int
    x: tuple[str, ...]
    y: tuple[str, ...]
    z: tuple[str, ...] | None = None


def cached_oracle(oracle: Oracle) -> Oracle:
    memo: dict[UPWord, bool] = {}

    def wrapped(w: UPWord) -> bool:
        hit = memo.get(w)
        if hit is None:
            hit = memo[w] = oracle(w)
        return hit

    return wrapped


def certify_distinct(oracle: Oracle, u, v, witness: Witness) -> bool:
    """Check one witness; kind 1 accepts either membership orientation."""
    u, v = word(u), word(v)
    if not u or not v:
        raise PreconditionError("certified words must be nonempty")
    x, y = word(witness.x), word(witness.y)
    if witness.kind == 1:
        if not witness.z:
            raise FormatError("kind-1 witness requires a nonempty loop word z")
        z = word(witness.z)
        return oracle(UPWord(x + u + y, z)) != oracle(UPWord(x + v + y, z))
    if witness.kind == 2:
        for a, b in ((u, v), (v, u)):
            if (oracle(UPWord(x, a + y))
                    and not oracle(UPWord(x, a + y + b + y))
                    and not oracle(UPWord(x, b + y + a + y))):
                return True
        return False
    raise FormatError(f"unknown witness kind {witness.kind}")


@dataclass(frozen=True)
class LowerBoundCertificate:
    """Pairwise-distinctness certificate: one verified witness per word pair;
    the claimed bound is the number of words."""

    words: tuple[tuple[str, ...], ...]
    witnesses: dict[tuple[tuple[str, ...], tuple[str, ...]], Witness]
    oracle_name: str
    claimed_bound: int

    def verify(self, oracle: Oracle) -> bool:
        return all(certify_distinct(oracle, u, v, w)
                   for (u, v), w in self.witnesses.items())


def _contexts(alphabet: Sequence[str], max_len: int, min_len: int = 0):
    out = []
    for length in range(min_len, max_len + 1):
        out.extend(product(alphabet, repeat=length))
    return out


def certify_lower_bound(oracle: Oracle, words, *, alphabet: Sequence[str] | None = None,
                        lmax: int = 0, witnesses=None,
                        oracle_name: str = "oracle") -> LowerBoundCertificate:
    """Certify all pairs of the word list as pairwise distinct images.

    Witnesses may be supplied directly (a callable (u, v) -> Witness) when a
    family comes with proof-shaped contexts; otherwise they are searched with
    kind 1 before kind 2, contexts enumerated by total length then
    lexicographically, all context lengths capped by lmax (z nonempty).
    Raises CertificationError on the first pair with no verified witness.
    """
    words = [word(w) for w in words]
    oracle = cached_oracle(oracle)
    if witnesses is None:
        if alphabet is None:
            raise PreconditionError("witness search needs the alphabet")
        ctx = _contexts(alphabet, lmax)
        loops = _contexts(alphabet, max(lmax, 1), min_len=1)
        kind1 = sorted(product(ctx, ctx, loops),
                       key=lambda t: (len(t[0]) + len(t[1]) + len(t[2]), t))
        kind2 = sorted(product(ctx, ctx),
                       key=lambda t: (len(t[0]) + len(t[1]), t))

        def find(u, v):
            for x, y, z in kind1:
                w = Witness(1, x, y, z)
                if certify_distinct(oracle, u, v, w):
                    return w
            for x, y in kind2:
                w = Witness(2, x, y)
                if certify_distinct(oracle, u, v, w):
                    return w
            return None
    else:
        def find(u, v):
            w = witnesses(u, v)
            if w is not None and certify_distinct(oracle, u, v, w):
                return w
            return None

    table = {}
    for a in range(len(words)):
        for b in range(a + 1, len(words)):
            u, v = words[a], words[b]
            w = find(u, v)
            if w is None:
                raise CertificationError(u, v)
            table[(u, v)] = w
    return LowerBoundCertificate(tuple(words), table, oracle_name, len(words))


def prop4_transfer(aut, a: str):
    """Finite-to-infinite bound transfer through a final-loop letter.

    When letter a moves into final states only as a self-loop at each final
    state, the syntactic semigroup size of the finite-word language is a
    certified lower bound for every semigroup weakly recognizing the Buchi
    language of the same automaton.  Returns (precondition holds, bound)."""
    for q in range(aut.states):
        for f in aut.final:
            if ((q, a, f) in aut.transitions) != (q == f):
                return False, None
    quotient, _ = syntactic_quotient_finite(nfa_to_recognizer(aut))
    return True, quotient.h.target.size
