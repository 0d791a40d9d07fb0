"""Witness families for the desk-scale bound experiments.

Each family pairs a constructor with the proof-shaped distinguishing contexts
used by the certification engine.
"""

from __future__ import annotations

from string import ascii_lowercase

from .buchi import _bits, relation_mask, relation_token, thm6_word_set
from .certify import Witness
from .errors import PreconditionError
from .recognizers import LinkedPair, Morphism, WeakRecognizer
from .semigroups import FiniteSemigroup


def leftzero_recognizer(n: int) -> WeakRecognizer:
    """Left-zero semigroup on n letters with identity images and the diagonal
    accepting pairs; the language is "the first letter occurs infinitely
    often"."""
    if not 1 <= n <= 26:
        raise PreconditionError("letter alphabet supports 1..26")
    letters = tuple(ascii_lowercase[:n])
    rows = [[i] * n for i in range(n)]
    sg = FiniteSemigroup.from_rows(rows, names=letters)
    h = Morphism(letters, sg, {a: i for i, a in enumerate(letters)})
    accept = frozenset(LinkedPair(i, i) for i in range(n))
    return WeakRecognizer(h, accept)


def leftzero_word(n: int, b: str, rest: set[str] | frozenset[str]) -> tuple[str, ...]:
    """Marker word: letter b followed by the letters of rest in alphabetical
    order (b itself excluded)."""
    letters = set(ascii_lowercase[:n])
    if b not in letters or not set(rest) <= letters - {b}:
        raise PreconditionError("marker letters outside the alphabet")
    return (b,) + tuple(sorted(rest))


def leftzero_certificate_words(n: int) -> list[tuple[str, ...]]:
    """The n * 2^(n-1) marker words, in (letter, subset) order."""
    letters = ascii_lowercase[:n]
    out = []
    for b in letters:
        others = [a for a in letters if a != b]
        for mask in range(2 ** len(others)):
            rest = {others[k] for k in _bits(mask)}
            out.append(leftzero_word(n, b, rest))
    return out


def theorem8_recognizer(n: int):
    """The 4n+3-element semigroup weakly recognizing the union over i <= n of
    (b a^i b A*)^w, with accepting pairs ([b a^i b], [b a^i b]).

    Elements track the shape of a word's first a-run: open forms a^i, b a^i
    and b keep multiplying into the run; closed forms a^i b, b a^i b and the
    bb class absorb everything to their right; an overflowing open run
    collapses to 0 without a leading b and into the bb class with one.
    Returns the semigroup together with the recognizer."""
    if n < 1:
        raise PreconditionError("need n >= 1")
    # element encoding: (lead_b, run_length, closed); specials b, bb, 0
    B, BB, ZERO = (1, 0, 0), (1, 0, 1), "0"
    order = ([(0, i, 0) for i in range(1, n + 1)]
             + [(0, i, 1) for i in range(1, n + 1)]
             + [(1, i, 0) for i in range(1, n + 1)]
             + [(1, i, 1) for i in range(1, n + 1)]
             + [B, BB, ZERO])
    index = {e: k for k, e in enumerate(order)}

    def mul(left, right):
        if left == ZERO:
            return ZERO
        lead, run, done = left
        if done:
            return left
        if right == ZERO:
            return BB if lead else ZERO
        rlead, rrun, rdone = right
        if rlead:
            # right begins with b: the left run closes
            return (lead, run, 1) if run else BB
        total = run + rrun
        if total > n:
            return BB if lead else ZERO
        return (lead, total, rdone)

    names = ([f"a{i}" for i in range(1, n + 1)]
             + [f"a{i}b" for i in range(1, n + 1)]
             + [f"ba{i}" for i in range(1, n + 1)]
             + [f"ba{i}b" for i in range(1, n + 1)]
             + ["b", "bb", "0"])
    size = len(order)
    rows = [[index[mul(order[x], order[y])] for y in range(size)] for x in range(size)]
    sg = FiniteSemigroup.from_rows(rows, names=names)
    h = Morphism(("a", "b"), sg, {"a": index[(0, 1, 0)], "b": index[B]})
    accept = frozenset(LinkedPair(index[(1, i, 1)], index[(1, i, 1)])
                       for i in range(1, n + 1))
    return sg, WeakRecognizer(h, accept)


def thm6_certificate_words(n: int):
    """All 2^(m*m) cell-set marker words for the binary witness automaton, in
    subset-bitmask order, plus the witness provider for their pairwise
    distinctness: for a cell (i, j) in the symmetric difference, the context
    a^(i-1) _ a^(n-j+1) followed by b^w separates the two marker words."""
    m = (n - 1) // 2
    cells = [(i, j) for i in range(1, m + 1) for j in range(1, m + 1)]
    sets = []
    words = []
    for mask in range(2 ** len(cells)):
        X = frozenset(cells[k] for k in _bits(mask))
        sets.append(X)
        words.append(tuple(thm6_word_set(n, X)))
    by_word = dict(zip(words, sets))

    def witness_for(u, v):
        X, Y = by_word[tuple(u)], by_word[tuple(v)]
        diff = sorted(X.symmetric_difference(Y))
        if not diff:
            return None
        i, j = diff[0]
        return Witness(1, ("a",) * (i - 1), ("a",) * (n - j + 1), ("b",))

    return words, witness_for


def full_certificate_words(n: int):
    """The single-letter marker words of the full automaton plus the witness
    provider: for (p, q) in the symmetric difference of two letters, stated as
    relations, the context {(p,p)} _ {(q,q)} followed by the diagonal loop
    letter separates them."""
    letters = [relation_token(n, t) for t in range(2 ** (n * n))]
    words = [(tok,) for tok in letters]
    diag = relation_token(n, sum(1 << (q * n + q) for q in range(n)))

    def witness_for(u, v):
        x = relation_mask(n, u[0])
        y = relation_mask(n, v[0])
        diff = x ^ y
        if not diff:
            return None
        b = next(_bits(diff))
        p, q = divmod(b, n)
        return Witness(1, (relation_token(n, 1 << (p * n + p)),),
                       (relation_token(n, 1 << (q * n + q)),), (diag,))

    return words, witness_for
