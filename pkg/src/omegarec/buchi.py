"""Nondeterministic finite automata with finite-word and Buchi acceptance.

State-set arithmetic and word profiles use row bitmasks (row p of a profile is
an integer whose bit q says whether a run p -> q exists).  Extended profiles
carry a second bitmask layer marking runs that visit a final state; a run of
length >= 1 counts a final visit at positions 1..end (endpoint included, start
only if revisited), which makes profile composition a morphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import CapacityError, PreconditionError
from .recognizers import UPWord, word


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class BuchiAutomaton:
    states: int
    alphabet: tuple[str, ...]
    transitions: frozenset[tuple[int, str, int]]
    initial: frozenset[int]
    final: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "final", frozenset(self.final))
        if len(set(self.alphabet)) != len(self.alphabet):
            raise PreconditionError("alphabet letters must be distinct")
        letters = set(self.alphabet)
        for p, a, q in self.transitions:
            if not (0 <= p < self.states and 0 <= q < self.states):
                raise PreconditionError(f"transition ({p}, {a!r}, {q}) out of range")
            if a not in letters:
                raise PreconditionError(f"transition letter {a!r} not in alphabet")
        for q in self.initial | self.final:
            if not 0 <= q < self.states:
                raise PreconditionError(f"state {q} out of range")

    @cached_property
    def _letter_rows(self) -> dict[str, tuple[int, ...]]:
        rows = {a: [0] * self.states for a in self.alphabet}
        for p, a, q in self.transitions:
            rows[a][p] |= 1 << q
        return {a: tuple(r) for a, r in rows.items()}

    @cached_property
    def _initial_mask(self) -> int:
        return sum(1 << q for q in self.initial)

    @cached_property
    def _final_mask(self) -> int:
        return sum(1 << q for q in self.final)


@dataclass(frozen=True)
class TransitionProfile:
    """Word profile: reach[p] bit q = some run p -> q; final_reach marks runs
    that additionally visit a final state (always a subset of reach)."""

    dim: int
    reach: tuple[int, ...]
    final_reach: tuple[int, ...]

    def entry(self, p: int, q: int) -> int:
        if (self.final_reach[p] >> q) & 1:
            return 2
        if (self.reach[p] >> q) & 1:
            return 1
        return 0

    def compose(self, other: "TransitionProfile") -> "TransitionProfile":
        reach = []
        fin = []
        for p in range(self.dim):
            r = 0
            f = 0
            for q in _bits(self.reach[p]):
                r |= other.reach[q]
                f |= other.final_reach[q]
            for q in _bits(self.final_reach[p]):
                f |= other.reach[q]
            reach.append(r)
            fin.append(f)
        return TransitionProfile(self.dim, tuple(reach), tuple(fin))


def identity_profile(dim: int) -> TransitionProfile:
    return TransitionProfile(dim, tuple(1 << q for q in range(dim)), (0,) * dim)


def letter_profile(aut: BuchiAutomaton, a: str, extended: bool = False) -> TransitionProfile:
    rows = aut._letter_rows
    if a not in rows:
        raise PreconditionError(f"unknown letter {a!r}")
    reach = rows[a]
    if extended:
        fmask = aut._final_mask
        fin = tuple(r & fmask for r in reach)
    else:
        fin = (0,) * aut.states
    return TransitionProfile(aut.states, reach, fin)


def profile(aut: BuchiAutomaton, w, extended: bool = False) -> TransitionProfile:
    w = word(w)
    if not w:
        raise PreconditionError("profiles are defined for nonempty words")
    acc = letter_profile(aut, w[0], extended)
    for a in w[1:]:
        acc = acc.compose(letter_profile(aut, a, extended))
    return acc


def profile_powers(m: TransitionProfile) -> list[TransitionProfile]:
    """Distinct powers m, m^2, ... up to the first repetition."""
    out = []
    seen = set()
    t = m
    while t not in seen:
        seen.add(t)
        out.append(t)
        t = t.compose(m)
    return out


def profile_idempotent(m: TransitionProfile) -> TransitionProfile:
    powers = profile_powers(m)
    for p in powers:
        if p.compose(p) == p:
            return p
    raise AssertionError("power orbit of a profile always contains an idempotent")


def nfa_accepts(aut: BuchiAutomaton, w) -> bool:
    """Finite-word acceptance by subset reachability; the empty word is
    accepted exactly when an initial state is final."""
    w = word(w)
    cur = aut._initial_mask
    rows = aut._letter_rows
    for a in w:
        if a not in rows:
            raise PreconditionError(f"unknown letter {a!r}")
        row = rows[a]
        nxt = 0
        for q in _bits(cur):
            nxt |= row[q]
        cur = nxt
        if not cur:
            return False
    return bool(cur & aut._final_mask)


def ba_accepts_up(aut: BuchiAutomaton, w: UPWord) -> bool:
    """Buchi acceptance of the ultimately periodic word u v^w.

    With m the extended profile of v, e the idempotent in its power orbit and
    p the extended profile of u, the word is accepted exactly when some state
    q with a final-visiting e-loop (entry (q, q) = 2) is reachable from an
    initial state through p composed with a power of m and then e.
    """
    m = profile(aut, w.v, extended=True)
    e = profile_idempotent(m)
    diag = 0
    for q in range(aut.states):
        if (e.final_reach[q] >> q) & 1:
            diag |= 1 << q
    if not diag:
        return False
    pref = profile(aut, w.u, extended=True) if w.u else None
    candidates = [e] + [mp.compose(e) for mp in profile_powers(m)]
    for tail in candidates:
        t = pref.compose(tail) if pref is not None else tail
        reach = 0
        for q0 in aut.initial:
            reach |= t.reach[q0]
        if reach & diag:
            return True
    return False


def _hex_width(n: int) -> int:
    return max(1, (n * n + 3) // 4)


def relation_token(n: int, mask: int) -> str:
    """Stable token for a subset of Q x Q, bit (p, q) at position p*n+q."""
    return "T" + format(mask, f"0{_hex_width(n)}x")


def relation_mask(n: int, token: str) -> int:
    if not token.startswith("T"):
        raise PreconditionError(f"not a relation token: {token!r}")
    return int(token[1:], 16)


def full_automaton(n: int, initial: Iterable[int] | None = None,
                   final: Iterable[int] | None = None) -> BuchiAutomaton:
    """Automaton over the alphabet of all state relations: letter T moves
    p -> q exactly when (p, q) is in T.  Guarded to n <= 3 since the alphabet
    has 2^(n*n) letters."""
    if n > 3:
        raise CapacityError("full automaton alphabet grows as 2^(n*n); n <= 3 only")
    if n < 1:
        raise PreconditionError("need at least one state")
    initial = frozenset(range(n)) if initial is None else frozenset(initial)
    final = frozenset(range(n)) if final is None else frozenset(final)
    alphabet = [relation_token(n, t) for t in range(2 ** (n * n))]
    transitions = set()
    for t in range(2 ** (n * n)):
        tok = alphabet[t]
        for b in _bits(t):
            transitions.add((b // n, tok, b % n))
    return BuchiAutomaton(n, tuple(alphabet), frozenset(transitions), initial, final)


def full_letter_map(aut: BuchiAutomaton) -> dict[str, str]:
    """Letter-wise map into the full automaton over the same state set: each
    letter goes to the relation of its transitions."""
    n = aut.states
    masks = {a: 0 for a in aut.alphabet}
    for p, a, q in aut.transitions:
        masks[a] |= 1 << (p * n + q)
    return {a: relation_token(n, m) for a, m in masks.items()}


def full_word_map(aut: BuchiAutomaton, w) -> tuple[str, ...]:
    mapping = full_letter_map(aut)
    return tuple(mapping[a] for a in word(w))


def thm6_automaton(n: int) -> BuchiAutomaton:
    """Binary-alphabet witness automaton: an a-cycle of length m = (n-1)/2 on
    the first m states, an a-cycle of length m+1 on the rest, b-self-loops on
    every state and the single crossing (m, b, m+1); initial state 1, final
    state n (1-based)."""
    if n < 3 or n % 2 == 0:
        raise PreconditionError("this family needs an odd state count n >= 3")
    m = (n - 1) // 2
    transitions = set()
    for i in range(m):
        transitions.add((i, "a", (i + 1) % m))
    for i in range(m, n):
        transitions.add((i, "a", m + ((i - m + 1) % (m + 1))))
    for i in range(n):
        transitions.add((i, "b", i))
    transitions.add((m - 1, "b", m))
    return BuchiAutomaton(n, ("a", "b"), frozenset(transitions),
                          frozenset({0}), frozenset({n - 1}))


def thm6_word(n: int, i: int, j: int) -> str:
    """Marker word a^p b a^q for cell (i, j): it loops on every state and adds
    the single crossing run from state i to state j+m (1-based)."""
    m = (n - 1) // 2
    if not (1 <= i <= m and 1 <= j <= m):
        raise PreconditionError(f"cell ({i}, {j}) outside 1..{m}")
    p = (m + j - i) * m - i
    q = (m + i - j + 2) * m + i
    return "a" * p + "b" + "a" * q


def thm6_word_set(n: int, cells) -> str:
    """Concatenation of the cell markers of X in (i, j) order; the empty set
    maps to the identity-profile word a^(2m(m+1)) so that every set has a
    nonempty representative."""
    m = (n - 1) // 2
    cells = sorted(set(tuple(c) for c in cells))
    if not cells:
        return "a" * (2 * m * (m + 1))
    return "".join(thm6_word(n, i, j) for i, j in cells)


def thm8_reference_ba(n: int) -> BuchiAutomaton:
    """Reference acceptor for the union over i <= n of (b a^i b A*)^w, built
    as one naive block-verification component per i: verify an initial
    b a^i b block, then scan freely and nondeterministically commit to the
    next block at some later b.  Deliberately simple; serves as an oracle."""
    if n < 3:
        raise PreconditionError("reference family starts at n = 3")
    transitions = set()
    initial = set()
    final = set()
    base = 0
    for i in range(1, n + 1):
        start = base          # expects the opening b of the first block
        c = [base + 1 + k for k in range(i + 1)]   # c[k]: saw b a^k
        hit = base + i + 2    # just closed a b a^i b block (final)
        scan = base + i + 3   # inside the free part of a block
        initial.add(start)
        final.add(hit)
        transitions.add((start, "b", c[0]))
        for k in range(i):
            transitions.add((c[k], "a", c[k + 1]))
        transitions.add((c[i], "b", hit))
        for src in (hit, scan):
            transitions.add((src, "a", scan))
            transitions.add((src, "b", scan))
            transitions.add((src, "b", c[0]))
        base += i + 4
    return BuchiAutomaton(base, ("a", "b"), frozenset(transitions),
                          frozenset(initial), frozenset(final))
