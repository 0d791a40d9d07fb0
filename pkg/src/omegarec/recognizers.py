"""Morphisms into finite semigroups and recognition of omega-languages.

Words are sequences of letter tokens; plain strings work when every letter is
a single character.  An ultimately periodic word (u, v) denotes the infinite
word u v v v ...; an empty u is folded away as (v, vv ~ v) since morphisms are
only defined on nonempty words.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import PreconditionError
from .semigroups import (
    FiniteSemigroup,
    LinkedPair,
    idempotent_power,
    linked_pairs,
)


def word(w) -> tuple[str, ...]:
    """Normalize a word to a tuple of letter tokens."""
    if isinstance(w, str):
        return tuple(w)
    return tuple(w)


@dataclass(frozen=True)
class UPWord:
    """Ultimately periodic word u v^w; v must be nonempty."""

    u: tuple[str, ...]
    v: tuple[str, ...]

    def __init__(self, u, v):
        object.__setattr__(self, "u", word(u))
        object.__setattr__(self, "v", word(v))
        if not self.v:
            raise PreconditionError("loop part of an ultimately periodic word is empty")

    def __str__(self):
        render = lambda w: "".join(w) if all(len(a) == 1 for a in w) else ".".join(w)
        return f"{render(self.u)}({render(self.v)})^w"


@dataclass(eq=False)
class Morphism:
    """Letter-image map into a finite semigroup, extended to nonempty words."""

    alphabet: tuple[str, ...]
    target: FiniteSemigroup
    image: dict[str, int]
    image_ids: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        self.alphabet = tuple(self.alphabet)
        if len(set(self.alphabet)) != len(self.alphabet):
            raise PreconditionError("alphabet letters must be distinct")
        for a in self.alphabet:
            if a not in self.image:
                raise PreconditionError(f"morphism image missing letter {a!r}")
        # subsemigroup generated by the letter images
        seen = set(self.image[a] for a in self.alphabet)
        frontier = list(seen)
        while frontier:
            x = frontier.pop()
            for a in self.alphabet:
                p = self.target.mul(x, self.image[a])
                if p not in seen:
                    seen.add(p)
                    frontier.append(p)
        self.image_ids = tuple(sorted(seen))


def h_of(h: Morphism, w) -> int:
    """Image of a nonempty word: the left-to-right product of letter images."""
    w = word(w)
    if not w:
        raise PreconditionError("morphisms are defined on nonempty words only")
    try:
        acc = h.image[w[0]]
        for a in w[1:]:
            acc = h.target.mul(acc, h.image[a])
    except KeyError as exc:
        raise PreconditionError(f"unknown letter {exc.args[0]!r}") from None
    return acc


def _power_values(sg: FiniteSemigroup, m: int) -> list[int]:
    """Distinct values of m, m^2, m^3, ... up to the first repetition."""
    out = []
    seen = set()
    t = m
    while t not in seen:
        seen.add(t)
        out.append(t)
        t = sg.mul(t, m)
    return out


def _odd_power_values(sg: FiniteSemigroup, m: int) -> list[int]:
    """Distinct values of m^l for odd l, in increasing l order, first period."""
    m2 = sg.mul(m, m)
    out = []
    seen = set()
    t = m
    while t not in seen:
        seen.add(t)
        out.append(t)
        t = sg.mul(t, m2)
    return out


def up_in_class(h: Morphism, w: UPWord, pair: LinkedPair) -> bool:
    """Whether u v^w lies in the class [s][e]^w of the linked pair.

    Searches factorizations v = v1 v2 (v1 nonempty) together with powers
    h(u v^k v1) = s and h(v2 v^l v1) = e with l odd; the power searches run
    over the orbits of h(v)-powers, which are complete because those value
    sequences are eventually periodic.
    """
    if not w.u:
        return up_in_class(h, UPWord(w.v, w.v), pair)
    sg = h.target
    s, e = pair
    hu = h_of(h, w.u)
    m = h_of(h, w.v)
    powers = _power_values(sg, m)
    odd_powers = _odd_power_values(sg, m)
    for cut in range(1, len(w.v) + 1):
        hv1 = h_of(h, w.v[:cut])
        hv2 = h_of(h, w.v[cut:]) if cut < len(w.v) else None
        s_vals = {sg.mul(hu, hv1)}
        s_vals.update(sg.mul(sg.mul(hu, p), hv1) for p in powers)
        if s not in s_vals:
            continue
        for p in odd_powers:
            tail = sg.mul(p, hv1) if hv2 is None else sg.mul(hv2, sg.mul(p, hv1))
            if tail == e:
                return True
    return False


@dataclass(eq=False)
class WeakRecognizer:
    """Morphism plus a set of accepting linked pairs; the language is the
    union of the classes [s][e]^w over the accepting pairs."""

    h: Morphism
    accept: frozenset[LinkedPair]

    def __post_init__(self):
        self.accept = frozenset(LinkedPair(*p) for p in self.accept)
        sg = self.h.target
        for s, e in self.accept:
            if sg.mul(e, e) != e or sg.mul(s, e) != s:
                raise PreconditionError(f"accept entry ({s}, {e}) is not a linked pair")


class PrefixAbstraction:
    """Optional fast path for the equivalence sweep: a key function on prefix
    elements such that the membership of a class (s, e) with e idempotent
    depends on s only through key(s), together with the keyed membership."""

    def __init__(self, key, member):
        self.key = key
        self.member = member

    def flipped(self) -> "PrefixAbstraction":
        member = self.member
        return PrefixAbstraction(self.key, lambda k, e: not member(k, e))


class FlippedAccept:
    """Lazy complement of a lazy acceptance map."""

    def __init__(self, inner):
        self.inner = inner

    def __getitem__(self, pair) -> bool:
        return not self.inner[pair]


@dataclass(eq=False)
class StrongRecognizer:
    """Morphism plus a total acceptance map over the linked pairs of its
    image subsemigroup.  Saturation (each class entirely in or out of the
    language) is the construction contract of the conversion routines.

    The map is a dict for small targets; conversions over large generated
    closures install a lazy mapping (any object indexable by linked pairs)
    plus a PrefixAbstraction for the equivalence sweep."""

    h: Morphism
    accept: object
    abstraction: PrefixAbstraction | None = None

    def __post_init__(self):
        if isinstance(self.accept, dict):
            self.accept = {LinkedPair(*k): bool(v) for k, v in self.accept.items()}
            image = set(self.h.image_ids)
            sg = self.h.target
            required = [p for p in linked_pairs(sg) if p.s in image and p.e in image]
            for p in required:
                if p not in self.accept:
                    raise PreconditionError(f"acceptance map misses image linked pair {p}")
            for p in self.accept:
                if p.s not in image or p.e not in image:
                    raise PreconditionError(f"acceptance map mentions non-image pair {p}")


@dataclass(eq=False)
class FiniteWordRecognizer:
    """Morphism plus accepted element ids; recognizes a language of finite words."""

    h: Morphism
    accept: frozenset[int]

    def __post_init__(self):
        self.accept = frozenset(self.accept)
        image = set(self.h.image_ids)
        if not self.accept <= image:
            raise PreconditionError("accepted elements must lie in the image subsemigroup")

    def member(self, w) -> bool:
        return h_of(self.h, w) in self.accept


def up_member_weak(rec: WeakRecognizer, w: UPWord) -> bool:
    """Disjunction of up_in_class over the accepting pairs, evaluated with
    the per-cut achievable value sets computed once instead of per pair."""
    if not w.u:
        return up_member_weak(rec, UPWord(w.v, w.v))
    if not rec.accept:
        return False
    h = rec.h
    sg = h.target
    hu = h_of(h, w.u)
    m = h_of(h, w.v)
    powers = _power_values(sg, m)
    odd_powers = _odd_power_values(sg, m)
    accept = rec.accept
    prefixes_wanted = {s for s, _ in accept}
    for cut in range(1, len(w.v) + 1):
        hv1 = h_of(h, w.v[:cut])
        hv2 = h_of(h, w.v[cut:]) if cut < len(w.v) else None
        s_vals = {sg.mul(hu, hv1)}
        s_vals.update(sg.mul(sg.mul(hu, p), hv1) for p in powers)
        s_vals &= prefixes_wanted
        if not s_vals:
            continue
        e_vals = set()
        for p in odd_powers:
            e_vals.add(sg.mul(p, hv1) if hv2 is None else sg.mul(hv2, sg.mul(p, hv1)))
        for s in s_vals:
            for e in e_vals:
                if (s, e) in accept:
                    return True
    return False


def _loop_member(rec: StrongRecognizer, s: int, e: int) -> bool:
    """Membership of any word u v^w with h(u) = s and h(v) = e idempotent."""
    return rec.accept[LinkedPair(rec.h.target.mul(s, e), e)]


def _member_images(rec: StrongRecognizer, s: int, m: int) -> bool:
    """Membership of any word u v^w with h(u) = s, h(v) = m."""
    return _loop_member(rec, s, idempotent_power(rec.h.target, m))


def up_member_strong(rec: StrongRecognizer, w: UPWord) -> bool:
    if not w.u:
        return up_member_strong(rec, UPWord(w.v, w.v))
    return _member_images(rec, h_of(rec.h, w.u), h_of(rec.h, w.v))


def complement(rec: StrongRecognizer) -> StrongRecognizer:
    """Flip the acceptance map; strong recognition is closed under complement."""
    if isinstance(rec.accept, dict):
        accept = {p: not v for p, v in rec.accept.items()}
    else:
        accept = FlippedAccept(rec.accept)
    abstraction = rec.abstraction.flipped() if rec.abstraction else None
    return StrongRecognizer(rec.h, accept, abstraction)


def _refine(n: int, base: list, gens: Sequence[int], mul) -> list[int]:
    """Coarsest partition refining base that is stable under left and right
    multiplication by the generators; classes are numbered by least member."""
    classes: dict = {}
    for s, fp in enumerate(base):
        classes.setdefault(fp, []).append(s)
    assign = [0] * n
    for cid, members in enumerate(sorted(classes.values(), key=lambda m: m[0])):
        for s in members:
            assign[s] = cid
    while True:
        sigs = []
        for s in range(n):
            sig = (assign[s],
                   tuple(assign[mul(g, s)] for g in gens),
                   tuple(assign[mul(s, g)] for g in gens))
            sigs.append(sig)
        groups: dict = {}
        for s, sig in enumerate(sigs):
            groups.setdefault(sig, []).append(s)
        new_assign = [0] * n
        for cid, members in enumerate(sorted(groups.values(), key=lambda m: m[0])):
            for s in members:
                new_assign[s] = cid
        if new_assign == assign:
            return assign
        assign = new_assign


def _quotient_table(n: int, assign: list[int], mul) -> tuple[FiniteSemigroup, list[int]]:
    count = max(assign) + 1
    reps = [None] * count
    for s in range(n):
        if reps[assign[s]] is None:
            reps[assign[s]] = s
    rows = [[assign[mul(reps[a], reps[b])] for b in range(count)] for a in range(count)]
    return FiniteSemigroup.from_rows(rows, check_assoc=False), reps


def _image_restriction(h: Morphism):
    """Relabel the image subsemigroup to contiguous ids; returns (size, old ids,
    old->new map, mul over new ids, letter images in new ids)."""
    ids = list(h.image_ids)
    pos = {old: i for i, old in enumerate(ids)}
    sg = h.target

    def mul(a, b):
        return pos[sg.mul(ids[a], ids[b])]

    letters = [pos[h.image[a]] for a in h.alphabet]
    return len(ids), ids, pos, mul, letters


def syntactic_quotient(rec: StrongRecognizer):
    """Quotient of the image by the context congruence of the language.

    Two elements merge when they behave identically as segments of ultimately
    periodic words: same membership for (x s y) z^w over all image contexts
    x, y (with identity) and loops z, and same membership for z (x s y)^w
    with z ranging over image elements or the empty prefix.  Computed as a
    stability refinement from those base signatures, which reaches exactly
    that congruence.  Returns the quotient recognizer and the element map.
    """
    n, ids, pos, mul, letters = _image_restriction(rec.h)
    sg = rec.h.target

    def member(prefix: int, loop: int) -> bool:
        return _member_images(rec, ids[prefix], ids[loop])

    base = []
    for s in range(n):
        cond1 = tuple(member(s, z) for z in range(n))
        cond2 = tuple(member(z, s) for z in range(n)) + (member(s, s),)
        base.append((cond1, cond2))
    assign = _refine(n, base, letters, mul)
    qsg, reps = _quotient_table(n, assign, mul)
    qmorph = Morphism(rec.h.alphabet, qsg, {a: assign[pos[rec.h.image[a]]]
                                            for a in rec.h.alphabet})
    qaccept = {}
    for p in linked_pairs(qsg):
        if p.s in qmorph.image_ids and p.e in qmorph.image_ids:
            qaccept[p] = member(reps[p.s], reps[p.e])
    qrec = StrongRecognizer(qmorph, qaccept)
    elem_map = {ids[s]: assign[s] for s in range(n)}
    return qrec, elem_map


def syntactic_quotient_finite(rec: FiniteWordRecognizer):
    """Quotient of the image by the two-sided context congruence of the
    finite-word language (same acceptance under every context x _ y)."""
    n, ids, pos, mul, letters = _image_restriction(rec.h)
    accept_new = {pos[s] for s in rec.accept}
    base = [s in accept_new for s in range(n)]
    assign = _refine(n, base, letters, mul)
    qsg, reps = _quotient_table(n, assign, mul)
    qmorph = Morphism(rec.h.alphabet, qsg, {a: assign[pos[rec.h.image[a]]]
                                            for a in rec.h.alphabet})
    qaccept = frozenset(assign[s] for s in accept_new)
    qrec = FiniteWordRecognizer(qmorph, qaccept)
    elem_map = {ids[s]: assign[s] for s in range(n)}
    return qrec, elem_map


def _abstraction(rec: StrongRecognizer) -> PrefixAbstraction:
    if rec.abstraction is not None:
        return rec.abstraction
    return PrefixAbstraction(lambda s: s, lambda s, e: _loop_member(rec, s, e))


def equivalent(a: StrongRecognizer, b: StrongRecognizer) -> bool:
    """Language equality of two strong recognizers over the same alphabet.

    Generates the product subsemigroup of paired letter images.  Every
    ultimately periodic word realizes a pair (s, m) of product elements for
    its prefix and loop; its membership on either side is the acceptance at
    (s e, e) with e the idempotent power of m.  Since prefix and loop words
    vary independently, the languages agree exactly when both sides agree
    over all product prefixes s and all componentwise idempotent powers e
    reached from the product.  Prefixes are grouped through each side's
    PrefixAbstraction (identity by default), which keeps the sweep small for
    the large expansion targets.  Weak recognizers must be converted to
    strong ones first; comparing weak recognizers by product pairs is
    unsound.
    """
    if not isinstance(a, StrongRecognizer) or not isinstance(b, StrongRecognizer):
        raise PreconditionError("equivalence requires strong recognizers; "
                                "convert weak recognizers first")
    if a.h.alphabet != b.h.alphabet:
        raise PreconditionError("alphabet mismatch")
    ta, tb = a.h.target, b.h.target
    pairs = {}
    order = []
    for c in a.h.alphabet:
        p = (a.h.image[c], b.h.image[c])
        if p not in pairs:
            pairs[p] = len(order)
            order.append(p)
    gens = list(order)
    i = 0
    while i < len(order):
        xa, xb = order[i]
        for ga, gb in gens:
            p = (ta.mul(xa, ga), tb.mul(xb, gb))
            if p not in pairs:
                pairs[p] = len(order)
                order.append(p)
        i += 1
    absa, absb = _abstraction(a), _abstraction(b)
    keys = {(absa.key(sa), absb.key(sb)) for sa, sb in order}
    ipow_a: dict[int, int] = {}
    ipow_b: dict[int, int] = {}
    idems = set()
    for ma, mb in order:
        ea = ipow_a.get(ma)
        if ea is None:
            ea = ipow_a[ma] = idempotent_power(ta, ma)
        eb = ipow_b.get(mb)
        if eb is None:
            eb = ipow_b[mb] = idempotent_power(tb, mb)
        idems.add((ea, eb))
    kb_list = sorted({kb for _, kb in keys})
    kb_pos = {k: i for i, k in enumerate(kb_list)}
    group: dict = {}
    for ka, kb in keys:
        group[ka] = group.get(ka, 0) | (1 << kb_pos[kb])
    for ea, eb in sorted(idems):
        true_b = 0
        for i, kb in enumerate(kb_list):
            if absb.member(kb, eb):
                true_b |= 1 << i
        for ka in sorted(group):
            mask = group[ka]
            if absa.member(ka, ea):
                if mask & ~true_b:
                    return False
            elif mask & true_b:
                return False
    return True
