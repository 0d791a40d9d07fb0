"""Finite semigroups as multiplication tables.

Element ids are 0-based row/column indices into the table; all derived data
(Green's classes, idempotents, linked pairs, Rees coordinates) is expressed in
those ids and emitted in a canonical sorted order so that repeated runs produce
identical results.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from typing import Callable, Hashable, NamedTuple, Sequence

from .errors import CapacityError, FormatError, PreconditionError

DEFAULT_CLOSURE_CAP = 10**6


class FiniteSemigroup:
    """Multiplication table with size*size entries; entry (s, t) is s*t.

    Instances are immutable after construction.  Explicit tables are checked
    for associativity eagerly; closures generated from an associative oracle
    pass check_assoc=False.
    """

    __slots__ = ("size", "table", "names", "_greens", "_idem")

    def __init__(self, size: int, table, names: Sequence[str] | None = None,
                 check_assoc: bool = True):
        if size <= 0:
            raise FormatError("semigroup must have at least one element")
        if len(table) != size * size:
            raise FormatError("table length does not match size*size")
        flat = array("i", table)
        for entry in flat:
            if not 0 <= entry < size:
                raise FormatError(f"table entry {entry} out of range 0..{size - 1}")
        self.size = size
        self.table = flat
        self.names = tuple(names) if names is not None else None
        if self.names is not None and len(self.names) != size:
            raise FormatError("names must list one token per element")
        self._greens = None
        self._idem = None
        if check_assoc and not check_associativity(self):
            raise FormatError("multiplication table is not associative")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], names=None, check_assoc=True):
        flat = [entry for row in rows for entry in row]
        return cls(len(rows), flat, names=names, check_assoc=check_assoc)

    def mul(self, s: int, t: int) -> int:
        return self.table[s * self.size + t]

    def row(self, s: int) -> tuple[int, ...]:
        n = self.size
        return tuple(self.table[s * n:(s + 1) * n])

    def rows(self) -> list[tuple[int, ...]]:
        return [self.row(s) for s in range(self.size)]

    def name_of(self, s: int) -> str:
        return self.names[s] if self.names else str(s)

    def __repr__(self):
        return f"FiniteSemigroup(size={self.size})"


def check_associativity(sg: FiniteSemigroup) -> bool:
    """Exhaustive n^3 check of (s*t)*u == s*(t*u)."""
    n = sg.size
    tab = sg.table
    for s in range(n):
        srow = s * n
        for t in range(n):
            st = tab[srow + t]
            trow = t * n
            strow = st * n
            for u in range(n):
                if tab[strow + u] != tab[srow + tab[trow + u]]:
                    return False
    return True


def adjoin_identity(sg: FiniteSemigroup) -> FiniteSemigroup:
    """Return S^1: a copy of S with one new two-sided identity appended."""
    n = sg.size
    rows = [list(sg.row(s)) + [s] for s in range(n)]
    rows.append(list(range(n + 1)))
    names = None
    if sg.names:
        names = list(sg.names) + ["1"]
    return FiniteSemigroup.from_rows(rows, names=names, check_assoc=False)


def idempotents(sg: FiniteSemigroup) -> tuple[int, ...]:
    if sg._idem is None:
        sg._idem = tuple(s for s in range(sg.size) if sg.mul(s, s) == s)
    return sg._idem


def idempotent_power(sg: FiniteSemigroup, s: int) -> int:
    """The unique idempotent in the cyclic subsemigroup generated by s."""
    seen = {}
    powers = []
    t = s
    k = 0
    while t not in seen:
        seen[t] = k
        powers.append(t)
        t = sg.mul(t, s)
        k += 1
    # powers[i] is s^(i+1); the cycle covers exponents seen[t]+1 .. k
    pre = seen[t]
    period = k - pre
    exp = period * ((pre + period) // period)
    return powers[exp - 1]


class LinkedPair(NamedTuple):
    s: int
    e: int


def linked_pairs(sg: FiniteSemigroup) -> list[LinkedPair]:
    """All pairs (s, e) with s*e == s and e*e == e, in (s, e) order."""
    idem = idempotents(sg)
    out = []
    for s in range(sg.size):
        for e in idem:
            if sg.mul(s, e) == s:
                out.append(LinkedPair(s, e))
    return out


@dataclass(frozen=True)
class GreensData:
    r_class: tuple[int, ...]
    l_class: tuple[int, ...]
    j_class: tuple[int, ...]
    h_class: tuple[int, ...]
    r_classes: tuple[tuple[int, ...], ...]
    l_classes: tuple[tuple[int, ...], ...]
    j_classes: tuple[tuple[int, ...], ...]
    h_classes: tuple[tuple[int, ...], ...]


def _group_by(fingerprints: list) -> tuple[tuple[int, ...], list[tuple[int, ...]]]:
    classes: dict = {}
    for s, fp in enumerate(fingerprints):
        classes.setdefault(fp, []).append(s)
    # class ids ordered by least member for reproducibility
    ordered = sorted(classes.values(), key=lambda members: members[0])
    assignment = [0] * len(fingerprints)
    for cid, members in enumerate(ordered):
        for s in members:
            assignment[s] = cid
    return tuple(assignment), [tuple(m) for m in ordered]


def greens(sg: FiniteSemigroup) -> GreensData:
    """Green's relations over S^1: equality of principal right/left/two-sided ideals."""
    if sg._greens is not None:
        return sg._greens
    n = sg.size
    right = []
    left = []
    two = []
    for s in range(n):
        sS = {s} | {sg.mul(s, t) for t in range(n)}
        Ss = {s} | {sg.mul(t, s) for t in range(n)}
        SsS = set(sS) | set(Ss)
        for x in sS:
            SsS.update(sg.mul(t, x) for t in range(n))
        right.append(frozenset(sS))
        left.append(frozenset(Ss))
        two.append(frozenset(SsS))
    r_assign, r_classes = _group_by(right)
    l_assign, l_classes = _group_by(left)
    j_assign, j_classes = _group_by(two)
    h_assign, h_classes = _group_by(list(zip(r_assign, l_assign)))
    data = GreensData(r_assign, l_assign, j_assign, h_assign,
                      tuple(r_classes), tuple(l_classes),
                      tuple(j_classes), tuple(h_classes))
    sg._greens = data
    return data


def is_simple(sg: FiniteSemigroup) -> bool:
    return len(greens(sg).j_classes) == 1


def is_j_trivial(sg: FiniteSemigroup) -> bool:
    return all(len(c) == 1 for c in greens(sg).j_classes)


@dataclass(frozen=True)
class ReesStructure:
    """Coordinates of a finite simple semigroup.

    group holds the H-class of the least idempotent e0, which acts as the
    coordinate group; gamma maps each element to a group index via
    s -> e0*s*e0; pi maps (R-class, group index, L-class) triples back to
    elements and is a bijection.
    """

    semigroup: FiniteSemigroup
    base_idempotent: int
    group: tuple[int, ...]
    gamma: tuple[int, ...]
    pi: dict
    greens: GreensData = field(repr=False)

    def pi_inv(self, s: int) -> tuple[int, int, int]:
        return (self.greens.r_class[s], self.gamma[s], self.greens.l_class[s])


def rees_structure(sg: FiniteSemigroup) -> ReesStructure:
    if not is_simple(sg):
        raise PreconditionError("rees_structure requires a simple semigroup")
    gd = greens(sg)
    idem = idempotents(sg)
    e0 = idem[0]
    group = tuple(sorted(s for s in range(sg.size) if gd.h_class[s] == gd.h_class[e0]))
    gindex = {g: i for i, g in enumerate(group)}
    gamma = []
    for s in range(sg.size):
        g = sg.mul(e0, sg.mul(s, e0))
        if g not in gindex:
            raise AssertionError("gamma left the base H-class; input not simple?")
        gamma.append(gindex[g])
    pi = {}
    for s in range(sg.size):
        key = (gd.r_class[s], gamma[s], gd.l_class[s])
        if key in pi:
            raise AssertionError("pi coordinates collide; input not simple?")
        pi[key] = s
    return ReesStructure(sg, e0, group, tuple(gamma), pi, gd)


def r_dot(rs: ReesStructure, t: int, s: int) -> int:
    """The unique element x with x R t, x L s and gamma(x) = gamma(s)."""
    gd = rs.greens
    return rs.pi[(gd.r_class[t], rs.gamma[s], gd.l_class[s])]


class GeneratedSemigroup:
    """Closure too large for a materialized table.

    Products resolve through the stored (element, generator) columns and one
    factorization per element: with t = p*g, s*t = (s*p)*g, so multiplying by
    t costs one column lookup per generator in t's factorization chain.
    Duck-compatible with FiniteSemigroup for mul/size/name_of.
    """

    __slots__ = ("size", "names", "gen_count", "_gen_cols", "_parents",
                 "_greens", "_idem")

    def __init__(self, gen_cols: list[list[int]], parents: Sequence):
        self.size = len(gen_cols)
        self.names = None
        self.gen_count = sum(1 for p in parents if p is None)
        self._gen_cols = gen_cols
        self._parents = parents
        self._greens = None
        self._idem = None

    def mul(self, s: int, t: int) -> int:
        chain = []
        parents = self._parents
        while parents[t] is not None:
            t, g = parents[t][0], parents[t][1]
            chain.append(g)
        cols = self._gen_cols
        acc = cols[s][t]  # generator ids coincide with their column positions
        for g in reversed(chain):
            acc = cols[acc][g]
        return acc

    def row(self, s: int) -> tuple[int, ...]:
        return tuple(self.mul(s, t) for t in range(self.size))

    def name_of(self, s: int) -> str:
        return str(s)

    def __repr__(self):
        return f"GeneratedSemigroup(size={self.size})"


# beyond this element count a closure keeps the lazy representation
TABLE_LIMIT = 3000


@dataclass(frozen=True)
class ClosureResult:
    """Closure of a generator list under an associative product.

    elements[i] is the value with id i; ids follow breadth-first discovery
    (deduplicated generators first, then products x*g scanned left-factor
    major over the generator list).  parents[i] records one factorization
    (parent_id, generator_position) for every non-generator element.  The
    semigroup is a FiniteSemigroup up to TABLE_LIMIT elements and a lazy
    GeneratedSemigroup beyond.
    """

    elements: tuple
    index: dict
    semigroup: FiniteSemigroup | GeneratedSemigroup
    gen_ids: tuple[int, ...]
    parents: tuple

    def embedding(self, eid: int):
        return self.elements[eid]

    def gen_word(self, eid: int) -> tuple[int, ...]:
        """One factorization of the element as generator positions."""
        out = []
        cur = eid
        while self.parents[cur] is not None:
            parent, gpos = self.parents[cur]
            out.append(gpos)
            cur = parent
        out.append(cur)
        out.reverse()
        return tuple(out)


def closure(generators: Sequence[Hashable], mul: Callable,
            cap: int = DEFAULT_CLOSURE_CAP,
            table_limit: int = TABLE_LIMIT) -> ClosureResult:
    """Generate the subsemigroup spanned by the generators.

    mul must be associative on the generated set.  One real product is taken
    per (element, generator) pair; for small closures the full table is then
    assembled from stored factorizations, larger ones stay lazy.
    """
    elements = []
    index: dict = {}
    for g in generators:
        if g not in index:
            index[g] = len(elements)
            elements.append(g)
    gen_ids = tuple(range(len(elements)))
    parents: list = [None] * len(elements)
    gen_cols: list[list[int]] = []
    i = 0
    while i < len(elements):
        row = []
        for gpos in gen_ids:
            prod = mul(elements[i], elements[gpos])
            pid = index.get(prod)
            if pid is None:
                pid = len(elements)
                if pid >= cap:
                    raise CapacityError(f"closure exceeded cap of {cap} elements")
                index[prod] = pid
                elements.append(prod)
                parents.append((i, gpos))
            row.append(pid)
        gen_cols.append(row)
        i += 1
    n = len(elements)
    if n > table_limit:
        sg = GeneratedSemigroup(gen_cols, tuple(parents))
        return ClosureResult(tuple(elements), index, sg, gen_ids, tuple(parents))
    table = array("i", [0]) * (n * n)
    for y in range(n):
        if y < len(gen_ids):
            for x in range(n):
                table[x * n + y] = gen_cols[x][y]
        else:
            py, gpos = parents[y]
            for x in range(n):
                table[x * n + y] = gen_cols[table[x * n + py]][gpos]
    sg = FiniteSemigroup(n, table, check_assoc=False)
    return ClosureResult(tuple(elements), index, sg, gen_ids, tuple(parents))


def generate_subsemigroup(mul_oracle: Callable, generators: Sequence[Hashable],
                          cap: int = DEFAULT_CLOSURE_CAP):
    """Closure plus embedding map, per the element-order conventions above."""
    result = closure(generators, mul_oracle, cap=cap)
    embedding = {eid: result.elements[eid] for eid in range(len(result.elements))}
    return result.semigroup, embedding
