"""Finite groups as explicit operation tables.

A group of order n is an n x n matrix of roster indices over a duplicate-free
element roster whose first entry is the identity.  Elements are values (atoms
or nested tuples), never indices, at every API boundary; indices live only
inside tables.  Tuples encode cosets (quotient elements) and direct-product
tuples, so quotients and products nest one structural level per application.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations

import numpy as np

from .errors import DomainError, ResourceError

# Elements are ints, short symbol strings, or tuples of elements; equality is
# structural, which Python tuples give us for free.
Element = object

MAX_ORDER = 256


@dataclass(frozen=True)
class AxiomViolation:
    """The first violated group axiom, with the witnessing elements."""

    kind: str  # roster | shape | closure | identity-row | identity-column | associativity | inverse
    witness: tuple

    def __str__(self):
        return f"axiom failure: {self.kind}: witness {self.witness!r}"


class GroupAxiomError(DomainError):
    def __init__(self, violation):
        super().__init__(str(violation))
        self.violation = violation


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Roster of n distinct elements plus an n x n Cayley table of indices.

    Instances are immutable; equality compares roster and table exactly
    (ordering included), which is the equality the power-of-direct-product
    identity needs.
    """

    roster: tuple
    table: tuple

    @cached_property
    def _pos(self):
        return {x: i for i, x in enumerate(self.roster)}

    @cached_property
    def _orders(self):
        return {}

    @property
    def order(self):
        return len(self.roster)

    @property
    def identity(self):
        return self.roster[0]

    def __contains__(self, x):
        return x in self._pos

    def __iter__(self):
        return iter(self.roster)

    def index(self, x):
        try:
            return self._pos[x]
        except (KeyError, TypeError):
            raise DomainError(f"{x!r} is not an element of this group") from None

    def op(self, x, y):
        return self.roster[self.table[self.index(x)][self.index(y)]]

    def inv(self, x):
        i = self.index(x)
        row = self.table[i]
        j = row.index(0)
        return self.roster[j]

    def power(self, x, n):
        """x composed with itself n times; negative n goes through inv."""
        if n < 0:
            return self.power(self.inv(x), -n)
        self.index(x)
        acc = self.identity
        for _ in range(n):
            acc = self.op(acc, x)
        return acc

    def element_order(self, x):
        """Least k >= 1 with x^k = identity."""
        cache = self._orders
        try:
            return cache[x]
        except KeyError:
            pass
        self.index(x)
        e = self.identity
        acc = x
        k = 1
        while acc != e:
            acc = self.op(acc, x)
            k += 1
        cache[x] = k
        return k

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.roster == other.roster and self.table == other.table

    def __hash__(self):
        return hash(self.roster)

    def __repr__(self):
        return f"{type(self).__name__}(order={self.order})"


@dataclass(frozen=True, eq=False)
class Subgroup(FiniteGroup):
    """A group whose roster lives inside a parent group's roster.

    The subgroup keeps its own roster order (cyclic subgroups use their
    natural generator order; filtered ones inherit the parent order); the
    embedding records where each entry sits in the parent.
    """

    parent: FiniteGroup = None

    @property
    def embedding(self):
        return tuple(self.parent.index(x) for x in self.roster)


# ---------------------------------------------------------------------------
# validation


def check_group(roster, table):
    """Return the first violated axiom, or None if (roster, table) is a group."""
    roster = tuple(roster)
    n = len(roster)
    if n == 0:
        return AxiomViolation("roster", ("empty",))
    if len(set(roster)) != n:
        seen = set()
        for x in roster:
            if x in seen:
                return AxiomViolation("roster", (x,))
            seen.add(x)
    if len(table) != n or any(len(row) != n for row in table):
        return AxiomViolation("shape", (n,))
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                return AxiomViolation("closure", (roster[i], roster[j], v))
    t = np.array(table, dtype=np.intp)
    if not np.array_equal(t[0], np.arange(n)):
        j = int(np.nonzero(t[0] != np.arange(n))[0][0])
        return AxiomViolation("identity-row", (roster[j],))
    if not np.array_equal(t[:, 0], np.arange(n)):
        i = int(np.nonzero(t[:, 0] != np.arange(n))[0][0])
        return AxiomViolation("identity-column", (roster[i],))
    left = t[t]            # left[i, j, k] = t[t[i, j], k]
    right = t[:, t]        # right[i, j, k] = t[i, t[j, k]]
    if not np.array_equal(left, right):
        i, j, k = (int(v[0]) for v in np.nonzero(left != right))
        return AxiomViolation("associativity", (roster[i], roster[j], roster[k]))
    for i in range(n):
        js = np.nonzero(t[i] == 0)[0]
        if len(js) == 0 or t[js[0], i] != 0:
            return AxiomViolation("inverse", (roster[i],))
    return None


def validate_group(roster, table):
    """Build a FiniteGroup, raising GroupAxiomError on the first bad axiom."""
    violation = check_group(roster, table)
    if violation is not None:
        raise GroupAxiomError(violation)
    return FiniteGroup(tuple(roster), tuple(tuple(row) for row in table))


def subgroup(g, roster):
    """The subgroup of g on the given roster, with the operation restricted.

    The roster must start with g's identity and be closed under g's
    operation.
    """
    roster = tuple(roster)
    pos = {x: i for i, x in enumerate(roster)}
    if len(pos) != len(roster):
        raise DomainError("subgroup roster has duplicates")
    if not roster or roster[0] != g.identity:
        raise DomainError("subgroup roster must start with the parent identity")
    for x in roster:
        g.index(x)
    table = []
    for x in roster:
        row = []
        for y in roster:
            z = g.op(x, y)
            if z not in pos:
                raise DomainError(f"roster not closed: {x!r} * {y!r} = {z!r}")
            row.append(pos[z])
        table.append(tuple(row))
    return Subgroup(roster, tuple(table), g)


def subgroupp(h, g):
    """Structural subgroup test: roster inside g, operation agreeing with g."""
    if not isinstance(h, FiniteGroup):
        return False
    if any(x not in g for x in h.roster):
        return False
    if h.identity != g.identity:
        return False
    return all(
        h.op(x, y) == g.op(x, y) for x in h.roster for y in h.roster
    )


# ---------------------------------------------------------------------------
# element-level machinery


def ordp(l, g):
    """True iff l is ordered ascending by g-roster index."""
    idx = [g.index(x) for x in l]
    return all(a < b for a, b in zip(idx, idx[1:]))


def ord_insert(x, l, g):
    """Insert x into the g-ordered duplicate-free sequence l."""
    i = g.index(x)
    out = []
    placed = False
    for y in l:
        j = g.index(y)
        if j == i:
            return tuple(l)
        if j > i and not placed:
            out.append(x)
            placed = True
        out.append(y)
    if not placed:
        out.append(x)
    return tuple(out)


def powers(g, a):
    """[e, a, a^2, ...] up to (but excluding) the first repeat of e."""
    e = g.identity
    g.index(a)
    out = [e]
    acc = g.op(e, a)
    while acc != e:
        out.append(acc)
        acc = g.op(acc, a)
    return tuple(out)


def cyclic(a, g):
    """The cyclic subgroup generated by a, in its natural power order."""
    return subgroup(g, powers(g, a))


def elt_of_ord(n, g):
    """First roster element of order exactly n, or None."""
    if n < 1:
        raise DomainError("n must be >= 1")
    for x in g.roster:
        if g.element_order(x) == n:
            return x
    return None


def trivial_subgroup(g):
    return subgroup(g, (g.identity,))


def abelianp(g):
    n = g.order
    t = g.table
    return all(t[i][j] == t[j][i] for i in range(n) for j in range(i + 1, n))


# ---------------------------------------------------------------------------
# cosets, quotients, lifting


def lcoset(x, h, g):
    """The left coset x*h, ordered with respect to g."""
    g.index(x)
    return tuple(sorted((g.op(x, y) for y in h.roster), key=g.index))


def lcosets(h, g):
    """All distinct left cosets of h, ordered by first occurrence in g.

    Each coset is g-ordered, so the list comes out ordered by the g-index of
    each coset's smallest member, with the identity coset first.
    """
    if not subgroupp(h, g):
        raise DomainError("h is not a subgroup of g")
    seen = set()
    out = []
    for x in g.roster:
        if x in seen:
            continue
        c = lcoset(x, h, g)
        seen.update(c)
        out.append(c)
    return tuple(out)


def normalp(h, g):
    if not subgroupp(h, g):
        raise DomainError("h is not a subgroup of g")
    hset = set(h.roster)
    for x in g.roster:
        xi = g.inv(x)
        for y in h.roster:
            if g.op(x, g.op(y, xi)) not in hset:
                return False
    return True


def quotient(g, n):
    """The quotient group g/n: elements are the cosets of the normal n."""
    if not normalp(n, g):
        raise DomainError("quotient requires a normal subgroup")
    cosets = lcosets(n, g)
    home = {}
    for c in cosets:
        for x in c:
            home[x] = c
    pos = {c: i for i, c in enumerate(cosets)}
    table = tuple(
        tuple(pos[home[g.op(c[0], d[0])]] for d in cosets) for c in cosets
    )
    return FiniteGroup(cosets, table)


def lift(h, n, g):
    """The subgroup of g obtained by concatenating the cosets belonging to h.

    h must be a subgroup of quotient(g, n); its elements are cosets, and the
    lift un-nests them.  order(lift) = order(h) * order(n).
    """
    roster = []
    for c in h.roster:
        if not isinstance(c, tuple):
            raise DomainError("lift expects coset elements")
        roster.extend(c)
    if len(set(roster)) != len(roster):
        raise DomainError("lift cosets overlap; h is not made of n-cosets")
    return subgroup(g, roster)


def group_intersection(h, k, g):
    """The subgroup on the g-ordered common roster of h and k."""
    hset, kset = set(h.roster), set(k.roster)
    roster = tuple(x for x in g.roster if x in hset and x in kset)
    return subgroup(g, roster)


def generated_subgroup(g, gens):
    """Closure of gens under the operation, as a g-ordered subgroup."""
    elems = {g.identity}
    frontier = [g.identity]
    gens = list(gens)
    while frontier:
        x = frontier.pop()
        for a in gens:
            y = g.op(x, a)
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    roster = tuple(x for x in g.roster if x in elems)
    return subgroup(g, roster)


# ---------------------------------------------------------------------------
# builders


def cyclic_group(n):
    """Z_n: roster 0..n-1 under addition mod n."""
    if n < 1:
        raise DomainError("cyclic group order must be >= 1")
    if n > MAX_ORDER:
        raise ResourceError(f"order {n} exceeds the {MAX_ORDER} guard")
    roster = tuple(range(n))
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(roster, table)


def symmetric_group(n):
    """S_n for n <= 5, on one-line permutation tuples, identity first.

    op(x, y) applies y first: (x*y)(i) = x[y[i]].  The roster is the
    lexicographic order of permutations, which puts the identity first.
    """
    if not 1 <= n <= 5:
        raise DomainError("symmetric group supported for 1 <= n <= 5")
    roster = tuple(permutations(range(n)))
    pos = {x: i for i, x in enumerate(roster)}
    table = tuple(
        tuple(pos[tuple(x[y[i]] for i in range(n))] for y in roster)
        for x in roster
    )
    return FiniteGroup(roster, table)
