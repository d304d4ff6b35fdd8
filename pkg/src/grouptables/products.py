"""Direct products, products of subgroups, and internal direct products."""
from __future__ import annotations

from .core import (
    FiniteGroup,
    MAX_ORDER,
    group_intersection,
    lcoset,
    lcosets,
    normalp,
    subgroup,
    subgroupp,
    trivial_subgroup,
)
from .errors import DomainError, ResourceError
from .gmaps import map_from_function


def product_orders(l):
    n = 1
    for g in l:
        n *= g.order
    return n


def group_tuples(l):
    """The Cartesian product of the rosters; the first group varies slowest.

    The first tuple is the identity tuple.
    """
    l = list(l)
    if not l:
        raise DomainError("group-tuples needs a non-empty group list")
    out = [()]
    for g in l:
        out = [t + (x,) for t in out for x in g.roster]
    # rebuild in slowest-first order: the loop above already varies the last
    # group fastest, which is exactly the required order
    return tuple(out)


def direct_product(l):
    """The direct product group on group_tuples(l), componentwise operation."""
    l = list(l)
    if not l:
        raise DomainError("direct product of an empty list")
    n = product_orders(l)
    if n > MAX_ORDER:
        raise ResourceError(f"direct-product order {n} exceeds the {MAX_ORDER} guard")
    roster = group_tuples(l)
    pos = {x: i for i, x in enumerate(roster)}
    table = tuple(
        tuple(
            pos[tuple(g.op(a, b) for g, a, b in zip(l, x, y))]
            for y in roster
        )
        for x in roster
    )
    return FiniteGroup(roster, table)


def dp_index_compare(l, x, y):
    """True iff x precedes y in the direct-product roster.

    Equivalent to the positional comparison: the first-component index is
    smaller, or the first components are equal and the tails compare.
    """
    l = list(l)
    if not l:
        raise DomainError("empty group list")
    i, j = l[0].index(x[0]), l[0].index(y[0])
    if i != j:
        return i < j
    if len(l) == 1:
        return False
    return dp_index_compare(l[1:], x[1:], y[1:])


def products(h, k, g):
    """All pairwise products op(a, b) for a in h, b in k, ordered by g."""
    if not (subgroupp(h, g) and subgroupp(k, g)):
        raise DomainError("products requires subgroups of g")
    # set-then-sort is the same value the ord_insert fold produces, without
    # the quadratic insert cost on large subgroup pairs
    out = {g.op(a, b) for a in h.roster for b in k.roster}
    return tuple(sorted(out, key=g.index))


def product_group(h, k, g):
    """The subgroup on products(h, k, g); needs h or k normal in g."""
    if not (subgroupp(h, g) and subgroupp(k, g)):
        raise DomainError("product-group requires subgroups of g")
    if not (normalp(h, g) or normalp(k, g)):
        raise DomainError("product-group requires h or k normal in g")
    return subgroup(g, products(h, k, g))


def lift_cosets(h, k, g):
    """One k-coset per (h intersect k)-coset of h.

    The concatenation is duplicate-free, has length |h|*|k|/|h^k|, and
    equals products(h, k, g) as a set.  This exists to make the counting
    argument behind len-products executable; callers wanting the product
    set itself should use products().
    """
    if not (subgroupp(h, g) and subgroupp(k, g)):
        raise DomainError("lift-cosets requires subgroups of g")
    i = group_intersection(h, k, g)
    isub = subgroup(h, tuple(x for x in h.roster if x in i))
    return tuple(lcoset(c[0], k, g) for c in lcosets(isub, h))


def product_group_list(l, g):
    """Right fold of product_group over l; empty list gives the trivial subgroup."""
    if not l:
        return trivial_subgroup(g)
    return product_group(l[0], product_group_list(l[1:], g), g)


def internal_direct_product_p(l, g):
    """Each member normal in g and intersecting the product of the rest trivially."""
    l = list(l)
    if not l:
        return True
    if not internal_direct_product_p(l[1:], g):
        return False
    if not subgroupp(l[0], g) or not normalp(l[0], g):
        return False
    rest = product_group_list(l[1:], g)
    return (
        group_intersection(l[0], rest, g).roster == (g.identity,)
    )


def internal_direct_product_append(l, m, g):
    """Append two internal direct products whose generated subgroups meet trivially.

    Returns the combined list; any failed premise is a DomainError.
    """
    if not internal_direct_product_p(l, g):
        raise DomainError("l is not an internal direct product in g")
    if not internal_direct_product_p(m, g):
        raise DomainError("m is not an internal direct product in g")
    pl = product_group_list(list(l), g)
    pm = product_group_list(list(m), g)
    if group_intersection(pl, pm, g).roster != (g.identity,):
        raise DomainError("generated subgroups intersect non-trivially")
    combined = tuple(l) + tuple(m)
    if not internal_direct_product_p(combined, g):
        raise DomainError("append is not an internal direct product")
    return combined


def product_list_val(x, g):
    """Left-to-right fold of the operation over a tuple; singletons unwrap."""
    if len(x) == 1:
        return x[0]
    return g.op(x[0], product_list_val(x[1:], g))


def product_list_map(l, g):
    """The isomorphism candidate from direct_product(l) onto g.

    Requires l to be an internal direct product of g with full order; the
    caller is expected to verify the result with classify().
    """
    l = list(l)
    if not internal_direct_product_p(l, g):
        raise DomainError("product-list-map requires an internal direct product")
    if product_orders(l) != g.order:
        raise DomainError("product of orders must equal the group order")
    return map_from_function(group_tuples(l), lambda x: product_list_val(x, g))
