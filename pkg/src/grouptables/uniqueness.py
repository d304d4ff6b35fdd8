"""Uniqueness of cyclic p-group factorizations up to permutation of orders.

The contraction step takes p-th powers of every factor (which divides the
p-divisible orders by p and collapses order-p factors), deletes the collapsed
factors, and transports the isomorphism through the contraction.  Induction
on the contracted lists forces the order multisets to agree.
"""
from __future__ import annotations

from .core import abelianp, ord_insert, subgroup
from .errors import DomainError
from .gmaps import (
    classify,
    compose_maps,
    homomorphism_check,
    inv_isomorphism,
    map_from_function,
)
from .numtheory import divides, least_prime_divisor, primep
from .products import direct_product, group_tuples


# ---------------------------------------------------------------------------
# multisets


def hits(x, l):
    """Number of occurrences of x in l."""
    return sum(1 for y in l if y == x)


def permutationp(l, m):
    """True iff m is a rearrangement of l (remove-one recursion)."""
    l, m = list(l), list(m)
    if not l:
        return not m
    if l[0] not in m:
        return False
    rest = list(m)
    rest.remove(l[0])
    return permutationp(l[1:], rest)


def hits_diff(l, m):
    """First value (scanning l then m) whose occurrence counts differ, or None."""
    for x in list(l) + list(m):
        if hits(x, l) != hits(x, m):
            return x
    return None


def orders(l):
    return tuple(g.order for g in l)


# ---------------------------------------------------------------------------
# group powers


def group_power(n, g):
    """The subgroup of n-th powers of an abelian group, in g order."""
    if not abelianp(g):
        raise DomainError("group-power needs an abelian group")
    if n < 1:
        raise DomainError("n must be >= 1")
    roster = ()
    for x in g.roster:
        roster = ord_insert(g.power(x, n), roster, g)
    return subgroup(g, roster)


def reduce_order(n, p):
    return n // p if divides(p, n) else n


def reduce_orders(orders_, p):
    return tuple(reduce_order(n, p) for n in orders_)


def group_power_list(n, l):
    return tuple(group_power(n, g) for g in l)


def group_power_dp_check(n, l):
    """Exact equality (roster and table) of the power of a product and the
    product of the powers."""
    l = list(l)
    return group_power(n, direct_product(l)) == direct_product(
        list(group_power_list(n, l))
    )


# ---------------------------------------------------------------------------
# the contraction


def first_prime(l):
    if not l or l[0].order <= 1:
        raise DomainError("first-prime needs a leading non-trivial group")
    return least_prime_divisor(l[0].order)


def delete_trivial(l):
    return tuple(g for g in l if g.order > 1)


def reduce_cyclic(l, p):
    """p-th powers of every member, with collapsed (order-1) members dropped."""
    if not primep(p):
        raise DomainError(f"p must be prime, got {p}")
    return delete_trivial(group_power_list(p, l))


def delete_trivial_elt(x, l):
    return tuple(c for c, g in zip(x, l) if g.order > 1)


def delete_trivial_iso(l):
    """The tuple-contraction map dropping trivial-group components.

    An isomorphism from direct_product(l) onto the product of the
    non-trivial members; requires at least one non-trivial member.
    """
    l = list(l)
    if not delete_trivial(l):
        raise DomainError("delete-trivial-iso needs a non-trivial member")
    return map_from_function(group_tuples(l), lambda x: delete_trivial_elt(x, l))


def reduce_cyclic_iso(iso, l, m, p):
    """Transport an isomorphism dp(l) -> dp(m) to the contracted products.

    Composition of: un-contracting on the l side, the restriction of iso to
    the power subgroup (legitimate because isomorphic abelian groups have
    isomorphic n-th powers), and contracting on the m side.
    """
    l, m = list(l), list(m)
    lp = list(group_power_list(p, l))
    mp = list(group_power_list(p, m))
    dti_l = delete_trivial_iso(lp)
    dti_m = delete_trivial_iso(mp)
    expand = inv_isomorphism(
        dti_l, direct_product(lp), direct_product(delete_trivial(lp))
    )
    return compose_maps(dti_m, compose_maps(iso, expand))


def verify_unique_factorization(l, m, iso):
    """Run the uniqueness induction, returning the permutation verdict.

    l and m must be non-empty cyclic p-group lists and iso a genuine
    isomorphism between their direct products (re-verified at every level);
    a True return certifies that the order multisets are permutations.
    """
    from .pgroup import cyclic_p_group_list_p

    l, m = list(l), list(m)
    if not l or not m:
        raise DomainError("uniqueness needs non-empty lists")
    if not cyclic_p_group_list_p(l) or not cyclic_p_group_list_p(m):
        raise DomainError("uniqueness needs cyclic p-group lists")
    dpl, dpm = direct_product(l), direct_product(m)
    witness = homomorphism_check(iso, dpl, dpm)
    if witness is not None:
        raise DomainError(f"map is not a homomorphism: {witness}")
    if not classify(iso, dpl, dpm).isomorphism:
        raise DomainError("map is not an isomorphism")
    p = first_prime(l)
    l2 = reduce_cyclic(l, p)
    m2 = reduce_cyclic(m, p)
    if not l2 or not m2:
        # base case: every surviving order must already agree up to permutation
        return permutationp(orders(l), orders(m))
    sub = verify_unique_factorization(
        list(l2), list(m2), reduce_cyclic_iso(iso, l, m, p)
    )
    return sub and permutationp(orders(l), orders(m))
