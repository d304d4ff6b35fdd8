"""Factorization of an arbitrary finite abelian group into cyclic p-groups.

The group order is peeled one prime block at a time: split off the subgroup
of elements whose order divides the maximal p-power part, factor it with the
p-group machinery, and recurse on the relatively-prime complement.  The
explicit isomorphism onto the direct product of the factors is verified
before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteGroup, abelianp, group_intersection, subgroup
from .errors import DomainError
from .gmaps import GroupMap, classify, homomorphism_check
from .numtheory import divides, gcd_bezout, least_prime_divisor, max_power_dividing
from .products import direct_product, product_list_map, product_orders


def subgroup_ord_dividing(m, g):
    """The subgroup of elements whose order divides m (abelian g only)."""
    if not abelianp(g):
        raise DomainError("subgroup-ord-dividing needs an abelian group")
    if m < 1:
        raise DomainError("m must be >= 1")
    roster = tuple(x for x in g.roster if divides(g.element_order(x), m))
    return subgroup(g, roster)


def rel_prime_split(g, m, n):
    """Split an abelian g of order m*n (gcd(m, n) = 1) into subgroups of
    orders exactly m and n, intersecting trivially."""
    if not abelianp(g):
        raise DomainError("rel-prime-split needs an abelian group")
    gcd, _, _ = gcd_bezout(m, n)
    if gcd != 1:
        raise DomainError(f"m and n must be relatively prime, gcd = {gcd}")
    if g.order != m * n:
        raise DomainError("order of g must equal m * n")
    h = subgroup_ord_dividing(m, g)
    k = subgroup_ord_dividing(n, g)
    if h.order != m or k.order != n:
        raise DomainError(
            f"split orders off: |h| = {h.order}, |k| = {k.order}"
        )
    if group_intersection(h, k, g).roster != (g.identity,):
        raise DomainError("split subgroups intersect non-trivially")
    return h, k


def bezout_decomposition(g, x, m, n):
    """Write x = h_part * k_part with the parts of order dividing m and n.

    Uses r*n + s*m = 1; negative coefficients go through the inverse.
    """
    _, r, s = gcd_bezout(m, n)
    return g.power(x, r * n), g.power(x, s * m)


def cyclic_subgroup_list(g):
    """The full list of cyclic p-subgroups factoring an abelian g.

    Blocks come out in ascending least-prime order; within a block, orders
    are non-increasing.  The trivial group yields the empty list.
    """
    from .pgroup import cyclic_p_subgroup_list

    if not abelianp(g):
        raise DomainError("cyclic-subgroup-list needs an abelian group")
    if g.order == 1:
        return ()
    p = least_prime_divisor(g.order)
    m = max_power_dividing(p, g.order)
    n = g.order // m
    if n == 1:
        return cyclic_p_subgroup_list(p, g).factors
    h, k = rel_prime_split(g, m, n)
    return cyclic_p_subgroup_list(p, h).factors + cyclic_subgroup_list(k)


@dataclass(frozen=True)
class AbelianFactorization:
    factors: tuple
    parent: FiniteGroup
    iso: GroupMap  # verified isomorphism direct_product(factors) -> parent

    @property
    def orders(self):
        return tuple(h.order for h in self.factors)


def abelian_factorization(g):
    """Factor an abelian group of order > 1 and verify the isomorphism."""
    if not abelianp(g):
        raise DomainError("abelian-factorization needs an abelian group")
    if g.order <= 1:
        raise DomainError("abelian-factorization needs order > 1")
    factors = cyclic_subgroup_list(g)
    if product_orders(factors) != g.order:
        raise RuntimeError("internal error: factor orders do not multiply up")
    iso = product_list_map(list(factors), g)
    dp = direct_product(list(factors))
    witness = homomorphism_check(iso, dp, g)
    if witness is not None or not classify(iso, dp, g).isomorphism:
        raise RuntimeError(f"internal error: factorization map not an isomorphism ({witness})")
    return AbelianFactorization(tuple(factors), g, iso)
