"""Built-in invariant suites behind the `selftest` CLI verb.

A condensed version of the full test suite, runnable without pytest: axiom
checks over a small corpus, Lagrange and coset partitioning, quotients,
p-group and abelian factorization, and one uniqueness round trip.
"""
from __future__ import annotations

from .abelian import abelian_factorization
from .core import (
    abelianp,
    check_group,
    cyclic,
    cyclic_group,
    lcosets,
    quotient,
    symmetric_group,
)
from .gmaps import map_from_function
from .pgroup import cyclic_p_subgroup_list
from .products import direct_product, group_tuples, internal_direct_product_p, product_orders
from .uniqueness import verify_unique_factorization


def _corpus():
    groups = [cyclic_group(n) for n in range(1, 13)]
    groups += [symmetric_group(3), symmetric_group(4)]
    groups += [
        direct_product([cyclic_group(2), cyclic_group(4)]),
        direct_product([cyclic_group(2), cyclic_group(2), cyclic_group(2)]),
        direct_product([cyclic_group(3), cyclic_group(9)]),
        direct_product([cyclic_group(2), cyclic_group(6)]),
    ]
    return groups


def _suite_axioms(groups):
    return all(check_group(g.roster, g.table) is None for g in groups)


def _suite_cosets(groups):
    for g in groups:
        for a in g.roster[:4]:
            h = cyclic(a, g)
            cos = lcosets(h, g)
            if g.order % h.order != 0:
                return False
            if sorted(x for c in cos for x in c) != sorted(g.roster):
                return False
            if any(len(c) != h.order for c in cos):
                return False
    return True


def _suite_quotients(groups):
    for g in groups:
        if not abelianp(g) or g.order > 16:
            continue
        for a in g.roster[:3]:
            q = quotient(g, cyclic(a, g))
            if check_group(q.roster, q.table) is not None:
                return False
    return True


def _suite_pgroup():
    cases = [
        (2, direct_product([cyclic_group(2), cyclic_group(4)])),
        (2, direct_product([cyclic_group(2), cyclic_group(2), cyclic_group(2)])),
        (3, direct_product([cyclic_group(3), cyclic_group(9)])),
    ]
    for p, g in cases:
        fact = cyclic_p_subgroup_list(p, g)
        if product_orders(fact.factors) != g.order:
            return False
        if not internal_direct_product_p(list(fact.factors), g):
            return False
    return True


def _suite_abelian(groups):
    for g in groups:
        if not abelianp(g) or g.order < 2:
            continue
        fact = abelian_factorization(g)  # raises if the iso fails
        if product_orders(fact.factors) != g.order:
            return False
    return True


def _suite_uniqueness():
    l = [cyclic_group(2), cyclic_group(4)]
    m = [cyclic_group(4), cyclic_group(2)]
    swap = map_from_function(group_tuples(l), lambda x: (x[1], x[0]))
    return verify_unique_factorization(l, m, swap)


def run_selftest(out):
    groups = _corpus()
    suites = [
        ("axioms", lambda: _suite_axioms(groups)),
        ("cosets", lambda: _suite_cosets(groups)),
        ("quotients", lambda: _suite_quotients(groups)),
        ("p-group factorization", _suite_pgroup),
        ("abelian factorization", lambda: _suite_abelian(groups)),
        ("uniqueness", _suite_uniqueness),
    ]
    failed = 0
    for name, run in suites:
        ok = run()
        print(f"{'ok' if ok else 'FAIL'} {name}", file=out)
        failed += 0 if ok else 1
    return 0 if failed == 0 else 1
