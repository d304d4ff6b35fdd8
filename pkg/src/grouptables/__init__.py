"""Finite group theory on explicit operation tables: homomorphisms, direct
products, and the constructive factorization of finite abelian groups into
cyclic p-groups with verified uniqueness of the factor orders."""

from .core import (
    FiniteGroup,
    Subgroup,
    GroupAxiomError,
    check_group,
    cyclic,
    cyclic_group,
    elt_of_ord,
    group_intersection,
    lcoset,
    lcosets,
    lift,
    normalp,
    quotient,
    subgroup,
    subgroupp,
    symmetric_group,
    trivial_subgroup,
    validate_group,
)
from .errors import DomainError, ResourceError
from .gmaps import (
    GroupMap,
    classify,
    compose_maps,
    homomorphism_check,
    identity_map,
    image,
    inv_isomorphism,
    kernel,
    map_from_function,
    mapply,
)
from .products import (
    direct_product,
    group_tuples,
    internal_direct_product_p,
    product_group,
    product_list_map,
    product_orders,
    products,
)
from .pgroup import (
    PFactorization,
    cyclic_p_subgroup_list,
    cyclicp,
    max_ord,
    p_groupp,
)
from .abelian import (
    AbelianFactorization,
    abelian_factorization,
    cyclic_subgroup_list,
    rel_prime_split,
    subgroup_ord_dividing,
)
from .uniqueness import (
    group_power,
    hits,
    hits_diff,
    orders,
    permutationp,
    reduce_cyclic,
    verify_unique_factorization,
)

__all__ = [name for name in dir() if not name.startswith("_")]
