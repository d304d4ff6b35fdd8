import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from grouptables.core import cyclic_group, symmetric_group
from grouptables.products import direct_product

from oracles import factor_multisets


@pytest.fixture(scope="session")
def z4():
    return cyclic_group(4)


@pytest.fixture(scope="session")
def z6():
    return cyclic_group(6)


@pytest.fixture(scope="session")
def z12():
    return cyclic_group(12)


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def z2xz4():
    return direct_product([cyclic_group(2), cyclic_group(4)])


def dp_cyclic_corpus(max_order, min_order=2):
    """(multiset, group) for every direct product of cyclic groups (single
    factors included) with order in range."""
    out = []
    for n in range(min_order, max_order + 1):
        for ms in factor_multisets(n):
            out.append((ms, direct_product([cyclic_group(k) for k in ms])))
    return out


@pytest.fixture(scope="session")
def small_abelian_corpus():
    """All products of cyclic groups with order <= 16, plus Z_n up to 16."""
    return dp_cyclic_corpus(16)
