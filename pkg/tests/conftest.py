from __future__ import annotations

import pytest

from chardeg.chartable import dixon_char_table
from chardeg.families import catalog_orders, small_group_catalog


@pytest.fixture(scope="session")
def catalog_all():
    """Every catalog group with its character table prebuilt.

    Both the catalog and the tables cache on the module/group, so this
    pays the construction cost exactly once per test run.
    """
    groups = [G for order in catalog_orders()
              for G in small_group_catalog(order)]
    for G in groups:
        dixon_char_table(G)
    return groups


@pytest.fixture(scope="session")
def catalog54():
    return list(small_group_catalog(54))
