import os

import pytest

from models.constructions import rooted_trb
from models.finite_field import field_new


def pytest_collection_modifyitems(config, items):
    if os.getenv('TRACECODE_HEAVY') == '1':
        return
    skip_heavy = pytest.mark.skip(reason='set TRACECODE_HEAVY=1 to run large-field rows')
    for item in items:
        if 'heavy' in item.keywords:
            item.add_marker(skip_heavy)


@pytest.fixture(scope='session')
def gf16():
    return field_new(2, 4)


@pytest.fixture(scope='session')
def gf81():
    return field_new(3, 4)


@pytest.fixture(scope='session')
def gf256():
    return field_new(2, 8)


@pytest.fixture(scope='session')
def trb_221():
    return rooted_trb(2, 2, 1)


@pytest.fixture(scope='session')
def trb_242():
    return rooted_trb(2, 4, 2)


@pytest.fixture(scope='session')
def trb_321():
    return rooted_trb(3, 2, 1)
