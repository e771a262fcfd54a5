import pytest

from eulerminor.search_setup import SearchSetup


@pytest.fixture(autouse=True)
def fresh_search_setup():
    setup = SearchSetup.get_instance()
    setup.reset()
    yield setup
    setup.reset()
