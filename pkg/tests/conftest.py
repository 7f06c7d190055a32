import pytest

from hfsets.errors import limits


@pytest.fixture(autouse=True)
def _reset_limits():
    saved = (limits.max_elements, limits.max_count_digits)
    yield
    limits.max_elements, limits.max_count_digits = saved
