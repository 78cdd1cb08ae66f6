import pytest

from quatford import ford_domain

_cache: dict[tuple[int, int], object] = {}


@pytest.fixture(scope="session")
def domain_of():
    """Session-cached Ford domains; several test modules share the same
    expensive constructions."""

    def get(p: int, a: int):
        key = (p, a)
        if key not in _cache:
            _cache[key] = ford_domain(p, a)
        return _cache[key]

    return get
