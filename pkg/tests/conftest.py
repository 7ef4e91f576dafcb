import pytest

from stolarsky.relations import build_base_relations, standard_registry

# Unit tests certify against reduced sweep bounds; the acceptance module
# runs the full-bound chain separately.
_UNIT_LIMITS = {"less_than": 600, "shift": 2000, "phin": 10**5, "phi2n": 2000}


@pytest.fixture(scope="session")
def base():
    return build_base_relations(_UNIT_LIMITS)


@pytest.fixture(scope="session")
def registry(base):
    return standard_registry(base)
