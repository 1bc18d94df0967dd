import pytest

from krasner.catalog import cyclic_ring, hyperfield_k, zero_mul_ring
from krasner.corpus import generate_corpus

# one pass/FAIL line per shipped guarantee, filled in by test_acceptance
# and echoed after the run so the gate is readable at a glance
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def z2():
    return cyclic_ring(2)


@pytest.fixture(scope="session")
def z4():
    return cyclic_ring(4)


@pytest.fixture(scope="session")
def z6():
    return cyclic_ring(6)


@pytest.fixture(scope="session")
def kfield():
    return hyperfield_k()


@pytest.fixture(scope="session")
def zmul2():
    return zero_mul_ring(2)


# generation is cached inside the module, but session scoping keeps the
# intent visible: every test sees the same corpus objects
@pytest.fixture(scope="session")
def corpus3():
    return generate_corpus(max_order=3)


@pytest.fixture(scope="session")
def corpus4():
    return generate_corpus(max_order=4)
