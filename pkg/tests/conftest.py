import pytest

from cptgroup.verify import Context, run_all


@pytest.fixture(scope="session")
def ctx():
    return Context()


@pytest.fixture(scope="session")
def pipeline():
    """The fully-built context and verification report, shared."""
    return run_all()
