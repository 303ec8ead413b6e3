import pytest

from cayley.acceptance import Context


@pytest.fixture(scope="session")
def ctx():
    """Shared lazily-built heavy objects (diagram, table, engine)."""
    return Context()


@pytest.fixture(scope="session")
def diagram(ctx):
    return ctx.diagram


@pytest.fixture(scope="session")
def spinor(ctx):
    return ctx.spinor


@pytest.fixture(scope="session")
def table(ctx):
    return ctx.table


@pytest.fixture(scope="session")
def engine(ctx):
    return ctx.engine
