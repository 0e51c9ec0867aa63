import os

import pytest

import planarlie.easy
from planarlie.catalog import standard_grid


@pytest.fixture(scope="session", autouse=True)
def parser():
    return planarlie.easy.parser


@pytest.fixture(scope="session")
def grid():
    return standard_grid()


def pytest_report_header(config):
    env_vars = ["PLANARLIE_LOGGING_LEVEL"]
    rv = [f"{ev}: {os.environ.get(ev)}" for ev in sorted(env_vars)]
    rv += [f"planarlie.__version__={planarlie.__version__}"]
    rv += [f"dim_cap={planarlie.global_config.structure.dim_cap}"]
    return "\n".join(rv)


@pytest.fixture(scope="class")
def parser_setup(request, parser):
    """
    Adds the shared parser to a unittest.TestCase class as `self.pp`.

    For example:

    @pytest.mark.usefixtures("parser_setup")
    class MyTest(unittest.TestCase):
        def test_foo(self):
             self.pp.parse(...)
    """
    request.cls.pp = parser
