import pytest

from seaweed_index.rootsys import SimpleType, build_root_system
from seaweed_index.chevalley import structure_constants


def rsys(name):
    return build_root_system(SimpleType.parse(name))


@pytest.fixture
def get_rs():
    return rsys


@pytest.fixture
def get_sc():
    def _sc(name, sign_seed=None):
        return structure_constants(rsys(name), sign_seed)
    return _sc


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
