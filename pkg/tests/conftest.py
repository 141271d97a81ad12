import pytest

from hybridalg.suite import default_checks, resolve_algebra, run_check

ALGEBRAS = ("R", "C", "H", "O", "S", "T", "A")


@pytest.fixture(scope="session")
def suite_reports():
    """Every default check on every named algebra, computed once per session."""
    out = []
    for name in ALGEBRAS:
        t = resolve_algebra(name)
        out += [(name, run_check(check, t)) for check in default_checks(t)]
    return out
