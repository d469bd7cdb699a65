import pytest

from fpkit.config import builtin
from fpkit.quotient import build_projection

# shipped test families: label -> bundled config
FAMILIES = {
    "A": "c2c2_whole",
    "B": "c4c2_square",
    "C": "s3c2_alternating",
    "D": "v4c3_pair",
}

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def family_configs():
    return {label: builtin(name) for label, name in FAMILIES.items()}


@pytest.fixture(scope="session")
def projections(family_configs):
    return {label: build_projection(cfg.spec) for label, cfg in family_configs.items()}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
