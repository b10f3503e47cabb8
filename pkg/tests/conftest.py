import os

import pytest
from hypothesis import settings

from eqsc.parabolic import build_quotient

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))

ACCEPTANCE: list = []


@pytest.fixture(scope="session")
def quotient():
    cache = {}

    def get(group, delta_P=()):
        key = (group, tuple(sorted(delta_P)))
        if key not in cache:
            cache[key] = build_quotient(group, delta_P)
        return cache[key]

    return get


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE:
        terminalreporter.write_line(line)
