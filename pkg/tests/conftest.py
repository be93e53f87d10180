import json
import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from hopfbrace.exactfield import FieldSpec

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ROOT = Path(__file__).resolve().parent.parent
SCRIPTS = ROOT / "scripts"
ORACLES = json.loads((Path(__file__).parent / "oracles" / "values.json").read_text())

Q = FieldSpec.rational()
F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)
FIELDS = (Q, F3, F5)


@pytest.fixture(scope="session")
def oracles():
    return ORACLES


@pytest.fixture(scope="session")
def s3_double():
    from hopfbrace import drinfeld, hopfcore
    from hopfbrace.morphlang.groups import builtin
    H = hopfcore.group_algebra(builtin("S3"), Q)
    return H, drinfeld.double_bundle(H)


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
