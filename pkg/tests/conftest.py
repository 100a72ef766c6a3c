import json
import os

import pytest
from hypothesis import HealthCheck, settings

from bellkit import app

settings.register_profile("default", max_examples=30, deadline=None, derandomize=True)
settings.register_profile(
    "ci",
    max_examples=100,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def sequence_file(tmp_path):
    """Factory writing a sequence file and returning its path."""

    def write(values, name="test", **extra):
        path = tmp_path / f"{name}.json"
        document = {"name": name, "values": [str(v) for v in values], **extra}
        path.write_text(json.dumps(document, indent=2), encoding="utf-8")
        return path

    return write


@pytest.fixture
def cli(capsys):
    """Run command line, return (exit code, stdout, stderr)."""

    def invoke(*argv):
        code = app.run([str(a) for a in argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke
