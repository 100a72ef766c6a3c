"""Runs every entry of the reproduction manifest against its golden output."""
import json
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
REPRODUCE = ROOT / "reproduce"


def _entries():
    manifest = json.loads((REPRODUCE / "manifest.json").read_text(encoding="utf-8"))
    return manifest["entries"]


ENTRIES = _entries()


def test_manifest_entries_are_unique():
    tables = [e["table"] for e in ENTRIES]
    assert len(tables) == len(set(tables))
    goldens = {e["golden"] for e in ENTRIES}
    assert goldens == {p.name for p in (REPRODUCE / "golden").iterdir()}


@pytest.mark.parametrize("entry", ENTRIES, ids=[e["table"] for e in ENTRIES])
def test_golden(entry, cli, monkeypatch):
    monkeypatch.chdir(ROOT)
    code, out, _ = cli(*entry["argv"])
    assert code == entry.get("exit_code", 0)
    golden = (REPRODUCE / "golden" / entry["golden"]).read_text(encoding="utf-8")
    assert out == golden
