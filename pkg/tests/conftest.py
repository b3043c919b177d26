import pytest

from darjamorph.lexicon import build_variant_index, load_seed_lexicon
from darjamorph.morphology import AffixInventory, build_automaton


@pytest.fixture(scope="session")
def seed_entries():
    return load_seed_lexicon()


@pytest.fixture(scope="session")
def seed_index(seed_entries):
    return build_variant_index(seed_entries)


@pytest.fixture(scope="session")
def inventory():
    return AffixInventory.default()


@pytest.fixture(scope="session")
def automaton(inventory):
    return build_automaton(inventory)


@pytest.fixture
def write(tmp_path):
    def _write(name, text, encoding="utf-8"):
        path = tmp_path / name
        if isinstance(text, bytes):
            path.write_bytes(text)
        else:
            path.write_text(text, encoding=encoding)
        return path
    return _write


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py::test_criterion_" in getattr(rep, "nodeid", "") and rep.when == "call":
                name = rep.nodeid.split("::")[-1][len("test_criterion_"):]
                lines.append((int(name.split("_")[0]), name, outcome.upper()))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, name, outcome in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'PASSED' else 'FAIL'}  {name}")
