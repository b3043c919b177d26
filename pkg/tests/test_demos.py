import runpy
from importlib import resources
from pathlib import Path

import pytest

DEMOS = sorted((Path(__file__).parents[1] / "demos").glob("*.py"))


@pytest.mark.parametrize("script", DEMOS, ids=lambda p: p.stem)
def test_demo_runs(script, capsys):
    runpy.run_path(str(script), run_name="__main__")
    assert capsys.readouterr().out


def test_bundled_desk_corpus_matches_golden():
    bundled = resources.files("darjamorph.data").joinpath("desk_corpus.txt").read_bytes()
    assert bundled == (Path(__file__).parent / "golden" / "desk_corpus.txt").read_bytes()
