import runpy
from pathlib import Path

import pytest

DEMOS = Path(__file__).resolve().parent.parent / "demos"


@pytest.mark.parametrize("script", ["hopf_and_trefoil.py", "theta_and_khdd.py"])
def test_demo_runs(script, capsys):
    runpy.run_path(str(DEMOS / script), run_name="__main__")
    assert "True" in capsys.readouterr().out or script == "hopf_and_trefoil.py"


def test_corpus_demo_small(capsys):
    mod = runpy.run_path(str(DEMOS / "skein_across_corpus.py"))
    mod["main"](3)
    assert "all identities hold" in capsys.readouterr().out
