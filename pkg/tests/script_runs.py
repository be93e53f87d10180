"""Shipped verification scripts run on their fixture families, cached per session."""
import time
from functools import lru_cache

from conftest import SCRIPTS
from hopfbrace import envs
from hopfbrace.morphlang.script import parse_script, run_script

SCRIPT_FILES = sorted(SCRIPTS.glob("*.hb"))


@lru_cache(maxsize=None)
def family_results(name):
    """[(fixture label, report)] and the wall time for one script."""
    path = SCRIPTS / name
    parsed = parse_script(path.read_text())
    t0 = time.perf_counter()
    out = [(label, run_script(parsed, env, subject=name))
           for label, env in envs.fixture_envs(parsed.family)]
    return out, time.perf_counter() - t0
