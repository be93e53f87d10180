"""Run every .hb script in this directory over its fixture family.

    python3 scripts/run_scripts.py [script.hb ...]
"""
import sys
import time
from pathlib import Path

from hopfbrace.envs import fixture_envs
from hopfbrace.morphlang.script import parse_script, run_script


def main(paths):
    here = Path(__file__).parent
    paths = paths or sorted(str(p) for p in here.glob("*.hb"))
    bad = 0
    for path in paths:
        ps = parse_script(Path(path).read_text(encoding="utf-8"))
        t0 = time.perf_counter()
        n = 0
        for label, env in fixture_envs(ps.family):
            rep = run_script(ps, env)
            n += 1
            if not rep.passed:
                bad += 1
                print(f"  FAIL {label}: {', '.join(rep.failed())}")
        print(f"{Path(path).name:26} {ps.family:13} {n:3} fixtures  {time.perf_counter() - t0:6.1f} s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
