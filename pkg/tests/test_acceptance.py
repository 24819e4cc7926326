"""Acceptance criteria, each run at its stated tolerance on the default grid and degree.

One line per criterion is printed (and repeated in the terminal summary).
"""

import time
from functools import lru_cache

import pytest

from gftkit.harness import Config, run_scenario

CONFIG = Config()
RESULTS = {}


@lru_cache(maxsize=None)
def report(scenario_id):
    t0 = time.perf_counter()
    rep = run_scenario(scenario_id, CONFIG)
    return rep, time.perf_counter() - t0


def checks(scenario_id, prefix=""):
    rep, _ = report(scenario_id)
    return [c for c in rep.checks if c.id.startswith(f"{scenario_id}/{prefix}")]


CRITERIA = {
    1: ("norm sharpness on K(lam)", [("norm-convex-order", "")]),
    2: ("norm sharpness on J(S*_alpha(lam))", [("norm-alexander-spiral", "")]),
    3: ("radial limit of C_beta[g_alpha] = 4(1-lam)cos(alpha) + 2 beta", [("norm-cesaro-sharp", "")]),
    4: ("subordinate norm bound ||C_beta f|| <= ||J f|| + 2 beta", [("norm-cesaro-subordinate", "")]),
    5: ("preservation positives (Kaplan, starlike/convex order, convex)",
        [("cesaro-kaplan-positive", ""), ("cesaro-starlike-order", ""), ("cesaro-convex-preservation", "")]),
    6: ("counterexample negatives",
        [("cesaro-nonunivalent-koebe", "collision"), ("cesaro-convexity-failure", "n=2/value"),
         ("cesaro-starlike-failure", ""), ("royster-nonunivalent", "beta=")]),
    7: ("exact set predicates", [("set-predicates", "")]),
    8: ("engine oracles: duality, operator identities, finite differences", [("engine-oracles", "")]),
    9: ("negative-order remark: ||J[g_0]|| > 4.5 and a collision for g_0", [("negative-order-remark", "")]),
}


def _line(n, passed, total, bad, seconds):
    title = CRITERIA[n][0]
    status = "PASS" if not bad else "FAIL"
    line = f"criterion {n}: {status}  {title}  ({passed}/{total} checks, {seconds:.1f}s)"
    if bad:
        ids = ", ".join(c.id for c in bad[:3]) + (" ..." if len(bad) > 3 else "")
        line += f"  failing: {ids}"
    return line


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    found, seconds = [], 0.0
    for sid, prefix in CRITERIA[n][1]:
        found += checks(sid, prefix)
        seconds += report(sid)[1]
    bad = [c for c in found if c.status != "pass"]
    line = _line(n, len(found) - len(bad), len(found), bad, seconds)
    RESULTS[n] = line
    print(line)
    assert found, "criterion selected no checks"
    assert seconds < 60.0
    assert not bad, "\n".join(
        f"{c.id}: {c.status} measured={c.measured!r} expected={c.expected!r} tol={c.tolerance} "
        f"witness={c.witness} {c.error or ''}" for c in bad)
