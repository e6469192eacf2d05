import os
import sys
from functools import lru_cache

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default",
    deadline=None,
    derandomize=True,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[n]
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)


@lru_cache(maxsize=None)
def catalog_objects():
    """Every complete catalog entry at every grid point: [(id, bindings, object)]."""
    from liegeo import catalog

    out = []
    for eid in catalog.ids(complete_only=True):
        for pt in catalog.get(eid).grid:
            out.append((eid, dict(pt), catalog.instantiate(eid, pt)))
    return tuple(out)
