"""Shared test plumbing.

Every highest weight whose multiplicities are computed anywhere in the suite
is recorded, and a final test checks that the multiplicities of each one add
up to its Weyl dimension.  Acceptance results are collected and printed as one
PASS/FAIL line per criterion at the end of the run.
"""

from __future__ import annotations

import pytest

from hodgerep import repdata

TOUCHED: set = set()
ACCEPTANCE: dict[str, list[tuple[str, bool, str]]] = {}

_original = repdata._dominant_multiplicities


def _recording(datum, mu):
    TOUCHED.add((datum, mu))
    return _original(datum, mu)


_recording.cache_info = _original.cache_info
_recording.cache_clear = _original.cache_clear
repdata._dominant_multiplicities = _recording


def record_acceptance(criterion: str, part: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE.setdefault(criterion, []).append((part, ok, detail))


def pytest_collection_modifyitems(session, config, items):
    last = [i for i in items if i.name == "test_every_touched_representation_sums_to_weyl_dimension"]
    rest = [i for i in items if i not in last]
    items[:] = rest + last


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[criterion]
        ok = all(p[1] for p in parts)
        failing = "; ".join(f"{name}: {detail}" for name, good, detail in parts if not good)
        line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}"
        if failing:
            line += f"  ({failing})"
        terminalreporter.write_line(line)


@pytest.fixture
def fresh_caps():
    from hodgerep import config

    previous = config.active_caps()
    yield config
    config.set_active_caps(previous)
