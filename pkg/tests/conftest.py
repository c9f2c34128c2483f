import random
import time

import pytest
from hypothesis import HealthCheck, settings

from expoweyl.config import SessionConfig

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

RANK2 = dict(rank=2, embed=("1", "s2"), p=(1, 1))

_SESSIONS = {}


def session(q_mode="classical", **kw):
    """Cached session built from SessionConfig(q_mode=..., **kw)."""
    key = (q_mode, tuple(sorted(kw.items())))
    if key not in _SESSIONS:
        _SESSIONS[key] = SessionConfig(q_mode=q_mode, **kw).build()
    return _SESSIONS[key]


@pytest.fixture
def rng():
    return random.Random(20261017)


@pytest.fixture
def classical():
    return session("classical")


@pytest.fixture
def generic():
    return session("generic")


@pytest.fixture
def rank2():
    return session("classical", **RANK2)


# -- acceptance reporting ----------------------------------------------------

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _CRITERIA[n] = (title, rep.outcome, rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, outcome, dur = _CRITERIA[n]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {title}  ({dur:.2f}s)")


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
