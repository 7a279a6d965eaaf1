import random

import pytest
from hypothesis import HealthCheck, settings

from tgrs.codes import EvaluationSet, TgrsParams
from tgrs.gf import field_make

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)]


def small_field(pm):
    return field_make(*pm)


def random_params(rng, field, n=None, k=None, l=None, max_n=None):
    """A random twisted code over ``field`` (v random nonzero)."""
    top = field.q - 1 if max_n is None else min(max_n, field.q - 1)
    n = n if n is not None else rng.randint(3, top)
    k = k if k is not None else rng.randint(2, n - 1)
    l = l if l is not None else rng.randint(0, k - 1)
    pts = rng.sample(range(1, field.q), n)
    eta = rng.randrange(1, field.q)
    v = tuple(rng.randrange(1, field.q) for _ in range(n))
    return TgrsParams(EvaluationSet(field, pts), k, l, eta, v)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number].line())
