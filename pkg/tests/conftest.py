import functools
import math

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from degen_bergman import compute_periods, make_family, normalization_curve

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

G2 = (2.0, 3.0)
G3 = (2.0, 3.0, 4.0, 5.0)

# Moduli of the genus-2 constants for a = 2, b = 3, from mpmath tanh-sinh
# quadrature of the real defining integrals at 30 digits.
CONSTANT_MODULI = {
    "c1": 6.4227030842256935369,
    "c3": 5.7387629612154402366,
    "c4": 2.3962804694711843949,
    "c5": 5.2441151085842395727,
    "c6": 0.88654807312940558484,
    "c7": math.pi / math.sqrt(6.0),
    "d1": 2.1786384105256773944,
    "d2": 5.2441151085842395727,
    "d3": 1.6515857975088197067,
    "d4": 4.004309521824424908,
}
IM_TAU = 0.85458444327874354453
# 2 int_1^2 dx / (x sqrt|(x-1)(x-2)(x-3)|), the regular part of c2
C2_REGULAR = 3.6009479773714925839


def family(kind, proots, lam):
    return make_family(kind, len(proots) // 2 + 1, proots, lam)


@functools.lru_cache(maxsize=None)
def periods_of(kind, proots, lam):
    return compute_periods(family(kind, proots, lam))


@functools.lru_cache(maxsize=None)
def normalization_periods(kind, proots):
    return compute_periods(normalization_curve(family(kind, proots, 1e-4)))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "VERDICT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
