import os
import sys

import pytest
from hypothesis import HealthCheck, settings

from discovery import PdParams, load_naegleria

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# empirical-Bayes reference values, rounded to three decimals
REFERENCE_PARAMS = {"aerobic": PdParams(0.669, 46.241), "anaerobic": PdParams(0.656, 155.408)}


@pytest.fixture(scope="session")
def aerobic():
    return load_naegleria("aerobic")


@pytest.fixture(scope="session")
def anaerobic():
    return load_naegleria("anaerobic")


@pytest.fixture(scope="session", params=["aerobic", "anaerobic"])
def library(request):
    return request.param, load_naegleria(request.param), REFERENCE_PARAMS[request.param]
