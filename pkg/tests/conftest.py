"""Shared test setup: isolated result cache, calmer hypothesis profile."""

import os
import tempfile

# isolate before any sumsetchains import so cached reports never leak
# between runs or into the user's real cache
os.environ["SUMSETCHAINS_CACHE"] = tempfile.mkdtemp(prefix="sumsetchains-tests-")

from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")
