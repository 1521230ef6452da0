"""Deterministic, deadline-free hypothesis profile for exact-arithmetic tests."""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact",
    deadline=None,
    derandomize=True,
    max_examples=25,
    suppress_health_check=(HealthCheck.too_slow,),
)
settings.load_profile("exact")
