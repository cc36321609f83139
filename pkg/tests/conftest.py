import math

from hypothesis import HealthCheck, settings

settings.register_profile(
    "dualhyp", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("dualhyp")


def close(x, ref, rtol=1e-12, atol=0.0):
    """Channel-wise closeness of two duals (or a dual and a pair)."""
    re, du = (ref.re, ref.du) if hasattr(ref, "du") else ref
    return (math.isclose(x.re, re, rel_tol=rtol, abs_tol=atol)
            and math.isclose(x.du, du, rel_tol=rtol, abs_tol=atol))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
