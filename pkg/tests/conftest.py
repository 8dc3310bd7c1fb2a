import functools

from hypothesis import HealthCheck, settings

from torus_garside import garside as gs
from torus_garside.oracle import enumerate_ball
from torus_garside.params import compute_params
from torus_garside.presentations import build_presentation
from torus_garside.verification import tables

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def structure(n, m):
    return gs.build_structure(compute_params(n, m))


@functools.lru_cache(maxsize=None)
def certified_tables(n, m):
    right, left = tables(compute_params(n, m))
    right.require_certified()
    left.require_certified()
    return right, left


@functools.lru_cache(maxsize=None)
def ball(n, m, radius):
    return enumerate_ball(build_presentation(compute_params(n, m), "practical"), radius)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE: list[str] = []


def record_criterion(num: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {num:>2} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
