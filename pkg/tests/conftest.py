from __future__ import annotations

from fractions import Fraction

import pytest

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from bdprob import And, Atom, FourVector, Not, Or, ProbModel

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

NAMES = ("p", "q", "r")


def formulas(names=NAMES, max_leaves: int = 8):
    leaves = st.sampled_from([Atom(n) for n in names])
    return st.recursive(
        leaves,
        lambda sub: st.one_of(
            sub.map(Not),
            st.tuples(sub, sub).map(lambda t: And(*t)),
            st.tuples(sub, sub).map(lambda t: Or(*t)),
        ),
        max_leaves=max_leaves,
    )


def _normalize(raw: list[int]) -> list[Fraction]:
    total = sum(raw)
    return [Fraction(x, total) for x in raw]


def weights(n: int):
    return (
        st.lists(st.integers(0, 12), min_size=n, max_size=n)
        .filter(lambda xs: sum(xs) > 0)
        .map(_normalize)
    )


def models(names=("p", "q")):
    names = tuple(sorted(names))
    return weights(1 << (2 * len(names))).map(lambda w: ProbModel.from_masses(names, w))


def vectors():
    return weights(4).map(lambda w: FourVector(*w))


# -- acceptance summary ----------------------------------------------------

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    failed = call.excinfo is not None and not call.excinfo.errisinstance(pytest.skip.Exception)
    if failed or number not in _criteria:
        _criteria[number] = (title, "FAIL" if failed else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, verdict = _criteria[number]
        terminalreporter.write_line(f"[{verdict}] criterion {number:>2}: {title}")
