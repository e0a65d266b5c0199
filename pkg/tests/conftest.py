import pytest

from fuzzy_pvalue import TwoSampleData

# 17/20 remissions on treatment vs 4/10 on placebo
CASE_STUDY = TwoSampleData(x=4, m=10, y=17, n=20)


@pytest.fixture
def case_study():
    return CASE_STUDY


_ACCEPTANCE_KEY = pytest.StashKey[dict]()


@pytest.fixture
def acceptance(request):
    """Record one sub-check of a numbered acceptance criterion.

    ``record(criterion, ok, detail)`` stores the outcome; the terminal summary
    prints one PASS/FAIL line per criterion (FAIL if any sub-check failed).
    """
    store = request.config.stash.setdefault(_ACCEPTANCE_KEY, {})

    def record(criterion: int, ok: bool, detail: str):
        store.setdefault(criterion, []).append((bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    store = config.stash.get(_ACCEPTANCE_KEY, None)
    if not store:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(store):
        checks = store[criterion]
        ok = all(c for c, _ in checks)
        failed = [d for c, d in checks if not c]
        note = failed[0] if failed else checks[-1][1]
        more = f" (+{len(failed) - 1} more failing)" if len(failed) > 1 else ""
        terminalreporter.write_line(
            f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  [{len(checks)} checks] {note}{more}"
        )
