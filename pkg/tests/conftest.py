import pytest

from hivebr import kernels
from hivebr.tableaux import make_skew_tableau, straight

# filled in by test_acceptance; printed after the run
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, msg = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {msg}")


BACKENDS = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@pytest.fixture
def lrex():
    """The unique LR tableau of shape (5,3,1)/(3,1), content (3,1,1)."""
    return make_skew_tableau([5, 3, 1], [3, 1], [[1, 1], [1, 2], [3]])


@pytest.fixture
def final_T():
    """Input of the n=3 end-to-end golden trace."""
    return make_skew_tableau([5, 4, 3, 3], [2, 1, 1],
                             [[1, 1, 1], [1, 2, 2], [2, 3], [2, 3, 4]])


@pytest.fixture
def final_hive_rows():
    return [[4, 8, 12, 14, 15, 15, 15], [4, 8, 12, 14, 15, 15], [4, 8, 12, 14, 15],
            [4, 8, 11, 12], [3, 7, 9], [2, 5], [0]]


@pytest.fixture
def comp_gt_h():
    """Companion tableau of the hive_embed golden (lambda = (2,1,1), m = 6)."""
    return straight([[1, 1, 1, 4], [2, 2, 2], [3, 3], [4, 4]])
