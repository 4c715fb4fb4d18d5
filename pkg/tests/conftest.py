import pytest
from hypothesis import strategies as st

from hurwitzmon import datasets
from hurwitzmon.braids import BraidWord
from hurwitzmon.representations import sl2_mod_rep

# criterion number -> (passed, message); filled by test_acceptance.py
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, msg = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {msg}")


def letters(d, max_len=12, min_len=0):
    nonzero = st.integers(1, d - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(nonzero, min_size=min_len, max_size=max_len).map(tuple)


@st.composite
def braids(draw, d=None, max_len=12):
    if d is None:
        d = draw(st.integers(2, 5))
    return BraidWord(draw(letters(d, max_len)), d)


@st.composite
def braid_pairs(draw, max_len=12):
    d = draw(st.integers(2, 5))
    return draw(braids(d, max_len)), draw(braids(d, max_len))


@pytest.fixture(scope="session")
def rep32():
    return sl2_mod_rep(32)


@pytest.fixture(scope="session")
def sl2_32(rep32):
    return rep32.image_group()


@pytest.fixture(scope="session")
def sextic_pair():
    return (datasets.to_factorization(datasets.dataset("paper-sqrt2")),
            datasets.to_factorization(datasets.dataset("paper-neg-sqrt2")))
