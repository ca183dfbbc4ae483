import numpy as np
import pytest

from nbcodes import numfield


@pytest.fixture(scope="session")
def qr5():
    return numfield.qr_module(numfield.QuadRing(5))


@pytest.fixture(scope="session")
def qr13():
    return numfield.qr_module(numfield.QuadRing(13))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def brute_words(G, p):
    """Every vector of the row span of G (tiny inputs only)."""
    G = np.asarray(G, dtype=np.int64)
    k = G.shape[0]
    out = []
    for idx in range(p ** k):
        c = [(idx // p**i) % p for i in range(k)]
        out.append(tuple((np.array(c, dtype=np.int64) @ G % p).tolist()) if k else
                   tuple([0] * G.shape[1]))
    return set(out)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        ok, text = mod.RESULTS[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'} {text}")
