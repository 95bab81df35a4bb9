import random
from array import array

import pytest

from colorpaths import _purepy, kernels

backends = kernels.backends()
needs_both = pytest.mark.skipif("cython" not in backends, reason="compiled extension not built")


def test_backend_selected():
    assert kernels.BACKEND in ("python", "cython")


@needs_both
def test_color_dp_agrees():
    rng = random.Random(0)
    py, cy = backends["python"], backends["cython"]
    for _ in range(300):
        N = rng.randint(1, 20)
        r = rng.randint(1, 4)
        flat = array("i", [rng.randint(1, r) for _ in range(N * (N - 1) // 2)])
        for mono in (False, True):
            assert py.color_dp(flat, N, r, mono) == cy.color_dp(flat, N, r, mono)


@needs_both
@pytest.mark.parametrize("N, target", [(4, 3), (5, 3), (5, 4), (6, 4)])
def test_f_search_agrees_node_for_node(N, target):
    a = backends["python"].f_search(N, target, [], 10**9, 0.0)
    b = backends["cython"].f_search(N, target, [], 10**9, 0.0)
    assert (a[0] is None) == (b[0] is None)
    assert list(a[0] or []) == list(b[0] or [])
    assert a[1:] == b[1:]


@needs_both
def test_max_chain_agrees():
    rng = random.Random(1)
    for _ in range(60):
        N = rng.randint(1, 16)
        succ = [0] * N
        for i in range(N):
            for j in range(i + 1, N):
                if rng.random() < 0.5:
                    succ[i] |= 1 << j
                else:
                    succ[j] |= 1 << i
        full = (1 << N) - 1
        a = backends["python"].max_chain(succ, [], [], full, 0, 10**9, 0.0)
        b = backends["cython"].max_chain(succ, [], [], full, 0, 10**9, 0.0)
        assert list(a[0] or []) == list(b[0] or []) and a[1:] == b[1:]


def test_pure_override(monkeypatch):
    import importlib
    monkeypatch.setenv("COLORPATHS_PURE", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python" and mod.color_dp is _purepy.color_dp
    finally:
        monkeypatch.delenv("COLORPATHS_PURE")
        importlib.reload(kernels)
