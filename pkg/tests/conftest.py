import numpy as np
import pytest

from rpelab.states import SchmidtVector


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def random_schmidt(rng, d, full_rank=False):
    """Random descending Schmidt vector, random rank unless forced full."""
    r = d if full_rank else int(rng.integers(1, d + 1))
    w = np.sort(rng.exponential(size=r))[::-1]
    w /= w.sum()
    return SchmidtVector(tuple(w) + (0.0,) * (d - r))


def random_hermitian(rng, n):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return 0.5 * (g + g.conj().T)


def random_unitary(rng, n):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))
