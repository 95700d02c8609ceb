import numpy as np
import pytest

from catcorr import Parity, SuperpositionSpec
from catcorr.errors import CatcorrError


@pytest.fixture
def rng():
    return np.random.default_rng(987654321)


def random_spec(rng, n_min=2, n_max=8, parity=None, extremes=True):
    """Random superposition spec; occasionally pins overlaps to 0 or 1.

    Retries on the null odd state so callers never see it.
    """
    while True:
        n = int(rng.integers(n_min, n_max + 1))
        ps = rng.uniform(0.0, 1.0, size=n)
        if extremes:
            pin = rng.uniform(size=n) < 0.1
            ps[pin] = np.round(rng.uniform(size=pin.sum()))
        chosen = parity if parity is not None else (
            Parity.EVEN if rng.uniform() < 0.5 else Parity.ODD)
        try:
            return SuperpositionSpec(overlaps=tuple(ps), parity=chosen)
        except CatcorrError:
            continue


def random_pair(rng, n):
    i, j = sorted(int(x) + 1 for x in rng.choice(n, size=2, replace=False))
    return i, j


def random_density(rng, dim=4):
    """Full-rank random density matrix, Ginibre construction."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def haar_qubit(rng):
    """Haar-random single-qubit unitary via QR of a complex Gaussian."""
    g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(g)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))
