import numpy as np
import pytest

import vvgsp
from vvgsp import spaces

spaces.enable_construction_checks(True)


# -- independent oracles (kept free of the library's transform internals) ---

def oracle_gft(U, coords):
    """Direct double-sum evaluation of the forward transform."""
    n = U.shape[0]
    d = coords.shape[1]
    out = np.zeros((n, d), dtype=complex)
    for k in range(n):
        for row in range(n):
            out[k] += np.conj(U[row, k]) * coords[row]
    return out


def oracle_igft(U, coords):
    n = U.shape[0]
    d = coords.shape[1]
    out = np.zeros((n, d), dtype=complex)
    for row in range(n):
        for k in range(n):
            out[row] += U[row, k] * coords[k]
    return out


def oracle_convolve(U, alpha, coords):
    """Triple-sum convolution: expand both transforms from their definitions."""
    n = U.shape[0]
    d = coords.shape[1]
    out = np.zeros((n, d), dtype=complex)
    for row in range(n):
        for k in range(n):
            alpha_hat_k = sum(np.conj(U[m, k]) * alpha[m] for m in range(n))
            f_hat_k = np.zeros(d, dtype=complex)
            for m in range(n):
                f_hat_k += np.conj(U[m, k]) * coords[m]
            out[row] += U[row, k] * alpha_hat_k * f_hat_k
    return out


def assert_signal_close(f, coords, atol=1e-10):
    np.testing.assert_allclose(f.coords, coords, atol=atol)


# -- shared fixtures ---------------------------------------------------------

@pytest.fixture(scope="session")
def path4():
    return vvgsp.path_graph(4)


@pytest.fixture(scope="session")
def basis_A(path4):
    return vvgsp.eigenbasis(vvgsp.adjacency(path4))


@pytest.fixture(scope="session")
def basis_L(path4):
    return vvgsp.eigenbasis(vvgsp.laplacian(path4))


@pytest.fixture(scope="session")
def basis_NL(path4):
    return vvgsp.eigenbasis(vvgsp.normalized_laplacian(path4))


@pytest.fixture(scope="session")
def dft4():
    return vvgsp.dft_basis(4)


@pytest.fixture(scope="session")
def identity4():
    return vvgsp.identity_basis(4)


@pytest.fixture(scope="session")
def five_bases(identity4, dft4, basis_A, basis_L, basis_NL):
    return {"identity": identity4, "DFT": dft4, "A": basis_A,
            "L": basis_L, "NL": basis_NL}


def random_signal(space, n, rng):
    return vvgsp.Signal(space, space.random_coords(rng, leading_shape=(n,)))
