import numpy as np
import pytest

import vvgsp
from vvgsp import io
from vvgsp.bases import (dft_basis, eigenbasis, from_matrix, identity_basis,
                         unitarity_defect)
from vvgsp.errors import NotSymmetric, NotUnitary

# unitary block used in the Plancherel characterization: a 2x2 flat rotation
# padded with the identity
BLOCK3 = np.array([
    [1 / np.sqrt(2), 1 / np.sqrt(2), 0.0],
    [1 / np.sqrt(2), -1 / np.sqrt(2), 0.0],
    [0.0, 0.0, 1.0],
])


class TestEigenbasis:
    def test_path4_adjacency_spectrum(self, basis_A):
        np.testing.assert_allclose(basis_A.eigenvalues,
                                   [-1.6180, -0.6180, 0.6180, 1.6180], atol=1e-4)

    def test_path4_laplacian_spectrum(self, basis_L):
        np.testing.assert_allclose(basis_L.eigenvalues,
                                   [0.0, 0.5858, 2.0, 3.4142], atol=1e-4)

    def test_path4_normalized_laplacian_spectrum(self, basis_NL):
        np.testing.assert_allclose(basis_NL.eigenvalues,
                                   [0.0, 0.5, 1.5, 2.0], atol=1e-4)

    def test_identity_matrix(self):
        b = eigenbasis(np.eye(3))
        np.testing.assert_array_equal(b.matrix, np.eye(3))
        np.testing.assert_array_equal(b.eigenvalues, np.ones(3))

    def test_eigen_residuals(self, path4):
        for matrix in (vvgsp.adjacency(path4), vvgsp.laplacian(path4),
                       vvgsp.normalized_laplacian(path4)):
            b = eigenbasis(matrix)
            scale = np.abs(matrix).max()
            for k in range(1, b.n + 1):
                residual = matrix @ b.column(k) - b.eigenvalues[k - 1] * b.column(k)
                assert np.linalg.norm(residual) <= 1e-9 * scale

    def test_sign_convention(self, basis_A, basis_L, basis_NL):
        for b in (basis_A, basis_L, basis_NL):
            for k in range(1, b.n + 1):
                col = b.column(k)
                nz = np.flatnonzero(np.abs(col) > 1e-9)
                assert col[nz[0]] > 0

    def test_not_symmetric_rejected(self):
        with pytest.raises(NotSymmetric):
            eigenbasis(np.array([[0.0, 1.0], [0.0, 0.0]]))
        with pytest.raises(NotSymmetric):
            eigenbasis(np.array([[0.0, 1j], [-1j, 0.0]]))

    def test_ascending_order(self, basis_L):
        assert np.all(np.diff(basis_L.eigenvalues) >= 0)


class TestDftBasis:
    def test_n2_matrix(self):
        expected = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
        np.testing.assert_allclose(dft_basis(2).matrix, expected, atol=1e-15)

    def test_n4_matrix_against_literal(self):
        expected = 0.5 * np.array([
            [1, 1, 1, 1],
            [1, 1j, -1, -1j],
            [1, -1, 1, -1],
            [1, -1j, -1, 1j],
        ])
        np.testing.assert_allclose(dft_basis(4).matrix, expected, atol=1e-15)

    def test_n1(self):
        np.testing.assert_array_equal(dft_basis(1).matrix, [[1.0 + 0j]])

    def test_entry_magnitudes(self):
        for n in (1, 2, 4, 7):
            mags = np.abs(dft_basis(n).matrix)
            np.testing.assert_allclose(mags, n**-0.5, atol=1e-12)

    def test_diagonalizes_directed_cycle(self):
        # columns are eigenvectors of the directed cycle's adjacency matrix
        A = vvgsp.adjacency(vvgsp.cycle_graph(4, directed=True))
        U = dft_basis(4).matrix
        product = A @ U
        ratios = product[0] / U[0]
        for k in range(4):
            np.testing.assert_allclose(product[:, k], ratios[k] * U[:, k], atol=1e-12)
            assert abs(abs(ratios[k]) - 1) < 1e-12


class TestFromMatrix:
    def test_accepts_identity(self):
        from_matrix(np.eye(5))

    def test_accepts_block_matrix(self):
        from_matrix(BLOCK3)

    def test_rejects_all_ones(self):
        with pytest.raises(NotUnitary) as err:
            from_matrix(np.ones((3, 3)))
        assert "deviation" in str(err.value)

    def test_rejects_non_square(self):
        with pytest.raises(NotUnitary):
            from_matrix(np.ones((2, 3)))

    def test_tolerance_configurable(self):
        nearly = np.eye(2) * (1 + 1e-8)
        with pytest.raises(NotUnitary):
            from_matrix(nearly)
        from_matrix(nearly, tol=1e-6)


class TestAdjoint:
    def test_identity(self):
        b = identity_basis(3)
        np.testing.assert_array_equal(b.adjoint().matrix, b.matrix)

    def test_involution_exact(self, dft4, basis_A):
        for b in (dft4, basis_A):
            np.testing.assert_array_equal(b.adjoint().adjoint().matrix, b.matrix)

    def test_adjoint_rows_are_conjugated_columns(self, dft4):
        adj = dft4.adjoint()
        for k in range(1, 5):  # entrywise, independent of the adjoint implementation
            for n in range(1, 5):
                assert adj.entry(k, n) == np.conj(dft4.entry(n, k))


class TestInvariantsAndAccessors:
    def test_orthonormality_relations(self, five_bases):
        for b in five_bases.values():
            U = b.matrix
            eye = np.eye(b.n)
            np.testing.assert_allclose(U.conj().T @ U, eye, atol=1e-10)
            np.testing.assert_allclose(U @ U.conj().T, eye, atol=1e-10)

    def test_row_column_convention(self, dft4):
        U = dft4.matrix
        np.testing.assert_array_equal(dft4.column(2), U[:, 1])
        np.testing.assert_array_equal(dft4.row(3), U[2, :])
        assert dft4.entry(2, 3) == U[1, 2]

    def test_unitarity_defect_reports_worst_entry(self):
        dev, worst = unitarity_defect(np.ones((2, 2)))
        assert dev == 2.0  # U*U - I = [[1, 2], [2, 1]]
        assert worst == (1, 2)


class TestSerialization:
    def test_round_trip_bit_identical(self, five_bases, tmp_path):
        for name, b in five_bases.items():
            path = tmp_path / f"{name}.json"
            io.save_basis(b, path)
            loaded = io.load_basis(path)
            assert loaded.matrix.dtype == b.matrix.dtype
            np.testing.assert_array_equal(loaded.matrix, b.matrix)

    def test_field_tag(self, dft4, basis_A):
        assert io.basis_to_json_dict(dft4)["field"] == "complex"
        assert io.basis_to_json_dict(basis_A)["field"] == "real"
