import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from vvgsp import io
from vvgsp.errors import FieldMismatch, NotHilbert, SpaceMismatch
from vvgsp.spaces import (FiniteDim, SampledFunction, ScalarField,
                          check_parallelogram, find_parallelogram_violation)

R2 = FiniteDim(2, 2, "real")
C2_SUP = FiniteDim(2, "inf", "complex")


class TestElements:
    def test_add_coordinatewise(self):
        x = R2.element([1, 2])
        y = R2.element([3, 4])
        np.testing.assert_array_equal((x + y).coords, [4, 6])

    def test_add_identity(self):
        x = R2.element([1.5, -2.5])
        np.testing.assert_array_equal((x + R2.zero()).coords, x.coords)

    def test_add_flat_pair_in_sup_plane(self):
        x = C2_SUP.element([1, 1])
        y = C2_SUP.element([1, -1])
        np.testing.assert_array_equal((x + y).coords, [2, 0])

    def test_space_mismatch_rejected(self):
        with pytest.raises(SpaceMismatch):
            R2.element([1, 2]) + FiniteDim(2, 1, "real").element([1, 2])

    def test_scale(self):
        x = C2_SUP.element([1, 0])
        np.testing.assert_array_equal((0 * x).coords, [0, 0])
        np.testing.assert_array_equal((1j * x).coords, [1j, 0])
        np.testing.assert_array_equal((2 * C2_SUP.element([1, -1])).coords, [2, -2])

    def test_complex_scalar_rejected_on_real_space(self):
        with pytest.raises(FieldMismatch):
            (1 + 1j) * R2.element([1, 2])
        # zero imaginary part is allowed
        np.testing.assert_array_equal(((2 + 0j) * R2.element([1, 2])).coords, [2, 4])

    def test_complex_coords_rejected_on_real_space(self):
        with pytest.raises(FieldMismatch):
            R2.element([1j, 0])

    def test_norm_examples(self):
        assert R2.element([3, 4]).norm() == pytest.approx(5.0)
        assert C2_SUP.element([1, 1]).norm() == 1.0
        assert R2.zero().norm() == 0.0

    def test_inner_examples(self):
        assert R2.element([1, 0]).inner(R2.element([0, 1])) == 0.0
        x = R2.element([1, 1])
        assert x.inner(x) == pytest.approx(x.norm() ** 2)
        assert R2.element([1, 1]).inner(R2.element([1, -1])) == 0.0

    def test_inner_conjugate_linear_in_second_argument(self):
        space = FiniteDim(2, 2, "complex")
        x = space.element([1 + 1j, 2])
        y = space.element([0.5, -1j])
        lam = 2 - 3j
        lhs = x.inner(y.scale(lam))
        assert lhs == pytest.approx(np.conj(lam) * x.inner(y))
        assert x.scale(lam).inner(y) == pytest.approx(lam * x.inner(y))

    def test_inner_requires_hilbert(self):
        with pytest.raises(NotHilbert):
            C2_SUP.element([1, 0]).inner(C2_SUP.element([0, 1]))


@pytest.mark.parametrize("space", [
    FiniteDim(3, 2, "real"),
    FiniteDim(2, "inf", "complex"),
    FiniteDim(4, 1.5, "real"),
    SampledFunction(8, 0.0, 1.0),
])
class TestNormAxioms:
    def test_homogeneity(self, space):
        rng = np.random.default_rng(7)
        for _ in range(50):
            x = space.random_coords(rng)
            lam = rng.uniform(-3, 3)
            assert space.norm(lam * x) == pytest.approx(abs(lam) * space.norm(x), rel=1e-12)

    def test_triangle(self, space):
        rng = np.random.default_rng(8)
        for _ in range(50):
            x = space.random_coords(rng)
            y = space.random_coords(rng)
            assert space.norm(x + y) <= space.norm(x) + space.norm(y) + 1e-12


@given(coords=arrays(np.float64, 3, elements=st.floats(-10, 10)),
       lam=st.floats(-5, 5))
@settings(max_examples=60)
def test_homogeneity_hypothesis(coords, lam):
    space = FiniteDim(3, 1.5, "real")
    assert space.norm(lam * coords) == pytest.approx(abs(lam) * space.norm(coords),
                                                     rel=1e-12, abs=1e-12)


class TestHilbertStructure:
    def test_flags(self):
        assert FiniteDim(3, 2, "real").hilbert_flag
        assert FiniteDim(1, "inf", "complex").hilbert_flag  # 1-dim is always hilbertian
        assert not FiniteDim(2, "inf", "complex").hilbert_flag
        assert not FiniteDim(2, 1, "real").hilbert_flag
        assert not SampledFunction(2).hilbert_flag
        assert SampledFunction(1).hilbert_flag

    def test_parallelogram_holds_on_hilbert(self):
        assert check_parallelogram(FiniteDim(3, 2, "complex"), pairs=100) < 1e-12

    @pytest.mark.parametrize("space", [
        FiniteDim(2, "inf", "complex"),
        FiniteDim(3, 1, "real"),
        FiniteDim(2, 1.5, "real"),
        SampledFunction(4),
    ])
    def test_violation_found_on_non_hilbert(self, space):
        pair = find_parallelogram_violation(space)
        assert pair is not None
        x, y = pair
        lhs = (x + y).norm() ** 2 + (x - y).norm() ** 2
        rhs = 2 * x.norm() ** 2 + 2 * y.norm() ** 2
        assert abs(lhs - rhs) > 1e-9

    def test_no_violation_on_hilbert(self):
        assert find_parallelogram_violation(FiniteDim(4, 2, "real")) is None

    @pytest.mark.parametrize("space", [
        FiniteDim(3, 2, "real"),
        FiniteDim(2, 2, "complex"),
        FiniteDim(1, "inf", "complex"),
        SampledFunction(1),
    ])
    def test_inner_consistent_with_norm_on_random_samples(self, space):
        rng = np.random.default_rng(11)
        for _ in range(100):
            x = space.random_element(rng)
            ip = x.inner(x)
            assert abs(ip.imag if isinstance(ip, complex) else 0.0) <= 1e-15
            value = ip.real if isinstance(ip, complex) else ip
            assert value == pytest.approx(x.norm() ** 2, rel=1e-12, abs=1e-15)


class TestSampledFunction:
    def test_norm_matches_sup_space(self):
        rng = np.random.default_rng(3)
        sampled = SampledFunction(16, 0.0, 1.0)
        finite = FiniteDim(16, "inf", "real")
        for _ in range(20):
            coords = rng.normal(size=16)
            assert sampled.norm(coords) == finite.norm(coords)

    def test_sampling(self):
        space = SampledFunction(101, 0.0, 1.0)
        el = space.sample(lambda t: 2 * t)
        assert el.norm() == pytest.approx(2.0)
        assert el.coords[0] == 0.0

    def test_default_grid(self):
        assert SampledFunction().grid == 256


class TestSerialization:
    @pytest.mark.parametrize("space", [
        FiniteDim(3, 1.5, "complex"),
        FiniteDim(2, "inf", "real"),
        SampledFunction(32, -1.0, 3.0, ScalarField.COMPLEX),
    ])
    def test_space_round_trip(self, space):
        assert io.space_from_json_dict(io.space_to_json_dict(space)) == space

    def test_element_json_complex_pairs(self):
        from vvgsp import Signal

        obj = io.signal_to_json_dict(
            Signal(FiniteDim(2, 2, "complex"), [[1 + 2j, 0], [0, 1]]))
        assert obj["values"][0][0] == [1.0, 2.0]
        assert obj["values"][0][1] == 0.0

    def test_element_json_round_trip(self):
        space = FiniteDim(3, 1.5, "complex")
        el = space.element([1 + 2j, -0.25, 3j])
        items = io.element_to_json(el)
        assert items == [[1.0, 2.0], -0.25, [0.0, 3.0]]
        back = io.element_from_json(space, items)
        np.testing.assert_array_equal(back.coords, el.coords)


class TestMatrixCsv:
    def test_complex_round_trip(self):
        mat = np.array([[0.5 + 0.25j, -1.0], [3e-17j, 2.0 - 1e-9j]])
        text = io.matrix_to_csv(mat)
        assert "j" in text and text.endswith("\n")
        back = io.matrix_from_csv(text)
        np.testing.assert_array_equal(back, mat)

    def test_real_round_trip_exact(self):
        rng = np.random.default_rng(21)
        mat = rng.normal(size=(3, 4))
        back = io.matrix_from_csv(io.matrix_to_csv(mat))
        np.testing.assert_array_equal(back, mat)
