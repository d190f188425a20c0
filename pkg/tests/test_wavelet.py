import numpy as np

from src.models import FAMILIES, CoefficientLayout, InvalidInputError, WaveletBasis
from src.wavelet import (
    coefficient_layout,
    dwt_forward,
    dwt_inverse,
    dwt_matrix,
    next_power_of_two,
    pad_rows,
    pad_signal,
    transform_rows,
    truncate_rows,
)
from tests import TestCase

SQRT2 = np.sqrt(2.0)


class TestWaveletBasis(TestCase):

    def test_filters_are_orthonormal_quadrature_mirrors(self):
        for family in FAMILIES:
            basis = WaveletBasis(family)
            h, g = basis.low_pass, basis.high_pass
            self.assertAlmostEqual(h.sum(), SQRT2, delta=1e-12)
            for shift in range(0, h.size, 2):
                expected = 1.0 if shift == 0 else 0.0
                self.assertAlmostEqual(float(h[: h.size - shift] @ h[shift:]), expected, delta=1e-12)
            k = np.arange(h.size)
            self.assertAllClose(g, ((-1.0) ** k) * h[::-1], atol=0)

    def test_tap_counts(self):
        self.assertEqual(WaveletBasis("haar").taps, 2)
        self.assertEqual(WaveletBasis("db4").taps, 8)
        self.assertEqual(WaveletBasis("db8").taps, 16)

    def test_unknown_family(self):
        with self.assertRaises(InvalidInputError):
            WaveletBasis("sym4")

    def test_levels_too_deep(self):
        with self.assertRaises(InvalidInputError):
            dwt_forward(np.ones(8), WaveletBasis("haar", levels=4))


class TestForwardInverse(TestCase):

    def test_constant_haar(self):
        self.assertAllClose(dwt_forward([1, 1, 1, 1], WaveletBasis("haar", 2)), [2, 0, 0, 0], atol=1e-12)

    def test_difference_haar(self):
        self.assertAllClose(dwt_forward([1, -1, 0, 0], WaveletBasis("haar", 2)), [0, 0, SQRT2, 0], atol=1e-12)

    def test_inverse_examples(self):
        haar = WaveletBasis("haar", 2)
        self.assertAllClose(dwt_inverse([2, 0, 0, 0], haar), [1, 1, 1, 1], atol=1e-12)
        self.assertAllClose(dwt_inverse([0, 0, SQRT2, 0], haar), [1, -1, 0, 0], atol=1e-12)
        self.assertAllClose(dwt_inverse(np.zeros(16), WaveletBasis("db4")), np.zeros(16), atol=0)

    def test_round_trip_and_parseval(self):
        for family in FAMILIES:
            for length in (8, 16, 64, 1024):
                basis = WaveletBasis(family)
                for levels in range(1, int(np.log2(length)) + 1):
                    leveled = WaveletBasis(family, levels)
                    x = self.rng.standard_normal(length)
                    c = dwt_forward(x, leveled)
                    self.assertAlmostEqual(np.linalg.norm(c), np.linalg.norm(x), delta=1e-10)
                    self.assertAllClose(dwt_inverse(c, leveled), x)
                    self.assertAllClose(dwt_forward(dwt_inverse(x, leveled), leveled), x)
                self.assertEqual(dwt_forward(np.zeros(length), basis).shape, (length,))

    def test_non_power_of_two(self):
        with self.assertRaises(InvalidInputError):
            dwt_forward(np.ones(12), WaveletBasis("haar"))
        with self.assertRaises(InvalidInputError):
            dwt_inverse(np.ones(3), WaveletBasis("db4"))

    def test_single_basis_function_is_one_sparse(self):
        basis = WaveletBasis("db8")
        psi = dwt_matrix(64, basis)
        for j in (0, 5, 33, 63):
            coefficients = dwt_forward(3.0 * psi[:, j], basis)
            self.assertEqual(int(np.sum(np.abs(coefficients) > 1e-10)), 1)
            self.assertAlmostEqual(coefficients[j], 3.0, delta=1e-10)


class TestMatrixOracle(TestCase):

    def test_two_point_haar(self):
        expected = np.array([[1, 1], [1, -1]]) / SQRT2
        self.assertAllClose(dwt_matrix(2, WaveletBasis("haar")), expected, atol=1e-15)

    def test_orthogonal_and_consistent(self):
        for family in FAMILIES:
            basis = WaveletBasis(family)
            for length in (8, 16, 32, 64):
                psi = dwt_matrix(length, basis)
                self.assertAllClose(psi @ psi.T, np.eye(length))
                x = self.rng.standard_normal(length)
                self.assertAllClose(dwt_forward(x, basis), x @ psi)
                e = np.zeros(length)
                e[3] = 1.0
                self.assertAllClose(psi.T[:, 3], dwt_forward(e, basis))

    def test_size_guard(self):
        with self.assertRaises(InvalidInputError):
            dwt_matrix(8192, WaveletBasis("haar"))


class TestTransformRows(TestCase):

    def test_constant_rows(self):
        X = np.array([[3.0] * 4, [-1.5] * 4])
        self.assertAllClose(transform_rows(X, WaveletBasis("haar"), "forward"), [[6, 0, 0, 0], [-3, 0, 0, 0]], atol=1e-12)

    def test_matches_matrix_oracle(self):
        basis = WaveletBasis("db4")
        X = self.rng.standard_normal((3, 16))
        Xstar = transform_rows(X, basis, "forward")
        self.assertAllClose(Xstar, X @ dwt_matrix(16, basis))
        self.assertAllClose(transform_rows(Xstar, basis, "inverse"), X)

    def test_bad_direction(self):
        with self.assertRaises(InvalidInputError):
            transform_rows(np.ones((2, 4)), WaveletBasis("haar"), "sideways")


class TestLayoutAndPadding(TestCase):

    def test_layout_bands(self):
        layout = coefficient_layout(16, WaveletBasis("haar"))
        names = [name for name, _, _ in layout.band_offsets]
        self.assertEqual(names, ["a4", "d4", "d3", "d2", "d1"])
        self.assertEqual(sum(length for _, _, length in layout.band_offsets), 16)
        self.assertEqual(layout.finest_detail, slice(8, 16))
        self.assertEqual(layout.approximation, slice(0, 1))

    def test_layout_rejects_gaps(self):
        with self.assertRaises(InvalidInputError):
            CoefficientLayout(4, 4, 1, (("a1", 0, 2), ("d1", 3, 2)))

    def test_next_power_of_two(self):
        self.assertEqual(next_power_of_two(2394), 4096)
        self.assertEqual(next_power_of_two(1024), 1024)
        self.assertEqual(next_power_of_two(5), 8)

    def test_pad_signal(self):
        padded, layout = pad_signal(np.arange(1.0, 6.0))
        self.assertAllClose(padded, [1, 2, 3, 4, 5, 0, 0, 0], atol=0)
        self.assertEqual(layout.original_length, 5)
        self.assertEqual(layout.padded_length, 8)

        padded, layout = pad_signal(np.ones(1024))
        self.assertEqual(padded.size, 1024)
        self.assertEqual(layout.original_length, 1024)

    def test_pad_long_rows(self):
        padded, layout = pad_rows(np.ones((2, 2394)), WaveletBasis("db4"))
        self.assertEqual(padded.shape, (2, 4096))
        self.assertEqual(layout.original_length, 2394)
        self.assertEqual(truncate_rows(padded, layout).shape, (2, 2394))

    def test_edge_and_symmetric_modes(self):
        x = np.array([1.0, 2.0, 3.0, 4.0, 5.0])
        self.assertAllClose(pad_signal(x, mode="edge")[0], [1, 2, 3, 4, 5, 5, 5, 5], atol=0)
        self.assertAllClose(pad_signal(x, mode="symmetric")[0], [1, 2, 3, 4, 5, 5, 4, 3], atol=0)

    def test_too_short(self):
        with self.assertRaises(InvalidInputError):
            pad_signal(np.ones(1))
        with self.assertRaises(InvalidInputError):
            pad_signal(np.ones(4), mode="reflectish")
