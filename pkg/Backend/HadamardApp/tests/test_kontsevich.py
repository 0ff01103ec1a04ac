from decimal import Decimal, ROUND_CEILING, localcontext
from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from HadamardApp.Algebra import linalg
from HadamardApp.Algebra.exceptions import BlownDownHyperplaneError, DimensionMismatchError, GenerationError
from HadamardApp.Algebra.kontsevich import (
    Method,
    SamplerBounds,
    bound_row,
    cayley_transform,
    dimension_count,
    e_containment_holds,
    e_hyperplane,
    evaluate_covector,
    hadamard_rank,
    histogram_frame,
    min_rank_bound,
    parse_field,
    random_orthogonal,
    verify_conjecture,
)
from HadamardApp.Algebra.projective import ProjectivePoint, cremona_product_form
from HadamardApp.Algebra.scalars import Field, GaussianRational

from .fixtures import CAYLEY_123, cayley_123, columns, rational

F = Fraction
QR = Field.RATIONAL


class CayleyTests(SimpleTestCase):
    def test_two_by_two(self):
        S = rational([[0, F(1, 2)], [F(-1, 2), 0]])
        self.assertEqual(cayley_transform(S), rational([[F(3, 5), F(-4, 5)], [F(4, 5), F(3, 5)]]))

    def test_three_by_three(self):
        S = rational([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])
        self.assertEqual(cayley_transform(S), cayley_123())

    def test_quarter_turn_has_zero_entries(self):
        S = rational([[0, 1], [-1, 0]])
        self.assertEqual(cayley_transform(S), rational([[0, -1], [1, 0]]))


class SamplerTests(SimpleTestCase):
    def assert_orthogonal(self, A):
        self.assertEqual(A.T @ A, linalg.identity(A.rows, A.field))
        self.assertTrue(all(v != 0 for v in A.entries))

    def test_rational(self):
        sample = random_orthogonal(4, QR, seed=5)
        self.assertIs(sample.method, Method.CAYLEY_EXACT)
        self.assert_orthogonal(sample.matrix)

    def test_gaussian_rational(self):
        self.assert_orthogonal(random_orthogonal(3, Field.GAUSSIAN_RATIONAL, seed=1, real=False).matrix)

    def test_reproducible(self):
        self.assertEqual(random_orthogonal(4, QR, seed=12).matrix, random_orthogonal(4, QR, seed=12).matrix)

    def test_gram_schmidt(self):
        for real in (True, False):
            with self.subTest(real=real):
                A = random_orthogonal(5, Field.COMPLEX_FLOAT, seed=3, real=real).matrix.data
                self.assertLess(np.max(np.abs(A.T @ A - np.eye(5))), 1e-12)
                self.assertTrue(np.all(np.abs(A) > 1e-6))

    def test_rnc_family(self):
        A = random_orthogonal(4, Field.COMPLEX_FLOAT, seed=3, method=Method.RNC_FAMILY).matrix
        self.assertEqual(hadamard_rank(A), 2)

    def test_sampler_and_backend_must_match(self):
        with self.assertRaises(DimensionMismatchError):
            random_orthogonal(3, QR, seed=0, method=Method.GRAM_SCHMIDT_FLOAT)
        with self.assertRaises(DimensionMismatchError):
            random_orthogonal(3, Field.COMPLEX_FLOAT, seed=0, method=Method.CAYLEY_EXACT)

    def test_size(self):
        with self.assertRaises(DimensionMismatchError):
            random_orthogonal(1, QR, seed=0)

    def test_rejection_budget(self):
        # bound 0 yields the zero skew matrix, whose transform is the identity
        with self.assertRaises(GenerationError):
            random_orthogonal(3, QR, seed=0, bounds=SamplerBounds(numerator_bound=0, max_rejections=5))

    def test_field_labels(self):
        self.assertEqual(parse_field("real"), (Field.COMPLEX_FLOAT, True))
        self.assertEqual(parse_field("gaussian-rational"), (Field.GAUSSIAN_RATIONAL, False))
        with self.assertRaises(DimensionMismatchError):
            parse_field("quaternion")


class HadamardRankTests(SimpleTestCase):
    def test_transpose_has_the_same_rank(self):
        rng = np.random.default_rng(17)
        for m in range(3, 7):
            samples = [random_orthogonal(m, QR, seed=10 * m + k).matrix for k in range(3)]
            samples.append(rational([[F(int(rng.integers(1, 30)), int(rng.integers(1, 9))) for _ in range(m)]
                                     for _ in range(m)]))
            for k, A in enumerate(samples):
                with self.subTest(m=m, sample=k):
                    self.assertEqual(hadamard_rank(A), hadamard_rank(A.T))

    def test_gaussian_transpose(self):
        A = random_orthogonal(4, Field.GAUSSIAN_RATIONAL, seed=2, real=False).matrix
        self.assertEqual(hadamard_rank(A), hadamard_rank(A.T))


class VerifierTests(SimpleTestCase):
    def test_three_by_three_is_always_rank_two(self):
        report = verify_conjecture(3, 50, "rational", seed=7)
        self.assertEqual(report.histogram, {2: 50})
        self.assertEqual(report.rank3_count, 0)
        self.assertEqual(report.violations, [])

    def test_four_by_four(self):
        report = verify_conjecture(4, 30, "rational", seed=1)
        self.assertEqual(report.rank3_count, 0)
        self.assertEqual(report.rank1_count, 0)
        self.assertEqual(sum(report.histogram.values()), 30)

    def test_deterministic_digest(self):
        first = verify_conjecture(4, 10, "rational", seed=3)
        second = verify_conjecture(4, 10, "rational", seed=3, workers=3)
        self.assertEqual(first.digest, second.digest)
        self.assertNotEqual(first.digest, verify_conjecture(4, 10, "rational", seed=4).digest)

    def test_report_shape(self):
        data = verify_conjecture(3, 5, "gaussian-rational", seed=2).to_dict()
        self.assertEqual(data["histogram"], {"2": 5})
        self.assertEqual(data["violation_count"], 0)
        self.assertEqual(len(data["digest"]), 64)
        self.assertEqual(data["method"], "cayley")

    def test_float_rnc_family(self):
        report = verify_conjecture(4, 10, "real", seed=0, method=Method.RNC_FAMILY)
        self.assertEqual(report.histogram, {2: 10})
        self.assertEqual(report.suspicious, [])

    def test_float_gram_schmidt(self):
        report = verify_conjecture(5, 10, "complex", seed=0)
        self.assertEqual(report.histogram, {5: 10})
        self.assertEqual(report.violations, [])
        self.assertEqual(report.suspicious, [])

    def test_histogram_frame(self):
        frame = histogram_frame({"2": 4, "4": 6})
        self.assertEqual(list(frame.columns), ["rank", "count"])
        self.assertEqual(frame["count"].sum(), 10)

    def test_bad_arguments(self):
        with self.assertRaises(DimensionMismatchError):
            verify_conjecture(1, 5, "rational", seed=0)
        with self.assertRaises(DimensionMismatchError):
            verify_conjecture(3, 0, "rational", seed=0)


class HyperplaneTests(SimpleTestCase):
    def test_e_hyperplane(self):
        self.assertEqual(e_hyperplane(columns(CAYLEY_123), 0, 1, 2), (-140, -500, -220))

    def test_contains_cremona_images(self):
        pts = columns(CAYLEY_123)
        h = e_hyperplane(pts, 0, 1, 2)
        for p in pts:
            self.assertEqual(evaluate_covector(h, cremona_product_form(p)), 0)
        self.assertTrue(e_containment_holds(pts))

    def test_larger_orthogonal_matrix(self):
        A = random_orthogonal(5, QR, seed=6).matrix
        self.assertTrue(e_containment_holds([ProjectivePoint(c, QR) for c in A.columns()]))

    def test_gaussian_orthogonal_matrix(self):
        A = random_orthogonal(4, Field.GAUSSIAN_RATIONAL, seed=2, real=False).matrix
        self.assertTrue(e_containment_holds([ProjectivePoint(c, Field.GAUSSIAN_RATIONAL) for c in A.columns()]))

    def test_index_order(self):
        with self.assertRaises(DimensionMismatchError):
            e_hyperplane(columns(CAYLEY_123), 0, 2, 1)

    def test_zero_coordinate(self):
        pts = [ProjectivePoint.of([F(1), F(0), F(1)]), ProjectivePoint.of([F(1), F(1), F(1)]),
               ProjectivePoint.of([F(1), F(2), F(3)])]
        with self.assertRaises(BlownDownHyperplaneError):
            e_hyperplane(pts, 0, 1, 2)


class BoundTests(SimpleTestCase):
    def test_known_values(self):
        self.assertEqual([min_rank_bound(m) for m in (2, 3, 6, 10, 11, 12)], [1, 1, 2, 3, 3, 4])

    def test_closed_form(self):
        for m in range(2, 201):
            with self.subTest(m=m), localcontext() as ctx:
                ctx.prec = 50
                root = (Decimal(m * (m + 1)) / 2 - 1).sqrt()
                expected = max(1, int((Decimal(m) - root).to_integral_value(rounding=ROUND_CEILING)))
                self.assertEqual(min_rank_bound(m), expected)

    def test_dimension_count(self):
        self.assertEqual(dimension_count(10, 3), (104, 99, True))
        self.assertEqual(dimension_count(10, 2), (89, 99, False))

    def test_rank_three_window(self):
        self.assertFalse(bound_row(2)["rank_three_admitted"])
        self.assertTrue(bound_row(10)["rank_three_admitted"])
        self.assertFalse(bound_row(12)["rank_three_admitted"])
        self.assertEqual(bound_row(6)["dimension_count"]["admits"], True)

    def test_rejects_small_m(self):
        with self.assertRaises(DimensionMismatchError):
            min_rank_bound(1)
