from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from HadamardApp.Algebra.exceptions import BackendMismatchError, DivisionByZeroError, NotASquareError
from HadamardApp.Algebra.scalars import (
    Field,
    GaussianRational,
    Tolerance,
    add,
    common_denominator,
    conj,
    div,
    is_real,
    is_zero,
    mul,
    random_scalar,
    sqrt,
)

GR = GaussianRational


class GaussianRationalTests(SimpleTestCase):
    def test_product(self):
        self.assertEqual(GR(1, 2) * GR(3, -1), GR(5, 5))

    def test_division_inverts_multiplication(self):
        a, b = GR(Fraction(1, 2), 3), GR(-2, Fraction(5, 7))
        self.assertEqual((a * b) / b, a)

    def test_conjugate_and_norm(self):
        z = GR(3, 4)
        self.assertEqual(conj(z), GR(3, -4))
        self.assertEqual(z.norm(), 25)

    def test_rejects_float_parts(self):
        with self.assertRaises(TypeError):
            GR(0.5, 1)


class ArithmeticContractTests(SimpleTestCase):
    def test_mixing_backends_raises(self):
        with self.assertRaises(BackendMismatchError):
            add(Fraction(1), 1 + 0j)
        with self.assertRaises(BackendMismatchError):
            mul(GR(1, 1), Fraction(2))

    def test_exact_division_by_zero(self):
        with self.assertRaises(DivisionByZeroError):
            div(Fraction(1), Fraction(0))
        with self.assertRaises(DivisionByZeroError):
            div(GR(1, 1), GR(0))

    def test_explicit_coercion(self):
        self.assertEqual(Field.GAUSSIAN_RATIONAL.coerce(Fraction(1, 3)), GR(Fraction(1, 3)))
        self.assertEqual(Field.RATIONAL.coerce(GR(2)), Fraction(2))
        with self.assertRaises(BackendMismatchError):
            Field.RATIONAL.coerce(GR(0, 1))
        with self.assertRaises(BackendMismatchError):
            Field.RATIONAL.coerce(0.5)

    def test_float_zero_uses_absolute_tolerance(self):
        tol = Tolerance(relative=1e-8, absolute=1e-10)
        self.assertTrue(is_zero(1e-12 + 0j, tol))
        self.assertFalse(is_zero(1e-9 + 0j, tol))
        self.assertFalse(is_zero(Fraction(1, 10 ** 30)))

    def test_is_real(self):
        self.assertTrue(is_real(Fraction(-3)))
        self.assertFalse(is_real(GR(0, 1)))
        self.assertTrue(is_real(2 + 1e-14j))

    def test_tolerance_bounds(self):
        with self.assertRaises(ValueError):
            Tolerance(relative=0.0)
        with self.assertRaises(ValueError):
            Tolerance(relative=1e-8, absolute=-1.0)
        self.assertEqual(Tolerance().with_relative(1e-6).relative, 1e-6)

    def test_common_denominator(self):
        self.assertEqual(common_denominator([Fraction(1, 4), Fraction(5, 6)]), 12)
        self.assertEqual(common_denominator([GR(Fraction(1, 2), Fraction(1, 3))]), 6)


class SqrtTests(SimpleTestCase):
    def test_rational_squares(self):
        self.assertEqual(sqrt(Fraction(9, 4)), Fraction(3, 2))
        with self.assertRaises(NotASquareError):
            sqrt(Fraction(2))
        with self.assertRaises(NotASquareError):
            sqrt(Fraction(-1))

    def test_gaussian_squares(self):
        self.assertEqual(sqrt(GR(3, 4)), GR(2, 1))
        self.assertEqual(sqrt(GR(-1)), GR(0, 1))
        with self.assertRaises(NotASquareError):
            sqrt(GR(0, 1))

    def test_principal_float_branch(self):
        self.assertEqual(sqrt(-4 + 0j), 2j)
        self.assertEqual(sqrt(complex(-4.0, -0.0)), 2j)
        root = sqrt(3 + 4j)
        self.assertAlmostEqual(root, 2 + 1j)


class FieldAxiomTests(SimpleTestCase):
    def check_axioms(self, field):
        rng = np.random.default_rng(13)
        for trial in range(40):
            a, b, c = (random_scalar(field, rng) for _ in range(3))
            with self.subTest(field=field.value, trial=trial):
                self.assertEqual((a + b) + c, a + (b + c))
                self.assertEqual((a * b) * c, a * (b * c))
                self.assertEqual(a * (b + c), a * b + a * c)
                self.assertEqual(a + b, b + a)
                self.assertEqual(a * b, b * a)
                self.assertEqual(a - a, field.zero())
                if a:
                    self.assertEqual(a * (field.one() / a), field.one())
                    self.assertEqual(div(mul(b, a), a), b)

    def test_rational(self):
        self.check_axioms(Field.RATIONAL)

    def test_gaussian_rational(self):
        self.check_axioms(Field.GAUSSIAN_RATIONAL)
