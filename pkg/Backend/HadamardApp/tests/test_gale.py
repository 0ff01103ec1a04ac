from fractions import Fraction

from django.test import SimpleTestCase

from HadamardApp.Algebra.exceptions import DegenerateConfigurationError, DimensionMismatchError
from HadamardApp.Algebra.gale import (
    SplitConfig,
    association_multipliers,
    cremona_association_commutes,
    cremona_config,
    double_apolar_pair,
    duality_dims,
    duality_holds,
    gale_transform,
    is_associated,
    is_self_associated,
    normalized_block,
)
from HadamardApp.Algebra.apolarity import identity_form
from HadamardApp.Algebra.linalg import identity, rank
from HadamardApp.Algebra.projective import ProjectivePoint, coordinate_matrix, same_point, simplex, span_dim
from HadamardApp.Algebra.runs import generate_double_apolar, generate_split
from HadamardApp.Algebra.scalars import Field

from .fixtures import CAYLEY_123, cayley_123, columns, rational, simplex_plus

F = Fraction
QR = Field.RATIONAL


def point(*coords):
    return ProjectivePoint.of([F(c) for c in coords])


def line_config(t):
    """{[1,0], [0,1], [1,1], [1,t]} split after the first two points."""
    return SplitConfig.from_blocks(simplex(1, QR), [point(1, 1), point(1, t)])


def block_diagonal_config():
    R = [[F(3, 5), F(-4, 5)], [F(4, 5), F(3, 5)]]
    S = [[F(5, 13), F(-12, 13)], [F(12, 13), F(5, 13)]]
    zero = F(0)
    P = [R[0] + [zero, zero], R[1] + [zero, zero], [zero, zero] + S[0], [zero, zero] + S[1]]
    return SplitConfig.from_blocks(simplex(3, QR), [ProjectivePoint(tuple(r[j] for r in P), QR) for j in range(4)])


def multiplier_residual(A_cfg, B_cfg, lam):
    """A·Λ·Bᵀ with B reordered tail-first."""
    A = coordinate_matrix(A_cfg.points)
    B = coordinate_matrix(B_cfg.tail + B_cfg.head)
    return [[sum(A[a, k] * lam[k] * B[b, k] for k in range(A.cols)) for b in range(B.rows)] for a in range(A.rows)]


class SplitConfigTests(SimpleTestCase):
    def test_dimensions(self):
        cfg = simplex_plus(CAYLEY_123)
        split = SplitConfig(cfg, 3)
        self.assertEqual((split.r, split.s), (2, 2))
        self.assertEqual(len(split.head), 3)

    def test_wrong_split_index(self):
        with self.assertRaises(DimensionMismatchError):
            SplitConfig(simplex_plus(CAYLEY_123), 2)

    def test_dependent_head(self):
        with self.assertRaises(DegenerateConfigurationError):
            SplitConfig.from_blocks([point(1, 0, 0), point(0, 1, 0), point(1, 1, 0)], [point(1, 2, 3)])


class GaleTransformTests(SimpleTestCase):
    def test_points_on_the_line(self):
        cfg = line_config(3)
        gale = gale_transform(cfg)
        self.assertEqual((gale.r, gale.s), (1, 1))
        for a, b in zip(gale.points, cfg.points):
            self.assertTrue(same_point(a, b))
        multipliers = association_multipliers(cfg, gale)
        self.assertIsNotNone(multipliers)
        self.assertTrue(all(m != 0 for m in multipliers))

    def test_multipliers_solve_the_system(self):
        cfg = generate_split(2, 3, "rational", seed=4)
        gale = gale_transform(cfg)
        self.assertEqual((gale.r, gale.s), (3, 2))
        lam = association_multipliers(cfg, gale)
        self.assertTrue(all(v != 0 for v in lam))
        for row in multiplier_residual(cfg, gale, lam):
            self.assertTrue(all(v == 0 for v in row))

    def test_involution(self):
        cfg = generate_split(2, 2, "rational", seed=9)
        twice = gale_transform(gale_transform(cfg))
        for a, b in zip(twice.points, cfg.points):
            self.assertTrue(same_point(a, b))

    def test_perturbed_partner_is_not_associated(self):
        cfg = line_config(3)
        gale = gale_transform(cfg)
        moved = SplitConfig.from_blocks(gale.head, [point(F(8, 7), 1), gale.tail[1]])
        self.assertFalse(is_associated(cfg, moved))

    def test_block_diagonal_family(self):
        cfg = block_diagonal_config()
        gale = gale_transform(cfg)
        lam = association_multipliers(cfg, gale)
        self.assertIsNotNone(lam)
        for row in multiplier_residual(cfg, gale, lam):
            self.assertTrue(all(v == 0 for v in row))

    def test_size_mismatch(self):
        other = SplitConfig.from_blocks(simplex(2, QR), [point(1, 1, 1)])
        with self.assertRaises(DimensionMismatchError):
            association_multipliers(line_config(3), other)

    def test_spans_agree(self):
        tail = [point(1, 1, 2), point(2, 3, 5), point(3, 5, 8)]
        cfg = SplitConfig.from_blocks(simplex(2, QR), tail)
        gale = gale_transform(cfg)
        self.assertEqual(span_dim(cfg.tail), 1)
        self.assertEqual(span_dim(gale.tail), 1)

    def test_spans_agree_on_random_configurations(self):
        for r, s in [(1, 1), (2, 2), (2, 3), (3, 3)]:
            for seed in range(4):
                with self.subTest(r=r, s=s, seed=seed):
                    cfg = generate_split(r, s, "rational", seed)
                    partner = gale_transform(cfg)
                    self.assertEqual(span_dim(cfg.tail), span_dim(partner.tail))
                    self.assertEqual(span_dim(partner.tail), rank(normalized_block(cfg)) - 1)
                    self.assertTrue(is_associated(cfg, partner))

    def test_normalized_block_in_head_coordinates(self):
        head = [point(1, 1), point(1, -1)]
        cfg = SplitConfig.from_blocks(head, [point(3, 1), point(1, 0)])
        self.assertEqual(normalized_block(cfg), rational([[2, F(1, 2)], [1, F(1, 2)]]))


class SelfAssociationTests(SimpleTestCase):
    def test_orthogonal_columns(self):
        cfg = SplitConfig(simplex_plus(CAYLEY_123), 3)
        ok, Q = is_self_associated(cfg)
        self.assertTrue(ok)
        self.assertEqual(Q.matrix, identity_form(2, QR).matrix)
        self.assertTrue(is_associated(cfg, cfg, pairing="identity"))

    def test_rescaled_columns(self):
        scaled = [ProjectivePoint(tuple(k * c for c in p.coords), QR) for k, p in zip((2, -3, 5), columns(CAYLEY_123))]
        ok, _ = is_self_associated(SplitConfig.from_blocks(simplex(2, QR), scaled))
        self.assertTrue(ok)

    def test_generic_configuration(self):
        cfg = SplitConfig.from_blocks(simplex(2, QR), [point(1, 1, 2), point(2, 1, 1), point(3, 2, 1)])
        self.assertEqual(is_self_associated(cfg), (False, None))

    def test_four_by_four_generic_block(self):
        # tail block P = [[1,2,3,4],[2,1,1,3],[3,1,2,1],[1,4,1,2]]; the orthogonality system has full rank
        tail = [point(1, 2, 3, 1), point(2, 1, 1, 4), point(3, 1, 2, 1), point(4, 3, 1, 2)]
        self.assertEqual(is_self_associated(SplitConfig.from_blocks(simplex(3, QR), tail)), (False, None))

    def test_random_configurations_fail(self):
        for n in (2, 3):
            for seed in range(5):
                with self.subTest(n=n, seed=seed):
                    ok, _ = is_self_associated(generate_split(n, n, "rational", seed))
                    self.assertFalse(ok)

    def test_random_double_apolar_pairs_pass(self):
        for n in (2, 3, 4):
            with self.subTest(n=n):
                ok, Q = is_self_associated(generate_double_apolar(n, "rational", seed=n))
                self.assertTrue(ok)
                self.assertTrue(Q.is_nondegenerate())

    def test_needs_2n_plus_2_points(self):
        with self.assertRaises(DimensionMismatchError):
            is_self_associated(SplitConfig.from_blocks(simplex(2, QR), [point(1, 1, 1)]))


class CremonaCommutationTests(SimpleTestCase):
    def test_random_rational_configurations(self):
        for seed, (r, s) in enumerate([(1, 1), (2, 2), (2, 3), (3, 1)]):
            with self.subTest(r=r, s=s):
                self.assertTrue(cremona_association_commutes(generate_split(r, s, "rational", seed)))

    def test_float_configuration(self):
        self.assertTrue(cremona_association_commutes(generate_split(2, 2, "complex", 3)))

    def test_reciprocal_tail(self):
        cfg = SplitConfig.from_blocks(simplex(2, QR), [point(1, 2, 4)])
        star = cremona_config(cfg)
        self.assertEqual(star.tail[0].coords, (1, F(1, 2), F(1, 4)))


class DualityTests(SimpleTestCase):
    def test_double_apolar_pair_in_the_plane(self):
        cfg = double_apolar_pair(identity(3, QR), cayley_123())
        self.assertEqual(duality_dims(cfg), (1, 1))
        self.assertTrue(duality_holds(cfg))

    def test_random_pairs(self):
        for n in (2, 3):
            with self.subTest(n=n):
                cfg = generate_double_apolar(n, "rational", seed=n)
                self.assertTrue(duality_holds(cfg))

    def test_shape_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            double_apolar_pair(identity(3, QR), identity(2, QR))
