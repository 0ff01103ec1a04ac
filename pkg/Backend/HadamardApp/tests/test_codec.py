from fractions import Fraction

from django.test import SimpleTestCase

from HadamardApp.Algebra.codec import (
    decode_config,
    decode_matrix,
    decode_scalar,
    decode_split_config,
    encode_certificate,
    encode_config,
    encode_matrix,
    encode_scalar,
    encode_split_config,
)
from HadamardApp.Algebra.exceptions import EncodingError
from HadamardApp.Algebra.gale import SplitConfig
from HadamardApp.Algebra.rnc import construct_rank2
from HadamardApp.Algebra.scalars import Field, GaussianRational

from .fixtures import CAYLEY_123, cayley_123, simplex_plus

F = Fraction


class ScalarCodecTests(SimpleTestCase):
    def test_encode(self):
        self.assertEqual(encode_scalar(F(3, 5)), "3/5")
        self.assertEqual(encode_scalar(F(4)), "4/1")
        self.assertEqual(encode_scalar(GaussianRational(F(1, 2), -3)), "1/2+-3/1 i")
        self.assertEqual(encode_scalar(1.5 - 2j), [1.5, -2.0])

    def test_decode(self):
        self.assertEqual(decode_scalar("-7/4"), F(-7, 4))
        self.assertEqual(decode_scalar("1/2+-3 i"), GaussianRational(F(1, 2), -3))
        self.assertEqual(decode_scalar([0.25, 1.0]), 0.25 + 1j)
        self.assertEqual(decode_scalar(5), F(5))
        self.assertEqual(decode_scalar(5, Field.GAUSSIAN_RATIONAL), GaussianRational(5))

    def test_malformed(self):
        for bad in ("3/0", "three", [1.0], True, None, "1.5"):
            with self.subTest(bad=bad):
                with self.assertRaises(EncodingError):
                    decode_scalar(bad)

    def test_float_parts_keep_seventeen_digits(self):
        for z in (complex(0.1, 1 / 3), complex(2 ** 0.5, -1e-300), complex(1 / 7, 0.0)):
            with self.subTest(z=z):
                re, im = encode_scalar(z)
                self.assertEqual(f"{re:.17g}", f"{z.real:.17g}")
                self.assertEqual(f"{im:.17g}", f"{z.imag:.17g}")
                self.assertEqual(decode_scalar([re, im]), z)

    def test_float_into_exact_field(self):
        with self.assertRaises(EncodingError):
            decode_scalar([1.0, 0.0], Field.RATIONAL)


class MatrixCodecTests(SimpleTestCase):
    def test_orthogonal_matrix(self):
        encoded = encode_matrix(cayley_123())
        self.assertEqual(encoded[0], ["1/3", "-14/15", "2/15"])
        self.assertEqual(decode_matrix(encoded), cayley_123())

    def test_ragged(self):
        with self.assertRaises(EncodingError):
            decode_matrix([["1/1", "2/1"], ["3/1"]])


class ConfigCodecTests(SimpleTestCase):
    def test_integers_are_rational(self):
        cfg = decode_config([[1, 0], [0, 1], [1, 1]])
        self.assertIs(cfg.field, Field.RATIONAL)
        self.assertEqual(encode_config(cfg)[2], ["1/1", "1/1"])

    def test_mixed_integers_and_floats(self):
        cfg = decode_config([[1, 0], [[0.5, 0.0], [1.0, 0.0]]])
        self.assertIs(cfg.field, Field.COMPLEX_FLOAT)

    def test_empty(self):
        with self.assertRaises(EncodingError):
            decode_config([])

    def test_split_config(self):
        cfg = SplitConfig(simplex_plus(CAYLEY_123), 3)
        data = encode_split_config(cfg)
        self.assertEqual((data["r"], data["s"], data["split_index"]), (2, 2, 3))
        self.assertEqual(len(decode_split_config(data).tail), 3)

    def test_split_index_defaults_to_head_size(self):
        cfg = decode_split_config({"points": [[1, 0], [0, 1], [1, 1], [1, 3]]})
        self.assertEqual((cfg.r, cfg.s), (1, 1))

    def test_declared_dimensions_must_match(self):
        data = encode_split_config(SplitConfig(simplex_plus(CAYLEY_123), 3))
        data["s"] = 3
        with self.assertRaises(EncodingError):
            decode_split_config(data)


class CertificateCodecTests(SimpleTestCase):
    def test_keys(self):
        data = encode_certificate(construct_rank2(2, [1, 1, 1], [0, 1, 2]))
        self.assertEqual(data["n"], 2)
        self.assertTrue(data["valid"])
        self.assertEqual(data["slice"], "real")
        self.assertEqual(len(data["roots"]), 2)
        self.assertEqual(len(data["matrix"]), 3)
        self.assertEqual(data["nodes"][1], [1.0, 0.0])
