"""Test cases for the expression parser."""
import math
from unittest import TestCase
from numpy.testing import assert_allclose
from ..app.expr import parse_expr
from ..app.expr import parse_holo
from .._errors import ExprSyntaxError
from .._errors import UnknownIdentifierError


class ShouldExpandExponential(TestCase):
    def test(self):
        series = parse_holo('exp(-z)', order=6)
        expected = [(-1) ** k / math.factorial(k) for k in range(7)]
        assert_allclose(series.coeffs, expected, atol=1e-15)
        self.assertIsNone(series.radius)

    def test_around_another_base(self):
        series = parse_holo('exp(2*z)', base=0.5j, order=4)
        self.assertEqual(0.5j, series.base)
        self.assertAlmostEqual(complex(math.cos(1), math.sin(1)), series[0])
        self.assertAlmostEqual(2 * series[0], series[1])


class ShouldExpandRationalFunctions(TestCase):
    def test(self):
        series = parse_holo('(z^2+1)/(z-2)', order=5)
        # -1/2 - z/4 - 5 z^2 / 8 - 5 z^3 / 16 - ...
        expected = [-0.5, -0.25, -0.625, -0.3125, -0.15625, -0.078125]
        assert_allclose(series.coeffs, expected, atol=1e-15)

    def test_negative_power(self):
        series = parse_holo('(1+z)^-2', order=3)
        assert_allclose(series.coeffs, [1, -2, 3, -4], atol=1e-15)


class ShouldReadLiterals(TestCase):
    def test_imaginary(self):
        for text in ('2i', '2 i', '2*i', 'i*2'):
            self.assertAlmostEqual(2j, parse_holo(text, order=2)[0])

    def test_constants(self):
        self.assertAlmostEqual(math.pi, parse_holo('pi', order=1)[0])
        self.assertAlmostEqual(0.25e-1, parse_holo('.25e-1', order=1)[0])

    def test_whitespace(self):
        series = parse_holo('  z  *  3 ', order=2)
        assert_allclose(series.coeffs, [0, 3, 0])


class ShouldRespectPrecedence(TestCase):
    def test_unary_minus_below_power(self):
        assert_allclose(parse_holo('-z^2', order=2).coeffs, [0, 0, -1])

    def test_left_associative(self):
        self.assertAlmostEqual(-4, parse_holo('1-2-3', order=0)[0])
        self.assertAlmostEqual(1, parse_holo('8/4/2', order=0)[0])

    def test_product_before_sum(self):
        self.assertAlmostEqual(7, parse_holo('1+2*3', order=0)[0])
        self.assertAlmostEqual(9, parse_holo('(1+2)*3', order=0)[0])

    def test_tree(self):
        node = parse_expr('exp(z) + 1')
        self.assertEqual('+', node.kind)
        self.assertEqual('call', node.children[0].kind)
        self.assertEqual('exp', node.children[0].value)


class ShouldReportSyntaxErrors(TestCase):
    def test_unterminated_call(self):
        with self.assertRaises(ExprSyntaxError) as context:
            parse_expr('exp(')
        self.assertEqual(4, context.exception.offset)
        self.assertIn('offset 4', str(context.exception))

    def test_unknown_identifier(self):
        with self.assertRaises(UnknownIdentifierError) as context:
            parse_expr('2 + foo(z)')
        self.assertEqual(4, context.exception.offset)

    def test_unexpected_character(self):
        with self.assertRaises(ExprSyntaxError) as context:
            parse_expr('z $ 1')
        self.assertEqual(2, context.exception.offset)

    def test_trailing_tokens(self):
        with self.assertRaises(ExprSyntaxError):
            parse_expr('(z))')

    def test_power_limit(self):
        parse_expr('z^16')
        with self.assertRaises(ExprSyntaxError):
            parse_expr('z^17')
        with self.assertRaises(ExprSyntaxError):
            parse_expr('z^1.5')

    def test_not_a_string(self):
        with self.assertRaises(TypeError):
            parse_expr(3)
