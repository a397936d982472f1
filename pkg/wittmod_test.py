import os
import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

import wittmod
wittmod.init(parameters=('a1', 'a2', 'a3'), random_seed=0)

from wittmod import field
from wittmod.kernel import unit, madd
from wittmod.witt import WittTerm, WittElem, vector_field, d, h, euler, \
    bracket, ad_power, diagonal_twist, express_generator, evaluate, leaves, \
    random_element
from wittmod.pbw import UElem, one, d_power, letter, h_power, from_witt, \
    normal_form, commutator, centralizes, decompose_BH, recombine, multiply
from wittmod.centralizer import make_z, all_z, make_X, x_labels, \
    h_monomial_basis, recursion_consistency, shape_report, format_recipe, \
    Z_IJ, Z_ILJ, Z_I, CLOSED, RECURSION
from wittmod.parser import parse_expr, parse_element, parse_witt, \
    parse_scalar, parse_scalar_list, parse_polynomial, parse_weyl_word
from wittmod.weylmod import T, D, DINV
from wittmod.utils.math import binomial, falling_factorial
from wittmod.utils.exc import ScalarDivisionError, ParseError, \
    PreconditionError, DimensionMismatchError, ParameterMismatchError


def witt_terms(n, max_degree=3):
    return st.tuples(
        st.lists(st.integers(0, max_degree), min_size=n, max_size=n),
        st.integers(0, n - 1)).map(lambda mj: WittTerm(tuple(mj[0]), mj[1]))


def witt_elements(n, max_degree=3):
    return st.dictionaries(witt_terms(n, max_degree), st.integers(-3, 3),
                           max_size=3).map(WittElem)


class TestScalarField(unittest.TestCase):
    def test_parameters(self):
        a1 = field.parameter('a1')
        self.assertEqual(field.parameter(0), a1)
        self.assertIsNone(field.is_integer_constant(a1))
        self.assertFalse(field.is_constant(a1))

    def test_unknown_parameter(self):
        self.assertRaises(ParameterMismatchError, field.parameter, 'b7')

    def test_convert(self):
        self.assertEqual(field.convert(Fraction(1, 2)) * 2, field.one)
        self.assertEqual(field.is_integer_constant(field.convert(-3)), -3)
        self.assertIsNone(field.is_integer_constant(
            field.convert(Fraction(1, 2))))
        self.assertRaises(TypeError, field.convert, True)

    def test_division_by_zero(self):
        self.assertRaises(ScalarDivisionError, field.divide, 1, 0)
        self.assertRaises(ScalarDivisionError, parse_scalar, '1/(a1 - a1)')

    def test_format_parse(self):
        for text in ('a1 + 1/2', '(a1 - a2)/(a3 + 1)', '-7', 'a1^2*a2'):
            s = parse_scalar(text)
            self.assertEqual(field.parse(field.format(s)), s)

    def test_specialize(self):
        s = parse_scalar('a1^2 + a2')
        self.assertEqual(field.specialize(s, {'a1': 2, 'a2': -1}),
                         field.convert(3))

    @given(st.integers(-20, 20), st.integers(1, 20))
    def test_rational_arithmetic(self, p, q):
        x = field.convert(Fraction(p, q))
        a1 = field.parameter('a1')
        self.assertEqual((x + a1) - a1, x)
        self.assertEqual((x * a1) / a1, x)


class TestWitt(unittest.TestCase):
    def test_basic_brackets(self):
        self.assertEqual(bracket(d(0, 1), h(0, 1)), d(0, 1))
        self.assertEqual(bracket(d(0, 1), vector_field((2,), 0)),
                         vector_field((1,), 0) * 2)
        self.assertEqual(bracket(d(0, 2), d(1, 2)), WittElem({}))
        # [t1 d2, t2 d1] = t1 d1 - t2 d2
        self.assertEqual(bracket(vector_field((1, 0), 1),
                                 vector_field((0, 1), 0)),
                         h(0, 2) - h(1, 2))

    def test_ad_d_is_nilpotent(self):
        y = vector_field((2, 1), 0) + vector_field((0, 3), 1)
        self.assertTrue(ad_power(d(0, 2), y, 2))
        self.assertFalse(ad_power(d(0, 2), y, 3))
        self.assertFalse(ad_power(d(1, 2), y, 4))

    def test_euler_grades(self):
        x = vector_field((2, 1), 0)
        self.assertEqual(bracket(euler(2), x), x * 2)

    def test_dimension_mismatch(self):
        self.assertRaises(DimensionMismatchError, bracket, d(0, 1), d(0, 2))
        self.assertRaises(PreconditionError, vector_field, (1, 0), 2)

    @settings(max_examples=30, deadline=None)
    @given(witt_elements(2), witt_elements(2))
    def test_antisymmetry(self, x, y):
        self.assertEqual(bracket(x, y), -bracket(y, x))

    @settings(max_examples=20, deadline=None)
    @given(witt_elements(2, 2), witt_elements(2, 2), witt_elements(2, 2))
    def test_jacobi(self, x, y, z):
        total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + \
            bracket(z, bracket(x, y))
        self.assertFalse(total)

    def test_jacobi_random_n3(self):
        for _ in range(10):
            x, y, z = [random_element(3, 2) for _ in range(3)]
            total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + \
                bracket(z, bracket(x, y))
            self.assertFalse(total)

    def test_diagonal_twist_is_automorphism(self):
        c = (field.convert(2), field.parameter('a1'))
        for _ in range(10):
            x, y = random_element(2, 3), random_element(2, 3)
            self.assertEqual(diagonal_twist(c, bracket(x, y)),
                             bracket(diagonal_twist(c, x),
                                     diagonal_twist(c, y)))

    def test_express_generator(self):
        for m, j in [((2, 1), 0), ((0, 3), 0), ((3, 0), 0), ((3, 1), 0),
                     ((1, 1, 1), 2)]:
            tree = express_generator(m, j)
            self.assertEqual(evaluate(tree), vector_field(m, j))
            self.assertTrue(all(g.degree <= 2 for g in leaves(tree)))

    def test_express_generator_preconditions(self):
        self.assertRaises(PreconditionError, express_generator, (4,), 0)
        self.assertRaises(PreconditionError, express_generator, (1, 1), 0)


class TestPBW(unittest.TestCase):
    def test_straightening(self):
        d1, h1 = from_witt(d(0, 1)), from_witt(h(0, 1))
        self.assertEqual(normal_form([d1, h1]), normal_form([h1, d1]) + d1)
        self.assertEqual(commutator(d1, h1), d1)

    def test_d_powers(self):
        self.assertEqual(d_power((-1,)) * d_power((1,)), one(1))
        self.assertEqual(d_power((2, -1)) * d_power((-2, 1)), one(2))

    def test_letter(self):
        self.assertEqual(letter((0, 0), 1), from_witt(d(1, 2)))
        self.assertEqual(h_power((1, 0)), from_witt(h(0, 2)))

    def test_associativity(self):
        for _ in range(10):
            x, y, z = [from_witt(random_element(2, 2)) for _ in range(3)]
            self.assertEqual((x * y) * z, x * (y * z))

    @settings(max_examples=20, deadline=None)
    @given(witt_elements(2, 2), witt_elements(2, 2))
    def test_commutator_of_generators_is_bracket(self, x, y):
        self.assertEqual(commutator(from_witt(x), from_witt(y)),
                         from_witt(bracket(x, y)))

    def test_centralizes(self):
        self.assertTrue(centralizes(one(2)))
        verdict = centralizes(from_witt(vector_field((1, 0), 1)))
        self.assertFalse(verdict)
        self.assertEqual(verdict.against, 'd1')

    def test_decompose_recombine(self):
        for text in ('t1*d2', 't1^2*d1', 'h1*d2 + t1*t2*d1', 't1^3*d1*d1'):
            u = parse_element(text, 2)
            decomposition = decompose_BH(u, u.degree())
            self.assertEqual(recombine(decomposition, 2), u)

    def test_decompose_centralizer_element(self):
        z = make_z(Z_IJ, (0, 1), 2).element
        decomposition = decompose_BH(z, 1)
        self.assertEqual(list(decomposition.keys()),
                         [((((1, 0), 1),), (0, 0), (0, 0))])


class TestCentralizer(unittest.TestCase):
    def test_z_generators(self):
        for n in (1, 2):
            for z in all_z(n):
                self.assertTrue(centralizes(z.element, n))
        self.assertEqual(len(all_z(2)), 2 + 6 + 2)

    def test_z_index_checks(self):
        self.assertRaises(PreconditionError, make_z, Z_IJ, (0,), 2)
        self.assertRaises(PreconditionError, make_z, Z_I, (3,), 2)

    def test_x_leading_terms(self):
        for m, j in x_labels(2, 2):
            x = make_X(m, j)
            self.assertEqual(x.construction, RECURSION)
            mono, c = x.leading()
            self.assertEqual(mono, ((WittTerm(m, j),),
                                    madd(m, tuple(-e for e in unit(j, 2)))))
            self.assertEqual(c, field.one)

    def test_small_x_are_z(self):
        self.assertEqual(make_X((1, 0), 1).element,
                         make_z(Z_IJ, (0, 1), 2).element)

    def test_closed_family(self):
        for m, j in [((1, 1), 0), ((0, 2), 0), ((2, 1), 1)]:
            x = make_X(m, j, CLOSED)
            self.assertTrue(x.shape.conforms)
            self.assertTrue(centralizes(x.element, 2))

    def test_recursion_consistency(self):
        self.assertTrue(recursion_consistency((1, 1), 0))
        self.assertTrue(recursion_consistency((2, 1), 1))

    def test_one_variable(self):
        for M in (2, 3, 4):
            self.assertTrue(centralizes(make_X((M,), 0).element, 1))
        self.assertRaises(PreconditionError, make_X, (1,), 0)
        self.assertRaises(PreconditionError, make_X, (2, 0), 0,
                          'one-variable')

    @unittest.skipUnless(os.environ.get('WITTMOD_EXTENDED') == '1',
                         'set WITTMOD_EXTENDED=1 for the n = 3 checks')
    def test_three_variables(self):
        for z in all_z(3):
            self.assertTrue(centralizes(z.element, 3))
        for m, j in [((1, 1, 1), 1), ((2, 0, 1), 0)]:
            self.assertTrue(centralizes(make_X(m, j).element, 3))

    def test_h_monomial_basis_counts(self):
        self.assertEqual(len(h_monomial_basis(3, 1)), 3)
        self.assertEqual(len(h_monomial_basis(3, 2)), 36)

    def test_degree_three_leading_terms_and_shape(self):
        labels = [(m, j) for m, j in x_labels(3, 2) if sum(m) == 3]
        self.assertEqual(len(labels), 8)
        for m, j in labels:
            x = make_X(m, j)
            mono, c = x.leading()
            self.assertEqual(mono, ((WittTerm(m, j),),
                                    madd(m, tuple(-e for e in unit(j, 2)))),
                             msg=str(x))
            self.assertEqual(c, field.one)
            self.assertTrue(x.shape.conforms, msg=str(x))
            self.assertTrue(centralizes(x.element, 2))

    def test_pure_power_label(self):
        x = make_X((0, 3), 1)
        self.assertTrue(x.shape.conforms)
        self.assertEqual(x.leading()[0],
                         ((WittTerm((0, 3), 1),), (0, 2)))
        text = format_recipe(x.recipe)
        self.assertIn('[X[(0,1),1], X[(1,2),2]] + X[(1,2),1]', text)

    def test_shape_flags_products(self):
        x = make_X((1, 1), 0, CLOSED).element
        self.assertTrue(shape_report(x, (1, 1), 0).conforms)
        product = multiply(make_z(Z_IJ, (0, 1), 2).element,
                           make_z(Z_IJ, (1, 0), 2).element)
        shape = shape_report(x + product, (1, 1), 0)
        self.assertFalse(shape.conforms)
        self.assertTrue(shape.excess)


class TestIntegerCombinatorics(unittest.TestCase):
    def test_binomial(self):
        self.assertEqual(binomial(5, 2), 10)
        self.assertEqual(binomial(-2, 3), -4)
        self.assertEqual(binomial(3, 5), 0)
        self.assertEqual(binomial(3, -1), 0)

    def test_falling_factorial(self):
        self.assertEqual(falling_factorial(5, 3), 60)
        self.assertEqual(falling_factorial(2, 3), 0)
        self.assertEqual(falling_factorial(-2, 2), 6)
        self.assertEqual(falling_factorial(4, 0), 1)


class TestParser(unittest.TestCase):
    def test_bracket(self):
        self.assertEqual(parse_expr('[d1, t1*d1]'), d(0, 1))
        self.assertEqual(parse_witt('[d1, t1^2*d1]'),
                         vector_field((1,), 0) * 2)

    def test_infers_n(self):
        self.assertEqual(parse_expr('t1^2*d2'), vector_field((2, 0), 1))
        self.assertEqual(parse_expr('t1*t2*d1 + h2'),
                         vector_field((1, 1), 0) + h(1, 2))

    def test_scalar_coefficients(self):
        self.assertEqual(parse_witt('a1*t1*d1/2', 1),
                         h(0, 1) * (field.parameter('a1') / 2))

    def test_products_are_straightened(self):
        self.assertEqual(parse_element('d1*h1', 1),
                         parse_element('h1*d1 + d1', 1))
        self.assertIsInstance(parse_expr('d1*d1', 1), UElem)

    def test_str_round_trips(self):
        for text in ('3*t1^2*d2 - a1*h1', 'E + t2*d1'):
            x = parse_witt(text, 2)
            self.assertEqual(parse_witt(str(x), 2), x)

    def test_negative_powers(self):
        self.assertEqual(parse_element('d1^-1*d1', 1), one(1))
        self.assertRaises(ParseError, parse_expr, 't1^-1*d1')
        self.assertRaises(ParseError, parse_expr, 'h1^-1')

    def test_error_position(self):
        with self.assertRaises(ParseError) as cm:
            parse_expr('t1 + * d1')
        self.assertEqual(cm.exception.position, 5)
        self.assertRaises(ParseError, parse_expr, 'd3', 2)
        self.assertRaises(ParseError, parse_expr, 'q1*d1')

    def test_scalar_lists(self):
        a1 = field.parameter('a1')
        self.assertEqual(parse_scalar_list('(a1, 1/2)'),
                         (a1, field.convert(Fraction(1, 2))))
        self.assertEqual(parse_scalar_list([1, 0], 2),
                         (field.one, field.zero))
        self.assertRaises(ParseError, parse_scalar_list, 'a1, 1', 3)

    def test_polynomials(self):
        self.assertEqual(parse_polynomial('t1^2 + 3', 2),
                         {(2, 0): field.one, (0, 0): field.convert(3)})
        self.assertEqual(parse_polynomial('t1^-2*t2', 2, laurent=True),
                         {(-2, 1): field.one})
        self.assertRaises(ParseError, parse_polynomial, 't1^-1', 1)

    def test_weyl_words(self):
        self.assertEqual(parse_weyl_word('d1*t2*d1^-2', 2),
                         [(D, 0), (T, 1), (DINV, 0), (DINV, 0)])
        self.assertRaises(ParseError, parse_weyl_word, 't1^-1', 1)


if __name__ == '__main__':
    unittest.main()
