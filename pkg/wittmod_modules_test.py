import unittest

from hypothesis import given, settings, strategies as st

import wittmod
wittmod.init(parameters=('a1', 'a2', 'a3'), random_seed=0)

from wittmod import field, linalg
from wittmod.witt import WittTerm, d, vector_field, random_element
from wittmod.pbw import from_witt, multiply, letter
from wittmod.centralizer import make_z, make_X, Z_IJ, Z_ILJ, Z_I
from wittmod.glrep import GlRep, natural_module, trivial_module, \
    exterior_power, highest_weight_module, weyl_dimension, weight_spaces
from wittmod.weylmod import PolynomialModule, LaurentModule, T, D, DINV, \
    d_action, apply_word, is_simple_witness, random_polynomial, one_vector
from wittmod.shenlarsson import phi, TensorModule, tensor_action, pi_map, \
    complex_module, whittaker_space, PiImage, theta_of, is_whittaker_q1, \
    q1_whittaker_dimensions, locally_nilpotent_check, whittaker_degree, \
    top_terms_h_free, q1_action, v_one, Q1Vec, PiKernel
from wittmod.cuspidal import HRep, make_hrep, make_w_module, delta_index, \
    induce_G1, WeightWindow, op_element, cuspidality_check, \
    tensor_cuspidality_check, tensor_slice_basis, tensor_slice_matrix, \
    tensor_module_is_cuspidal, separation_check, \
    eigenvalue_pair, scalar_dichotomy, roundtrip_F_G, H, DK, TD, TTD, TE
from wittmod.parser import parse_scalar
from wittmod.utils.exc import NonInvertibleError, PreconditionError, \
    DimensionMismatchError

a1, a2 = field.parameter('a1'), field.parameter('a2')


class TestGlRep(unittest.TestCase):
    def test_dimensions(self):
        self.assertEqual(natural_module(2).dim, 2)
        self.assertEqual(trivial_module(3).dim, 1)
        self.assertEqual(exterior_power(2, 3).dim, 3)
        self.assertEqual(highest_weight_module((2, 0)).dim, 3)
        self.assertEqual(highest_weight_module((1, 1)).dim, 1)
        self.assertEqual(weyl_dimension((2, 1, 0)), 8)

    def test_natural_matrices(self):
        V = natural_module(2)
        self.assertEqual(linalg.to_rows(V.E(0, 1)),
                         [[field.zero, field.one], [field.zero, field.zero]])

    def test_dict_round_trip(self):
        V = highest_weight_module((2, 0))
        self.assertEqual(GlRep.from_dict(V.to_dict()), V)

    def test_weight_spaces(self):
        V = highest_weight_module((2, 0))
        spaces = weight_spaces(V)
        self.assertEqual(list(spaces)[0], V.highest_weight)
        self.assertEqual(sorted(len(b) for b in spaces.values()), [1, 1, 1])
        self.assertEqual(len(weight_spaces(exterior_power(2, 3))), 3)


class TestWeylModules(unittest.TestCase):
    def test_twisted_polynomials(self):
        P = PolynomialModule((a1,))
        v = P.monomial((2,))
        self.assertEqual(d_action((D, 0), v),
                         P.vector({(1,): 2, (2,): a1}))
        self.assertEqual(d_action((T, 0), v), P.monomial((3,)))

    def test_inverse_on_polynomials(self):
        P = PolynomialModule((a1, 2))
        v = P.vector({(3, 0): 1, (1, 2): a2})
        for i in range(2):
            self.assertEqual(apply_word([(DINV, i), (D, i)], v), v)
            self.assertEqual(apply_word([(D, i), (DINV, i)], v), v)

    def test_inverse_on_random_polynomials(self):
        P = PolynomialModule((a1, a2))
        for _ in range(5):
            v = random_polynomial(P, 3)
            for i in range(2):
                self.assertEqual(apply_word([(DINV, i), (D, i)], v), v)
        self.assertEqual(d_action((D, 1), one_vector(P)),
                         one_vector(P).scale(a2))

    def test_untwisted_inverse_fails(self):
        P = PolynomialModule((0,))
        self.assertRaises(NonInvertibleError, d_action, (DINV, 0),
                          P.monomial((1,)))

    def test_laurent(self):
        P = LaurentModule((a1, a2))
        v = P.monomial((0, 0))
        self.assertEqual(d_action((D, 0), v), P.vector({(-1, 0): a1}))
        self.assertEqual(apply_word([(D, 1), (DINV, 1)], v), v)
        self.assertTrue(is_simple_witness(P))

    def test_integral_exponent(self):
        verdict = is_simple_witness(LaurentModule((-2, a2)))
        self.assertFalse(verdict)
        self.assertEqual(verdict.coordinate, 0)
        self.assertFalse(d_action((D, 0), verdict.witness))
        self.assertRaises(PreconditionError, is_simple_witness,
                          PolynomialModule((1,)))

    def test_module_mismatch(self):
        v = PolynomialModule((1,)).monomial((0,))
        self.assertRaises(DimensionMismatchError,
                          PolynomialModule((2,)).act, (D, 0), v)


class TestTensorModules(unittest.TestCase):
    def test_vector_field_action(self):
        T2 = TensorModule(PolynomialModule((a1, a2)), natural_module(2))
        w = T2.pure((0, 0), 1)
        image = tensor_action(from_witt(vector_field((1, 0), 1)), w)
        self.assertEqual(image, T2.vector({((1, 0), 1): a2,
                                           ((0, 0), 0): 1}))
        self.assertEqual(tensor_action(from_witt(d(0, 2)), T2.pure((1, 0), 0)),
                         T2.vector({((0, 0), 0): 1, ((1, 0), 0): a1}))

    def test_action_is_a_representation(self):
        T2 = TensorModule(PolynomialModule((a1, a2)), natural_module(2))
        w = T2.vector({((1, 0), 0): 1, ((0, 2), 1): a1})
        for _ in range(5):
            x = from_witt(random_element(2, 2))
            y = from_witt(random_element(2, 2))
            self.assertEqual(tensor_action(multiply(x, y), w),
                             tensor_action(x, tensor_action(y, w)))

    def test_pi_squares_to_zero(self):
        P = PolynomialModule((1, a2))
        for v in complex_module(0, P).spanning(2):
            self.assertFalse(pi_map(1, pi_map(0, v)))

    def test_pi_domain(self):
        T2 = complex_module(1, PolynomialModule((1, 1)))
        self.assertRaises(PreconditionError, pi_map, 0, T2.pure((0, 0), 0))

    def test_phi_homomorphism(self):
        for _ in range(5):
            x = from_witt(random_element(2, 2))
            y = from_witt(random_element(2, 2))
            self.assertEqual(phi(multiply(x, y)), phi(x) * phi(y))

    def test_local_nilpotency(self):
        T2 = TensorModule(PolynomialModule((1, 1)), natural_module(2))
        report = locally_nilpotent_check(
            [T2.pure((2, 0), 0), T2.pure((0, 1), 1)], (1, 1), 5)
        self.assertTrue(report)
        self.assertEqual(report.steps, {0: 3, 1: 2})
        self.assertFalse(locally_nilpotent_check([T2.pure((0, 0), 0)],
                                                 (0, 1), 5))

    def test_whittaker_of_tensor_module(self):
        T2 = TensorModule(PolynomialModule((1, 1)), natural_module(2))
        space = whittaker_space(T2, 2).require_stable()
        self.assertEqual(space.dim, 2)

    def test_whittaker_of_pi_image(self):
        space = whittaker_space(PiImage(0, PolynomialModule((1, 1))), 2)
        self.assertTrue(space.stable)
        self.assertEqual(space.dim, 1)

    def test_whittaker_of_pi_kernel_is_stable(self):
        kernel = PiKernel(1, PolynomialModule((1, 1)))
        space = whittaker_space(kernel, 2)
        self.assertTrue(space.stable)
        self.assertEqual(space.dims, {1: 1, 2: 1})
        self.assertEqual(space.dim, whittaker_space(
            PiImage(0, PolynomialModule((1, 1))), 2).dim)

    def test_theta(self):
        for z in (make_z(Z_IJ, (0, 1), 2), make_z(Z_ILJ, (0, 1, 1), 2)):
            self.assertTrue(is_whittaker_q1(theta_of(z.element, 2)))

    def test_q1_action(self):
        v = v_one(2)
        self.assertEqual(q1_action(d(0, 2), v), v)
        w = q1_action(letter((2, 0), 0), v)
        self.assertEqual(w, Q1Vec.of(2, {(WittTerm((2, 0), 0),): field.one}))
        # [d_1, t_1^2 d_1] = 2 t_1 d_1
        expected = Q1Vec.of(2, {(WittTerm((2, 0), 0),): field.one,
                                (WittTerm((1, 0), 0),): field.convert(2)})
        self.assertEqual(q1_action(d(0, 2), w), expected)

    def test_whittaker_degree(self):
        w = theta_of(make_X((2, 1), 0).element, 2)
        self.assertEqual(whittaker_degree(w), (3, 2))
        self.assertTrue(top_terms_h_free(w))

    def test_q1_dimensions(self):
        dims = q1_whittaker_dimensions(4, 1)
        self.assertEqual(dims.per_degree, [1, 0, 1, 1, 2])
        self.assertTrue(dims.matches)


class TestHRep(unittest.TestCase):
    def test_z_on_natural_module(self):
        hrep = HRep(natural_module(2))
        self.assertEqual(linalg.to_rows(hrep.z_matrix(Z_IJ, (0, 1))),
                         [[field.convert(-1), field.one],
                          [field.zero, field.zero]])

    def test_x_matrices_follow_the_action(self):
        hrep = HRep(highest_weight_module((2, 0)))
        for m, j in [((1, 1), 0), ((2, 1), 0), ((0, 3), 1)]:
            self.assertEqual(hrep.x_matrix(m, j),
                             hrep.matrix_of(make_X(m, j).element))

    def test_one_variable_z_matrices_commute(self):
        hrep = HRep(highest_weight_module((2, 0)))
        for i in range(2):
            A = hrep.z_matrix(Z_ILJ, (i, i, i))
            B = hrep.z_matrix(Z_I, (i,))
            self.assertTrue(linalg.is_zero(linalg.commutator(A, B)))

    def test_delta_index(self):
        self.assertEqual(delta_index((1, 0)), 1)
        self.assertEqual(delta_index((1, 1)), 2)
        self.assertIsNone(delta_index((0, 0)))
        self.assertIsNone(delta_index((2, 0)))
        self.assertIsNone(delta_index((a1, 0)))

    def test_w_module_of_delta(self):
        W = make_w_module((1, 0))
        self.assertEqual(W.dim, 1)
        self.assertEqual(W.label, 'W(delta_1)')
        self.assertTrue(linalg.is_zero(W.z_matrix(Z_IJ, (0, 1))))
        self.assertTrue(linalg.is_zero(W.z_matrix(Z_IJ, (1, 0))))

    def test_w_module_generic(self):
        W = make_w_module((2, 0))
        self.assertIsNone(W.subspace)
        self.assertEqual(W.dim, 3)

    def test_dict_round_trip(self):
        hrep = make_w_module((1, 0))
        again = HRep.from_dict(hrep.to_dict())
        self.assertEqual(again.dim, hrep.dim)
        self.assertEqual(again.z_matrix(Z_ILJ, (0, 0, 1)),
                         hrep.z_matrix(Z_ILJ, (0, 0, 1)))


class TestWeightWindow(unittest.TestCase):
    def setUp(self):
        self.window = induce_G1(make_hrep(natural_module(2)), (a1, a2), 1)

    def test_slices(self):
        self.assertEqual(len(self.window.slices), 9)
        self.assertTrue(self.window.contains((1, -1)))
        self.assertFalse(self.window.contains((2, 0)))
        self.assertEqual(self.window.weight((1, 0)), (a1 - 1, a2))

    def test_h_and_d(self):
        target, M = self.window.operator((H, 0), (1, 0))
        self.assertEqual(target, (1, 0))
        self.assertEqual(M, linalg.identity(2, a1 - 1))
        target, M = self.window.operator((DK, 1), (0, 0))
        self.assertEqual(target, (0, 1))

    def test_t1_d2_determinant(self):
        target, M = self.window.operator((TD, 0, 1), (0, 0))
        self.assertEqual(target, (-1, 1))
        self.assertEqual(linalg.det(M), parse_scalar('a1*(a1 + 1)'))

    def test_listed_operators_agree_with_generic_action(self):
        window = WeightWindow(HRep(highest_weight_module((2, 0))),
                              (a1, a2), 1)
        for op in [(TD, 0, 1), (TD, 1, 0), (TD, 0, 0), (TTD, 0, 1),
                   (TTD, 1, 1), (TE, 0)]:
            for r in [(0, 0), (1, -1)]:
                target, M = window.operator(op, r)
                self.assertEqual(window.act_matrices(op_element(op, 2), r),
                                 {target: M})

    def test_module_axiom(self):
        x = from_witt(vector_field((1, 0), 1))
        y = from_witt(vector_field((0, 1), 0))
        v = [field.one, field.convert(2)]
        xy = self.window.act(multiply(x, y), (0, 0), v)
        composed = {}
        for middle, w in self.window.act(y, (0, 0), v).items():
            for target, u in self.window.act(x, middle, w).items():
                previous = composed.get(target, [field.zero] * 2)
                composed[target] = [p + q for p, q in zip(previous, u)]
        composed = dict((t, u) for t, u in composed.items() if any(u))
        self.assertEqual(xy, composed)

    def test_one_variable_z_commute_on_the_window(self):
        window = WeightWindow(HRep(highest_weight_module((2, 0))),
                              (a1, a2), 1)
        for i in range(2):
            zi = make_z(Z_I, (i,), 2).element
            ziii = make_z(Z_ILJ, (i, i, i), 2).element
            for r in [(0, 0), (1, -1)]:
                A = window.act_matrices(ziii, r)
                B = window.act_matrices(zi, r)
                self.assertEqual(set(A) | set(B), set([r]))
                if r in A and r in B:
                    self.assertTrue(linalg.is_zero(
                        linalg.commutator(A[r], B[r])))

    def test_radius(self):
        self.assertRaises(PreconditionError, WeightWindow,
                          HRep(natural_module(2)), (a1, a2), 0)
        self.assertRaises(DimensionMismatchError, WeightWindow,
                          HRep(natural_module(2)), (a1,), 1)


class TestCuspidality(unittest.TestCase):
    def test_symbolic_support_is_cuspidal(self):
        report = cuspidality_check(
            WeightWindow(HRep(natural_module(2)), (a1, a2), 1))
        self.assertTrue(report)
        self.assertEqual(report.zeros, [])
        self.assertIn('a1 = 0', report.excluded())
        self.assertIn('a1 = -1', report.excluded())

    def test_integral_support_is_not(self):
        report = cuspidality_check(
            WeightWindow(HRep(trivial_module(2)), (0, 0), 1))
        self.assertFalse(report)
        self.assertIn(((TD, 0, 1), (1, 0)), report.zeros)

    def test_tensor_criterion(self):
        self.assertTrue(tensor_module_is_cuspidal((a1, a2), (1, 0)))
        verdict = tensor_module_is_cuspidal((0, a2), (1, 0))
        self.assertFalse(verdict)
        self.assertEqual(verdict.coordinate, 0)
        verdict = tensor_module_is_cuspidal((a1, -a1), (0, 0))
        self.assertFalse(verdict)
        self.assertIn('lambda', verdict.reason)

    def test_tensor_window(self):
        self.assertTrue(tensor_cuspidality_check((a1, a2),
                                                 natural_module(2), 1))
        self.assertFalse(tensor_cuspidality_check((a1, 0),
                                                  natural_module(2), 1))

    def test_tensor_weight_slices(self):
        V = natural_module(2)
        self.assertEqual(tensor_slice_basis(V, (0, 0)),
                         [((0, 0), 0), ((1, -1), 1)])
        self.assertEqual(tensor_slice_basis(V, (1, 2)),
                         [((1, 2), 0), ((2, 1), 1)])

    def test_tensor_slice_mixes_basis_vectors(self):
        # t1 d2 sends t^(mu+m) (x) v_2 to both v_1 and v_2 components
        T2 = TensorModule(LaurentModule((a1, a2)), natural_module(2))
        M = tensor_slice_matrix(T2, op_element((TD, 0, 1), 2), (0, 0),
                                (1, -1))
        self.assertEqual(linalg.to_rows(M),
                         [[a2, field.one], [field.zero, a2 - 1]])
        self.assertEqual(linalg.det(M), a2 * (a2 - 1))

    def test_tensor_window_zero_slice(self):
        report = tensor_cuspidality_check((a1, 0), natural_module(2), 1)
        self.assertIn(((DK, 1), (0, 0)), report.zeros)


class TestSeparation(unittest.TestCase):
    def test_dichotomy(self):
        self.assertEqual(scalar_dichotomy(), frozenset([(0, 1), (1, 0)]))
        self.assertEqual(eigenvalue_pair(0), eigenvalue_pair(1))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(-10, 10), st.integers(-10, 10))
    def test_pairs_collide_only_on_the_dichotomy(self, x, y):
        if eigenvalue_pair(x) == eigenvalue_pair(y):
            self.assertTrue(x == y or set([x, y]) == set([0, 1]))

    def test_disjoint_blocks(self):
        half = parse_scalar('1/2')
        verdict = separation_check((a1, a1), (a1 + half, a1))
        self.assertTrue(verdict)
        self.assertEqual(verdict.coordinate, 0)

    def test_same_block(self):
        verdict = separation_check((a1, a2), (a1 + 2, a2 - 1))
        self.assertFalse(verdict)
        self.assertEqual(verdict.shift, (2, -1))
        self.assertFalse(separation_check((0,), (1,)))


class TestRoundtrip(unittest.TestCase):
    def test_natural_module(self):
        report = roundtrip_F_G(HRep(natural_module(2)), (a1, a2))
        self.assertTrue(report, report.checks)

    def test_simple_quotient(self):
        report = roundtrip_F_G(make_w_module((1, 0)), (a1, a2))
        self.assertTrue(report, report.checks)
        self.assertTrue(report.checks['whittaker_dimension'])


if __name__ == '__main__':
    unittest.main()
