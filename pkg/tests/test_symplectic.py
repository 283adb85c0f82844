"""The cyclic map N, derivation calculus, and omega-preserving automorphisms."""

from fractions import Fraction
from random import Random

import pytest

from twistkit.algebra import TensorSeries
from twistkit.series import texp
from twistkit.symplectic import (
    AlgebraAutomorphism,
    Derivation,
    NonConvergentExponentialError,
    check_kills_omega,
    check_preserves_omega,
    conjugate_derivation,
    conjugation_law_check,
    derivation_bracket,
    derivation_from_tensor,
    derivations_equal_through,
    exp_derivation,
    intersection,
    nmap,
    omega,
    random_ia_omega,
    random_symplectic_linear,
    tensor_of_derivation,
    transvection,
)


def random_t1_series(rng, genus, trunc, words=3, max_degree=None):
    cap = max_degree or trunc
    terms = {}
    for _ in range(words):
        degree = rng.randint(1, cap)
        word = tuple(rng.randrange(2 * genus) for _ in range(degree))
        terms[word] = terms.get(word, Fraction(0)) + Fraction(
            rng.randint(-3, 3), rng.randint(1, 3)
        )
    return TensorSeries(genus, trunc, terms)


class TestPairing:
    def test_table(self):
        assert intersection(0, 1) == 1  # (A1.B1)
        assert intersection(1, 0) == -1
        assert intersection(0, 0) == 0
        assert intersection(0, 3) == 0  # different handles
        assert intersection(0, 1, sign=-1) == -1

    def test_antisymmetry_nondegeneracy(self):
        n = 4
        for a in range(n):
            assert any(intersection(a, b) != 0 for b in range(n))
            for b in range(n):
                assert intersection(a, b) == -intersection(b, a)


class TestOmega:
    def test_genus_one(self):
        assert omega(1, 2) == TensorSeries(1, 2, {(0, 1): 1, (1, 0): -1})

    def test_genus_two(self):
        expected = TensorSeries(2, 2, {(0, 1): 1, (1, 0): -1, (2, 3): 1, (3, 2): -1})
        assert omega(2, 2) == expected

    def test_exponential_parts(self):
        e = texp(omega(1, 4))
        assert e.degree_part(0) == TensorSeries.unit(1, 4).degree_part(0)
        assert e.degree_part(2) == omega(1, 4)


class TestNMap:
    def test_kills_unit(self):
        assert nmap(TensorSeries.unit(1, 3)).is_zero()

    def test_two_rotations(self):
        got = nmap(TensorSeries.single(1, 2, (0, 1)))
        assert got == TensorSeries(1, 2, {(0, 1): 1, (1, 0): 1})

    def test_three_rotations(self):
        got = nmap(TensorSeries.single(2, 3, (0, 1, 2)))
        assert got == TensorSeries(2, 3, {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1})

    def test_trace_identities(self):
        rng = Random(1)
        for _ in range(100):
            g, trunc = rng.choice((1, 2)), rng.randint(2, 6)
            u = random_t1_series(rng, g, trunc)
            v = random_t1_series(rng, g, trunc)
            w = random_t1_series(rng, g, trunc)
            assert nmap(u * v) == nmap(v * u)
            assert nmap(u.commutator(v) * w) == nmap(u * v.commutator(w))


class TestDerivationFromTensor:
    def test_single_letter_tensor(self):
        # the word A1 sends B1 to (B1.A1) = -1 and kills A1
        d = derivation_from_tensor(TensorSeries.letter(1, 3, 0))
        assert d.images[1] == TensorSeries.unit(1, 3).scale(-1)
        assert d.images[0].is_zero()

    def test_half_n_omega_squared(self):
        g, trunc = 1, 4
        w = omega(g, trunc)
        d = derivation_from_tensor(nmap(w * w).scale(Fraction(1, 2)))
        a1 = TensorSeries.letter(g, trunc, 0)
        assert d.images[0] == w * a1 - a1 * w

    def test_n_a1a1_by_contraction_oracle(self):
        # N(A1A1) = 2 A1A1; contracting the leading A1 against B1 gives -2 A1
        g, trunc = 2, 3
        d = derivation_from_tensor(nmap(TensorSeries.single(g, trunc, (0, 0))))
        assert d.images[1] == TensorSeries.letter(g, trunc, 0).scale(-2)
        assert d.images[2].is_zero()  # A2 pairs with nothing here

    def test_rejects_constant_term(self):
        with pytest.raises(ValueError):
            derivation_from_tensor(TensorSeries.unit(1, 3))


class TestApplyDerivation:
    def test_kills_unit(self):
        rng = Random(2)
        d = derivation_from_tensor(random_t1_series(rng, 1, 4))
        assert d.apply(TensorSeries.unit(1, 4)).is_zero()

    def test_cyclic_tensors_kill_omega(self):
        rng = Random(3)
        for _ in range(40):
            g, trunc = rng.choice((1, 2)), rng.randint(2, 6)
            v = random_t1_series(rng, g, trunc)
            assert check_kills_omega(derivation_from_tensor(nmap(v)))

    def test_displayed_identity(self):
        g, trunc = 1, 4
        w = omega(g, trunc)
        d = derivation_from_tensor(nmap(w * w).scale(Fraction(1, 2)))
        a1 = TensorSeries.letter(g, trunc, 0)
        assert d.apply(a1) == w * a1 - a1 * w
        assert not d.apply(a1).is_zero()

    def test_leibniz_exact_for_degree_two_tensors(self):
        # tensors of degree >= 2 never lower word degree, so no window slack
        rng = Random(4)
        for _ in range(25):
            g, trunc = rng.choice((1, 2)), rng.randint(3, 5)
            tensor = random_t1_series(rng, g, trunc)
            tensor = tensor - tensor.degree_part(1)
            if tensor.is_zero():
                continue
            d = derivation_from_tensor(tensor)
            u = random_t1_series(rng, g, trunc)
            v = random_t1_series(rng, g, trunc)
            assert d.apply(u * v) == d.apply(u) * v + u * d.apply(v)

    def test_leibniz_through_window_for_lowering_tensors(self):
        # a degree-1 tensor component maps words one degree down, so the
        # truncated product law is exact only below the window top
        rng = Random(40)
        for _ in range(25):
            g, trunc = rng.choice((1, 2)), rng.randint(2, 5)
            d = derivation_from_tensor(random_t1_series(rng, g, trunc))
            u = random_t1_series(rng, g, trunc)
            v = random_t1_series(rng, g, trunc)
            lhs = d.apply(u * v)
            rhs = d.apply(u) * v + u * d.apply(v)
            assert lhs.truncate(trunc - 1) == rhs.truncate(trunc - 1)


class TestDerivationBracket:
    def test_self_bracket(self):
        rng = Random(5)
        d = derivation_from_tensor(random_t1_series(rng, 2, 4))
        assert derivation_bracket(d, d).is_zero()

    def test_cyclic_bracket_law(self):
        # [u, N(v)] = N(u(v)) for u = N(A1B1), v = B1B1, both sides independent
        g, trunc = 1, 4
        u = nmap(TensorSeries.single(g, trunc, (0, 1)))
        v = TensorSeries.single(g, trunc, (1, 1))
        du = derivation_from_tensor(u)
        lhs = derivation_bracket(du, derivation_from_tensor(nmap(v)))
        rhs = derivation_from_tensor(nmap(du.apply(v)))
        # u acts degree-preservingly here, so no window slack is needed
        assert lhs == rhs

    def test_cyclic_bracket_law_window(self):
        rng = Random(6)
        for _ in range(30):
            g = rng.choice((1, 2))
            trunc = rng.randint(3, 8)
            u = nmap(random_t1_series(rng, g, trunc, words=2))
            v = random_t1_series(rng, g, trunc, words=2)
            du = derivation_from_tensor(u)
            lhs = derivation_bracket(du, derivation_from_tensor(nmap(v)))
            rhs = derivation_from_tensor(nmap(du.apply(v)))
            assert derivations_equal_through(lhs, rhs, trunc - 1)

    def test_disjoint_supports_commute(self):
        g, trunc = 2, 4
        d1 = derivation_from_tensor(nmap(TensorSeries.single(g, trunc, (0, 0))))
        d2 = derivation_from_tensor(nmap(TensorSeries.single(g, trunc, (2, 2))))
        assert derivation_bracket(d1, d2).is_zero()


class TestExpDerivation:
    def test_exp_of_zero(self):
        assert exp_derivation(Derivation.zero(2, 4)) == AlgebraAutomorphism.identity(2, 4)

    def test_transvection_from_quadratic_tensor(self):
        # exp of the derivation of -(1/2) N(A1A1) = -A1A1: B1 -> B1 + A1
        g, trunc = 1, 3
        tensor = nmap(TensorSeries.single(g, trunc, (0, 0))).scale(Fraction(-1, 2))
        auto = exp_derivation(derivation_from_tensor(tensor))
        assert auto.images[1] == TensorSeries.letter(g, trunc, 1) + TensorSeries.letter(g, trunc, 0)
        assert auto.images[0] == TensorSeries.letter(g, trunc, 0)

    def test_multiplicative(self):
        rng = Random(8)
        for _ in range(15):
            g, trunc = rng.choice((1, 2)), rng.randint(3, 5)
            auto = random_ia_omega(g, trunc, rng)
            u = random_t1_series(rng, g, trunc)
            v = random_t1_series(rng, g, trunc)
            assert auto.apply(u * v) == auto.apply(u) * auto.apply(v)

    def test_rejects_non_nilpotent_action(self):
        # A1B1 sends B1 to -B1: the degree-preserving action is not nilpotent
        d = derivation_from_tensor(TensorSeries.single(1, 3, (0, 1)))
        with pytest.raises(NonConvergentExponentialError):
            exp_derivation(d)

    def test_rejects_filtration_lowering(self):
        d = derivation_from_tensor(TensorSeries.letter(1, 3, 0))
        with pytest.raises(NonConvergentExponentialError):
            exp_derivation(d)

    def test_commuting_sum_splits(self):
        g, trunc = 2, 5
        d1 = derivation_from_tensor(nmap(TensorSeries.single(g, trunc, (0, 0, 1))))
        d2 = derivation_from_tensor(nmap(TensorSeries.single(g, trunc, (2, 2, 3))))
        assert derivation_bracket(d1, d2).is_zero()
        combined = exp_derivation(d1 + d2)
        split = exp_derivation(d1).compose(exp_derivation(d2))
        assert combined == split


class TestAutomorphisms:
    def test_inverse_roundtrip(self):
        rng = Random(9)
        for _ in range(10):
            g, trunc = rng.choice((1, 2)), rng.randint(3, 5)
            auto = random_ia_omega(g, trunc, rng).compose(
                random_symplectic_linear(g, trunc, rng)
            )
            identity = AlgebraAutomorphism.identity(g, trunc)
            assert auto.compose(auto.inverse()) == identity
            assert auto.inverse().compose(auto) == identity

    def test_rejects_constant_terms(self):
        img = {0: TensorSeries.unit(1, 2) + TensorSeries.letter(1, 2, 0),
               1: TensorSeries.letter(1, 2, 1)}
        with pytest.raises(ValueError):
            AlgebraAutomorphism(1, 2, img)

    def test_rejects_singular_linear_part(self):
        img = {0: TensorSeries.letter(1, 2, 0),
               1: TensorSeries.letter(1, 2, 0)}
        with pytest.raises(ValueError):
            AlgebraAutomorphism(1, 2, img)

    def test_transvections_preserve_omega(self):
        rng = Random(10)
        for _ in range(20):
            g, trunc = rng.choice((1, 2)), 4
            assert check_preserves_omega(random_symplectic_linear(g, trunc, rng))

    def test_ia_omega_generators(self):
        rng = Random(11)
        for _ in range(10):
            g, trunc = rng.choice((1, 2)), rng.randint(4, 6)
            auto = random_ia_omega(g, trunc, rng)
            assert check_preserves_omega(auto)
            identity = AlgebraAutomorphism.identity(g, trunc)
            assert auto.degree_one_matrix() == identity.degree_one_matrix()


class TestConjugation:
    def test_identity_conjugation(self):
        rng = Random(12)
        d = derivation_from_tensor(nmap(random_t1_series(rng, 2, 4)))
        assert conjugate_derivation(AlgebraAutomorphism.identity(2, 4), d) == d

    def test_conjugation_law_random(self):
        rng = Random(13)
        for _ in range(20):
            g = rng.choice((1, 2))
            trunc = rng.randint(3, 5)
            auto = random_ia_omega(g, trunc, rng).compose(
                random_symplectic_linear(g, trunc, rng)
            )
            v = random_t1_series(rng, g, trunc, words=2)
            assert conjugation_law_check(auto, v)

    def test_conjugation_law_flipped_pairing(self):
        rng = Random(14)
        for _ in range(8):
            g, trunc = rng.choice((1, 2)), 4
            auto = random_ia_omega(g, trunc, rng, sign=-1).compose(
                random_symplectic_linear(g, trunc, rng, sign=-1)
            )
            v = random_t1_series(rng, g, trunc, words=2)
            assert conjugation_law_check(auto, v, sign=-1)

    def test_law_fails_without_omega(self):
        # U: A1 -> 2 A1, B1 -> B1 scales omega and breaks the law
        g, trunc = 1, 3
        matrix = [[Fraction(2), Fraction(0)], [Fraction(0), Fraction(1)]]
        auto = AlgebraAutomorphism.from_linear(g, trunc, matrix)
        assert not check_preserves_omega(auto)
        v = TensorSeries.single(g, trunc, (0, 1))
        lhs = conjugate_derivation(auto, derivation_from_tensor(nmap(v)))
        rhs = derivation_from_tensor(nmap(auto.apply(v)))
        assert not derivations_equal_through(lhs, rhs, trunc - 1)

    def test_factorized_composites(self):
        # the law for U', |U|, and their composite, mirroring the two-part proof
        rng = Random(15)
        g, trunc = 2, 4
        ia = random_ia_omega(g, trunc, rng)
        lin = random_symplectic_linear(g, trunc, rng)
        v = random_t1_series(rng, g, trunc, words=2)
        for auto in (ia, lin, ia.compose(lin), lin.compose(ia)):
            assert conjugation_law_check(auto, v)


class TestOmegaChecks:
    def test_identity_preserves(self):
        assert check_preserves_omega(AlgebraAutomorphism.identity(2, 3))

    def test_exp_of_cyclic_degree3_preserves(self):
        rng = Random(16)
        for _ in range(10):
            g, trunc = rng.choice((1, 2)), rng.randint(3, 5)
            tensor = nmap(random_t1_series(rng, g, trunc, words=2, max_degree=None))
            tensor = tensor - tensor.degree_part(1) - tensor.degree_part(2)
            if tensor.is_zero():
                continue
            assert check_preserves_omega(exp_derivation(derivation_from_tensor(tensor)))

    def test_non_cyclic_fails(self):
        d = Derivation(1, 3, {1: TensorSeries.letter(1, 3, 1)})
        assert not check_kills_omega(d)

    def test_kills_omega_iff_tensor_is_cyclic(self):
        # a derivation kills omega exactly when its tensor is a cyclic
        # symmetrization; per homogeneous degree m that reads N(t_m) = m t_m
        rng = Random(18)
        seen_failure = False
        for _ in range(40):
            g, trunc = rng.choice((1, 2)), rng.randint(2, 5)
            t = random_t1_series(rng, g, trunc)
            cyclic = all(
                nmap(t.degree_part(m)) == t.degree_part(m).scale(m)
                for m in range(1, trunc + 1)
            )
            kills = check_kills_omega(derivation_from_tensor(t))
            assert kills == cyclic
            seen_failure = seen_failure or not kills
        assert seen_failure  # random tensors are generically not cyclic


class TestTensorExtraction:
    def test_roundtrip(self):
        rng = Random(17)
        for _ in range(20):
            g, trunc = rng.choice((1, 2)), rng.randint(2, 5)
            tensor = nmap(random_t1_series(rng, g, trunc))
            assert tensor_of_derivation(derivation_from_tensor(tensor)) == tensor

    def test_roundtrip_flipped_sign(self):
        tensor = nmap(TensorSeries.single(2, 4, (0, 1, 2)))
        d = derivation_from_tensor(tensor, sign=-1)
        assert tensor_of_derivation(d, sign=-1) == tensor


class TestTransvection:
    def test_formula(self):
        g, trunc = 1, 3
        direction = TensorSeries.letter(g, trunc, 0)
        auto = transvection(g, trunc, direction, 1)
        # B1 -> B1 + (B1.A1) A1 = B1 - A1
        assert auto.images[1] == TensorSeries.letter(g, trunc, 1) - direction
        assert auto.images[0] == direction

    def test_rejects_higher_degree(self):
        with pytest.raises(ValueError):
            transvection(1, 3, TensorSeries.single(1, 3, (0, 1)), 1)
