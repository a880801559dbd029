import random

from spincalc.partitions import Partition, partitions_of, partitions_up_to
from spincalc.symfunc import (
    PolyChar,
    SchurVector,
    evaluate,
    from_square_basis,
    lr_coefficient,
    omega_transpose,
    schur_multiply,
    skew_schur,
    square_basis_vector,
    square_det_formula,
    to_square_basis,
    wedge_of_sym2,
    wedge_of_wedge2,
)


def P(*parts):
    return Partition(parts)


def s(*parts):
    return SchurVector.unit(P(*parts))


class TestLR:
    def test_examples(self):
        assert lr_coefficient(P(1), P(), P(1)) == 1
        assert lr_coefficient(P(2, 1), P(1), P(1, 1)) == 1
        assert lr_coefficient(P(2, 2), P(1), P(2)) == 0

    def test_size_and_containment_guards(self):
        assert lr_coefficient(P(2), P(1), P(2)) == 0
        assert lr_coefficient(P(1), P(2), P(1)) == 0

    def test_known_multiplicity_two(self):
        # s_{21} * s_{21} contains s_{321} twice.
        assert lr_coefficient(P(3, 2, 1), P(2, 1), P(2, 1)) == 2

    def test_symmetry(self):
        for lam in partitions_up_to(8):
            n = lam.size()
            for k in range(n + 1):
                for mu in partitions_of(k):
                    if not lam.contains(mu):
                        continue
                    for nu in partitions_of(n - k):
                        assert lr_coefficient(lam, mu, nu) == lr_coefficient(
                            lam, nu, mu
                        )


class TestProducts:
    def test_identity(self):
        v = s(3, 1) + s(2).scale(2)
        assert schur_multiply(s(), v) == v

    def test_square_of_s1(self):
        assert schur_multiply(s(1), s(1)) == s(2) + s(1, 1)

    def test_s1_times_s2(self):
        assert schur_multiply(s(1), s(2)) == s(3) + s(2, 1)

    def test_commutative_and_associative_samples(self):
        rng = random.Random(7)
        pool = [p for p in partitions_up_to(4)]
        for _ in range(10):
            a = SchurVector({rng.choice(pool): rng.randint(-2, 3)})
            b = SchurVector({rng.choice(pool): rng.randint(-2, 3)})
            c = SchurVector({rng.choice(pool): rng.randint(-2, 3)})
            assert schur_multiply(a, b) == schur_multiply(b, a)
            assert schur_multiply(a, schur_multiply(b, c)) == schur_multiply(
                schur_multiply(a, b), c
            )


class TestSkew:
    def test_examples(self):
        assert skew_schur(P(2, 1), P()) == s(2, 1)
        assert skew_schur(P(2, 1), P(1)) == s(2) + s(1, 1)
        assert skew_schur(P(1), P(2)) == SchurVector.zero()


class TestOmega:
    def test_row_column_swap(self):
        for n in range(6):
            assert omega_transpose(s(*([1] * n))) == SchurVector.unit(
                P(n) if n else P()
            )

    def test_ring_homomorphism_on_square(self):
        lhs = omega_transpose(schur_multiply(s(1), s(1)))
        rhs = schur_multiply(omega_transpose(s(1)), omega_transpose(s(1)))
        assert lhs == rhs == s(2) + s(1, 1)

    def test_example(self):
        assert omega_transpose(s(3, 1)) == s(2, 1, 1)


class TestEvaluate:
    def test_examples(self):
        v = evaluate(s(1), 2)
        assert v == PolyChar(2, {(1, 0): 1, (0, 1): 1})
        assert not evaluate(s(1, 1, 1), 2)
        assert evaluate(s(2), 2) == PolyChar(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})

    def test_symmetry_validation(self):
        assert evaluate(s(2, 1), 3).is_symmetric()

    def test_ring_homomorphism_random(self):
        rng = random.Random(11)
        pool = [p for p in partitions_up_to(5)]
        for _ in range(8):
            a = SchurVector({rng.choice(pool): rng.randint(-2, 2) or 1})
            b = SchurVector({rng.choice(pool): rng.randint(-2, 2) or 1})
            for m in (2, 3, 4):
                assert evaluate(schur_multiply(a, b), m) == evaluate(a, m) * evaluate(
                    b, m
                )


class TestPlethysmFamilies:
    def test_examples(self):
        assert wedge_of_sym2(1) == s(2)
        assert wedge_of_wedge2(2) == s(2, 1, 1)
        assert wedge_of_sym2(2) == s(3, 1)

    def test_weight_multiset_oracle(self):
        # e_i applied to the multiset of quadratic monomials, by direct
        # subset enumeration.
        import itertools

        for m in range(2, 5):
            sym_monos = [
                tuple(
                    (1 if k == a else 0) + (1 if k == b else 0) for k in range(m)
                )
                for a in range(m)
                for b in range(a, m)
            ]
            wedge_monos = [
                tuple(
                    (1 if k == a else 0) + (1 if k == b else 0) for k in range(m)
                )
                for a in range(m)
                for b in range(a + 1, m)
            ]
            for i in range(5):
                for monos, fam in ((sym_monos, wedge_of_sym2), (wedge_monos, wedge_of_wedge2)):
                    expected: dict[tuple[int, ...], int] = {}
                    for subset in itertools.combinations(range(len(monos)), i):
                        e = tuple(
                            sum(monos[j][k] for j in subset) for k in range(m)
                        )
                        expected[e] = expected.get(e, 0) + 1
                    got = evaluate(fam(i), m)
                    assert got == PolyChar(m, expected)


class TestSquareBasis:
    def test_unit_cases(self):
        assert square_basis_vector(P()) == s()
        assert square_basis_vector(P(1)) == s(1) - s()

    def test_round_trip(self):
        for lam in partitions_up_to(8):
            v = SchurVector.unit(lam)
            assert from_square_basis(to_square_basis(v)) == v

    def test_round_trip_other_direction_small(self):
        for lam in partitions_up_to(6):
            v = SchurVector.unit(lam)
            assert to_square_basis(from_square_basis(v)) == v

    def test_omega_compatibility(self):
        # The change of basis commutes with simultaneous transposition of
        # both indices.
        for lam in partitions_up_to(6):
            direct = square_basis_vector(lam.transpose())
            flipped = omega_transpose(square_basis_vector(lam))
            assert direct == flipped


class TestDeterminantalFormula:
    def test_single_box(self):
        assert square_det_formula(P(1)) == s(1) - s()

    def test_empty(self):
        assert square_det_formula(P()) == s()

    def test_column(self):
        assert square_det_formula(P(1, 1)) == s(1, 1) - s(1)

    def test_matches_direct_definition(self):
        for lam in partitions_up_to(6):
            assert square_det_formula(lam) == square_basis_vector(lam)
