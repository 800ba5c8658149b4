import itertools
import random
from collections import Counter
from fractions import Fraction

import pytest

from nstl.combinatorics import Partition, partitions_of, two_row_partitions
from nstl.exact_arith import LaurentPoly, R_ONE, R_ZERO, RationalFn, quantum_int
from nstl.linalg import mat_mul, mat_transpose
from nstl.nonstandard import (
    FOUR,
    NsIrredLabel,
    NsSubmodule,
    TensorModule,
    _restricted_generators,
    antipode_check,
    build_irreducible,
    certify_irreducible,
    closure_check,
    commutant_dimension,
    dimension_formula,
    dimension_formula_details,
    epsilon_minus_vector,
    epsilon_plus_vector,
    flatten,
    hom_dimension,
    ns_labels,
    nonstandard_dimension_oracle,
    p_action,
    q_element,
    restriction_decompose,
    trace_functional,
    _zero,
)
from nstl.specht_modules import build_specht

rng = random.Random(23)

P = Partition


def rand_matrix(n, m):
    return [
        [
            RationalFn(LaurentPoly({rng.randint(-1, 1): rng.randint(-2, 2)}))
            for _ in range(m)
        ]
        for _ in range(n)
    ]


def mats_equal(A, B):
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def shape_pairs(r):
    shapes = partitions_of(r)
    return [(a, b) for a in shapes for b in shapes]


class TestLabels:
    def test_parse_roundtrip(self):
        for text in ("3,2:2,2", "+3,2", "-3,2", "eps+"):
            assert str(NsIrredLabel.parse(text)) == text

    def test_pair_unordered(self):
        a = NsIrredLabel("pair", (P([2, 2]), P([3, 1])))
        b = NsIrredLabel("pair", (P([3, 1]), P([2, 2])))
        assert a == b and str(a) == "3,1:2,2"

    def test_index_set_r3(self):
        labels = {str(x) for x in ns_labels(3)}
        assert labels == {"3:2,1", "+2,1", "-2,1", "eps+"}

    def test_index_set_r2_no_signed(self):
        labels = {str(x) for x in ns_labels(2)}
        assert labels == {"2:1,1", "eps+"}

    def test_sum_of_squares_matches_formula(self):
        for r in (2, 3, 4, 5):
            total = sum(x.dimension(r) ** 2 for x in ns_labels(r))
            assert total == dimension_formula(r)


class TestPAction:
    @pytest.mark.parametrize("pair", ["ll", "ul", "uu"])
    def test_formula_matches_definition_r4(self, pair):
        for lam, mu in shape_pairs(4):
            tm = TensorModule(lam, mu)
            for i in range(1, 4):
                for a in range(tm.left.dim):
                    for b in range(tm.right.dim):
                        e = _zero(tm.left.dim, tm.right.dim)
                        e[a][b] = R_ONE
                        assert mats_equal(
                            p_action(tm, e, i, pair), tm.p_apply(e, i, pair)
                        )

    def test_conversion_consistency(self):
        tm = TensorModule(P([2, 1]), P([3]))
        c = rand_matrix(tm.left.dim, tm.right.dim)
        for i in (1, 2):
            for pair in ("ul", "lu", "uu"):
                lhs = tm.convert(tm.p_apply(c, i, "ll"), "ll", pair)
                rhs = tm.p_apply(tm.convert(c, "ll", pair), i, pair)
                assert mats_equal(lhs, rhs)

    def test_quadratic_relations(self):
        tm = TensorModule(P([2, 1]), P([2, 1]))
        for i in (1, 2):
            c = rand_matrix(2, 2)
            p1 = tm.p_apply(c, i, "ll")
            assert mats_equal(
                tm.p_apply(p1, i, "ll"),
                [[FOUR * x for x in row] for row in p1],
            )
            q1 = q_element(tm, c, i, "ll")
            q2 = q_element(tm, q1, i, "ll")
            assert mats_equal(q2, [[FOUR * x for x in row] for row in q1])

    def test_flip_commutes(self):
        for lam in partitions_of(4):
            tm = TensorModule(lam, lam)
            c = rand_matrix(tm.left.dim, tm.left.dim)
            for i in range(1, 4):
                assert mats_equal(
                    mat_transpose(tm.p_apply(mat_transpose(c), i, "ll")),
                    tm.p_apply(c, i, "ll"),
                )


class TestThetaTwist:
    def _twist(self, lam):
        from nstl.combinatorics import de_distance, syt_enumerate

        m = build_specht(lam)
        mt = build_specht(lam.conjugate())
        S = _zero(mt.dim, m.dim)
        for Q in m.basis:
            sign = -1 if de_distance(Q) % 2 else 1
            S[mt.index[Q.transpose()]][m.index[Q]] = RationalFn.from_int(sign)
        return m, mt, S

    def test_theta_intertwines_factors(self):
        for r in (2, 3, 4):
            for lam in partitions_of(r):
                m, mt, S = self._twist(lam)
                for i in range(1, r):
                    lhs = mat_mul(S, m.lower_action[i])
                    rhs = mat_mul(mt.upper_action[i], S)
                    assert mats_equal(
                        lhs, [[(R_ZERO - R_ONE) * x for x in row] for row in rhs]
                    )

    def test_theta_fixes_p_generators(self):
        lam, mu = P([2, 1]), P([1, 1, 1])
        m, mt, SL = self._twist(lam)
        n, nt, SR = self._twist(mu)
        tm = TensorModule(lam, mu)
        tmt = TensorModule(lam.conjugate(), mu.conjugate())
        c = rand_matrix(m.dim, n.dim)
        mapped = mat_mul(SL, mat_mul(c, mat_transpose(SR)))
        for i in range(1, lam.size):
            lhs = mat_mul(
                SL, mat_mul(tm.p_apply(c, i, "ll"), mat_transpose(SR))
            )
            rhs = tmt.p_apply(mapped, i, "uu")
            assert mats_equal(lhs, rhs)


class TestEpsilonPlus:
    @pytest.mark.parametrize("r", [2, 3, 4])
    def test_scaled_by_four(self, r):
        for lam in partitions_of(r):
            tm = TensorModule(lam, lam)
            eps = epsilon_plus_vector(lam)
            for i in range(1, r):
                assert mats_equal(
                    tm.p_apply(eps, i, "ll"),
                    [[FOUR * x for x in row] for row in eps],
                )

    def test_symmetric(self):
        for lam in partitions_of(4):
            eps = epsilon_plus_vector(lam)
            assert mats_equal(eps, mat_transpose(eps))

    @pytest.mark.parametrize("r", [2, 3, 4, 5])
    def test_two_expressions_agree(self, r):
        # sum C_Q (x) C'_Q = identity in ul coords; sum C'_Q (x) C_Q =
        # identity in lu coords; both must land on the same ll matrix
        for lam in partitions_of(r):
            tm = TensorModule(lam, lam)
            n = tm.left.dim
            ident = [
                [R_ONE if a == b else R_ZERO for b in range(n)]
                for a in range(n)
            ]
            first = tm.convert(ident, "ul", "ll")
            second = tm.convert(ident, "lu", "ll")
            assert mats_equal(first, second)
            assert mats_equal(first, epsilon_plus_vector(lam))

    def test_single_tableau_shape(self):
        eps = epsilon_plus_vector(P([4]))
        assert mats_equal(eps, [[R_ONE]])

    def test_killed_by_q(self):
        lam = P([2, 1])
        tm = TensorModule(lam, lam)
        eps = epsilon_plus_vector(lam)
        for i in (1, 2):
            img = q_element(tm, eps, i, "ll")
            assert all(not x for row in img for x in row)


class TestEpsilonMinus:
    @pytest.mark.parametrize("r", [2, 3, 4])
    def test_annihilated(self, r):
        for lam in partitions_of(r):
            tm = TensorModule(lam.conjugate(), lam)
            eps = epsilon_minus_vector(lam)
            for i in range(1, r):
                img = tm.p_apply(eps, i, "ll")
                assert all(not x for row in img for x in row)

    def test_row_shape_explicit(self):
        eps = epsilon_minus_vector(P([2]))
        assert mats_equal(eps, [[R_ONE]])


class TestTrace:
    @pytest.mark.parametrize("r", [2, 3, 4])
    def test_trace_of_eps_plus_is_one(self, r):
        for lam in partitions_of(r):
            assert trace_functional(
                lam, epsilon_plus_vector(lam), "ll"
            ) == R_ONE

    def test_off_diagonal_zero(self):
        lam = P([2, 1])
        c = _zero(2, 2)
        c[0][1] = R_ONE  # C'_T (x) C_U with T != U in lu coords
        assert trace_functional(lam, c, "lu") == R_ZERO

    def test_equivariance(self):
        for lam in (P([2, 1]), P([3, 1])):
            tm = TensorModule(lam, lam)
            c = rand_matrix(tm.left.dim, tm.left.dim)
            for i in range(1, lam.size):
                assert trace_functional(
                    lam, tm.p_apply(c, i, "ll"), "ll"
                ) == FOUR * trace_functional(lam, c, "ll")


class TestAntipode:
    @pytest.mark.parametrize(
        "word",
        [[1], [2], [3], [1, 2], [2, 2], [1, 3], [1, 2, 1], [1, 2, 3], [2, 1, 2]],
    )
    def test_words_up_to_three(self, word):
        assert antipode_check(word, r=4)


class TestBuildIrreducible:
    def test_dimensions_r3(self):
        dims = {
            str(lbl): build_irreducible(lbl, 3).dim for lbl in ns_labels(3)
        }
        assert dims == {"3:2,1": 2, "+2,1": 2, "-2,1": 1, "eps+": 1}

    def test_diagonal_bookkeeping(self):
        for r in (3, 4):
            for lam in two_row_partitions(r):
                f = build_specht(lam).dim
                plus = (f + 1) * f // 2 - 1
                minus = f * (f - 1) // 2
                assert plus + minus + 1 == f * f

    def test_minus_single_row_rejected(self):
        with pytest.raises(ValueError):
            build_irreducible(NsIrredLabel("minus", (P([3]),)), 3)

    @pytest.mark.parametrize("r", [2, 3, 4])
    def test_closure(self, r):
        for lbl in ns_labels(r):
            assert closure_check(build_irreducible(lbl, r))


class TestCertification:
    @pytest.mark.parametrize("r", [3, 4])
    def test_commutant_one(self, r):
        for lbl in ns_labels(r):
            mod = build_irreducible(lbl, r)
            assert certify_irreducible(mod) == 1

    def test_reducible_control(self):
        # the full diagonal tensor square has three summands
        lam = P([2, 1])
        tm = TensorModule(lam, lam)
        basis = []
        for a in range(2):
            for b in range(2):
                c = _zero(2, 2)
                c[a][b] = R_ONE
                basis.append(c)
        mod = NsSubmodule(NsIrredLabel("eps_plus"), tm, basis)
        gens = _restricted_generators(mod, Fraction(7, 3))
        assert commutant_dimension(gens, 4) == 3

    def test_pairwise_hom_zero_r3(self):
        mods = [build_irreducible(lbl, 3) for lbl in ns_labels(3)]
        gens = [_restricted_generators(m, Fraction(7, 3)) for m in mods]
        for (ga, ma), (gb, mb) in itertools.combinations(
            zip(gens, mods), 2
        ):
            assert hom_dimension(ga, ma.dim, gb, mb.dim) == 0

    def test_retry_ladder(self):
        mod = build_irreducible(NsIrredLabel("eps_plus"), 3)
        assert certify_irreducible(mod, Fraction(7, 3)) == 1


def lbl(text):
    return NsIrredLabel.parse(text)


class TestRestriction:
    def test_case_1b_prime_r3(self):
        mod = build_irreducible(lbl("3:2,1"), 3)
        assert restriction_decompose(mod) == Counter(
            {lbl("2:1,1"): 1, lbl("eps+"): 1}
        )

    def test_case_2_prime_r3(self):
        mod = build_irreducible(lbl("+2,1"), 3)
        assert restriction_decompose(mod) == Counter(
            {lbl("2:1,1"): 1, lbl("eps+"): 1}
        )

    def test_case_3_prime_r3(self):
        mod = build_irreducible(lbl("-2,1"), 3)
        assert restriction_decompose(mod) == Counter({lbl("2:1,1"): 1})

    def test_case_1b_prime_r4(self):
        mod = build_irreducible(lbl("4:3,1"), 4)
        assert restriction_decompose(mod) == Counter(
            {lbl("3:2,1"): 1, lbl("eps+"): 1}
        )

    def test_case_2_prime_r4(self):
        mod = build_irreducible(lbl("+3,1"), 4)
        assert restriction_decompose(mod) == Counter(
            {lbl("3:2,1"): 1, lbl("+2,1"): 1, lbl("eps+"): 1}
        )

    def test_case_3_prime_r4(self):
        mod = build_irreducible(lbl("-3,1"), 4)
        assert restriction_decompose(mod) == Counter(
            {lbl("3:2,1"): 1, lbl("-2,1"): 1}
        )

    def test_case_1a_r4(self):
        mod = build_irreducible(lbl("4:2,2"), 4)
        assert restriction_decompose(mod) == Counter({lbl("3:2,1"): 1})

    def test_case_1b_r4(self):
        mod = build_irreducible(lbl("3,1:2,2"), 4)
        assert restriction_decompose(mod) == Counter(
            {lbl("3:2,1"): 1, lbl("+2,1"): 1, lbl("-2,1"): 1, lbl("eps+"): 1}
        )

    @pytest.mark.parametrize("r", [3, 4])
    def test_case_4(self, r):
        mod = build_irreducible(lbl("eps+"), r)
        assert restriction_decompose(mod) == Counter({lbl("eps+"): 1})


class TestDimension:
    def test_formula_values(self):
        assert [dimension_formula(r) for r in (2, 3, 4, 5)] == [2, 10, 89, 855]

    def test_details_consistent(self):
        for r in (2, 3, 4, 5):
            d = dimension_formula_details(r)
            assert d["total_squares"] == d["formula"]

    def test_oracle_r2(self):
        assert nonstandard_dimension_oracle(2) == 2

    def test_oracle_r3(self):
        assert nonstandard_dimension_oracle(3) == 10

    def test_oracle_r3_mod_p(self):
        assert nonstandard_dimension_oracle(3, mod_p=1000003) == 10

    def test_oracle_r4(self):
        assert nonstandard_dimension_oracle(4) == 89
