from fractions import Fraction

import pytest

from superalg.catalog import make_Mrs, make_Qn, make_null
from superalg.core import GradedSubspace, Superalgebra, direct_sum
from superalg.errors import NotAnIdeal

from _oracles import gauss_rank, same_span

F = Fraction


def Q1():
    return make_Qn(1)[0]


def M11():
    return make_Mrs(1, 1)[0]


class TestMultiply:
    def test_q1_relations(self):
        a = Q1()
        E, Fv = a.basis_vector(0), a.basis_vector(1)
        assert a.multiply(E, Fv) == Fv
        assert a.multiply(Fv, Fv) == E
        assert a.multiply(E, E) == E

    def test_zero_factor(self):
        a = Q1()
        zero = (F(0), F(0))
        assert a.multiply(zero, a.basis_vector(1)) == zero

    def test_matrix_unit_identity(self):
        a = M11()
        names = a.basis_names
        e12 = a.basis_vector(names.index("e12"))
        e21 = a.basis_vector(names.index("e21"))
        e11 = a.basis_vector(names.index("e11"))
        assert a.multiply(e12, e21) == e11


class TestValidate:
    def test_catalog_valid(self):
        assert make_Qn(2)[0].validate().ok

    def test_grading_violation(self):
        # product of two evens landing in the odd block
        a = Superalgebra(1, 1, ["x", "y"], [(0, 0, 1, 1)])
        rep = a.validate()
        assert any(v[0] == "grading" and v[1:3] == (0, 0) for v in rep.violations)

    def test_one_dim_idempotent(self):
        a = Superalgebra(1, 0, ["e"], [(0, 0, 0, 1)])
        assert a.validate().ok

    def test_associativity_violation(self):
        # x.x = y, x.y = x is not associative: (xx)y=xy=x vs x(xy)=xx=y
        a = Superalgebra(2, 0, ["x", "y"], [(0, 0, 1, 1), (0, 1, 0, 1)])
        rep = a.validate()
        assert any(v[0] == "associativity" for v in rep.violations)


class TestAnnihilator:
    def test_null_algebra_everything(self):
        a = make_null(1, 0)
        ann = a.annihilator()
        assert ann.dim == 1

    def test_m11_trivial(self):
        ann = M11().annihilator()
        assert ann.dim == 0
        # oracle: no nonzero even vector annihilates; check rank of action stack
        a = M11()
        rows = []
        for j in range(a.dim):
            ej = a.basis_vector(j)
            for k in range(a.dim):
                rows.append([a.multiply(a.basis_vector(i), ej)[k] for i in range(a.dim)])
                rows.append([a.multiply(ej, a.basis_vector(i))[k] for i in range(a.dim)])
        assert gauss_rank(rows) == a.dim

    def test_annihilator_is_ideal(self):
        for alg in (make_null(2, 1), Q1(), M11()):
            ann = alg.annihilator()
            assert alg.is_graded_ideal(ann)


class TestIdealGenerated:
    def test_whole_from_whole(self):
        a = Q1()
        whole = a.whole_space()
        assert a.ideal_generated(whole) == whole

    def test_q1_from_f(self):
        a = Q1()
        seed = GradedSubspace.from_full_vectors(1, 1, [(0, 1)])
        assert a.ideal_generated(seed) == a.whole_space()

    def test_null_summand_stays(self):
        s = direct_sum([Q1(), make_null(1, 0)])
        # null generator sits at the last even coordinate
        seed = GradedSubspace.from_full_vectors(2, 1, [(0, 1, 0)])
        gen = s.ideal_generated(seed)
        assert gen == seed

    def test_idempotent_and_monotone(self):
        a = M11()
        seed = GradedSubspace.from_full_vectors(2, 2, [(1, 0, 0, 0)])
        i1 = a.ideal_generated(seed)
        assert a.ideal_generated(i1) == i1
        bigger = seed.sum(GradedSubspace.from_full_vectors(2, 2, [(0, 0, 1, 0)]))
        i2 = a.ideal_generated(bigger)
        assert i1.sum(i2) == i2


class TestProductSubspaces:
    def test_zero_factor(self):
        a = Q1()
        z = GradedSubspace.zero(1, 1)
        assert a.product_subspaces(a.whole_space(), z).dim == 0

    def test_q1_odd_squares_to_even(self):
        a = Q1()
        odd = GradedSubspace.from_full_vectors(1, 1, [(0, 1)])
        prod = a.product_subspaces(odd, odd)
        assert prod == GradedSubspace.from_full_vectors(1, 1, [(1, 0)])

    def test_null_product(self):
        a = make_null(2, 2)
        assert a.product_subspaces(a.whole_space(), a.whole_space()).dim == 0

    def test_whole_times_annihilator(self):
        for alg in (M11(), direct_sum([Q1(), make_null(1, 1)])):
            ann = alg.annihilator()
            assert alg.product_subspaces(alg.whole_space(), ann).dim == 0


class TestQuotient:
    def test_by_zero(self):
        a = Q1()
        q, proj = a.quotient(GradedSubspace.zero(1, 1))
        assert q.dim_even == 1 and q.dim_odd == 1
        assert sorted(q.triples()) == sorted(a.triples())
        assert proj.rows == proj.cols == 2

    def test_by_whole(self):
        a = Q1()
        q, _ = a.quotient(a.whole_space())
        assert q.dim == 0

    def test_not_an_ideal(self):
        a = Q1()
        notideal = GradedSubspace.from_full_vectors(1, 1, [(1, 0)])  # span{E}
        with pytest.raises(NotAnIdeal):
            a.quotient(notideal)

    def test_quotient_validates(self):
        s = direct_sum([M11(), make_null(1, 0)])
        ann = s.annihilator()
        q, proj = s.quotient(ann)
        assert q.validate().ok
        assert q.dim == s.dim - ann.dim
        # projection is an algebra map on a sample pair
        x = s.basis_vector(0)
        y = s.basis_vector(1)
        lhs = proj.apply(s.multiply(x, y))
        rhs = q.multiply(proj.apply(x), proj.apply(y))
        assert lhs == rhs


class TestDirectSum:
    def test_single(self):
        a = Q1()
        s = direct_sum([a])
        assert sorted(s.triples()) == sorted(a.triples())

    def test_cross_products_vanish(self):
        s = direct_sum([Q1(), make_null(1, 0)])
        assert (s.dim_even, s.dim_odd) == (2, 1)
        # Q1 even generator now index 0, null generator index 1
        assert s.multiply(s.basis_vector(0), s.basis_vector(1)) == (0, 0, 0)

    def test_validates(self):
        s = direct_sum([M11(), Q1()])
        assert s.validate().ok


class TestRadical:
    def test_m11_semisimple(self):
        assert M11().radical().dim == 0

    def test_null_all(self):
        a = make_null(1, 1)
        assert a.radical() == a.whole_space()

    def test_radical_of_direct_sum(self):
        a, b = M11(), make_null(2, 1)
        s = direct_sum([a, b])
        rad = s.radical()
        # block structure: M11 contributes nothing, null block everything
        expected = GradedSubspace.from_full_vectors(
            s.dim_even,
            s.dim_odd,
            [s.basis_vector(2), s.basis_vector(3), s.basis_vector(6)],
        )
        assert rad == expected


class TestGradedSimple:
    def test_m21_simple(self):
        assert make_Mrs(2, 1)[0].is_graded_simple()

    def test_q2_simple(self):
        assert make_Qn(2)[0].is_graded_simple()

    def test_sum_not_simple(self):
        assert not direct_sum([Q1(), Q1()]).is_graded_simple()

    def test_null_not_simple(self):
        assert not make_null(1, 0).is_graded_simple()


class TestSubSuperalgebra:
    def test_even_part_of_q1(self):
        a = Q1()
        u = GradedSubspace.from_full_vectors(1, 1, [(1, 0)])
        sub, embed = a.sub_superalgebra(u)
        assert (sub.dim_even, sub.dim_odd) == (1, 0)
        assert sub.coeff(0, 0, 0) == 1
        assert embed.col(0) == (1, 0)

    def test_products_match(self):
        s = direct_sum([Q1(), M11()])
        vecs = [s.basis_vector(i) for i in (0, 3)] + [s.basis_vector(i) for i in (2, 4, 5)]
        u = GradedSubspace.from_full_vectors(s.dim_even, s.dim_odd, vecs)
        #抽出 of the M11 block requires closure; Q1 block here: indexes 0 (E), 2? pick M11 block
        m_block = GradedSubspace.from_full_vectors(
            s.dim_even, s.dim_odd,
            [s.basis_vector(i) for i in (1, 2, 4, 5)],
        )
        sub, embed = s.sub_superalgebra(m_block)
        assert sub.validate().ok
        assert sub.dim == 4
        for i in range(sub.dim):
            for j in range(sub.dim):
                big = s.multiply(embed.col(i), embed.col(j))
                small = sub.multiply(sub.basis_vector(i), sub.basis_vector(j))
                assert tuple(embed.apply(small)) == big
