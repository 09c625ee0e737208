#include "doctest.h"
#include "support.hpp"

#include "dirac/errors.hpp"

using namespace dirac;
using namespace support;

TEST_CASE("scalar parsing and printing")
{
    CHECK(Scalar::parse("3/6") == Scalar::frac(1, 2));
    CHECK(Scalar::parse("-2") == Scalar(-2));
    CHECK(Scalar::parse("i") == Scalar::i());
    CHECK(Scalar::parse("-i") == -Scalar::i());
    CHECK(Scalar::parse("1/2+3/4 i") == Scalar(mpq_class(1, 2), mpq_class(3, 4)));
    CHECK(Scalar::parse("1/2-3/4 i") == Scalar(mpq_class(1, 2), mpq_class(-3, 4)));
    CHECK(Scalar::parse("2/3 i") == Scalar(mpq_class(0), mpq_class(2, 3)));
    CHECK_THROWS(Scalar::parse("1/0"));
    CHECK_THROWS(Scalar::parse("abc"));
    CHECK_THROWS(Scalar::parse(""));

    for (const char* text : {"0", "5", "-7/3", "i", "-i", "2/5 i", "1+i", "-1/2-2/3 i", "4-i"})
        CHECK(Scalar::parse(Scalar::parse(text).to_string()) == Scalar::parse(text));
    CHECK(Scalar::frac(-4, 6).to_string() == "-2/3");
    CHECK(Scalar(mpq_class(1), mpq_class(-1)).to_string() == "1-i");
}

TEST_CASE("scalar field arithmetic")
{
    Scalar i = Scalar::i();
    CHECK(i * i == Scalar(-1));
    Scalar z(mpq_class(3), mpq_class(4));
    CHECK(z * z.conj() == Scalar(25));
    CHECK(z / z == Scalar(1));
    CHECK(Scalar(1) / z == Scalar(mpq_class(3, 25), mpq_class(-4, 25)));
    CHECK_THROWS_AS(z / Scalar(0), std::domain_error);
}

TEST_CASE("matrix kernel, solve and inverse")
{
    Matrix m = Matrix::from_rows(3, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(m.rank() == 2);
    auto ker = m.kernel();
    REQUIRE(ker.size() == 1);
    CHECK(is_zero(m.apply(ker[0])));

    auto x = m.solve(Vec{Scalar(6), Scalar(12), Scalar(2)});
    REQUIRE(x);
    CHECK(m.apply(*x) == Vec{Scalar(6), Scalar(12), Scalar(2)});
    CHECK_FALSE(m.solve(Vec{Scalar(1), Scalar(0), Scalar(0)}));
    CHECK_FALSE(m.inverse());

    Matrix a = Matrix::from_rows(2, {{2, 1}, {5, 3}});
    auto inv = a.inverse();
    REQUIRE(inv);
    CHECK(*inv * a == Matrix::identity(2));
    CHECK(Matrix(0, 0).inverse() == Matrix());
}

TEST_CASE("subspace canonical form and operations")
{
    // span{e1, e2 - e3*, e3 + e2*} in the double of a 3-dimensional algebra
    Subspace d = Subspace::span(6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, -1}, {0, 0, 1, 0, 1, 0}});
    CHECK(d.dim() == 3);

    Subspace s = Subspace::coordinate(3, {0, 1});
    Subspace t = Subspace::coordinate(3, {1, 2});
    CHECK(intersect(s, t) == Subspace::coordinate(3, {1}));
    CHECK(intersect(s, s) == s);
    CHECK(sum(s, t).is_full());
    CHECK(d.conjugate() == d);

    Subspace a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
    Subspace b = Subspace::span(3, {{1, 0, -1}, {2, 3, 1}});
    CHECK(a == b);  // same plane, different spanning sets

    Subspace c = Subspace::span(2, {{Scalar(1), Scalar::i()}});
    CHECK_FALSE(c.is_real());
    CHECK(c.conjugate() == Subspace::span(2, {{Scalar(1), -Scalar::i()}}));
    CHECK(intersect(c, c.conjugate()).is_zero());

    CHECK(Subspace::zero(4).is_zero());
    CHECK(Subspace::full(4).annihilator().is_zero());
    CHECK(Subspace::coordinate(3, {0}).annihilator() == Subspace::coordinate(3, {1, 2}));
    CHECK_THROWS_AS(intersect(s, Subspace::zero(4)), DimensionMismatch);
}

TEST_CASE("subspace properties")
{
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng.index(5);
        bool cx = rng.coin(0.3);
        Subspace s = rng.subspace(n, rng.index(n + 1), cx);
        Subspace t = rng.subspace(n, rng.index(n + 1), cx);
        CHECK(s.dim() + t.dim() == sum(s, t).dim() + intersect(s, t).dim());
        CHECK(subspace_leq(intersect(s, t), s));
        CHECK(subspace_leq(t, sum(s, t)));
        // canonicality: re-spanning with mixed combinations gives the same matrix
        auto b = s.basis_vectors();
        std::vector<Vec> mixed;
        for (std::size_t k = 0; k < b.size(); ++k)
            mixed.push_back(k + 1 < b.size() ? add(b[k], scale(Scalar(static_cast<long>(k + 2)), b[k + 1])) : scale(Scalar(-3), b[k]));
        CHECK(Subspace::span(n, mixed) == s);
        CHECK(s.annihilator().dim() + s.dim() == n);
    }
}

TEST_CASE("jacobi_check")
{
    CHECK(jacobi_check(euc2()).ok());
    CHECK(jacobi_check(LieAlgebra::abelian(4)).ok());
    CHECK(jacobi_check(sl2()).ok());
    CHECK(jacobi_check(sl3()).ok());
    for (const auto& [name, g] : algebra_library()) {
        INFO(name);
        CHECK(jacobi_check(g).ok());
    }

    // [e1,e2] = e3, [e2,e3] = e1, [e1,e3] = e1 is antisymmetric but not Lie
    StructureTensor bad(3);
    bad.set_bracket(0, 1, {0, 0, 1});
    bad.set_bracket(1, 2, {1, 0, 0});
    bad.set_bracket(0, 2, {1, 0, 0});
    JacobiReport r = jacobi_check(bad);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations.front().i == 0);
    CHECK(r.violations.front().j == 1);
    CHECK(r.violations.front().k == 2);

    StructureTensor asym(2);
    asym(0, 1, 0) = 1;
    CHECK_THROWS_AS(jacobi_check(asym), AntisymmetryViolation);
    CHECK_THROWS_AS(LieAlgebra(Field::Q, asym), AntisymmetryViolation);
}

TEST_CASE("sl2 and sl3 structure constants agree with a matrix commutator oracle")
{
    // H = diag(1,-1), X = E12, Y = E21 embedded in the top-left block
    Mat3 H{}, X = unit3(0, 1), Y = unit3(1, 0);
    H[0][0] = 1;
    H[1][1] = -1;
    std::vector<Mat3> mats{H, X, Y};
    auto coords = [&](const Mat3& m) { return Vec{m[0][0], m[0][1], m[1][0]}; };
    LieAlgebra g = sl2();
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            CHECK(bracket(g, g.basis(a), g.basis(b)) == coords(commutator(mats[a], mats[b])));

    LieAlgebra s = sl3();
    auto basis = sl3_matrices();
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Mat3 ma{}, mb{};
        Vec va(8), vb(8);
        for (std::size_t k = 0; k < 8; ++k) {
            long x = rng.integer(-3, 3), y = rng.integer(-3, 3);
            va[k] = x;
            vb[k] = y;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) {
                    ma[r][c] += x * basis[k][r][c];
                    mb[r][c] += y * basis[k][r][c];
                }
        }
        CHECK(bracket(s, va, vb) == sl3_coords(commutator(ma, mb)));
    }
}

TEST_CASE("bracket and coadjoint on Euc2")
{
    LieAlgebra g = euc2();
    Vec e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1}, zero{0, 0, 0};
    CHECK(bracket(g, e1, e2) == Vec{0, 0, -1});
    CHECK(bracket(g, e2, e2) == zero);
    CHECK(bracket(sl2(), Vec{0, 1, 0}, Vec{0, 0, 1}) == Vec{1, 0, 0});

    // (ad*_A xi)(C) = -xi([A, C]) evaluated on each basis vector
    auto oracle = [&](const Vec& a, const Vec& xi) {
        Vec out(3);
        for (std::size_t c = 0; c < 3; ++c)
            out[c] = -dot(xi, bracket(g, a, g.basis(c)));
        return out;
    };
    CHECK(coadjoint(g, e1, e2) == Vec{0, 0, -1});
    CHECK(coadjoint(g, e1, Vec{0, 0, -1}) == Vec{0, -1, 0});
    CHECK(coadjoint(g, e3, zero) == zero);
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        Vec a = rng.vec(3), xi = rng.vec(3);
        CHECK(coadjoint(g, a, xi) == oracle(a, xi));
        CHECK(coadjoint(g, a, xi) == scale(Scalar(-1), g.ad(a).transpose().apply(xi)));
    }
    CHECK_THROWS_AS(bracket(g, Vec{1, 0}, e1), DimensionMismatch);
}

TEST_CASE("killing form")
{
    CHECK(killing_form(LieAlgebra::abelian(3)).is_zero());

    Matrix b = killing_form(sl2());
    CHECK(b(0, 0) == Scalar(8));
    CHECK(b(1, 2) == Scalar(4));
    CHECK(b(2, 1) == Scalar(4));
    CHECK(b(0, 1) == Scalar(0));
    CHECK(b(0, 2) == Scalar(0));

    Matrix e = killing_form(euc2());
    CHECK(e(0, 0) == Scalar(-2));
    for (std::size_t i = 1; i < 3; ++i)
        for (std::size_t j = 1; j < 3; ++j)
            CHECK(e(i, j) == Scalar(0));

    // ad-trace oracle and invariance on random vectors
    Rng rng(17);
    for (const auto& [name, g] : algebra_library()) {
        INFO(name);
        Matrix k = killing_form(g);
        CHECK(k == k.transpose());
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = 0; j < g.dim(); ++j) {
                Matrix prod = g.ad(g.basis(i)) * g.ad(g.basis(j));
                Scalar tr;
                for (std::size_t d = 0; d < g.dim(); ++d)
                    tr += prod(d, d);
                CHECK(k(i, j) == tr);
            }
        Vec a = rng.vec(g.dim()), x = rng.vec(g.dim()), y = rng.vec(g.dim());
        auto form = [&](const Vec& u, const Vec& w) { return dot(u, k.apply(w)); };
        CHECK(form(bracket(g, a, x), y) + form(x, bracket(g, a, y)) == Scalar(0));
        CHECK(killing_form(complexify(g)) == k);
    }
}

TEST_CASE("complexify")
{
    LieAlgebra c = complexify(euc2());
    CHECK(c.field() == Field::Qi);
    CHECK(c.structure() == euc2().structure());
    CHECK(jacobi_check(c).ok());
}

TEST_CASE("jacobi holds on random vectors")
{
    Rng rng(23);
    for (const auto& [name, g] : algebra_library()) {
        for (int trial = 0; trial < 5; ++trial) {
            Vec a = rng.vec(g.dim()), b = rng.vec(g.dim()), c = rng.vec(g.dim());
            Vec s = add(add(bracket(g, a, bracket(g, b, c)), bracket(g, b, bracket(g, c, a))),
                        bracket(g, c, bracket(g, a, b)));
            CHECK(is_zero(s));
        }
    }
}

TEST_CASE("is_subalgebra")
{
    LieAlgebra g = euc2();
    CHECK(is_subalgebra(g, Subspace::coordinate(3, {0})));
    CHECK(is_subalgebra(g, Subspace::zero(3)));
    CHECK(is_subalgebra(g, Subspace::full(3)));
    CHECK(is_subalgebra(g, Subspace::coordinate(3, {1, 2})));
    CHECK_FALSE(is_subalgebra(g, Subspace::coordinate(3, {0, 1})));
    auto w = subalgebra_witness(g, Subspace::coordinate(3, {0, 1}));
    REQUIRE(w);
    CHECK(bracket(g, w->first, w->second) == Vec{0, 0, -1});

    CHECK(generated_subalgebra(sl2(), {Vec{0, 1, 0}, Vec{0, 0, 1}}).is_full());
    CHECK_THROWS_AS(is_subalgebra(g, Subspace::zero(2)), DimensionMismatch);
}

TEST_CASE("direct sum")
{
    LieAlgebra s = direct_sum(sl2(), r2());
    CHECK(s.dim() == 5);
    CHECK(jacobi_check(s).ok());
    CHECK(bracket(s, unit_vec(5, 3), unit_vec(5, 4)) == unit_vec(5, 4));
    CHECK(is_zero(bracket(s, unit_vec(5, 0), unit_vec(5, 4))));
}
