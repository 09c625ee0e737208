#include "doctest.h"
#include "support.hpp"

#include "dirac/errors.hpp"

using namespace dirac;
using namespace support;

namespace {

DoubleSubspace euc2_D()
{
    return Subspace::span(6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, -1}, {0, 0, 1, 0, 1, 0}});
}

Matrix form3(const Scalar& e12, const Scalar& e13, const Scalar& e23)
{
    Matrix m(3, 3);
    m(0, 1) = e12;
    m(0, 2) = e13;
    m(1, 2) = e23;
    m(1, 0) = -e12;
    m(2, 0) = -e13;
    m(2, 1) = -e23;
    return m;
}

}  // namespace

TEST_CASE("IsotropicPair construction")
{
    CHECK_THROWS(IsotropicPair(Subspace::full(2), Matrix::from_rows(2, {{0, 1}, {1, 0}})));
    CHECK_THROWS(IsotropicPair(Subspace::full(2), Matrix(3, 3)));

    // eps given over the basis (e1 + e2, e2) is re-expressed over (e1, e2)
    Matrix eps(2, 2);
    eps(0, 1) = 1;
    eps(1, 0) = -1;
    IsotropicPair p = IsotropicPair::from_basis(2, {{1, 1}, {0, 1}}, eps);
    CHECK(p.E().is_full());
    CHECK(p.eval(Vec{1, 1}, Vec{0, 1}) == Scalar(1));
    CHECK(p.eps()(0, 1) == Scalar(1));  // eps(e1, e2) = eps(e1 + e2, e2)
}

TEST_CASE("build_L")
{
    CHECK(build_L(IsotropicPair::zero_form(Subspace::full(3))) == g_part(3));
    CHECK(build_L(IsotropicPair::zero_form(Subspace::zero(3))) == dual_part(3));

    IsotropicPair example(Subspace::full(3), form3(0, 0, -1));
    CHECK(build_L(example) == euc2_D());

    IsotropicPair line = IsotropicPair::zero_form(Subspace::coordinate(2, {0}));
    CHECK(build_L(line) == Subspace::span(4, {{1, 0, 0, 0}, {0, 0, 0, 1}}));

    Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng.index(5);
        bool cx = rng.coin(0.4);
        Subspace e = rng.subspace(n, rng.index(n + 1), cx);
        IsotropicPair p(e, rng.antisymmetric(e.dim(), cx));
        DoubleSubspace d = build_L(p);
        CHECK(is_maximal_isotropic(d));
        CHECK(project_to_g(d) == e);
        // defining property: xi restricted to E equals i_X eps
        for (const auto& x : d.basis_vectors()) {
            auto el = DoubleElement::from_coords(n, x);
            if (!e.contains(el.vec))
                continue;
            Vec restricted;
            for (const auto& u : e.basis_vectors())
                restricted.push_back(dot(el.covec, u));
            CHECK(restricted == p.contract(el.vec));
        }
    }
}

TEST_CASE("decompose_L")
{
    IsotropicPair z = decompose_L(dual_part(3));
    CHECK(z.E().is_zero());
    CHECK(z.eps().rows() == 0);

    IsotropicPair example = decompose_L(euc2_D());
    CHECK(example.E().is_full());
    CHECK(example.eps() == form3(0, 0, -1));

    // graph of an antisymmetric beta: g* -> g
    Rng rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + rng.index(3);
        Matrix beta = rng.antisymmetric(n);
        std::vector<Vec> rows;
        for (std::size_t k = 0; k < n; ++k)
            rows.push_back(concat(beta.col_vec(k), unit_vec(n, k)));
        DoubleSubspace d = Subspace::span(2 * n, rows);
        CHECK(build_L(decompose_L(d)) == d);
    }
    CHECK_THROWS_AS(decompose_L(Subspace::span(4, {{1, 0, 1, 0}})), NotMaximalIsotropic);
}

TEST_CASE("d_E")
{
    Rng rng(8);
    for (const auto& [name, g] : algebra_library()) {
        Subspace e = rng.subalgebra(g, 3);
        CHECK(d_E(g, IsotropicPair::zero_form(e)).is_zero());
    }
    LieAlgebra ab = LieAlgebra::abelian(4);
    CHECK(d_E(ab, IsotropicPair(Subspace::full(4), rng.antisymmetric(4))).is_zero());

    // sl2, E = g, eps(H, X) = 1: cyclic sum on (H, X, Y) is
    // eps(H, [X, Y]) + eps(X, [Y, H]) + eps(Y, [H, X]) = eps(H, H) + eps(X, 2Y) + eps(Y, 2X) = 0
    LieAlgebra s = sl2();
    IsotropicPair p(Subspace::full(3), form3(1, 0, 0));
    ThreeForm cyc = d_E(s, p, DeConvention::Cyclic);
    CHECK(cyc(0, 1, 2) == Scalar(0));
    // printed: eps(H, [X, Y]) + eps(X, [H, Y]) + eps(Y, [H, X]) = 0 + eps(X, -2Y) + eps(Y, 2X) = 0
    CHECK(d_E(s, p)(0, 1, 2) == Scalar(0));
    // eps(X, Y) = 1: cyclic gives eps(H, H) + eps(X, 2Y) + eps(Y, 2X) = 2 - 2 = 0;
    // printed gives eps(X, -2Y) + eps(Y, 2X) = -2 - 2 = -4
    IsotropicPair q(Subspace::full(3), form3(0, 0, 1));
    CHECK(d_E(s, q, DeConvention::Cyclic)(0, 1, 2) == Scalar(0));
    CHECK(d_E(s, q, DeConvention::AsPrinted)(0, 1, 2) == Scalar(-4));

    CHECK_THROWS_AS(d_E(s, IsotropicPair::zero_form(Subspace::coordinate(3, {1, 2}))), NotSubalgebra);
}

TEST_CASE("check_integrable_LE")
{
    LieAlgebra g = euc2();
    CHECK(check_integrable_LE(g, IsotropicPair(Subspace::full(3), form3(0, 0, -1))).yes());
    for (const auto& [name, h] : algebra_library())
        CHECK(check_integrable_LE(h, IsotropicPair::zero_form(Subspace::full(h.dim()))).yes());

    IntegrabilityVerdict v = check_integrable_LE(sl2(), IsotropicPair::zero_form(Subspace::coordinate(3, {1, 2})));
    CHECK(v.reason == IntegrabilityFailure::NotSubalgebra);
    REQUIRE(v.escaping_pair);
    CHECK(bracket(sl2(), v.escaping_pair->first, v.escaping_pair->second) == Vec{1, 0, 0});

    // r3(1) with eps(e2, e3) = 1: gives d eps(e1, e2, e3) = eps(e1, [e2, e3]) + eps(e2, [e3, e1]) + eps(e3, [e1, e2])
    // = 0 + eps(e2, -e3) + eps(e3, e2) = -2
    IntegrabilityVerdict w = check_integrable_LE(r3(1), IsotropicPair(Subspace::full(3), form3(0, 0, 1)));
    CHECK(w.reason == IntegrabilityFailure::NonzeroDE);
    REQUIRE(w.triple);
    CHECK(w.value == Scalar(-2));
    CHECK_FALSE(is_dirac_subalgebra(r3(1), build_L(IsotropicPair(Subspace::full(3), form3(0, 0, 1)))).yes());
}

TEST_CASE("contains_p")
{
    Subspace p = Subspace::coordinate(3, {0});
    CHECK(contains_p(IsotropicPair(Subspace::full(3), form3(0, 0, -1)), p).yes());
    Rng rng(10);
    for (int trial = 0; trial < 20; ++trial)
        CHECK(contains_p(IsotropicPair(Subspace::full(3), rng.antisymmetric(3)), Subspace::zero(3)).yes());

    ContainsPVerdict v = contains_p(IsotropicPair(Subspace::full(3), form3(1, 0, 0)), p);
    CHECK(v.reason == ContainsPFailure::EpsSharpNonzeroOnP);
    REQUIRE(v.witness);
    CHECK(*v.witness == Vec{1, 0, 0});
    REQUIRE(v.contraction);
    CHECK(*v.contraction == Vec{0, 1, 0});

    ContainsPVerdict w = contains_p(IsotropicPair::zero_form(Subspace::coordinate(3, {1, 2})), p);
    CHECK(w.reason == ContainsPFailure::PNotInE);

    // agrees with p inside L(E, eps)
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng.index(4);
        Subspace e = rng.subspace(n, rng.index(n + 1));
        IsotropicPair pair(e, rng.antisymmetric(e.dim()));
        Subspace q = rng.coin() ? rng.subspace(n, rng.index(2)) : intersect(e, rng.subspace(n, 2));
        CHECK(contains_p(pair, q).yes() == subspace_leq(embed_vectors(q), build_L(pair)));
    }
}
