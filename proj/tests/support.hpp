#pragma once

// Shared algebras, oracles and random generators for the test binaries.

#include "dirac/curvature.hpp"
#include "dirac/double.hpp"
#include "dirac/isotropic.hpp"
#include "dirac/lie_algebra.hpp"

#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace support {

using namespace dirac;

struct Entry {
    std::size_t i, j;  // 1-based, as in problem files
    std::vector<Scalar> coeffs;
};

inline LieAlgebra algebra(std::size_t n, const std::vector<Entry>& entries, std::vector<std::string> names = {},
                          Field field = Field::Q)
{
    StructureTensor t(n);
    for (const auto& e : entries)
        t.set_bracket(e.i - 1, e.j - 1, e.coeffs);
    return LieAlgebra(field, t, std::move(names));
}

inline Vec v(std::initializer_list<Scalar> xs)
{
    return Vec(xs);
}

inline LieAlgebra euc2()
{
    return algebra(3, {{1, 2, {0, 0, -1}}, {1, 3, {0, 1, 0}}}, {"e1", "e2", "e3"});
}

// basis H, X, Y
inline LieAlgebra sl2()
{
    return algebra(3, {{1, 2, {0, 2, 0}}, {1, 3, {0, 0, -2}}, {2, 3, {1, 0, 0}}}, {"H", "X", "Y"});
}

inline LieAlgebra so3()
{
    return algebra(3, {{1, 2, {0, 0, 1}}, {2, 3, {1, 0, 0}}, {3, 1, {0, 1, 0}}});
}

inline LieAlgebra heisenberg3()
{
    return algebra(3, {{1, 2, {0, 0, 1}}});
}

inline LieAlgebra heisenberg5()
{
    return algebra(5, {{1, 2, {0, 0, 0, 0, 1}}, {3, 4, {0, 0, 0, 0, 1}}});
}

// non-abelian 2-dimensional: [e1, e2] = e2
inline LieAlgebra r2()
{
    return algebra(2, {{1, 2, {0, 1}}});
}

// [e1, e2] = e2, [e1, e3] = lambda e3
inline LieAlgebra r3(const Scalar& lambda)
{
    return algebra(3, {{1, 2, {0, 1, 0}}, {1, 3, {0, 0, lambda}}});
}

inline LieAlgebra filiform4()
{
    return algebra(4, {{1, 2, {0, 0, 1, 0}}, {1, 3, {0, 0, 0, 1}}});
}

// H, X, Y, I
inline LieAlgebra gl2()
{
    return algebra(4, {{1, 2, {0, 2, 0, 0}}, {1, 3, {0, 0, -2, 0}}, {2, 3, {1, 0, 0, 0}}});
}

/// Integer 3x3 matrices, used as an independent commutator oracle.
using Mat3 = std::array<std::array<long, 3>, 3>;

inline Mat3 matmul(const Mat3& a, const Mat3& b)
{
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline Mat3 commutator(const Mat3& a, const Mat3& b)
{
    Mat3 ab = matmul(a, b), ba = matmul(b, a), c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            c[i][j] = ab[i][j] - ba[i][j];
    return c;
}

inline Mat3 unit3(int i, int j)
{
    Mat3 m{};
    m[i][j] = 1;
    return m;
}

/// sl3 basis ordered by degree of the |2|-grading:
/// E31 | E21, E32 | H1 = E11 - E22, H2 = E22 - E33 | E12, E23 | E13.
inline std::vector<Mat3> sl3_matrices()
{
    Mat3 h1 = unit3(0, 0), h2 = unit3(1, 1);
    h1[1][1] = -1;
    h2[2][2] = -1;
    return {unit3(2, 0), unit3(1, 0), unit3(2, 1), h1, h2, unit3(0, 1), unit3(1, 2), unit3(0, 2)};
}

/// Coordinates of a traceless matrix over sl3_matrices().
inline Vec sl3_coords(const Mat3& m)
{
    // off-diagonal entries read directly; diagonal diag(a, b, c) = a H1 + (a + b) H2
    return {m[2][0], m[1][0], m[2][1], m[0][0], m[0][0] + m[1][1], m[0][1], m[1][2], m[0][2]};
}

/// Structure constants built from matrix commutators.
inline LieAlgebra sl3()
{
    auto basis = sl3_matrices();
    StructureTensor t(8);
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = a + 1; b < 8; ++b)
            t.set_bracket(a, b, sl3_coords(commutator(basis[a], basis[b])));
    return LieAlgebra(Field::Q, t, {"E31", "E21", "E32", "H1", "H2", "E12", "E23", "E13"});
}

/// Library for randomized tests: every entry has dimension at most 5.
inline std::vector<std::pair<std::string, LieAlgebra>> algebra_library()
{
    return {
        {"abelian1", LieAlgebra::abelian(1)},
        {"abelian2", LieAlgebra::abelian(2)},
        {"abelian3", LieAlgebra::abelian(3)},
        {"abelian4", LieAlgebra::abelian(4)},
        {"r2", r2()},
        {"euc2", euc2()},
        {"sl2", sl2()},
        {"so3", so3()},
        {"heis3", heisenberg3()},
        {"r3(-1)", r3(-1)},
        {"r3(2)", r3(2)},
        {"r3(1/2)", r3(Scalar::frac(1, 2))},
        {"filiform4", filiform4()},
        {"gl2", gl2()},
        {"r2+r2", direct_sum(r2(), r2())},
        {"heis5", heisenberg5()},
        {"sl2+r2", direct_sum(sl2(), r2())},
        {"euc2+abelian2", direct_sum(euc2(), LieAlgebra::abelian(2))},
    };
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

    /// Small rational, zero with probability ~1/3.
    Scalar rational()
    {
        if (coin(1.0 / 3))
            return Scalar(0);
        return Scalar::frac(integer(-3, 3), integer(1, 3));
    }

    Scalar scalar(bool complex) { return complex ? Scalar(rational().re(), rational().re()) : rational(); }

    Vec vec(std::size_t n, bool complex = false)
    {
        Vec out(n);
        for (auto& x : out)
            x = scalar(complex);
        return out;
    }

    Matrix antisymmetric(std::size_t k, bool complex = false)
    {
        Matrix m(k, k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b) {
                m(a, b) = scalar(complex);
                m(b, a) = -m(a, b);
            }
        return m;
    }

    /// Subalgebra generated by up to `gens` random vectors.
    Subspace subalgebra(const LieAlgebra& g, std::size_t gens, bool complex = false)
    {
        std::vector<Vec> vs;
        for (std::size_t k = 0; k < gens; ++k)
            vs.push_back(vec(g.dim(), complex));
        return generated_subalgebra(g, vs);
    }

    Subspace subspace(std::size_t n, std::size_t gens, bool complex = false)
    {
        std::vector<Vec> vs;
        for (std::size_t k = 0; k < gens; ++k)
            vs.push_back(vec(n, complex));
        return Subspace::span(n, vs);
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

/// Maximal isotropic built without build_L: graph of an antisymmetric
/// beta: g* -> g, followed by swapping e_k with e_k* on a random set of
/// coordinates (an isometry of the split pairing).
inline DoubleSubspace swapped_graph(Rng& rng, std::size_t n, bool complex)
{
    Matrix beta = rng.antisymmetric(n, complex);
    std::vector<bool> swap(n);
    for (std::size_t k = 0; k < n; ++k)
        swap[k] = rng.coin();
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < n; ++k) {
        Vec x(2 * n);
        for (std::size_t a = 0; a < n; ++a)
            x[a] = beta(a, k);
        x[n + k] = 1;
        for (std::size_t a = 0; a < n; ++a)
            if (swap[a])
                std::swap(x[a], x[n + a]);
        rows.push_back(std::move(x));
    }
    return Subspace::span(2 * n, rows);
}

/// Horizontal curvature with image in `target`: sum over pairs of
/// annihilator covectors phi_a ^ phi_b times a random vector of `target`.
inline CurvatureTensor horizontal_kappa(Rng& rng, const Subspace& p, const Subspace& target)
{
    const std::size_t n = p.ambient_dim();
    auto phis = p.annihilator().basis_vectors();
    auto tb = target.basis_vectors();
    CurvatureTensor t(n);
    for (std::size_t a = 0; a < phis.size(); ++a)
        for (std::size_t b = a + 1; b < phis.size(); ++b) {
            Vec w(n);
            for (const auto& u : tb)
                w = add(w, scale(rng.rational(), u));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Scalar f = phis[a][i] * phis[b][j] - phis[b][i] * phis[a][j];
                    if (f.is_zero())
                        continue;
                    for (std::size_t k = 0; k < n; ++k)
                        t(i, j, k) += f * w[k];
                }
        }
    return t;
}

/// Kernel of (M - lambda I), computed by the library's solver.
inline Subspace eigenspace(const Matrix& m, const Scalar& lambda)
{
    Matrix shifted = m - lambda * Matrix::identity(m.rows());
    return Subspace::span(m.rows(), shifted.kernel());
}

}  // namespace support
