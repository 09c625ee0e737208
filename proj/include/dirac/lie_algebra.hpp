#pragma once

#include "dirac/matrix.hpp"
#include "dirac/subspace.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dirac {

using Vector = Vec;    ///< coordinates over b_1..b_n
using Covector = Vec;  ///< coordinates over the dual basis b_1*..b_n*

/// Raw structure constants: c(i, j, k) is the b_k coefficient of [b_i, b_j].
class StructureTensor {
public:
    StructureTensor() = default;
    explicit StructureTensor(std::size_t n) : n_(n), c_(n * n * n) {}

    std::size_t dim() const { return n_; }
    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const
    {
        return c_[(i * n_ + j) * n_ + k];
    }

    /// Sets [b_i, b_j] = v and [b_j, b_i] = -v.
    void set_bracket(std::size_t i, std::size_t j, const Vec& v);

    /// First (i, j) with i <= j violating c[i][j][.] = -c[j][i][.].
    std::optional<std::pair<std::size_t, std::size_t>> antisymmetry_violation() const;

    friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Scalar> c_;
};

/// sum_ijk a_i b_j t(i, j, k) e_k
Vec apply_bilinear(const StructureTensor& t, const Vec& a, const Vec& b);

/// Finite-dimensional Lie algebra over Q or Q(i) in a fixed basis.
///
/// Construction enforces antisymmetry of the structure constants; the Jacobi
/// identity is left to jacobi_check so that invalid inputs can be diagnosed.
class LieAlgebra {
public:
    LieAlgebra(Field field, StructureTensor structure, std::vector<std::string> basis_names = {});

    static LieAlgebra abelian(std::size_t n, Field field = Field::Q);

    Field field() const { return field_; }
    std::size_t dim() const { return c_.dim(); }
    const StructureTensor& structure() const { return c_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    /// Basis vector b_k (0-based).
    Vector basis(std::size_t k) const { return unit_vec(dim(), k); }

    /// Matrix of ad(A); column j holds [A, b_j].
    Matrix ad(const Vector& a) const;

    friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
    Field field_;
    StructureTensor c_;
    std::vector<std::string> names_;
};

struct JacobiViolation {
    std::size_t i, j, k;  // 0-based, i < j < k
    Vector defect;
};

struct JacobiReport {
    std::vector<JacobiViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Throws AntisymmetryViolation before looking at Jacobi.
JacobiReport jacobi_check(const StructureTensor& c);
JacobiReport jacobi_check(const LieAlgebra& g);

Vector bracket(const LieAlgebra& g, const Vector& a, const Vector& b);

/// (ad*_A xi)(C) = -xi([A, C]).
Covector coadjoint(const LieAlgebra& g, const Vector& a, const Covector& xi);

/// B[i][j] = trace(ad(b_i) ad(b_j)).
Matrix killing_form(const LieAlgebra& g);

LieAlgebra complexify(const LieAlgebra& g);

/// Checks closure on basis pairs; bilinearity makes that sufficient.
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);

/// First basis pair (u, v) of s with [u, v] outside s.
std::optional<std::pair<Vector, Vector>> subalgebra_witness(const LieAlgebra& g, const Subspace& s);

/// Smallest subalgebra containing the given vectors.
Subspace generated_subalgebra(const LieAlgebra& g, const std::vector<Vector>& gens);

/// Direct sum g + h with block-diagonal structure constants.
LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h);

}  // namespace dirac
