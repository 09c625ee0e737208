#pragma once

#include "dirac/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace dirac {

/// Linear subspace of a coordinate space, stored canonically.
///
/// The basis is kept in reduced row-echelon form with leading 1s and no zero
/// rows, so two subspaces are equal exactly when their basis matrices are.
/// A vector lying in the subspace has coordinates (in the stored basis) equal
/// to its entries at the pivot columns.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    /// Coordinate subspace spanned by the listed unit vectors.
    static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& axes);

    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim(); }

    const Matrix& basis() const { return basis_; }
    std::vector<Vec> basis_vectors() const { return basis_.row_list(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(std::span<const Scalar> v) const;
    /// Coordinates of v in the canonical basis; v must lie in the subspace.
    Vec coordinates(std::span<const Scalar> v) const;

    /// {a : a(x) = 0 for all x in this}, as a subspace of the same coordinate
    /// space read as covectors.
    Subspace annihilator() const;

    Subspace conjugate() const;
    bool is_real() const { return basis_.is_real(); }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.basis_.cols() == b.basis_.cols() && a.basis_ == b.basis_;
    }

private:
    explicit Subspace(Matrix canonical, std::vector<std::size_t> pivots)
        : basis_(std::move(canonical)), pivots_(std::move(pivots))
    {
    }
    static Subspace from_matrix(Matrix m);

    Matrix basis_{0, 0};
    std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& s, const Subspace& t);
Subspace sum(const Subspace& s, const Subspace& t);
bool subspace_leq(const Subspace& s, const Subspace& t);
inline bool contains(const Subspace& s, std::span<const Scalar> v) { return s.contains(v); }
inline Subspace conjugate(const Subspace& s) { return s.conjugate(); }

}  // namespace dirac
