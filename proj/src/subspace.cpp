#include "dirac/subspace.hpp"

#include "dirac/errors.hpp"

namespace dirac {

Subspace Subspace::from_matrix(Matrix m)
{
    auto pivots = m.rref_in_place();
    Matrix trimmed(pivots.size(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            trimmed(r, c) = m(r, c);
    return Subspace(std::move(trimmed), std::move(pivots));
}

Subspace Subspace::zero(std::size_t ambient)
{
    return Subspace(Matrix(0, ambient), {});
}

Subspace Subspace::full(std::size_t ambient)
{
    std::vector<std::size_t> pivots(ambient);
    for (std::size_t k = 0; k < ambient; ++k)
        pivots[k] = k;
    return Subspace(Matrix::identity(ambient), std::move(pivots));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors)
{
    return from_matrix(Matrix::from_rows(ambient, vectors));
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& axes)
{
    std::vector<Vec> vs;
    for (auto a : axes) {
        if (a >= ambient)
            throw DimensionMismatch(ambient, a + 1, "Subspace::coordinate");
        vs.push_back(unit_vec(ambient, a));
    }
    return span(ambient, vs);
}

bool Subspace::contains(std::span<const Scalar> v) const
{
    if (v.size() != ambient_dim())
        throw DimensionMismatch(ambient_dim(), v.size(), "Subspace::contains");
    // v - sum_r v[pivot_r] * row_r must vanish
    Vec rest(v.begin(), v.end());
    for (std::size_t r = 0; r < dim(); ++r) {
        Scalar f = v[pivots_[r]];
        if (f.is_zero())
            continue;
        for (std::size_t c = 0; c < ambient_dim(); ++c)
            if (!basis_(r, c).is_zero())
                rest[c] -= f * basis_(r, c);
    }
    return dirac::is_zero(rest);
}

Vec Subspace::coordinates(std::span<const Scalar> v) const
{
    if (!contains(v))
        throw Error("Subspace::coordinates: vector not in subspace");
    Vec out(dim());
    for (std::size_t r = 0; r < dim(); ++r)
        out[r] = v[pivots_[r]];
    return out;
}

Subspace Subspace::annihilator() const
{
    return span(ambient_dim(), basis_.kernel());
}

Subspace Subspace::conjugate() const
{
    return from_matrix(basis_.conj());
}

Subspace intersect(const Subspace& s, const Subspace& t)
{
    if (s.ambient_dim() != t.ambient_dim())
        throw DimensionMismatch(s.ambient_dim(), t.ambient_dim(), "intersect");
    const std::size_t m = s.ambient_dim();
    // (a, b) with a^T S = b^T T  <=>  [S^T | -T^T] (a; b) = 0
    Matrix stacked(m, s.dim() + t.dim());
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t r = 0; r < s.dim(); ++r)
            stacked(c, r) = s.basis()(r, c);
        for (std::size_t r = 0; r < t.dim(); ++r)
            stacked(c, s.dim() + r) = -t.basis()(r, c);
    }
    std::vector<Vec> vectors;
    for (const auto& k : stacked.kernel()) {
        Vec v(m);
        for (std::size_t r = 0; r < s.dim(); ++r)
            if (!k[r].is_zero())
                for (std::size_t c = 0; c < m; ++c)
                    v[c] += k[r] * s.basis()(r, c);
        vectors.push_back(std::move(v));
    }
    return Subspace::span(m, vectors);
}

Subspace sum(const Subspace& s, const Subspace& t)
{
    if (s.ambient_dim() != t.ambient_dim())
        throw DimensionMismatch(s.ambient_dim(), t.ambient_dim(), "sum");
    auto vs = s.basis_vectors();
    for (auto& v : t.basis_vectors())
        vs.push_back(std::move(v));
    return Subspace::span(s.ambient_dim(), vs);
}

bool subspace_leq(const Subspace& s, const Subspace& t)
{
    if (s.ambient_dim() != t.ambient_dim())
        throw DimensionMismatch(s.ambient_dim(), t.ambient_dim(), "subspace_leq");
    for (std::size_t r = 0; r < s.dim(); ++r)
        if (!t.contains(s.basis().row(r)))
            return false;
    return true;
}

}  // namespace dirac
