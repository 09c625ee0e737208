#include "dirac/lie_algebra.hpp"

#include "dirac/errors.hpp"

namespace dirac {

void StructureTensor::set_bracket(std::size_t i, std::size_t j, const Vec& v)
{
    if (v.size() != n_)
        throw DimensionMismatch(n_, v.size(), "set_bracket");
    for (std::size_t k = 0; k < n_; ++k) {
        (*this)(i, j, k) = v[k];
        (*this)(j, i, k) = -v[k];
    }
}

std::optional<std::pair<std::size_t, std::size_t>> StructureTensor::antisymmetry_violation() const
{
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k)
                if ((*this)(i, j, k) != -(*this)(j, i, k))
                    return std::pair{i, j};
    return std::nullopt;
}

LieAlgebra::LieAlgebra(Field field, StructureTensor structure, std::vector<std::string> basis_names)
    : field_(field), c_(std::move(structure)), names_(std::move(basis_names))
{
    if (dim() == 0)
        throw InvalidModel("LieAlgebra: dimension must be positive");
    if (!names_.empty() && names_.size() != dim())
        throw DimensionMismatch(dim(), names_.size(), "LieAlgebra basis_names");
    if (auto bad = c_.antisymmetry_violation())
        throw AntisymmetryViolation(bad->first, bad->second, "LieAlgebra");
    if (field_ == Field::Q)
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j)
                for (std::size_t k = 0; k < dim(); ++k)
                    if (!c_(i, j, k).is_real())
                        throw FieldMismatch("LieAlgebra: non-real structure constant over Q");
}

LieAlgebra LieAlgebra::abelian(std::size_t n, Field field)
{
    return LieAlgebra(field, StructureTensor(n));
}

Matrix LieAlgebra::ad(const Vector& a) const
{
    const std::size_t n = dim();
    if (a.size() != n)
        throw DimensionMismatch(n, a.size(), "ad");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!c_(i, j, k).is_zero())
                    m(k, j) += a[i] * c_(i, j, k);
    }
    return m;
}

Vector apply_bilinear(const StructureTensor& c, const Vector& a, const Vector& b)
{
    if (a.size() != c.dim())
        throw DimensionMismatch(c.dim(), a.size(), "apply_bilinear");
    if (b.size() != c.dim())
        throw DimensionMismatch(c.dim(), b.size(), "apply_bilinear");
    const std::size_t n = c.dim();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero())
                continue;
            Scalar ab = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!c(i, j, k).is_zero())
                    out[k] += ab * c(i, j, k);
        }
    }
    return out;
}

JacobiReport jacobi_check(const StructureTensor& c)
{
    if (auto bad = c.antisymmetry_violation())
        throw AntisymmetryViolation(bad->first, bad->second, "jacobi_check");
    const std::size_t n = c.dim();
    JacobiReport report;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector bi = unit_vec(n, i), bj = unit_vec(n, j), bk = unit_vec(n, k);
                Vector d = apply_bilinear(c, apply_bilinear(c, bi, bj), bk);
                d = add(d, apply_bilinear(c, apply_bilinear(c, bj, bk), bi));
                d = add(d, apply_bilinear(c, apply_bilinear(c, bk, bi), bj));
                if (!is_zero(d))
                    report.violations.push_back({i, j, k, std::move(d)});
            }
    return report;
}

JacobiReport jacobi_check(const LieAlgebra& g)
{
    return jacobi_check(g.structure());
}

Vector bracket(const LieAlgebra& g, const Vector& a, const Vector& b)
{
    if (a.size() != g.dim())
        throw DimensionMismatch(g.dim(), a.size(), "bracket");
    if (b.size() != g.dim())
        throw DimensionMismatch(g.dim(), b.size(), "bracket");
    return apply_bilinear(g.structure(), a, b);
}

Covector coadjoint(const LieAlgebra& g, const Vector& a, const Covector& xi)
{
    if (xi.size() != g.dim())
        throw DimensionMismatch(g.dim(), xi.size(), "coadjoint");
    // (ad*_A xi)_j = -xi([A, b_j]) = -(ad(A)^T xi)_j
    Matrix adt = g.ad(a).transpose();
    return scale(Scalar(-1), adt.apply(xi));
}

Matrix killing_form(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    std::vector<Matrix> ads;
    ads.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        ads.push_back(g.ad(g.basis(i)));
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Scalar tr;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s)
                    if (!ads[i](r, s).is_zero() && !ads[j](s, r).is_zero())
                        tr += ads[i](r, s) * ads[j](s, r);
            b(i, j) = tr;
            b(j, i) = tr;
        }
    return b;
}

LieAlgebra complexify(const LieAlgebra& g)
{
    return LieAlgebra(Field::Qi, g.structure(), g.basis_names());
}

std::optional<std::pair<Vector, Vector>> subalgebra_witness(const LieAlgebra& g, const Subspace& s)
{
    if (s.ambient_dim() != g.dim())
        throw DimensionMismatch(g.dim(), s.ambient_dim(), "is_subalgebra");
    auto basis = s.basis_vectors();
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            if (!s.contains(bracket(g, basis[a], basis[b])))
                return std::pair{basis[a], basis[b]};
    return std::nullopt;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s)
{
    return !subalgebra_witness(g, s).has_value();
}

Subspace generated_subalgebra(const LieAlgebra& g, const std::vector<Vector>& gens)
{
    Subspace s = Subspace::span(g.dim(), gens);
    while (true) {
        auto basis = s.basis_vectors();
        std::vector<Vector> grown = basis;
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = a + 1; b < basis.size(); ++b)
                grown.push_back(bracket(g, basis[a], basis[b]));
        Subspace next = Subspace::span(g.dim(), grown);
        if (next.dim() == s.dim())
            return next;
        s = std::move(next);
    }
}

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h)
{
    const std::size_t n = g.dim(), m = h.dim();
    StructureTensor c(n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                c(i, j, k) = g.structure()(i, j, k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                c(n + i, n + j, n + k) = h.structure()(i, j, k);
    Field f = (g.field() == Field::Qi || h.field() == Field::Qi) ? Field::Qi : Field::Q;
    std::vector<std::string> names;
    if (!g.basis_names().empty() && !h.basis_names().empty()) {
        names = g.basis_names();
        names.insert(names.end(), h.basis_names().begin(), h.basis_names().end());
    }
    return LieAlgebra(f, std::move(c), std::move(names));
}

}  // namespace dirac
