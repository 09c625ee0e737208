#include "dirac/double.hpp"

#include "dirac/errors.hpp"

namespace dirac {

DoubleElement DoubleElement::from_coords(std::size_t n, std::span<const Scalar> coords)
{
    if (coords.size() != 2 * n)
        throw DimensionMismatch(2 * n, coords.size(), "DoubleElement");
    return {Vector(coords.begin(), coords.begin() + n), Covector(coords.begin() + n, coords.end())};
}

DoubleElement DoubleElement::pure_vector(Vector a)
{
    Covector zero(a.size());
    return {std::move(a), std::move(zero)};
}

DoubleElement DoubleElement::pure_covector(Covector xi)
{
    Vector zero(xi.size());
    return {std::move(zero), std::move(xi)};
}

DoubleElement operator+(const DoubleElement& a, const DoubleElement& b)
{
    return {add(a.vec, b.vec), add(a.covec, b.covec)};
}

DoubleElement operator-(const DoubleElement& a, const DoubleElement& b)
{
    return {sub(a.vec, b.vec), sub(a.covec, b.covec)};
}

DoubleElement operator*(const Scalar& s, const DoubleElement& a)
{
    return {scale(s, a.vec), scale(s, a.covec)};
}

namespace {

std::size_t half_dim(const DoubleSubspace& d, const char* where)
{
    if (d.ambient_dim() % 2 != 0)
        throw DimensionMismatch(d.ambient_dim() + 1, d.ambient_dim(), where);
    return d.ambient_dim() / 2;
}

}  // namespace

std::vector<DoubleElement> elements(const DoubleSubspace& d)
{
    const std::size_t n = half_dim(d, "elements");
    std::vector<DoubleElement> out;
    out.reserve(d.dim());
    for (std::size_t r = 0; r < d.dim(); ++r)
        out.push_back(DoubleElement::from_coords(n, d.basis().row(r)));
    return out;
}

DoubleSubspace embed_vectors(const Subspace& s)
{
    const std::size_t n = s.ambient_dim();
    std::vector<Vec> vs;
    for (const auto& v : s.basis_vectors())
        vs.push_back(concat(v, Vec(n)));
    return Subspace::span(2 * n, vs);
}

DoubleSubspace embed_covectors(const Subspace& s)
{
    const std::size_t n = s.ambient_dim();
    std::vector<Vec> vs;
    for (const auto& v : s.basis_vectors())
        vs.push_back(concat(Vec(n), v));
    return Subspace::span(2 * n, vs);
}

DoubleSubspace g_part(std::size_t n)
{
    return embed_vectors(Subspace::full(n));
}

DoubleSubspace dual_part(std::size_t n)
{
    return embed_covectors(Subspace::full(n));
}

Subspace project_to_g(const DoubleSubspace& d)
{
    const std::size_t n = half_dim(d, "project_to_g");
    std::vector<Vec> vs;
    for (const auto& e : elements(d))
        vs.push_back(e.vec);
    return Subspace::span(n, vs);
}

Scalar pairing(const DoubleElement& x, const DoubleElement& y)
{
    if (x.vec.size() != y.vec.size() || x.covec.size() != x.vec.size() || y.covec.size() != y.vec.size())
        throw DimensionMismatch(x.vec.size(), y.vec.size(), "pairing");
    return dot(y.covec, x.vec) + dot(x.covec, y.vec);
}

DoubleElement semidirect_bracket(const LieAlgebra& g, const DoubleElement& x, const DoubleElement& y)
{
    for (const auto* v : {&x.vec, &x.covec, &y.vec, &y.covec})
        if (v->size() != g.dim())
            throw DimensionMismatch(g.dim(), v->size(), "semidirect_bracket");
    return {bracket(g, x.vec, y.vec), sub(coadjoint(g, x.vec, y.covec), coadjoint(g, y.vec, x.covec))};
}

Matrix pairing_matrix(std::size_t n)
{
    Matrix m(2 * n, 2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        m(k, n + k) = 1;
        m(n + k, k) = 1;
    }
    return m;
}

bool is_isotropic(const DoubleSubspace& d)
{
    auto es = elements(d);
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a; b < es.size(); ++b)
            if (!pairing(es[a], es[b]).is_zero())
                return false;
    return true;
}

bool is_maximal_isotropic(const DoubleSubspace& d)
{
    return d.dim() == half_dim(d, "is_maximal_isotropic") && is_isotropic(d);
}

std::string_view to_string(DiracFailure f)
{
    switch (f) {
    case DiracFailure::None: return "none";
    case DiracFailure::NotIsotropic: return "NotIsotropic";
    case DiracFailure::NotMaximal: return "NotMaximal";
    case DiracFailure::NotClosed: return "NotClosed";
    }
    return "?";
}

DiracVerdict is_dirac_subalgebra(const LieAlgebra& g, const DoubleSubspace& d)
{
    if (d.ambient_dim() != 2 * g.dim())
        throw DimensionMismatch(2 * g.dim(), d.ambient_dim(), "is_dirac_subalgebra");
    if (!is_isotropic(d))
        return {DiracFailure::NotIsotropic, std::nullopt};
    if (d.dim() != g.dim())
        return {DiracFailure::NotMaximal, std::nullopt};
    auto es = elements(d);
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            DoubleElement br = semidirect_bracket(g, es[a], es[b]);
            if (!d.contains(br.coords()))
                return {DiracFailure::NotClosed, ClosureWitness{es[a], es[b], std::move(br)}};
        }
    return {};
}

std::size_t real_index(const DoubleSubspace& d)
{
    if (!is_maximal_isotropic(d))
        throw NotMaximalIsotropic("real_index: subspace is not maximal isotropic");
    return intersect(d, d.conjugate()).dim();
}

Matrix construct_J(const DoubleSubspace& d)
{
    if (!is_maximal_isotropic(d))
        throw NotMaximalIsotropic("construct_J: subspace is not maximal isotropic");
    if (std::size_t r = real_index(d); r != 0)
        throw NonzeroRealIndex(r);
    const std::size_t m = d.ambient_dim();
    // columns: basis of D then of conj(D); J = P diag(i.., -i..) P^-1
    std::vector<Vec> cols = d.basis_vectors();
    for (const auto& v : d.basis_vectors())
        cols.push_back(conj(v));
    Matrix p = Matrix::from_columns(m, cols);
    auto p_inv = p.inverse();
    if (!p_inv)
        throw Error("construct_J: D + conj(D) does not span the double");
    Matrix eig(m, m);
    for (std::size_t k = 0; k < m; ++k)
        eig(k, k) = k < d.dim() ? Scalar::i() : -Scalar::i();
    Matrix j = p * eig * *p_inv;
    if (!j.is_real())
        throw NonRealOutput("construct_J: resulting endomorphism is not real");

    Matrix id = Matrix::identity(m);
    if (!(j * j + id).is_zero())
        throw Error("construct_J: J^2 != -1");
    Matrix gram = pairing_matrix(m / 2);
    if (j.transpose() * gram * j != gram)
        throw Error("construct_J: J is not orthogonal");
    return j;
}

}  // namespace dirac
