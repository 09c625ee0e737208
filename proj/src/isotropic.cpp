#include "dirac/isotropic.hpp"

#include "dirac/errors.hpp"

namespace dirac {

IsotropicPair::IsotropicPair(Subspace e, Matrix eps) : e_(std::move(e)), eps_(std::move(eps))
{
    const std::size_t k = e_.dim();
    if (eps_.rows() != k || eps_.cols() != k)
        throw DimensionMismatch(k, eps_.rows(), "IsotropicPair eps");
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b)
            if (eps_(a, b) != -eps_(b, a))
                throw AntisymmetryViolation(a, b, "IsotropicPair eps");
}

IsotropicPair IsotropicPair::from_basis(std::size_t n, const std::vector<Vector>& e_basis, const Matrix& eps)
{
    Subspace e = Subspace::span(n, e_basis);
    if (e.dim() != e_basis.size())
        throw InvalidModel("IsotropicPair: E vectors are linearly dependent");
    // user vector v_a = sum_r T(a, r) u_r, so eps_user = T eps_canon T^T
    Matrix t(e.dim(), e.dim());
    for (std::size_t a = 0; a < e_basis.size(); ++a) {
        Vec c = e.coordinates(e_basis[a]);
        for (std::size_t r = 0; r < c.size(); ++r)
            t(a, r) = c[r];
    }
    auto t_inv = t.inverse();
    if (eps.rows() != e.dim() || eps.cols() != e.dim())
        throw DimensionMismatch(e.dim(), eps.rows(), "IsotropicPair eps");
    return IsotropicPair(e, *t_inv * eps * t_inv->transpose());
}

IsotropicPair IsotropicPair::zero_form(Subspace e)
{
    const std::size_t k = e.dim();
    return IsotropicPair(std::move(e), Matrix(k, k));
}

Scalar IsotropicPair::eval(const Vector& x, const Vector& y) const
{
    Vec cx = e_.coordinates(x);
    Vec cy = e_.coordinates(y);
    return dot(cx, eps_.apply(cy));
}

Vec IsotropicPair::contract(const Vector& x) const
{
    return eps_.transpose().apply(e_.coordinates(x));
}

Covector IsotropicPair::contract_extended(const Vector& x) const
{
    // the a-th canonical basis vector has a 1 at pivot a and 0 at other pivots
    Vec on_e = contract(x);
    Covector xi(ambient_dim());
    for (std::size_t a = 0; a < on_e.size(); ++a)
        xi[e_.pivots()[a]] = on_e[a];
    return xi;
}

DoubleSubspace build_L(const IsotropicPair& p)
{
    const std::size_t n = p.ambient_dim();
    std::vector<Vec> rows;
    for (const auto& u : p.E().basis_vectors())
        rows.push_back(concat(u, p.contract_extended(u)));
    for (const auto& a : p.E().annihilator().basis_vectors())
        rows.push_back(concat(Vec(n), a));
    return Subspace::span(2 * n, rows);
}

IsotropicPair decompose_L(const DoubleSubspace& d)
{
    if (!is_maximal_isotropic(d))
        throw NotMaximalIsotropic("decompose_L: subspace is not maximal isotropic");
    const std::size_t n = d.ambient_dim() / 2;
    // Rows of the canonical basis with a pivot in the g-part have g-parts
    // forming the canonical basis of pr_g(D).
    std::vector<Vector> e_rows;
    std::vector<Covector> xi_rows;
    for (const auto& el : elements(d)) {
        if (is_zero(el.vec))
            continue;
        e_rows.push_back(el.vec);
        xi_rows.push_back(el.covec);
    }
    Subspace e = Subspace::span(n, e_rows);
    if (e.basis_vectors() != e_rows)
        throw Error("decompose_L: projection basis is not canonical");
    const std::size_t k = e.dim();
    Matrix eps(k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            eps(a, b) = dot(xi_rows[a], e_rows[b]);
    return IsotropicPair(std::move(e), std::move(eps));
}

namespace {

Scalar eps_of_bracket(const LieAlgebra& g, const IsotropicPair& p, const Vector& x, const Vector& y, const Vector& z)
{
    return p.eval(x, bracket(g, y, z));
}

void require_subalgebra(const LieAlgebra& g, const Subspace& e)
{
    if (auto w = subalgebra_witness(g, e))
        throw NotSubalgebra("E is not a subalgebra: bracket of a basis pair escapes E");
}

}  // namespace

ThreeForm d_E(const LieAlgebra& g, const IsotropicPair& p, DeConvention conv)
{
    if (p.ambient_dim() != g.dim())
        throw DimensionMismatch(g.dim(), p.ambient_dim(), "d_E");
    require_subalgebra(g, p.E());
    auto u = p.E().basis_vectors();
    const std::size_t k = u.size();
    ThreeForm out{k, std::vector<Scalar>(k * k * k)};
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c) {
                Scalar v = eps_of_bracket(g, p, u[a], u[b], u[c]) + eps_of_bracket(g, p, u[c], u[a], u[b]);
                if (conv == DeConvention::AsPrinted)
                    v += eps_of_bracket(g, p, u[b], u[a], u[c]);
                else
                    v += eps_of_bracket(g, p, u[b], u[c], u[a]);
                out.values[(a * k + b) * k + c] = v;
            }
    return out;
}

std::string_view to_string(IntegrabilityFailure f)
{
    switch (f) {
    case IntegrabilityFailure::None: return "none";
    case IntegrabilityFailure::NotSubalgebra: return "NotSubalgebra";
    case IntegrabilityFailure::NonzeroDE: return "NonzeroDE";
    }
    return "?";
}

IntegrabilityVerdict check_integrable_LE(const LieAlgebra& g, const IsotropicPair& p)
{
    if (p.ambient_dim() != g.dim())
        throw DimensionMismatch(g.dim(), p.ambient_dim(), "check_integrable_LE");
    IntegrabilityVerdict v;
    if (auto w = subalgebra_witness(g, p.E())) {
        v.reason = IntegrabilityFailure::NotSubalgebra;
        v.escaping_pair = std::move(w);
        return v;
    }
    ThreeForm d = d_E(g, p, DeConvention::Cyclic);
    for (std::size_t a = 0; a < d.k; ++a)
        for (std::size_t b = a + 1; b < d.k; ++b)
            for (std::size_t c = b + 1; c < d.k; ++c)
                if (!d(a, b, c).is_zero()) {
                    v.reason = IntegrabilityFailure::NonzeroDE;
                    v.triple = std::array{a, b, c};
                    v.value = d(a, b, c);
                    return v;
                }
    return v;
}

std::string_view to_string(ContainsPFailure f)
{
    switch (f) {
    case ContainsPFailure::None: return "none";
    case ContainsPFailure::PNotInE: return "PNotInE";
    case ContainsPFailure::EpsSharpNonzeroOnP: return "EpsSharpNonzeroOnP";
    }
    return "?";
}

ContainsPVerdict contains_p(const IsotropicPair& pair, const Subspace& p)
{
    if (p.ambient_dim() != pair.ambient_dim())
        throw DimensionMismatch(pair.ambient_dim(), p.ambient_dim(), "contains_p");
    ContainsPVerdict v;
    for (const auto& x : p.basis_vectors())
        if (!pair.E().contains(x)) {
            v.reason = ContainsPFailure::PNotInE;
            v.witness = x;
            return v;
        }
    for (const auto& x : p.basis_vectors())
        if (!is_zero(pair.contract(x))) {
            v.reason = ContainsPFailure::EpsSharpNonzeroOnP;
            v.witness = x;
            v.contraction = pair.contract_extended(x);
            return v;
        }
    return v;
}

}  // namespace dirac
