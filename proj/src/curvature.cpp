#include "dirac/curvature.hpp"

#include "dirac/errors.hpp"

namespace dirac {

CurvatureModel::CurvatureModel(LieAlgebra g, Subspace p, CurvatureTensor kappa)
    : g_(std::move(g)), p_(std::move(p)), kappa_(std::move(kappa))
{
    if (kappa_.dim() != g_.dim())
        throw DimensionMismatch(g_.dim(), kappa_.dim(), "CurvatureModel kappa");
    if (p_.ambient_dim() != g_.dim())
        throw DimensionMismatch(g_.dim(), p_.ambient_dim(), "CurvatureModel p");
    if (auto bad = kappa_.antisymmetry_violation())
        throw AntisymmetryViolation(bad->first, bad->second, "CurvatureModel kappa");
    if (!is_subalgebra(g_, p_))
        throw NotSubalgebra("CurvatureModel: p is not a subalgebra");
    for (const auto& x : p_.basis_vectors())
        for (std::size_t j = 0; j < g_.dim(); ++j)
            if (!is_zero((*this)(x, g_.basis(j))))
                throw InvalidModel("CurvatureModel: kappa is not horizontal (kappa(p, .) != 0)");
}

CurvatureModel CurvatureModel::flat(LieAlgebra g, Subspace p)
{
    CurvatureTensor zero(g.dim());
    return CurvatureModel(std::move(g), std::move(p), std::move(zero));
}

CurvatureModel CurvatureModel::complexified() const
{
    return CurvatureModel(complexify(g_), p_, kappa_);
}

bool is_torsion_free(const CurvatureModel& c)
{
    const std::size_t n = c.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!c.p().contains(c(unit_vec(n, i), unit_vec(n, j))))
                return false;
    return true;
}

Vector K(const CurvatureModel& c, const DoubleElement& x, const DoubleElement& y)
{
    if (x.dim() != c.dim())
        throw DimensionMismatch(c.dim(), x.dim(), "K");
    if (y.dim() != c.dim())
        throw DimensionMismatch(c.dim(), y.dim(), "K");
    return c(x.vec, y.vec);
}

Scalar Theta(const CurvatureModel& c, const DoubleElement& e1, const DoubleElement& e2, const DoubleElement& e3)
{
    auto pair_with = [](const Vector& k, const DoubleElement& e) { return dot(e.covec, k); };
    return pair_with(K(c, e1, e2), e3) + pair_with(K(c, e2, e3), e1) + pair_with(K(c, e3, e1), e2);
}

ThetaVerdict theta_vanishes_on(const CurvatureModel& c, const DoubleSubspace& d)
{
    if (d.ambient_dim() != 2 * c.dim())
        throw DimensionMismatch(2 * c.dim(), d.ambient_dim(), "theta_vanishes_on");
    auto es = elements(d);
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b)
            for (std::size_t k = b + 1; k < es.size(); ++k) {
                Scalar v = Theta(c, es[a], es[b], es[k]);
                if (!v.is_zero())
                    return {std::array{es[a], es[b], es[k]}, v};
            }
    return {};
}

DiracReport linear_dirac_check(const CurvatureModel& c, const DoubleSubspace& d)
{
    DiracReport r;
    r.dirac = is_dirac_subalgebra(c.algebra(), d);
    r.contains_p = subspace_leq(embed_vectors(c.p()), d);
    r.theta = theta_vanishes_on(c, d);
    return r;
}

PoissonReport poisson_check(const CurvatureModel& c, const DoubleSubspace& d)
{
    PoissonReport r;
    r.base = linear_dirac_check(c, d);
    r.d_cap_g = project_to_g(intersect(d, g_part(c.dim())));
    r.d_cap_g_is_p = r.d_cap_g == c.p();
    return r;
}

GcsReport gcs_check(const CurvatureModel& c, const DoubleSubspace& d)
{
    GcsReport r;
    r.base = linear_dirac_check(c.algebra().field() == Field::Qi ? c : c.complexified(), d);
    Subspace cap = intersect(d, d.conjugate());
    r.real_index = cap.dim();
    r.d_cap_dbar_is_p = cap == embed_vectors(c.p());
    return r;
}

GcsConditionsReport linear_gcs_conditions(const IsotropicPair& pair, const Subspace& p, const CurvatureModel& c)
{
    const std::size_t n = pair.ambient_dim();
    if (p.ambient_dim() != n)
        throw DimensionMismatch(n, p.ambient_dim(), "linear_gcs_conditions p");
    if (c.dim() != n)
        throw DimensionMismatch(n, c.dim(), "linear_gcs_conditions curvature");
    const LieAlgebra& g = c.algebra();
    const Subspace& e = pair.E();
    const Subspace e_bar = e.conjugate();

    GcsConditionsReport r;
    r.p_in_E = subspace_leq(p, e);
    r.E_plus_Ebar_full = sum(e, e_bar).is_full();
    r.integrability = check_integrable_LE(g, pair);
    r.d_E_zero = r.integrability.yes();
    r.eps_sharp_kills_p = r.p_in_E && contains_p(pair, p).yes();

    // phi(X, Y) = eps(X, Y) - conj(eps(conj X, conj Y)) on E cap conj(E)
    auto w = intersect(e, e_bar).basis_vectors();
    Matrix phi(w.size(), w.size());
    for (std::size_t s = 0; s < w.size(); ++s)
        for (std::size_t t = 0; t < w.size(); ++t)
            phi(s, t) = pair.eval(w[s], w[t]) - pair.eval(conj(w[s]), conj(w[t])).conj();
    std::vector<Vec> radical;
    for (const auto& x : phi.transpose().kernel()) {
        Vec v(n);
        for (std::size_t s = 0; s < w.size(); ++s)
            if (!x[s].is_zero())
                v = add(v, scale(x[s], w[s]));
        radical.push_back(std::move(v));
    }
    r.radical = Subspace::span(n, radical);
    r.radical_in_p = subspace_leq(r.radical, p);

    r.theta = theta_vanishes_on(c, build_L(pair));
    r.theta_zero = r.theta.yes();
    return r;
}

}  // namespace dirac
