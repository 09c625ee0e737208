#pragma once

#include "dirac/double.hpp"
#include "dirac/isotropic.hpp"
#include "dirac/lie_algebra.hpp"

#include <array>
#include <optional>

namespace dirac {

/// kappa(b_i, b_j) = sum_k t(i, j, k) b_k
using CurvatureTensor = StructureTensor;

/// Pointwise value of a Cartan curvature function: an alternating g-valued
/// 2-form on g that vanishes whenever one argument lies in p.
///
/// Models a single point of the geometry; a geometry satisfies a pointwise
/// criterion only if every one of its curvature values does.
class CurvatureModel {
public:
    /// Throws AntisymmetryViolation, NotSubalgebra (p), InvalidModel (not horizontal).
    CurvatureModel(LieAlgebra g, Subspace p, CurvatureTensor kappa);

    static CurvatureModel flat(LieAlgebra g, Subspace p);

    const LieAlgebra& algebra() const { return g_; }
    const Subspace& p() const { return p_; }
    const CurvatureTensor& kappa() const { return kappa_; }
    std::size_t dim() const { return g_.dim(); }

    Vector operator()(const Vector& a, const Vector& b) const { return apply_bilinear(kappa_, a, b); }

    CurvatureModel complexified() const;

private:
    LieAlgebra g_;
    Subspace p_;
    CurvatureTensor kappa_;
};

/// Image of kappa inside p.
bool is_torsion_free(const CurvatureModel& c);

/// K(A + xi, B + eta) = kappa(A, B).
Vector K(const CurvatureModel& c, const DoubleElement& x, const DoubleElement& y);

/// <K(e1,e2),e3> + <K(e2,e3),e1> + <K(e3,e1),e2>
Scalar Theta(const CurvatureModel& c, const DoubleElement& e1, const DoubleElement& e2, const DoubleElement& e3);

struct ThetaVerdict {
    std::optional<std::array<DoubleElement, 3>> witness;
    Scalar value;
    bool yes() const { return !witness.has_value(); }
    explicit operator bool() const { return yes(); }
};

/// Checks basis triples of D; Theta is trilinear and alternating.
ThetaVerdict theta_vanishes_on(const CurvatureModel& c, const DoubleSubspace& d);

struct DiracReport {
    DiracVerdict dirac;
    bool contains_p = false;
    ThetaVerdict theta;
    bool verdict() const { return dirac.yes() && contains_p && theta.yes(); }
};

DiracReport linear_dirac_check(const CurvatureModel& c, const DoubleSubspace& d);

struct PoissonReport {
    DiracReport base;
    Subspace d_cap_g;  ///< g-parts of D cap g
    bool d_cap_g_is_p = false;
    bool verdict() const { return base.verdict() && d_cap_g_is_p; }
};

PoissonReport poisson_check(const CurvatureModel& c, const DoubleSubspace& d);

struct GcsReport {
    DiracReport base;
    std::size_t real_index = 0;  ///< dim of D cap conj(D)
    bool d_cap_dbar_is_p = false;
    bool verdict() const { return base.verdict() && d_cap_dbar_is_p; }
};

/// Evaluated in the complexification; real inputs are promoted.
GcsReport gcs_check(const CurvatureModel& c, const DoubleSubspace& d);

/// The six conditions characterizing linear generalized complex structures
/// given by a pair (E, eps) over the complexified algebra.
struct GcsConditionsReport {
    bool p_in_E = false;               ///< (1)
    bool E_plus_Ebar_full = false;     ///< (2)
    bool d_E_zero = false;             ///< (3), includes E being a subalgebra
    bool eps_sharp_kills_p = false;    ///< (4)
    bool radical_in_p = false;         ///< (5)
    bool theta_zero = false;           ///< (6)
    IntegrabilityVerdict integrability;
    Subspace radical;                  ///< radical of eps - conj(eps(conj, conj)) on E cap conj(E)
    ThetaVerdict theta;

    std::array<bool, 6> conditions() const
    {
        return {p_in_E, E_plus_Ebar_full, d_E_zero, eps_sharp_kills_p, radical_in_p, theta_zero};
    }
    bool verdict() const
    {
        for (bool b : conditions())
            if (!b)
                return false;
        return true;
    }
};

GcsConditionsReport linear_gcs_conditions(const IsotropicPair& pair, const Subspace& p, const CurvatureModel& c);

}  // namespace dirac
