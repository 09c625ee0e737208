#pragma once

#include "dirac/curvature.hpp"
#include "dirac/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dirac {

/// |l|-grading g = g_{-l} + ... + g_l.
class Grading {
public:
    /// parts[k] is g_{k - l}; 2l + 1 parts.
    Grading(LieAlgebra g, int l, std::vector<Subspace> parts);

    const LieAlgebra& algebra() const { return g_; }
    int l() const { return l_; }
    const Subspace& part(int degree) const;
    /// Zero subspace outside -l..l.
    Subspace part_or_zero(int degree) const;

    /// g_- = sum of negative parts.
    Subspace negative() const;
    /// p = sum of nonnegative parts.
    Subspace nonnegative() const;

private:
    LieAlgebra g_;
    int l_;
    std::vector<Subspace> parts_;
};

struct GradingViolation {
    enum class Kind { NotDirectSum, BracketEscapes, NegativeNotGenerated } kind;
    int i = 0;
    int j = 0;
    std::string detail;
};

struct GradingReport {
    std::vector<GradingViolation> violations;
    bool ok() const { return violations.empty(); }
};

GradingReport verify_grading(const Grading& gr);

struct GradingElement {
    std::optional<Vector> element;  ///< nullopt: no such element
    std::size_t freedom = 0;        ///< dimension of the solution set when nonempty
};

/// Z in g_0 with [Z, A] = i A for A in g_i; canonical representative when
/// not unique (free coordinates over g_0's basis set to zero).
GradingElement find_grading_element(const Grading& gr);

struct DualityBlock {
    int i = 0;
    int j = 0;
    Matrix block;  ///< B restricted to basis(g_i) x basis(g_j)
    std::size_t rank = 0;
    bool ok = false;
};

struct KillingDualityReport {
    std::vector<DualityBlock> vanishing;  ///< pairs with j != -i, i <= j; ok iff zero
    std::vector<DualityBlock> pairings;   ///< pairs (-i, i), i >= 0; ok iff nondegenerate
    std::size_t killing_rank = 0;
    bool semisimple = false;              ///< Killing form nondegenerate
    bool ok() const;
};

KillingDualityReport killing_duality_check(const Grading& gr);

struct TorsionComponent {
    Vector a;
    Vector b;       ///< basis pair of g_-
    int degree = 0; ///< negative
    Vector component;
};

struct GradedTorsionReport {
    std::vector<TorsionComponent> nonzero;
    bool torsion_free() const { return nonzero.empty(); }
};

/// Throws PMismatch when c.p() differs from the nonnegative part.
GradedTorsionReport graded_torsion_check(const Grading& gr, const CurvatureModel& c);

}  // namespace dirac
