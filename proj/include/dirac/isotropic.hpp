#pragma once

#include "dirac/double.hpp"
#include "dirac/lie_algebra.hpp"
#include "dirac/subspace.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace dirac {

/// Subspace E of g with an alternating 2-form on E.
///
/// eps(a, b) is the form evaluated on the a-th and b-th vectors of E's
/// canonical basis, which makes the representation unique.
class IsotropicPair {
public:
    IsotropicPair(Subspace e, Matrix eps);

    /// eps given over an arbitrary (independent) basis of E; re-expressed
    /// over the canonical basis.
    static IsotropicPair from_basis(std::size_t n, const std::vector<Vector>& e_basis, const Matrix& eps);
    static IsotropicPair zero_form(Subspace e);

    const Subspace& E() const { return e_; }
    const Matrix& eps() const { return eps_; }
    std::size_t dim_E() const { return e_.dim(); }
    std::size_t ambient_dim() const { return e_.ambient_dim(); }

    /// eps(X, Y) for X, Y in E.
    Scalar eval(const Vector& x, const Vector& y) const;
    /// i_X eps restricted to E, in coordinates over E's canonical basis.
    Vec contract(const Vector& x) const;
    /// i_X eps extended by zero on the complement spanned by non-pivot axes.
    Covector contract_extended(const Vector& x) const;

    friend bool operator==(const IsotropicPair&, const IsotropicPair&) = default;

private:
    Subspace e_;
    Matrix eps_;
};

/// L(E, eps) = {X + xi : X in E, xi|_E = i_X eps}; always maximal isotropic.
DoubleSubspace build_L(const IsotropicPair& p);

/// Inverse of build_L. Throws NotMaximalIsotropic.
IsotropicPair decompose_L(const DoubleSubspace& d);

/// Sign convention of the trilinear operator d_E.
///
/// AsPrinted: eps(X,[Y,Z]) + eps(Y,[X,Z]) + eps(Z,[X,Y]).
/// Cyclic:    eps(X,[Y,Z]) + eps(Y,[Z,X]) + eps(Z,[X,Y]), which is the
///            Chevalley-Eilenberg differential up to sign and the one that
///            characterizes closure of L(E, eps).
enum class DeConvention { AsPrinted, Cyclic };

/// Full k x k x k table of d_E eps over E's canonical basis.
struct ThreeForm {
    std::size_t k = 0;
    std::vector<Scalar> values;
    const Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) const { return values[(a * k + b) * k + c]; }
    bool is_zero() const { return dirac::is_zero(values); }
};

/// Throws NotSubalgebra when E is not closed.
ThreeForm d_E(const LieAlgebra& g, const IsotropicPair& p, DeConvention conv = DeConvention::AsPrinted);

enum class IntegrabilityFailure { None, NotSubalgebra, NonzeroDE };
std::string_view to_string(IntegrabilityFailure f);

struct IntegrabilityVerdict {
    IntegrabilityFailure reason = IntegrabilityFailure::None;
    std::optional<std::pair<Vector, Vector>> escaping_pair;        ///< NotSubalgebra
    std::optional<std::array<std::size_t, 3>> triple;               ///< NonzeroDE, E-basis indices
    Scalar value;                                                   ///< d_E eps on that triple
    bool yes() const { return reason == IntegrabilityFailure::None; }
    explicit operator bool() const { return yes(); }
};

/// E a subalgebra and d_E eps = 0 (cyclic convention).
IntegrabilityVerdict check_integrable_LE(const LieAlgebra& g, const IsotropicPair& p);

enum class ContainsPFailure { None, PNotInE, EpsSharpNonzeroOnP };
std::string_view to_string(ContainsPFailure f);

struct ContainsPVerdict {
    ContainsPFailure reason = ContainsPFailure::None;
    std::optional<Vector> witness;          ///< basis vector of p
    std::optional<Covector> contraction;    ///< i_witness eps, extended by zero
    bool yes() const { return reason == ContainsPFailure::None; }
    explicit operator bool() const { return yes(); }
};

/// p subset of L(E, eps): p inside E and i_X eps = 0 on E for X in p.
ContainsPVerdict contains_p(const IsotropicPair& pair, const Subspace& p);

}  // namespace dirac
