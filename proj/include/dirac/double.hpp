#pragma once

#include "dirac/lie_algebra.hpp"
#include "dirac/matrix.hpp"
#include "dirac/subspace.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace dirac {

/// Element A + xi of g + g*.
struct DoubleElement {
    Vector vec;
    Covector covec;

    static DoubleElement from_coords(std::size_t n, std::span<const Scalar> coords);
    static DoubleElement pure_vector(Vector a);
    static DoubleElement pure_covector(Covector xi);

    std::size_t dim() const { return vec.size(); }
    /// Concatenated coordinates: g-part first, then g*-part.
    Vec coords() const { return concat(vec, covec); }

    friend DoubleElement operator+(const DoubleElement& a, const DoubleElement& b);
    friend DoubleElement operator-(const DoubleElement& a, const DoubleElement& b);
    friend DoubleElement operator*(const Scalar& s, const DoubleElement& a);
    friend bool operator==(const DoubleElement&, const DoubleElement&) = default;
};

/// Subspace of g + g* in 2n coordinates, g-part first. Canonical like any Subspace.
using DoubleSubspace = Subspace;

std::vector<DoubleElement> elements(const DoubleSubspace& d);

/// S subset of g placed in the g-part of the double.
DoubleSubspace embed_vectors(const Subspace& s);
/// S subset of g* (as covector coordinates) placed in the g*-part.
DoubleSubspace embed_covectors(const Subspace& s);
/// g itself and g* inside the double of an n-dimensional algebra.
DoubleSubspace g_part(std::size_t n);
DoubleSubspace dual_part(std::size_t n);
/// Projection of D onto g.
Subspace project_to_g(const DoubleSubspace& d);

/// <A + xi, B + eta> = eta(A) + xi(B).
Scalar pairing(const DoubleElement& x, const DoubleElement& y);

/// [A + xi, B + eta] = [A, B] + ad*_A eta - ad*_B xi.
DoubleElement semidirect_bracket(const LieAlgebra& g, const DoubleElement& x, const DoubleElement& y);

bool is_isotropic(const DoubleSubspace& d);
/// Isotropic of dimension n; for the split pairing that is maximality.
bool is_maximal_isotropic(const DoubleSubspace& d);

enum class DiracFailure { None, NotIsotropic, NotMaximal, NotClosed };
std::string_view to_string(DiracFailure f);

struct ClosureWitness {
    DoubleElement x;
    DoubleElement y;
    DoubleElement bracket;  ///< [x, y], which lies outside D
};

struct DiracVerdict {
    DiracFailure reason = DiracFailure::None;
    std::optional<ClosureWitness> witness;
    bool yes() const { return reason == DiracFailure::None; }
    explicit operator bool() const { return yes(); }
};

DiracVerdict is_dirac_subalgebra(const LieAlgebra& g, const DoubleSubspace& d);

/// dim (D cap conj(D)); throws NotMaximalIsotropic.
std::size_t real_index(const DoubleSubspace& d);

/// Real orthogonal J with J^2 = -1, acting as +i on D and -i on conj(D).
/// Throws NotMaximalIsotropic, NonzeroRealIndex, NonRealOutput.
Matrix construct_J(const DoubleSubspace& d);

/// Gram matrix of the pairing in double coordinates: [[0, I], [I, 0]].
Matrix pairing_matrix(std::size_t n);

}  // namespace dirac
