#pragma once

#include "dirac/curvature.hpp"
#include "dirac/isotropic.hpp"
#include "dirac/lie_algebra.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dirac {

enum class EGenerator { Subsets, UserList, IntegerGrid };
std::string_view to_string(EGenerator g);

struct SearchConfig {
    EGenerator generator = EGenerator::Subsets;
    int grid_bound = 1;                   ///< IntegerGrid: coordinates in [-bound, bound]
    std::vector<Subspace> user_list;      ///< UserList candidates
    bool evaluate_gcs = false;            ///< compute the generalized-complex flag (over Q(i))
    bool require_poisson = false;         ///< emit only families with a Poisson sample
    bool require_gcs = false;             ///< emit only families with a GCS sample
    std::optional<CurvatureModel> curvature;  ///< flat when absent
    std::size_t max_results = 1000;
    unsigned jobs = 1;

    /// Throws InvalidModel on a bad bound, max_results, or jobs count.
    void validate() const;
};

/// Canonical basis of {eps in wedge^2 E* : d_E eps = 0, i_X eps = 0 for X in p}.
/// Throws NotSubalgebra, PNotInE.
std::vector<Matrix> epsilon_space(const LieAlgebra& g, const Subspace& e, const Subspace& p);

/// Subalgebras E with p inside E, in deterministic order. Throws NotSubalgebra(p).
std::vector<Subspace> enumerate_E(const LieAlgebra& g, const Subspace& p, const SearchConfig& cfg);

struct SampleFlags {
    bool dirac = false;
    bool contains_p = false;
    bool theta = false;
    bool poisson = false;
    std::optional<bool> gcs;
};

/// One concrete point eps of a family, with the predicates evaluated on L(E, eps).
struct FamilySample {
    std::string label;  ///< "0", "b1", "i*b2", ...
    IsotropicPair pair;
    SampleFlags flags;
};

struct Family {
    Subspace E;
    std::vector<Matrix> eps_basis;
    std::vector<FamilySample> samples;

    bool any_poisson() const;
    bool any_gcs() const;
};

struct ClassificationResult {
    EGenerator generator = EGenerator::Subsets;
    bool complete = false;  ///< true only for the subsets generator
    std::size_t candidates = 0;
    std::vector<Family> families;
    bool truncated = false;

    std::size_t nontrivial_families() const;
    std::size_t poisson_families() const;
    std::size_t gcs_families() const;
};

ClassificationResult classify(const LieAlgebra& g, const Subspace& p, const SearchConfig& cfg);

}  // namespace dirac
