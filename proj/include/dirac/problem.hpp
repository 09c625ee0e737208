#pragma once

#include "dirac/curvature.hpp"
#include "dirac/errors.hpp"
#include "dirac/isotropic.hpp"
#include "dirac/lie_algebra.hpp"
#include "dirac/parabolic.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dirac {

/// Rejected input; carries the JSON pointer and 1-based line of the offending value.
class ProblemError : public Error {
public:
    ProblemError(const std::string& message, std::string pointer, std::size_t line)
        : Error(line > 0 ? "line " + std::to_string(line) + " (" + pointer + "): " + message
                         : (pointer.empty() ? message : pointer + ": " + message)),
          pointer(std::move(pointer)), line(line)
    {
    }
    std::string pointer;
    std::size_t line;
};

/// Parsed problem description (JSON). Indices in the file are 1-based.
struct ProblemFile {
    struct GradingSpec {
        int l = 0;
        std::vector<std::vector<Vec>> parts;  ///< g_{-l} .. g_l
    };

    Field field = Field::Q;
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    StructureTensor brackets;
    std::vector<Vec> p;
    std::optional<CurvatureTensor> curvature;
    std::optional<std::vector<Vec>> D;
    std::optional<std::vector<Vec>> E;
    std::optional<Matrix> eps;  ///< over the listed E vectors
    std::optional<GradingSpec> grading;
    std::vector<std::vector<Vec>> e_candidates;

    LieAlgebra algebra() const;
    Subspace p_space() const;
    /// Flat model when no curvature is given.
    CurvatureModel curvature_model() const;
    std::optional<IsotropicPair> pair() const;
    /// D when given, otherwise L(E, eps) when E is given.
    std::optional<DoubleSubspace> dirac_candidate() const;
    std::optional<Grading> grading_model() const;

    /// Name of basis vector k (0-based): basis_names or "e<k+1>".
    std::string name(std::size_t k) const;
};

/// Throws ProblemError with line anchors.
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::string& path);

/// Exact scalars travel as strings.
nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const Vec& v);
nlohmann::json to_json(const Matrix& m);  ///< list of rows
nlohmann::json basis_json(const Subspace& s);

/// Linear combination in basis names, e.g. "1/2 H" or "e2 - e3*".
std::string format_vector(const ProblemFile& prob, const Vec& v);
std::string format_double(const ProblemFile& prob, const Vec& coords);

}  // namespace dirac
