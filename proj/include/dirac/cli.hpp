#pragma once

#include "dirac/problem.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>

namespace dirac::cli {

// Exit codes are a stable contract.
inline constexpr int kOk = 0;
inline constexpr int kNo = 1;     ///< a verdict was no, or validation failed
inline constexpr int kUsage = 2;

int run_validate(const ProblemFile& prob, std::ostream& out, std::ostream& err);

struct CheckOptions {
    bool dirac = false;
    bool poisson = false;
    bool gcs = false;
    bool theta = false;
    bool json = false;
};

/// With no predicate flag set, runs --dirac --theta.
int run_check(const ProblemFile& prob, CheckOptions opts, std::ostream& out, std::ostream& err);

struct ClassifyOptions {
    std::string mode = "subsets";  ///< subsets | grid:N | user
    std::size_t max = 1000;
    unsigned jobs = 1;
    bool gcs = false;
    bool require_poisson = false;
    bool require_gcs = false;
    bool json = false;
};

int run_classify(const ProblemFile& prob, const ClassifyOptions& opts, std::ostream& out, std::ostream& err);

/// Full command line, argv[0] included.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dirac::cli
