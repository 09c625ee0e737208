#include "dirac/search.hpp"

#include "dirac/errors.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

namespace dirac {

std::string_view to_string(EGenerator g)
{
    switch (g) {
    case EGenerator::Subsets: return "subsets";
    case EGenerator::UserList: return "user";
    case EGenerator::IntegerGrid: return "grid";
    }
    return "?";
}

void SearchConfig::validate() const
{
    if (generator == EGenerator::IntegerGrid && grid_bound < 1)
        throw InvalidModel("SearchConfig: grid bound must be >= 1");
    if (max_results < 1)
        throw InvalidModel("SearchConfig: max_results must be >= 1");
    if (jobs < 1)
        throw InvalidModel("SearchConfig: jobs must be >= 1");
}

namespace {

std::size_t pair_index(std::size_t a, std::size_t b, std::size_t k)
{
    // position of (a, b), a < b, in the row-major list of strict upper entries
    return a * k - a * (a + 1) / 2 + (b - a - 1);
}

Matrix form_from_coords(std::size_t k, const Vec& coords)
{
    Matrix eps(k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            eps(a, b) = coords[pair_index(a, b, k)];
            eps(b, a) = -eps(a, b);
        }
    return eps;
}

}  // namespace

std::vector<Matrix> epsilon_space(const LieAlgebra& g, const Subspace& e, const Subspace& p)
{
    if (e.ambient_dim() != g.dim() || p.ambient_dim() != g.dim())
        throw DimensionMismatch(g.dim(), e.ambient_dim(), "epsilon_space");
    if (!is_subalgebra(g, e))
        throw NotSubalgebra("epsilon_space: E is not a subalgebra");
    if (!subspace_leq(p, e))
        throw PNotInE("epsilon_space: p is not contained in E");
    const std::size_t k = e.dim();
    const std::size_t unknowns = k * (k - (k > 0 ? 1 : 0)) / 2;
    auto p_basis = p.basis_vectors();

    // Both constraint families are linear in eps: evaluate them on each unit form.
    std::vector<Vec> columns;
    for (std::size_t u = 0; u < unknowns; ++u) {
        IsotropicPair unit(e, form_from_coords(k, unit_vec(unknowns, u)));
        Vec col;
        ThreeForm d = d_E(g, unit, DeConvention::Cyclic);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                for (std::size_t c = b + 1; c < k; ++c)
                    col.push_back(d(a, b, c));
        for (const auto& x : p_basis)
            for (const auto& v : unit.contract(x))
                col.push_back(v);
        columns.push_back(std::move(col));
    }
    std::vector<Matrix> out;
    if (unknowns == 0)
        return out;
    const std::size_t equations = columns.front().size();
    Matrix system = equations == 0 ? Matrix(0, unknowns) : Matrix::from_columns(equations, columns);
    Subspace solutions = Subspace::span(unknowns, system.kernel());
    for (const auto& s : solutions.basis_vectors())
        out.push_back(form_from_coords(k, s));
    return out;
}

namespace {

struct CandidateSet {
    std::set<std::vector<std::string>> seen;
    std::vector<Subspace> ordered;

    void offer(const LieAlgebra& g, const Subspace& p, const Subspace& s)
    {
        if (!subspace_leq(p, s))
            return;
        std::vector<std::string> key;
        key.push_back(std::to_string(s.dim()));
        for (std::size_t r = 0; r < s.dim(); ++r)
            for (const auto& x : s.basis().row(r))
                key.push_back(x.to_string());
        if (!seen.insert(std::move(key)).second)
            return;
        if (is_subalgebra(g, s))
            ordered.push_back(s);
    }
};

std::vector<Vec> grid_directions(std::size_t n, int bound)
{
    // one representative per sign class: first nonzero coordinate positive
    std::vector<Vec> out;
    const int width = 2 * bound + 1;
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k)
        total *= static_cast<std::size_t>(width);
    for (std::size_t code = 0; code < total; ++code) {
        Vec v(n);
        std::size_t c = code;
        for (std::size_t k = n; k-- > 0;) {
            v[k] = static_cast<long>(c % width) - bound;
            c /= width;
        }
        bool keep = false;
        for (const auto& x : v)
            if (!x.is_zero()) {
                keep = sgn(x.re()) > 0;
                break;
            }
        if (keep)
            out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::vector<Subspace> enumerate_E(const LieAlgebra& g, const Subspace& p, const SearchConfig& cfg)
{
    if (p.ambient_dim() != g.dim())
        throw DimensionMismatch(g.dim(), p.ambient_dim(), "enumerate_E");
    if (!is_subalgebra(g, p))
        throw NotSubalgebra("enumerate_E: p is not a subalgebra");
    const std::size_t n = g.dim();
    auto p_basis = p.basis_vectors();
    CandidateSet set;
    auto with_p = [&](std::vector<Vec> extra) {
        extra.insert(extra.end(), p_basis.begin(), p_basis.end());
        return Subspace::span(n, extra);
    };

    switch (cfg.generator) {
    case EGenerator::Subsets:
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<Vec> extra;
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (std::size_t{1} << k))
                    extra.push_back(unit_vec(n, k));
            set.offer(g, p, with_p(std::move(extra)));
        }
        break;
    case EGenerator::UserList:
        for (const auto& s : cfg.user_list) {
            if (s.ambient_dim() != n)
                throw DimensionMismatch(n, s.ambient_dim(), "enumerate_E user candidate");
            set.offer(g, p, s);
        }
        break;
    case EGenerator::IntegerGrid: {
        set.offer(g, p, p);
        auto dirs = grid_directions(n, cfg.grid_bound);
        for (const auto& v : dirs)
            set.offer(g, p, with_p({v}));
        for (std::size_t a = 0; a < dirs.size(); ++a)
            for (std::size_t b = a + 1; b < dirs.size(); ++b)
                set.offer(g, p, with_p({dirs[a], dirs[b]}));
        set.offer(g, p, Subspace::full(n));
        break;
    }
    }
    return std::move(set.ordered);
}

bool Family::any_poisson() const
{
    for (const auto& s : samples)
        if (s.flags.poisson)
            return true;
    return false;
}

bool Family::any_gcs() const
{
    for (const auto& s : samples)
        if (s.flags.gcs.value_or(false))
            return true;
    return false;
}

std::size_t ClassificationResult::nontrivial_families() const
{
    std::size_t c = 0;
    for (const auto& f : families)
        c += f.eps_basis.empty() ? 0 : 1;
    return c;
}

std::size_t ClassificationResult::poisson_families() const
{
    std::size_t c = 0;
    for (const auto& f : families)
        c += f.any_poisson() ? 1 : 0;
    return c;
}

std::size_t ClassificationResult::gcs_families() const
{
    std::size_t c = 0;
    for (const auto& f : families)
        c += f.any_gcs() ? 1 : 0;
    return c;
}

namespace {

std::vector<std::pair<std::string, Matrix>> sample_points(const std::vector<Matrix>& basis, std::size_t k,
                                                          bool complex_samples)
{
    std::vector<std::pair<std::string, Matrix>> out;
    out.emplace_back("0", Matrix(k, k));
    for (std::size_t b = 0; b < basis.size(); ++b)
        out.emplace_back("b" + std::to_string(b + 1), basis[b]);
    Matrix total(k, k);
    for (const auto& m : basis)
        total = total + m;
    if (basis.size() > 1)
        out.emplace_back("sum", total);
    if (complex_samples) {
        for (std::size_t b = 0; b < basis.size(); ++b)
            out.emplace_back("i*b" + std::to_string(b + 1), Scalar::i() * basis[b]);
        if (basis.size() > 1)
            out.emplace_back("i*sum", Scalar::i() * total);
    }
    return out;
}

Family evaluate_candidate(const LieAlgebra& g, const Subspace& p, const Subspace& e, const CurvatureModel& flat_or_given,
                          const std::optional<CurvatureModel>& complex_model)
{
    Family fam{e, epsilon_space(g, e, p), {}};
    for (auto& [label, eps] : sample_points(fam.eps_basis, e.dim(), complex_model.has_value())) {
        IsotropicPair pair(e, eps);
        DoubleSubspace d = build_L(pair);
        const CurvatureModel& model = eps.is_real() ? flat_or_given : *complex_model;
        PoissonReport pr = poisson_check(model, d);
        SampleFlags flags;
        flags.dirac = pr.base.dirac.yes();
        flags.contains_p = pr.base.contains_p;
        flags.theta = pr.base.theta.yes();
        flags.poisson = pr.verdict();
        if (complex_model)
            flags.gcs = gcs_check(*complex_model, d).verdict();

        // independent re-verification through the (E, eps) predicates
        if (check_integrable_LE(model.algebra(), pair).yes() != flags.dirac || !flags.dirac)
            throw Error("classify: emitted pair fails integrability re-check");
        if (contains_p(pair, p).yes() != flags.contains_p || !flags.contains_p)
            throw Error("classify: emitted pair fails contains_p re-check");
        fam.samples.push_back({std::move(label), std::move(pair), flags});
    }
    return fam;
}

}  // namespace

ClassificationResult classify(const LieAlgebra& g, const Subspace& p, const SearchConfig& cfg)
{
    cfg.validate();
    const bool want_gcs = cfg.evaluate_gcs || cfg.require_gcs;
    LieAlgebra algebra = want_gcs ? complexify(g) : g;
    CurvatureModel model = cfg.curvature ? *cfg.curvature : CurvatureModel::flat(algebra, p);
    if (model.p() != p)
        throw PMismatch("classify: curvature model p differs from the search p");
    std::optional<CurvatureModel> complex_model;
    if (want_gcs)
        complex_model = model.algebra().field() == Field::Qi ? model : model.complexified();

    ClassificationResult result;
    result.generator = cfg.generator;
    result.complete = cfg.generator == EGenerator::Subsets;
    auto candidates = enumerate_E(algebra, p, cfg);
    result.candidates = candidates.size();

    std::vector<std::optional<Family>> slots(candidates.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= candidates.size())
                return;
            try {
                slots[idx] = evaluate_candidate(algebra, p, candidates[idx], model, complex_model);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const unsigned threads = std::min<std::size_t>(cfg.jobs, std::max<std::size_t>(candidates.size(), 1));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    for (auto& slot : slots) {
        Family& fam = *slot;
        if (cfg.require_poisson && !fam.any_poisson())
            continue;
        if (cfg.require_gcs && !fam.any_gcs())
            continue;
        if (result.families.size() == cfg.max_results) {
            result.truncated = true;
            break;
        }
        result.families.push_back(std::move(fam));
    }
    return result;
}

}  // namespace dirac
