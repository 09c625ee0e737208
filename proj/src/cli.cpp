#include "dirac/cli.hpp"

#include "dirac/search.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <filesystem>
#include <ostream>
#include <sstream>

namespace dirac::cli {

using nlohmann::json;

namespace {

std::string span_text(const ProblemFile& prob, const Subspace& s)
{
    if (s.is_zero())
        return "0";
    const bool doubled = s.ambient_dim() == 2 * prob.dim;
    std::string out = "span{";
    auto basis = s.basis_vectors();
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k > 0)
            out += ", ";
        out += doubled ? format_double(prob, basis[k]) : format_vector(prob, basis[k]);
    }
    return out + "}";
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string element_text(const ProblemFile& prob, const DoubleElement& x)
{
    return format_double(prob, x.coords());
}

json element_json(const DoubleElement& x)
{
    return to_json(x.coords());
}

}  // namespace

int run_validate(const ProblemFile& prob, std::ostream& out, std::ostream& err)
{
    bool failed = false;
    LieAlgebra g = prob.algebra();
    JacobiReport jr = jacobi_check(g);
    if (jr.ok()) {
        out << "algebra: ok (Jacobi)\n";
    } else {
        failed = true;
        const auto& v = jr.violations.front();
        out << "algebra: Jacobi identity fails on (" << prob.name(v.i) << ", " << prob.name(v.j) << ", "
            << prob.name(v.k) << "), cyclic sum " << format_vector(prob, v.defect) << "\n";
        err << "error: " << jr.violations.size() << " Jacobi violation(s)\n";
    }

    Subspace p = prob.p_space();
    bool p_ok = false;
    if (auto w = subalgebra_witness(g, p)) {
        failed = true;
        out << "p: not a subalgebra: [" << format_vector(prob, w->first) << ", " << format_vector(prob, w->second)
            << "] = " << format_vector(prob, bracket(g, w->first, w->second)) << " lies outside p\n";
    } else {
        p_ok = true;
        out << "p: subalgebra ok (dim " << p.dim() << ")\n";
    }

    std::optional<CurvatureModel> model;
    if (!prob.curvature) {
        out << "curvature: flat (default)\n";
        if (p_ok)
            model = CurvatureModel::flat(g, p);
    } else if (p_ok) {
        try {
            model.emplace(g, p, *prob.curvature);
            out << "curvature: ok (horizontal), torsion-free: " << yes_no(is_torsion_free(*model)) << "\n";
        } catch (const Error& e) {
            failed = true;
            out << "curvature: " << e.what() << "\n";
        }
    } else {
        out << "curvature: not checked (p invalid)\n";
    }

    if (auto d = prob.dirac_candidate()) {
        DiracVerdict v = is_dirac_subalgebra(g, *d);
        out << "D: " << span_text(prob, *d) << "\n";
        out << "D: dirac subalgebra " << (v.yes() ? "yes" : "no (" + std::string(to_string(v.reason)) + ")") << "\n";
    }

    if (auto gr = prob.grading_model()) {
        GradingReport rep = verify_grading(*gr);
        if (rep.ok()) {
            out << "grading: ok\n";
            GradingElement ge = find_grading_element(*gr);
            if (ge.element)
                out << "grading element: " << format_vector(prob, *ge.element)
                    << (ge.freedom > 0 ? " (not unique, freedom " + std::to_string(ge.freedom) + ")" : "") << "\n";
            else
                out << "grading element: none\n";
            KillingDualityReport kd = killing_duality_check(*gr);
            out << "killing duality: " << (kd.ok() ? "ok" : "fails") << " (Killing rank " << kd.killing_rank << ")\n";
            if (model && model->p() == gr->nonnegative())
                out << "graded torsion: torsion-free "
                    << yes_no(graded_torsion_check(*gr, *model).torsion_free()) << "\n";
        } else {
            failed = true;
            out << "grading: invalid\n";
            for (const auto& v : rep.violations)
                out << "  " << v.detail << "\n";
        }
    }
    return failed ? kNo : kOk;
}

namespace {

json dirac_json(const DiracReport& r)
{
    json j;
    j["verdict"] = r.verdict();
    j["dirac_subalgebra"] = r.dirac.yes();
    j["failure"] = std::string(to_string(r.dirac.reason));
    if (r.dirac.witness)
        j["closure_witness"] = {{"x", element_json(r.dirac.witness->x)},
                                {"y", element_json(r.dirac.witness->y)},
                                {"bracket", element_json(r.dirac.witness->bracket)}};
    else
        j["closure_witness"] = nullptr;
    j["contains_p"] = r.contains_p;
    j["theta"] = r.theta.yes();
    return j;
}

void dirac_text(const ProblemFile& prob, const DiracReport& r, std::ostream& out)
{
    out << "  dirac subalgebra: ";
    if (r.dirac.yes())
        out << "yes\n";
    else if (r.dirac.witness)
        out << "no (not closed: [" << element_text(prob, r.dirac.witness->x) << ", "
            << element_text(prob, r.dirac.witness->y) << "] = " << element_text(prob, r.dirac.witness->bracket)
            << " lies outside D)\n";
    else
        out << "no (" << to_string(r.dirac.reason) << ")\n";
    out << "  p in D: " << yes_no(r.contains_p) << "\n";
    out << "  theta: " << yes_no(r.theta.yes()) << "\n";
}

json theta_json(const ThetaVerdict& t)
{
    json j;
    j["verdict"] = t.yes();
    if (t.witness) {
        j["witness"] = json::array();
        for (const auto& e : *t.witness)
            j["witness"].push_back(element_json(e));
        j["value"] = t.value.to_string();
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

}  // namespace

int run_check(const ProblemFile& prob, CheckOptions opts, std::ostream& out, std::ostream& err)
{
    if (!opts.dirac && !opts.poisson && !opts.gcs && !opts.theta)
        opts.dirac = opts.theta = true;
    auto d_opt = prob.dirac_candidate();
    if (!d_opt) {
        err << "usage error: check needs \"D\" or \"E\" (with optional \"eps\") in the problem file\n";
        return kUsage;
    }
    const DoubleSubspace& d = *d_opt;
    CurvatureModel c = prob.curvature_model();
    Subspace p = prob.p_space();

    json results = json::object();
    bool all_yes = true;
    std::ostringstream text;
    text << "D: " << span_text(prob, d) << "\n";

    if (opts.dirac) {
        DiracReport r = linear_dirac_check(c, d);
        all_yes = all_yes && r.verdict();
        results["dirac"] = dirac_json(r);
        text << "dirac: " << yes_no(r.verdict()) << "\n";
        dirac_text(prob, r, text);
    }
    if (opts.poisson) {
        PoissonReport r = poisson_check(c, d);
        all_yes = all_yes && r.verdict();
        json j = dirac_json(r.base);
        j["verdict"] = r.verdict();
        j["d_cap_g"] = basis_json(r.d_cap_g);
        j["d_cap_g_is_p"] = r.d_cap_g_is_p;
        results["poisson"] = j;
        text << "poisson: " << yes_no(r.verdict());
        if (!r.base.verdict())
            text << " (Dirac criterion fails)";
        else if (!r.d_cap_g_is_p)
            text << " (D∩g = " << span_text(prob, r.d_cap_g) << " differs from p = " << span_text(prob, p) << ")";
        text << "\n";
    }
    if (opts.gcs) {
        GcsReport r = gcs_check(c, d);
        all_yes = all_yes && r.verdict();
        json j = dirac_json(r.base);
        j["verdict"] = r.verdict();
        j["real_index"] = r.real_index;
        j["d_cap_dbar_is_p"] = r.d_cap_dbar_is_p;
        text << "gcs: " << yes_no(r.verdict());
        std::vector<std::string> reasons;
        if (!r.base.verdict())
            reasons.push_back("Dirac criterion fails");
        if (!r.d_cap_dbar_is_p)
            reasons.push_back("D∩D̄ dim " + std::to_string(r.real_index) + " ≠ dim p_ℂ " + std::to_string(p.dim()));
        for (std::size_t k = 0; k < reasons.size(); ++k)
            text << (k == 0 ? " (" : "; ") << reasons[k];
        text << (reasons.empty() ? "" : ")") << "\n";
        if (auto pair = prob.pair(); pair && !prob.D) {
            CurvatureModel cc = c.algebra().field() == Field::Qi ? c : c.complexified();
            GcsConditionsReport gc = linear_gcs_conditions(*pair, p, cc);
            static const char* names[] = {"p_in_E", "E_plus_Ebar_full", "d_E_zero",
                                          "eps_sharp_kills_p", "radical_in_p", "theta_zero"};
            json cj;
            auto conds = gc.conditions();
            text << "  (E, eps) conditions:";
            for (std::size_t k = 0; k < conds.size(); ++k) {
                cj[names[k]] = conds[k];
                text << " " << names[k] << "=" << yes_no(conds[k]);
            }
            text << "\n  radical: " << span_text(prob, gc.radical) << "\n";
            cj["verdict"] = gc.verdict();
            cj["radical"] = basis_json(gc.radical);
            j["conditions"] = cj;
        }
        results["gcs"] = j;
    }
    if (opts.theta) {
        ThetaVerdict t = theta_vanishes_on(c, d);
        all_yes = all_yes && t.yes();
        results["theta"] = theta_json(t);
        text << "theta: " << yes_no(t.yes());
        if (t.witness)
            text << " (Theta(" << element_text(prob, (*t.witness)[0]) << ", " << element_text(prob, (*t.witness)[1])
                 << ", " << element_text(prob, (*t.witness)[2]) << ") = " << t.value << ")";
        text << "\n";
    }

    if (opts.json) {
        json doc;
        doc["field"] = std::string(to_string(prob.field));
        doc["dim"] = prob.dim;
        doc["D"] = basis_json(d);
        doc["results"] = results;
        doc["all_yes"] = all_yes;
        out << doc.dump(2) << "\n";
    } else {
        out << text.str();
    }
    return all_yes ? kOk : kNo;
}

namespace {

std::optional<SearchConfig> make_config(const ProblemFile& prob, const ClassifyOptions& opts, std::ostream& err)
{
    SearchConfig cfg;
    if (opts.mode == "subsets") {
        cfg.generator = EGenerator::Subsets;
    } else if (opts.mode == "user") {
        cfg.generator = EGenerator::UserList;
        if (prob.e_candidates.empty()) {
            err << "usage error: --mode user needs \"E_candidates\" in the problem file\n";
            return std::nullopt;
        }
        for (const auto& vs : prob.e_candidates)
            cfg.user_list.push_back(Subspace::span(prob.dim, vs));
    } else if (opts.mode.starts_with("grid:")) {
        cfg.generator = EGenerator::IntegerGrid;
        std::string_view num = std::string_view(opts.mode).substr(5);
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), cfg.grid_bound);
        if (ec != std::errc() || ptr != num.data() + num.size() || cfg.grid_bound < 1) {
            err << "usage error: grid bound must be a positive integer, got '" << num << "'\n";
            return std::nullopt;
        }
    } else {
        err << "usage error: unknown mode '" << opts.mode << "' (expected subsets, grid:N or user)\n";
        return std::nullopt;
    }
    if (opts.max < 1) {
        err << "usage error: --max must be at least 1\n";
        return std::nullopt;
    }
    if (opts.jobs < 1) {
        err << "usage error: --jobs must be at least 1\n";
        return std::nullopt;
    }
    cfg.max_results = opts.max;
    cfg.jobs = opts.jobs;
    cfg.evaluate_gcs = opts.gcs;
    cfg.require_poisson = opts.require_poisson;
    cfg.require_gcs = opts.require_gcs;
    if (prob.curvature)
        cfg.curvature = prob.curvature_model();
    return cfg;
}

std::string eps_text(const Matrix& eps)
{
    std::string out;
    for (std::size_t a = 0; a < eps.rows(); ++a)
        for (std::size_t b = a + 1; b < eps.cols(); ++b)
            if (!eps(a, b).is_zero()) {
                if (!out.empty())
                    out += ", ";
                out += "eps(v" + std::to_string(a + 1) + ",v" + std::to_string(b + 1) + ") = " + eps(a, b).to_string();
            }
    return out.empty() ? "0" : out;
}

}  // namespace

int run_classify(const ProblemFile& prob, const ClassifyOptions& opts, std::ostream& out, std::ostream& err)
{
    auto cfg = make_config(prob, opts, err);
    if (!cfg)
        return kUsage;
    ClassificationResult res = classify(prob.algebra(), prob.p_space(), *cfg);

    if (opts.json) {
        json doc;
        doc["generator"] = std::string(to_string(res.generator));
        doc["complete"] = res.complete;
        doc["candidates"] = res.candidates;
        doc["truncated"] = res.truncated;
        doc["summary"] = {{"families", res.families.size()},
                          {"nontrivial", res.nontrivial_families()},
                          {"poisson", res.poisson_families()},
                          {"gcs", res.gcs_families()}};
        json fams = json::array();
        for (const auto& f : res.families) {
            json fj;
            fj["E"] = basis_json(f.E);
            fj["eps_basis"] = json::array();
            for (const auto& m : f.eps_basis)
                fj["eps_basis"].push_back(to_json(m));
            fj["samples"] = json::array();
            for (const auto& s : f.samples) {
                json sj;
                sj["label"] = s.label;
                sj["eps"] = to_json(s.pair.eps());
                sj["D"] = basis_json(build_L(s.pair));
                sj["dirac"] = s.flags.dirac;
                sj["contains_p"] = s.flags.contains_p;
                sj["theta"] = s.flags.theta;
                sj["poisson"] = s.flags.poisson;
                sj["gcs"] = s.flags.gcs ? json(*s.flags.gcs) : json(nullptr);
                fj["samples"].push_back(std::move(sj));
            }
            fj["any_poisson"] = f.any_poisson();
            fj["any_gcs"] = f.any_gcs();
            fams.push_back(std::move(fj));
        }
        doc["families"] = std::move(fams);
        out << doc.dump(2) << "\n";
        return kOk;
    }

    out << "generator: " << to_string(res.generator)
        << (res.complete ? " (complete for basis subsets)" : " (incomplete: candidate list is not exhaustive)") << "\n";
    out << "E candidates: " << res.candidates << "\n";
    out << "families: " << res.families.size() << " (nontrivial " << res.nontrivial_families() << ", poisson "
        << res.poisson_families();
    if (cfg->evaluate_gcs || cfg->require_gcs)
        out << ", gcs " << res.gcs_families();
    out << ")" << (res.truncated ? " truncated at --max" : "") << "\n";
    for (std::size_t k = 0; k < res.families.size(); ++k) {
        const Family& f = res.families[k];
        out << "\nfamily " << k + 1 << "\n";
        out << "  E: " << span_text(prob, f.E) << "\n";
        auto eb = f.E.basis_vectors();
        for (std::size_t a = 0; a < eb.size(); ++a)
            out << "    v" << a + 1 << " = " << format_vector(prob, eb[a]) << "\n";
        out << "  eps-space: dim " << f.eps_basis.size() << "\n";
        for (std::size_t b = 0; b < f.eps_basis.size(); ++b)
            out << "    b" << b + 1 << ": " << eps_text(f.eps_basis[b]) << "\n";
        out << "  samples:\n";
        for (const auto& s : f.samples) {
            out << "    " << s.label << ": dirac " << yes_no(s.flags.dirac) << ", p in D "
                << yes_no(s.flags.contains_p) << ", theta " << yes_no(s.flags.theta) << ", poisson "
                << yes_no(s.flags.poisson);
            if (s.flags.gcs)
                out << ", gcs " << yes_no(*s.flags.gcs);
            out << "\n";
        }
    }
    return kOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dirac subalgebras of g + g* and Cartan curvature criteria, in exact arithmetic"};
    app.require_subcommand(1);

    std::string file;
    auto* validate = app.add_subcommand("validate", "Check the algebra, p, curvature and grading of a problem file");
    validate->add_option("file", file, "problem file (JSON)")->required();

    CheckOptions copts;
    auto* check = app.add_subcommand("check", "Evaluate predicates on D or L(E, eps)");
    check->add_option("file", file, "problem file (JSON)")->required();
    check->add_flag("--dirac", copts.dirac, "Dirac subalgebra containing p with vanishing Theta");
    check->add_flag("--poisson", copts.poisson, "additionally D ∩ g = p");
    check->add_flag("--gcs", copts.gcs, "generalized complex: D ∩ conj(D) = p over Q(i)");
    check->add_flag("--theta", copts.theta, "Theta vanishes on D");
    check->add_flag("--json", copts.json, "emit one JSON document");

    ClassifyOptions kopts;
    auto* cls = app.add_subcommand("classify", "Enumerate pairs (E, eps) giving Dirac subalgebras containing p");
    cls->add_option("file", file, "problem file (JSON)")->required();
    cls->add_option("--mode", kopts.mode, "subsets | grid:N | user")->capture_default_str();
    cls->add_option("--max", kopts.max, "maximum number of families")->capture_default_str();
    cls->add_option("--jobs", kopts.jobs, "worker threads")->capture_default_str();
    cls->add_flag("--gcs", kopts.gcs, "evaluate the generalized complex flag over Q(i)");
    cls->add_flag("--require-poisson", kopts.require_poisson, "keep only families with a Poisson sample");
    cls->add_flag("--require-gcs", kopts.require_gcs, "keep only families with a GCS sample");
    cls->add_flag("--json", kopts.json, "emit one JSON document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    std::error_code ec;
    if (!std::filesystem::is_regular_file(file, ec)) {
        err << "usage error: no such file '" << file << "'\n";
        return kUsage;
    }
    ProblemFile prob;
    try {
        prob = load_problem(file);
    } catch (const std::ios_base::failure& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ProblemError& e) {
        err << file << ": " << e.what() << "\n";
        return kNo;
    }

    try {
        if (*validate)
            return run_validate(prob, out, err);
        if (*check)
            return run_check(prob, copts, out, err);
        return run_classify(prob, kopts, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kNo;
    }
}

}  // namespace dirac::cli
