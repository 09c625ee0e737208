#include "dirac/parabolic.hpp"

#include "dirac/errors.hpp"

namespace dirac {

Grading::Grading(LieAlgebra g, int l, std::vector<Subspace> parts)
    : g_(std::move(g)), l_(l), parts_(std::move(parts))
{
    if (l_ < 0)
        throw InvalidModel("Grading: l must be nonnegative");
    if (parts_.size() != static_cast<std::size_t>(2 * l_ + 1))
        throw DimensionMismatch(2 * l_ + 1, parts_.size(), "Grading parts");
    for (const auto& s : parts_)
        if (s.ambient_dim() != g_.dim())
            throw DimensionMismatch(g_.dim(), s.ambient_dim(), "Grading part");
}

const Subspace& Grading::part(int degree) const
{
    if (degree < -l_ || degree > l_)
        throw InvalidModel("Grading: degree out of range");
    return parts_[static_cast<std::size_t>(degree + l_)];
}

Subspace Grading::part_or_zero(int degree) const
{
    if (degree < -l_ || degree > l_)
        return Subspace::zero(g_.dim());
    return part(degree);
}

Subspace Grading::negative() const
{
    Subspace s = Subspace::zero(g_.dim());
    for (int d = -l_; d < 0; ++d)
        s = sum(s, part(d));
    return s;
}

Subspace Grading::nonnegative() const
{
    Subspace s = Subspace::zero(g_.dim());
    for (int d = 0; d <= l_; ++d)
        s = sum(s, part(d));
    return s;
}

GradingReport verify_grading(const Grading& gr)
{
    const LieAlgebra& g = gr.algebra();
    const int l = gr.l();
    GradingReport report;

    std::size_t total = 0;
    Subspace all = Subspace::zero(g.dim());
    for (int d = -l; d <= l; ++d) {
        total += gr.part(d).dim();
        all = sum(all, gr.part(d));
    }
    if (total != g.dim() || !all.is_full())
        report.violations.push_back({GradingViolation::Kind::NotDirectSum, 0, 0,
                                     "parts have total dimension " + std::to_string(total) + " and span dimension " +
                                         std::to_string(all.dim()) + ", algebra dimension " +
                                         std::to_string(g.dim())});

    for (int i = -l; i <= l; ++i)
        for (int j = i; j <= l; ++j) {
            Subspace target = gr.part_or_zero(i + j);
            bool escaped = false;
            for (const auto& u : gr.part(i).basis_vectors()) {
                for (const auto& v : gr.part(j).basis_vectors())
                    if (!target.contains(bracket(g, u, v))) {
                        escaped = true;
                        break;
                    }
                if (escaped)
                    break;
            }
            if (escaped)
                report.violations.push_back({GradingViolation::Kind::BracketEscapes, i, j,
                                             "[g_" + std::to_string(i) + ", g_" + std::to_string(j) +
                                                 "] not contained in g_" + std::to_string(i + j)});
        }

    if (l > 0) {
        Subspace generated = generated_subalgebra(g, gr.part(-1).basis_vectors());
        if (generated != gr.negative())
            report.violations.push_back({GradingViolation::Kind::NegativeNotGenerated, -1, 0,
                                         "subalgebra generated by g_-1 differs from g_-"});
    }
    return report;
}

GradingElement find_grading_element(const Grading& gr)
{
    const LieAlgebra& g = gr.algebra();
    const std::size_t n = g.dim();
    auto w = gr.part(0).basis_vectors();
    // unknowns z_a with Z = sum z_a w_a; one block of n equations per graded basis vector
    std::vector<Vec> rows;
    Vec rhs;
    for (int d = -gr.l(); d <= gr.l(); ++d)
        for (const auto& v : gr.part(d).basis_vectors()) {
            std::vector<Vector> cols;
            for (const auto& wa : w)
                cols.push_back(bracket(g, wa, v));
            for (std::size_t k = 0; k < n; ++k) {
                Vec row(w.size());
                for (std::size_t a = 0; a < w.size(); ++a)
                    row[a] = cols[a][k];
                rows.push_back(std::move(row));
                rhs.push_back(Scalar(d) * v[k]);
            }
        }
    Matrix m = Matrix::from_rows(w.size(), rows);
    auto z = m.solve(rhs);
    GradingElement out;
    if (!z)
        return out;
    Vector elem(n);
    for (std::size_t a = 0; a < w.size(); ++a)
        elem = add(elem, scale((*z)[a], w[a]));
    out.freedom = w.size() - m.rank();

    for (int d = -gr.l(); d <= gr.l(); ++d)
        for (const auto& v : gr.part(d).basis_vectors())
            if (bracket(g, elem, v) != scale(Scalar(d), v))
                throw Error("find_grading_element: post-verification failed");
    out.element = std::move(elem);
    return out;
}

bool KillingDualityReport::ok() const
{
    for (const auto& b : vanishing)
        if (!b.ok)
            return false;
    for (const auto& b : pairings)
        if (!b.ok)
            return false;
    return true;
}

namespace {

Matrix restrict_form(const Matrix& form, const Subspace& s, const Subspace& t)
{
    auto sb = s.basis_vectors();
    auto tb = t.basis_vectors();
    Matrix out(sb.size(), tb.size());
    for (std::size_t a = 0; a < sb.size(); ++a) {
        Vec fa = form.transpose().apply(sb[a]);
        for (std::size_t b = 0; b < tb.size(); ++b)
            out(a, b) = dot(fa, tb[b]);
    }
    return out;
}

}  // namespace

KillingDualityReport killing_duality_check(const Grading& gr)
{
    Matrix b = killing_form(gr.algebra());
    KillingDualityReport r;
    r.killing_rank = b.rank();
    r.semisimple = r.killing_rank == gr.algebra().dim();
    const int l = gr.l();
    for (int i = -l; i <= l; ++i)
        for (int j = i; j <= l; ++j) {
            if (i + j == 0)
                continue;
            DualityBlock blk{i, j, restrict_form(b, gr.part(i), gr.part(j)), 0, false};
            blk.rank = blk.block.rank();
            blk.ok = blk.block.is_zero();
            r.vanishing.push_back(std::move(blk));
        }
    for (int i = 0; i <= l; ++i) {
        DualityBlock blk{-i, i, restrict_form(b, gr.part(-i), gr.part(i)), 0, false};
        blk.rank = blk.block.rank();
        blk.ok = gr.part(-i).dim() == gr.part(i).dim() && blk.rank == gr.part(i).dim();
        r.pairings.push_back(std::move(blk));
    }
    return r;
}

GradedTorsionReport graded_torsion_check(const Grading& gr, const CurvatureModel& c)
{
    if (c.p() != gr.nonnegative())
        throw PMismatch("graded_torsion_check: curvature p differs from the nonnegative part of the grading");
    const std::size_t n = gr.algebra().dim();
    // adapted basis: columns are the graded basis vectors, tagged with degree
    std::vector<Vec> cols;
    std::vector<int> degree;
    for (int d = -gr.l(); d <= gr.l(); ++d)
        for (auto& v : gr.part(d).basis_vectors()) {
            cols.push_back(std::move(v));
            degree.push_back(d);
        }
    Matrix adapted = Matrix::from_columns(n, cols);

    GradedTorsionReport r;
    auto neg = gr.negative().basis_vectors();
    for (std::size_t a = 0; a < neg.size(); ++a)
        for (std::size_t b = a + 1; b < neg.size(); ++b) {
            Vector value = c(neg[a], neg[b]);
            auto coeff = adapted.solve(value);
            if (!coeff)
                throw Error("graded_torsion_check: grading parts do not span g");
            for (int d = -gr.l(); d < 0; ++d) {
                Vector comp(n);
                for (std::size_t k = 0; k < cols.size(); ++k)
                    if (degree[k] == d && !(*coeff)[k].is_zero())
                        comp = add(comp, scale((*coeff)[k], cols[k]));
                if (!is_zero(comp))
                    r.nonzero.push_back({neg[a], neg[b], d, std::move(comp)});
            }
        }
    return r;
}

}  // namespace dirac
