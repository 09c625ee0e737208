#include "dirac/problem.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace dirac {

using nlohmann::json;

namespace {

/// Maps JSON pointers of the source text to the line where each value starts.
class LineIndex {
public:
    explicit LineIndex(std::string_view text) : text_(text)
    {
        line_starts_.push_back(0);
        for (std::size_t k = 0; k < text.size(); ++k)
            if (text[k] == '\n')
                line_starts_.push_back(k + 1);
        std::size_t pos = 0;
        skip_ws(pos);
        if (pos < text_.size())
            value(pos, "");
    }

    std::size_t line(std::string pointer) const
    {
        while (true) {
            if (auto it = lines_.find(pointer); it != lines_.end())
                return it->second;
            auto slash = pointer.rfind('/');
            if (slash == std::string::npos)
                return 0;
            pointer.erase(slash);
        }
    }

private:
    std::size_t line_of(std::size_t pos) const
    {
        auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), pos);
        return static_cast<std::size_t>(it - line_starts_.begin());
    }

    void skip_ws(std::size_t& pos) const
    {
        while (pos < text_.size() && (text_[pos] == ' ' || text_[pos] == '\t' || text_[pos] == '\n' || text_[pos] == '\r'))
            ++pos;
    }

    std::string string_token(std::size_t& pos) const
    {
        std::string out;
        ++pos;  // opening quote
        while (pos < text_.size() && text_[pos] != '"') {
            if (text_[pos] == '\\' && pos + 1 < text_.size()) {
                out.push_back(text_[pos + 1]);
                pos += 2;
                continue;
            }
            out.push_back(text_[pos++]);
        }
        ++pos;  // closing quote
        return out;
    }

    static std::string escape(const std::string& key)
    {
        std::string out;
        for (char c : key) {
            if (c == '~')
                out += "~0";
            else if (c == '/')
                out += "~1";
            else
                out.push_back(c);
        }
        return out;
    }

    void value(std::size_t& pos, const std::string& pointer)
    {
        lines_.emplace(pointer, line_of(pos));
        if (pos >= text_.size())
            return;
        char c = text_[pos];
        if (c == '{') {
            ++pos;
            skip_ws(pos);
            while (pos < text_.size() && text_[pos] != '}') {
                std::string key = string_token(pos);
                skip_ws(pos);
                ++pos;  // colon
                skip_ws(pos);
                value(pos, pointer + "/" + escape(key));
                skip_ws(pos);
                if (pos < text_.size() && text_[pos] == ',') {
                    ++pos;
                    skip_ws(pos);
                }
            }
            ++pos;
        } else if (c == '[') {
            ++pos;
            skip_ws(pos);
            std::size_t idx = 0;
            while (pos < text_.size() && text_[pos] != ']') {
                value(pos, pointer + "/" + std::to_string(idx++));
                skip_ws(pos);
                if (pos < text_.size() && text_[pos] == ',') {
                    ++pos;
                    skip_ws(pos);
                }
            }
            ++pos;
        } else if (c == '"') {
            string_token(pos);
        } else {
            while (pos < text_.size() && text_[pos] != ',' && text_[pos] != '}' && text_[pos] != ']' &&
                   text_[pos] != ' ' && text_[pos] != '\n' && text_[pos] != '\r' && text_[pos] != '\t')
                ++pos;
        }
    }

    std::string_view text_;
    std::vector<std::size_t> line_starts_;
    std::map<std::string, std::size_t> lines_;
};

class Reader {
public:
    Reader(const json& root, const LineIndex& index) : root_(root), index_(index) {}

    [[noreturn]] void fail(const std::string& message, const std::string& pointer) const
    {
        throw ProblemError(message, pointer.empty() ? "/" : pointer, index_.line(pointer));
    }

    const json& at(const std::string& pointer) const { return root_.at(json::json_pointer(pointer)); }

    long integer(const std::string& ptr) const
    {
        const json& j = at(ptr);
        if (!j.is_number_integer())
            fail("expected an integer", ptr);
        return j.get<long>();
    }

    std::size_t index(const std::string& ptr, std::size_t bound) const
    {
        long v = integer(ptr);
        if (v < 1 || static_cast<std::size_t>(v) > bound)
            fail("index " + std::to_string(v) + " out of range 1.." + std::to_string(bound), ptr);
        return static_cast<std::size_t>(v - 1);
    }

    Scalar scalar(const std::string& ptr, Field field) const
    {
        const json& j = at(ptr);
        Scalar s;
        if (j.is_number_integer()) {
            s = Scalar(j.get<long>());
        } else if (j.is_string()) {
            try {
                s = Scalar::parse(j.get<std::string>());
            } catch (const std::exception& e) {
                fail(e.what(), ptr);
            }
        } else {
            fail("expected a scalar string such as \"p/q\" or \"a/b+c/d i\"", ptr);
        }
        if (field == Field::Q && !s.is_real())
            fail("imaginary scalar in a problem over Q", ptr);
        return s;
    }

    Vec vector(const std::string& ptr, std::size_t len, Field field) const
    {
        const json& j = at(ptr);
        if (!j.is_array())
            fail("expected a coordinate list", ptr);
        if (j.size() != len)
            fail("expected " + std::to_string(len) + " coordinates, got " + std::to_string(j.size()), ptr);
        Vec v(len);
        for (std::size_t k = 0; k < len; ++k)
            v[k] = scalar(ptr + "/" + std::to_string(k), field);
        return v;
    }

    std::vector<Vec> vector_list(const std::string& ptr, std::size_t len, Field field) const
    {
        const json& j = at(ptr);
        if (!j.is_array())
            fail("expected a list of coordinate lists", ptr);
        std::vector<Vec> out;
        for (std::size_t k = 0; k < j.size(); ++k)
            out.push_back(vector(ptr + "/" + std::to_string(k), len, field));
        return out;
    }

    /// List of {"i","j",<value_key>} entries filling an antisymmetric table.
    template <typename Set>
    void antisymmetric_entries(const std::string& ptr, std::size_t bound, const char* value_key, Set set,
                               const std::function<Vec(const std::string&)>& read_value, const char* what) const
    {
        const json& j = at(ptr);
        if (!j.is_array())
            fail(std::string("expected a list of {\"i\",\"j\",\"") + value_key + "\"} entries", ptr);
        std::map<std::pair<std::size_t, std::size_t>, Vec> seen;
        for (std::size_t e = 0; e < j.size(); ++e) {
            std::string ep = ptr + "/" + std::to_string(e);
            if (!at(ep).is_object())
                fail("expected an object", ep);
            for (const auto& [key, _] : at(ep).items())
                if (key != "i" && key != "j" && key != value_key)
                    fail("unknown key \"" + key + "\"", ep + "/" + key);
            for (const char* key : {"i", "j", value_key})
                if (!at(ep).contains(key))
                    fail(std::string("missing key \"") + key + "\"", ep);
            std::size_t i = index(ep + "/i", bound);
            std::size_t jj = index(ep + "/j", bound);
            Vec v = read_value(ep + "/" + value_key);
            std::string label = std::string(what) + "[" + std::to_string(i + 1) + "][" + std::to_string(jj + 1) + "]";
            if (i == jj && !is_zero(v))
                fail("AntisymmetryViolation: " + label + " must vanish", ep);
            if (auto it = seen.find({jj, i}); it != seen.end() && i != jj && it->second != scale(Scalar(-1), v))
                fail("AntisymmetryViolation: " + label + " != -" + what + "[" + std::to_string(jj + 1) + "][" +
                         std::to_string(i + 1) + "]",
                     ep);
            if (auto it = seen.find({i, jj}); it != seen.end() && it->second != v)
                fail("conflicting duplicate entry for " + label, ep);
            seen[{i, jj}] = v;
            set(i, jj, v);
        }
    }

private:
    const json& root_;
    const LineIndex& index_;
};

const std::set<std::string> kKnownKeys = {"field", "dim", "basis_names", "brackets", "p", "curvature", "D",
                                          "E", "eps", "grading", "E_candidates", "name", "description"};

}  // namespace

ProblemFile parse_problem(std::string_view text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        // byte offset -> line
        std::size_t line = 1;
        for (std::size_t k = 0; k < std::min<std::size_t>(e.byte, text.size()); ++k)
            if (text[k] == '\n')
                ++line;
        throw ProblemError(std::string("malformed JSON: ") + e.what(), "", line);
    }
    LineIndex index(text);
    Reader rd(root, index);
    if (!root.is_object())
        rd.fail("top level must be an object", "");
    for (const auto& [key, _] : root.items())
        if (!kKnownKeys.contains(key))
            rd.fail("unknown key \"" + key + "\"", "/" + key);

    ProblemFile prob;
    if (!root.contains("field"))
        rd.fail("missing key \"field\"", "");
    if (!root["field"].is_string() || (root["field"] != "Q" && root["field"] != "Qi"))
        rd.fail("field must be \"Q\" or \"Qi\"", "/field");
    prob.field = root["field"] == "Q" ? Field::Q : Field::Qi;
    if (!root.contains("dim"))
        rd.fail("missing key \"dim\"", "");
    long dim = rd.integer("/dim");
    if (dim < 1)
        rd.fail("dim must be positive", "/dim");
    prob.dim = static_cast<std::size_t>(dim);
    const std::size_t n = prob.dim;

    if (root.contains("basis_names")) {
        const json& names = root["basis_names"];
        if (!names.is_array() || names.size() != n)
            rd.fail("basis_names must list " + std::to_string(n) + " strings", "/basis_names");
        for (std::size_t k = 0; k < n; ++k) {
            if (!names[k].is_string())
                rd.fail("expected a string", "/basis_names/" + std::to_string(k));
            prob.basis_names.push_back(names[k].get<std::string>());
        }
    }

    prob.brackets = StructureTensor(n);
    if (root.contains("brackets")) {
        rd.antisymmetric_entries(
            "/brackets", n, "coeffs",
            [&](std::size_t i, std::size_t j, const Vec& v) { prob.brackets.set_bracket(i, j, v); },
            [&](const std::string& ptr) { return rd.vector(ptr, n, prob.field); }, "c");
    }

    if (root.contains("p"))
        prob.p = rd.vector_list("/p", n, prob.field);

    if (root.contains("curvature")) {
        CurvatureTensor kappa(n);
        rd.antisymmetric_entries(
            "/curvature", n, "coeffs", [&](std::size_t i, std::size_t j, const Vec& v) { kappa.set_bracket(i, j, v); },
            [&](const std::string& ptr) { return rd.vector(ptr, n, prob.field); }, "kappa");
        prob.curvature = std::move(kappa);
    }

    if (root.contains("D"))
        prob.D = rd.vector_list("/D", 2 * n, prob.field);

    if (root.contains("eps") && !root.contains("E"))
        rd.fail("\"eps\" given without \"E\"", "/eps");
    if (root.contains("E")) {
        prob.E = rd.vector_list("/E", n, prob.field);
        const std::size_t k = prob.E->size();
        if (Subspace::span(n, *prob.E).dim() != k)
            rd.fail("E vectors must be linearly independent", "/E");
        Matrix eps(k, k);
        if (root.contains("eps")) {
            if (k == 0 && !root["eps"].empty())
                rd.fail("eps entries given for E = 0", "/eps");
            rd.antisymmetric_entries(
                "/eps", std::max<std::size_t>(k, 1), "value",
                [&](std::size_t i, std::size_t j, const Vec& v) {
                    eps(i, j) = v[0];
                    eps(j, i) = -v[0];
                },
                [&](const std::string& ptr) { return Vec{rd.scalar(ptr, prob.field)}; }, "eps");
        }
        prob.eps = std::move(eps);
    }

    if (root.contains("grading")) {
        const json& gj = root["grading"];
        if (!gj.is_object() || !gj.contains("l") || !gj.contains("parts"))
            rd.fail("grading must be an object with \"l\" and \"parts\"", "/grading");
        ProblemFile::GradingSpec spec;
        long l = rd.integer("/grading/l");
        if (l < 0)
            rd.fail("l must be nonnegative", "/grading/l");
        spec.l = static_cast<int>(l);
        const json& parts = gj["parts"];
        if (!parts.is_array() || parts.size() != static_cast<std::size_t>(2 * l + 1))
            rd.fail("parts must list 2l+1 = " + std::to_string(2 * l + 1) + " vector lists", "/grading/parts");
        for (std::size_t k = 0; k < parts.size(); ++k)
            spec.parts.push_back(rd.vector_list("/grading/parts/" + std::to_string(k), n, prob.field));
        prob.grading = std::move(spec);
    }

    if (root.contains("E_candidates")) {
        const json& cj = root["E_candidates"];
        if (!cj.is_array())
            rd.fail("E_candidates must be a list of vector lists", "/E_candidates");
        for (std::size_t k = 0; k < cj.size(); ++k)
            prob.e_candidates.push_back(rd.vector_list("/E_candidates/" + std::to_string(k), n, prob.field));
    }
    return prob;
}

ProblemFile load_problem(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::ios_base::failure("cannot open problem file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

LieAlgebra ProblemFile::algebra() const
{
    return LieAlgebra(field, brackets, basis_names);
}

Subspace ProblemFile::p_space() const
{
    return Subspace::span(dim, p);
}

CurvatureModel ProblemFile::curvature_model() const
{
    if (!curvature)
        return CurvatureModel::flat(algebra(), p_space());
    return CurvatureModel(algebra(), p_space(), *curvature);
}

std::optional<IsotropicPair> ProblemFile::pair() const
{
    if (!E)
        return std::nullopt;
    return IsotropicPair::from_basis(dim, *E, *eps);
}

std::optional<DoubleSubspace> ProblemFile::dirac_candidate() const
{
    if (D)
        return Subspace::span(2 * dim, *D);
    if (auto pr = pair())
        return build_L(*pr);
    return std::nullopt;
}

std::optional<Grading> ProblemFile::grading_model() const
{
    if (!grading)
        return std::nullopt;
    std::vector<Subspace> parts;
    for (const auto& vs : grading->parts)
        parts.push_back(Subspace::span(dim, vs));
    return Grading(algebra(), grading->l, std::move(parts));
}

std::string ProblemFile::name(std::size_t k) const
{
    if (k < basis_names.size())
        return basis_names[k];
    return "e" + std::to_string(k + 1);
}

json to_json(const Scalar& s)
{
    return s.to_string();
}

json to_json(const Vec& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(x.to_string());
    return out;
}

json to_json(const Matrix& m)
{
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.push_back(to_json(m.row_vec(r)));
    return out;
}

json basis_json(const Subspace& s)
{
    return to_json(s.basis());
}

namespace {

std::string combination(const Vec& v, const std::function<std::string(std::size_t)>& label)
{
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const Scalar& c = v[k];
        if (c.is_zero())
            continue;
        bool negative = c.is_real() && sgn(c.re()) < 0;
        Scalar mag = negative ? -c : c;
        std::string coeff;
        if (mag != Scalar(1))
            coeff = mag.is_real() ? mag.to_string() + " " : "(" + mag.to_string() + ") ";
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += coeff + label(k);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string format_vector(const ProblemFile& prob, const Vec& v)
{
    return combination(v, [&](std::size_t k) { return prob.name(k); });
}

std::string format_double(const ProblemFile& prob, const Vec& coords)
{
    const std::size_t n = prob.dim;
    return combination(coords, [&](std::size_t k) { return k < n ? prob.name(k) : prob.name(k - n) + "*"; });
}

}  // namespace dirac
