#include "dirac/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace dirac {

std::string_view to_string(Field f)
{
    return f == Field::Q ? "Q" : "Qi";
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero())
        throw std::domain_error("Scalar: division by zero");
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ /= o.re_;
        return *this;
    }
    mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

namespace {

std::string strip(std::string_view s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

mpq_class parse_rational(const std::string& text, std::string_view original)
{
    if (text.empty())
        throw std::invalid_argument("bad scalar '" + std::string(original) + "'");
    std::string body = text;
    if (body.front() == '+')
        body.erase(body.begin());
    std::size_t start = body.front() == '-' ? 1 : 0;
    bool seen_slash = false;
    if (start == body.size())
        throw std::invalid_argument("bad scalar '" + std::string(original) + "'");
    for (std::size_t k = start; k < body.size(); ++k) {
        char c = body[k];
        if (c == '/' && !seen_slash && k > start && k + 1 < body.size()) {
            seen_slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad scalar '" + std::string(original) + "'");
    }
    mpq_class q;
    if (q.set_str(body, 10) != 0)
        throw std::invalid_argument("bad scalar '" + std::string(original) + "'");
    if (seen_slash && sgn(q.get_den()) == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(original) + "'");
    q.canonicalize();
    return q;
}

// Imaginary term without the trailing i: "", "+", "-", "3/4", "-2", "3/4*".
mpq_class parse_imag_coeff(std::string text, std::string_view original)
{
    if (!text.empty() && text.back() == '*')
        text.pop_back();
    if (text.empty() || text == "+")
        return 1;
    if (text == "-")
        return -1;
    return parse_rational(text, original);
}

}  // namespace

Scalar Scalar::parse(std::string_view raw)
{
    std::string s = strip(raw);
    if (s.empty())
        throw std::invalid_argument("empty scalar");
    if (s.back() != 'i')
        return Scalar(parse_rational(s, raw));
    s.pop_back();
    // split at the last sign that is not leading; that sign starts the imaginary term
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos)
        return Scalar(mpq_class(0), parse_imag_coeff(s, raw));
    return Scalar(parse_rational(s.substr(0, split), raw),
                  parse_imag_coeff(s.substr(split), raw));
}

std::string Scalar::to_string() const
{
    if (sgn(im_) == 0)
        return re_.get_str();
    std::string im_text;
    if (im_ == 1)
        im_text = "i";
    else if (im_ == -1)
        im_text = "-i";
    else
        im_text = im_.get_str() + " i";
    if (sgn(re_) == 0)
        return im_text;
    if (sgn(im_) > 0)
        return re_.get_str() + "+" + im_text;
    return re_.get_str() + im_text;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.to_string();
}

}  // namespace dirac
