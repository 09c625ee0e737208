#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace dirac {

/// Exact scalar field of a computation.
enum class Field { Q, Qi };

std::string_view to_string(Field f);

/// Element of Q(i): a pair of arbitrary-precision rationals with i^2 = -1.
///
/// A single runtime type serves both fields; a value with zero imaginary
/// part is an element of Q. Which field a computation lives in is tracked by
/// the objects that own the scalars (LieAlgebra, Subspace), not here.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
    Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar frac(long num, long den) { return Scalar(mpq_class(num, den)); }
    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    /// Accepts "p/q", "a/b+c/d i", "c/d i", "i", "-i", "3", "2*i".
    static Scalar parse(std::string_view text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical text form; parse(to_string()) round-trips.
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace dirac
