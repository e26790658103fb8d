#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace gridzero {

/// Exact element of Q(i), the computable subfield of C used for all
/// coordinates and coefficients. Both components are kept in lowest terms
/// with positive denominator (GMP canonical form).
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long n) : re_(n) {}  // NOLINT: implicit by design
    GaussRational(const mpz_class& n) : re_(n) {}
    GaussRational(const mpq_class& re) : re_(re) {}
    GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational unit_i() { return {mpq_class(0), mpq_class(1)}; }
    static GaussRational from_fraction(long num, long den);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussRational conj() const { return {re_, mpq_class(-im_)}; }
    /// |z|^2 = re^2 + im^2, an exact nonnegative rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }
    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    /// Lexicographic on (re, im). Not compatible with arithmetic; used only
    /// as a container ordering.
    friend bool operator<(const GaussRational& a, const GaussRational& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    GaussRational pow(unsigned long e) const;

    /// Canonical text, e.g. "0", "-1/2", "i", "-3*i", "1/2+2/3*i".
    /// Round-trips through the expression grammar.
    std::string str() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

GaussRational inverse(const GaussRational& z);

}  // namespace gridzero
