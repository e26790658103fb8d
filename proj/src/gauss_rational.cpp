#include "gridzero/gauss_rational.hpp"

#include <stdexcept>

namespace gridzero {

GaussRational GaussRational::from_fraction(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return {q};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    // (a+bi)(c+di) = (ac - bd) + (ad + bc)i
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    *this *= inverse(o);
    return *this;
}

GaussRational inverse(const GaussRational& z) {
    if (z.is_zero()) throw std::domain_error("division by zero in Q(i)");
    mpq_class n = z.norm();
    return {mpq_class(z.re() / n), mpq_class(-z.im() / n)};
}

GaussRational GaussRational::pow(unsigned long e) const {
    GaussRational base = *this, acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string GaussRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re_) != 0) out = re_.get_str();
    if (sgn(im_) != 0) {
        mpq_class a = abs(im_);
        std::string ipart = (a == 1) ? "i" : a.get_str() + "*i";
        if (out.empty()) {
            out = (sgn(im_) < 0 ? "-" : "") + ipart;
        } else {
            out += (sgn(im_) < 0 ? "-" : "+") + ipart;
        }
    }
    return out;
}

}  // namespace gridzero
