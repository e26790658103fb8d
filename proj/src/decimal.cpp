#include "gridzero/decimal.hpp"

namespace gridzero {

const mpz_class& Fixed30::unit() {
    static const mpz_class u = [] {
        mpz_class v;
        mpz_ui_pow_ui(v.get_mpz_t(), 10, 30);
        return v;
    }();
    return u;
}

Fixed30 Fixed30::ratio(const mpz_class& num, const Fixed30& den) {
    if (den.scaled == 0) return {0};
    mpz_class q;
    mpz_class scaled_num = num * unit() * unit();
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), den.scaled.get_mpz_t());
    return {q};
}

std::string Fixed30::str() const {
    mpz_class ipart, frac;
    mpz_fdiv_qr(ipart.get_mpz_t(), frac.get_mpz_t(), scaled.get_mpz_t(), unit().get_mpz_t());
    std::string f = frac.get_str();
    f.insert(0, 30 - f.size(), '0');
    return ipart.get_str() + "." + f;
}

Fixed30 power_two_thirds(const mpz_class& n, bool* exact) {
    mpz_class arg = n * n * Fixed30::unit() * Fixed30::unit() * Fixed30::unit();
    mpz_class root;
    int is_exact = mpz_root(root.get_mpz_t(), arg.get_mpz_t(), 3);
    if (exact) {
        // Exactness of the scaled argument is equivalent to n^2 being a
        // perfect cube, since 10^90 is one.
        *exact = is_exact != 0;
    }
    return {root};
}

Fixed30 fixed30_from_ratio(const mpz_class& num, const mpz_class& den) {
    if (den == 0) return {0};
    mpz_class q;
    mpz_class scaled_num = num * Fixed30::unit();
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());
    return {q};
}

}  // namespace gridzero
