#pragma once

#include <gmpxx.h>

#include <string>

namespace gridzero {

/// Nonnegative fixed-point decimal with 30 fractional digits, stored as
/// value * 10^30 truncated. Used for the irrational 2/3-power envelope
/// terms so reports stay deterministic and byte-identical.
struct Fixed30 {
    mpz_class scaled;

    static const mpz_class& unit();  // 10^30

    static Fixed30 from_integer(const mpz_class& n) { return {n * unit()}; }

    /// num / den, truncated; den must be positive.
    static Fixed30 ratio(const mpz_class& num, const Fixed30& den);

    bool is_zero() const { return scaled == 0; }
    std::string str() const;

    friend bool operator<(const Fixed30& a, const Fixed30& b) { return a.scaled < b.scaled; }
    friend bool operator==(const Fixed30& a, const Fixed30& b) { return a.scaled == b.scaled; }

    Fixed30 operator+(const Fixed30& o) const { return {scaled + o.scaled}; }
};

/// floor(n^{2/3} * 10^30) for n >= 0, computed by an exact integer cube
/// root. `exact` is set when n^{2/3} is an integer.
Fixed30 power_two_thirds(const mpz_class& n, bool* exact = nullptr);

/// Exact rational to 30-digit decimal (truncated).
Fixed30 fixed30_from_ratio(const mpz_class& num, const mpz_class& den);

}  // namespace gridzero
