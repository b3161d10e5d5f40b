#pragma once

#include "charvar/integer.hpp"

#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace charvar::exact {

/// Point on the unit circle with rational angle, stored as the reduced
/// fraction num/den in [0,1) and standing for exp(2*pi*i*num/den).
class RootOfUnity {
public:
    RootOfUnity() = default;  // angle 0, the value 1

    static RootOfUnity from_fraction(Int num, Int den) {
        if (den == 0) throw std::invalid_argument("RootOfUnity: zero denominator");
        if (den < 0) {
            den = -den;
            num = -num;
        }
        num %= den;
        if (num < 0) num += den;
        Int g = exact::gcd(num, den);
        num /= g;
        den /= g;
        RootOfUnity q;
        q.num_ = num.convert_to<long long>();
        q.den_ = den.convert_to<long long>();
        return q;
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    RootOfUnity power(long long k) const { return from_fraction(Int(k) * num_, Int(den_)); }
    RootOfUnity inverse() const { return power(-1); }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
        return from_fraction(Int(a.num_) * b.den_ + Int(b.num_) * a.den_, Int(a.den_) * b.den_);
    }

    bool is_one() const { return num_ == 0; }
    bool is_minus_one() const { return den_ == 2; }  // 1/2 is the only reduced angle with den 2
    bool is_central() const { return is_one() || is_minus_one(); }

    std::complex<double> value() const {
        return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num_) /
                                   static_cast<double>(den_));
    }

    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

    // angle order; canonical form makes it total
    friend bool operator<(const RootOfUnity& a, const RootOfUnity& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }

private:
    long long num_ = 0;
    long long den_ = 1;
};

/// The n solutions of q^n = 1 (sign +1) or q^n = -1 (sign -1), sorted by angle.
inline std::vector<RootOfUnity> enumerate_roots(long long n, int sign) {
    if (n < 1) throw std::invalid_argument("enumerate_roots: order must be >= 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("enumerate_roots: sign must be +1 or -1");
    std::vector<RootOfUnity> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long long k = 0; k < n; ++k) {
        out.push_back(sign == 1 ? RootOfUnity::from_fraction(k, n)
                                : RootOfUnity::from_fraction(2 * k + 1, 2 * n));
    }
    return out;
}

}  // namespace charvar::exact
