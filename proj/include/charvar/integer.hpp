#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace charvar::exact {

using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

struct BezoutTriple {
    Int g;  // gcd(|a|,|b|), always >= 0
    Int s;
    Int t;  // s*a + t*b = g
};

/// Extended Euclid; zeros and negatives allowed.
inline BezoutTriple gcd_bezout(const Int& a, const Int& b) {
    // loop invariants: r0 = s0*a + t0*b and r1 = s1*a + t1*b
    Int r0 = a, r1 = b;
    Int s0 = 1, s1 = 0;
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;  // truncated quotient, |remainder| < |r1|
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 < 0) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

/// Coefficients b with sum_i b_i * (N/n_i) = 1, N = prod n_i.
/// Empty result means gcd(N/n_1,...,N/n_r) > 1, which happens exactly
/// when some pair of the n_i shares a factor.
inline std::optional<std::vector<Int>> multi_bezout(const std::vector<Int>& ns) {
    if (ns.empty()) throw std::invalid_argument("multi_bezout: empty modulus list");
    for (const Int& n : ns)
        if (n <= 0) throw std::invalid_argument("multi_bezout: moduli must be positive");

    Int N = 1;
    for (const Int& n : ns) N *= n;

    std::vector<Int> b(ns.size(), 0);
    Int g = N / ns[0];
    b[0] = 1;
    for (std::size_t i = 1; i < ns.size(); ++i) {
        // fold in the next multiplier: g' = s*g + t*(N/n_i)
        BezoutTriple e = gcd_bezout(g, N / ns[i]);
        for (std::size_t j = 0; j < i; ++j) b[j] *= e.s;
        b[i] = e.t;
        g = e.g;
    }
    if (g != 1) return std::nullopt;
    return b;
}

inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int c = 1;
    for (long long i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;  // exact: c is a running binomial coefficient
    }
    return c;
}

}  // namespace charvar::exact
