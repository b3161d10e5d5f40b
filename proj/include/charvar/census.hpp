#pragma once

#include "charvar/error.hpp"
#include "charvar/groups.hpp"
#include "charvar/root_of_unity.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace charvar::census {

using exact::Int;
using exact::RootOfUnity;

/// Eigenvalue tuple (lambda_1,...,lambda_r) with lambda_i^{n_i} shared:
/// +1 for sign +1, -1 for sign -1.
struct EigenTuple {
    std::vector<RootOfUnity> entries;
    int sign = 1;
};

struct SignTally {
    long long orbits = 0;
    long long exceptional = 0;
};

struct CensusReport {
    long long total_orbits = 0;
    long long exceptional_orbits = 0;
    long long component_count = 0;  // total_orbits - exceptional_orbits
    std::optional<SignTally> plus;
    std::optional<SignTally> minus;
    std::optional<Int> pre_quotient;  // for the distinct-eigenvalue census
    std::vector<EigenTuple> witnesses;
    std::vector<std::vector<std::vector<RootOfUnity>>> subset_witnesses;
};

struct EnumerateOptions {
    long long budget = 10'000'000;
    bool witnesses = false;
};

namespace detail {

// eigenvalues are addressed by index k in the canonical angle order of
// enumerate_roots(n, sign): angle k/n for sign +1, (2k+1)/(2n) for -1
inline long long invert_index(long long k, long long n, int sign) {
    if (sign == 1) return k == 0 ? 0 : n - k;
    return n - 1 - k;
}

inline bool central_index(long long k, long long n, int sign) {
    if (sign == 1) return k == 0 || 2 * k == n;
    return 2 * k + 1 == n;
}

inline RootOfUnity root_at(long long k, long long n, int sign) {
    return sign == 1 ? RootOfUnity::from_fraction(k, n)
                     : RootOfUnity::from_fraction(2 * k + 1, 2 * n);
}

/// Orbits of one eigenvalue-tuple family under coordinatewise inversion.
/// Counts canonical representatives directly (each coordinate at most its
/// inverse), then recounts with Burnside's lemma as an independent audit.
inline SignTally tally_sign_orbits(const groups::GroupSpec& spec, int sign,
                                   bool collect, std::vector<EigenTuple>* witnesses) {
    const std::size_t r = spec.rank();
    const std::vector<long long>& n = spec.exponents;

    // every candidate eigenvalue must raise to the stated sign
    for (std::size_t i = 0; i < r; ++i)
        for (long long k = 0; k < n[i]; ++k) {
            RootOfUnity target = root_at(k, n[i], sign).power(n[i]);
            bool ok = sign == 1 ? target.is_one() : target.is_minus_one();
            if (!ok) throw std::logic_error("eigenvalue census: root/sign mismatch");
        }

    SignTally tally;
    std::vector<long long> k(r, 0);
    for (;;) {
        bool canonical = true;
        for (std::size_t i = 0; i < r; ++i)
            if (invert_index(k[i], n[i], sign) < k[i]) {
                canonical = false;
                break;
            }
        if (canonical) {
            int noncentral = 0;
            for (std::size_t i = 0; i < r; ++i)
                if (!central_index(k[i], n[i], sign)) ++noncentral;
            ++tally.orbits;
            if (noncentral < 2) ++tally.exceptional;
            if (collect && noncentral >= 2) {
                EigenTuple w;
                w.sign = sign;
                w.entries.reserve(r);
                for (std::size_t i = 0; i < r; ++i) w.entries.push_back(root_at(k[i], n[i], sign));
                witnesses->push_back(std::move(w));
            }
        }
        // odometer, last coordinate fastest: lexicographic tuple order
        std::size_t pos = r;
        while (pos > 0 && ++k[pos - 1] == n[pos - 1]) k[--pos] = 0;
        if (pos == 0) break;
    }

    // audit: orbit count as the average number of tuples fixed by an
    // inversion pattern; a pattern fixes coordinate i iff it leaves it
    // alone or the eigenvalue is self-inverse (+-1)
    std::vector<long long> central_count(r, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (long long c = 0; c < n[i]; ++c)
            if (central_index(c, n[i], sign)) ++central_count[i];
    Int fixed_sum = 0;
    for (unsigned long long mask = 0; mask < (1ull << r); ++mask) {
        Int fixed = 1;
        for (std::size_t i = 0; i < r; ++i)
            fixed *= (mask >> i) & 1 ? central_count[i] : n[i];
        fixed_sum += fixed;
    }
    Int order = Int(1) << r;
    if (fixed_sum % order != 0 || fixed_sum / order != tally.orbits)
        throw std::logic_error("eigenvalue census: Burnside audit disagrees with direct count");

    return tally;
}

}  // namespace detail

/// Closed-form component count of the rank-2 character variety census;
/// defined when at most one exponent is even.
inline std::optional<Int> sl2_components_formula(const groups::GroupSpec& spec) {
    const std::size_t r = spec.rank();
    if (r < 2) throw std::invalid_argument("component census needs rank >= 2");
    int evens = 0;
    for (long long n : spec.exponents)
        if (n % 2 == 0) ++evens;
    if (evens >= 2) return std::nullopt;

    Int product = 1;
    Int sum = 0;
    for (long long n : spec.exponents) {
        product *= n + 1;
        sum += n;
    }
    Int half_power = Int(1) << (r - 1);
    if (product % half_power != 0)
        throw std::logic_error("component formula: product term not divisible by 2^{r-1}");
    return Int(static_cast<long long>(r)) - 2 - sum + product / half_power;
}

/// Direct census: enumerates both eigenvalue-tuple families, quotients by
/// coordinatewise inversion, and drops orbits whose representatives have
/// fewer than two non-central coordinates (those cannot carry an
/// irreducible pair).
inline CensusReport sl2_components_enumerate(const groups::GroupSpec& spec,
                                             const EnumerateOptions& opt = {}) {
    if (spec.rank() < 2) throw std::invalid_argument("component census needs rank >= 2");
    Int work = 1;
    for (long long n : spec.exponents) work *= n + 1;
    if (work > opt.budget)
        throw domain_error("BudgetExceeded",
                           "tuple enumeration needs " + work.str() + " tuples, budget is " +
                               std::to_string(opt.budget));

    CensusReport report;
    report.plus = detail::tally_sign_orbits(spec, +1, opt.witnesses, &report.witnesses);
    report.minus = detail::tally_sign_orbits(spec, -1, opt.witnesses, &report.witnesses);
    report.total_orbits = report.plus->orbits + report.minus->orbits;
    report.exceptional_orbits = report.plus->exceptional + report.minus->exceptional;
    report.component_count = report.total_orbits - report.exceptional_orbits;
    return report;
}

/// Component count of the free-product representation variety in GL(m,C):
/// one conjugacy class choice per generator.
inline Int free_product_components_gl(long long m, const groups::GroupSpec& spec) {
    if (m < 1) throw std::invalid_argument("free_product_components_gl: m must be >= 1");
    Int count = 1;
    for (long long n : spec.exponents) count *= exact::binomial(m + n - 1, m);
    return count;
}

struct RootClassList {
    Int count;
    std::vector<std::vector<RootOfUnity>> representatives;
};

/// Conjugacy classes of m-by-m matrices with A^n = I: size-m multisets of
/// n-th roots of unity, listed as nondecreasing angle tuples.
inline RootClassList nth_root_classes(long long m, long long n, long long budget = 10'000'000) {
    if (m < 1 || n < 1) throw std::invalid_argument("nth_root_classes: m, n must be >= 1");
    RootClassList out;
    out.count = exact::binomial(m + n - 1, n - 1);
    if (out.count > budget)
        throw domain_error("BudgetExceeded", "class list needs " + out.count.str() +
                                                 " entries, budget is " + std::to_string(budget));
    std::vector<long long> idx(static_cast<std::size_t>(m), 0);
    for (;;) {
        std::vector<RootOfUnity> rep;
        rep.reserve(idx.size());
        for (long long k : idx) rep.push_back(RootOfUnity::from_fraction(k, n));
        out.representatives.push_back(std::move(rep));
        // next nondecreasing index tuple in lexicographic order
        std::size_t pos = idx.size();
        while (pos > 0 && idx[pos - 1] == n - 1) --pos;
        if (pos == 0) break;
        long long v = ++idx[pos - 1];
        for (std::size_t j = pos; j < idx.size(); ++j) idx[j] = v;
    }
    return out;
}

/// Distinct-eigenvalue census: tuples of m-element eigenvalue subsets, one
/// per generator, modulo the simultaneous rotation flow that multiplies
/// the i-th subset by e^{2 pi i k/n_i}. Empty result: m exceeds some n_i,
/// so no m distinct n_i-th roots of unity exist.
inline std::optional<CensusReport> de_components(long long m, const groups::GroupSpec& spec,
                                                 const EnumerateOptions& opt = {}) {
    if (m < 1) throw std::invalid_argument("de_components: m must be >= 1");
    const std::size_t r = spec.rank();
    const std::vector<long long>& n = spec.exponents;
    if (m > *std::min_element(n.begin(), n.end())) return std::nullopt;

    Int pre_quotient = 1;
    for (long long ni : n) pre_quotient *= exact::binomial(ni, m);
    Int flow_order = 1;
    for (long long ni : n) flow_order = exact::lcm(flow_order, Int(ni));
    // the budget covers both sides of the quotient: the tuple count and
    // the order of the rotation flow the audit sums over
    if (pre_quotient > opt.budget || flow_order > opt.budget)
        throw domain_error("BudgetExceeded",
                           "census needs " + pre_quotient.str() + " tuples under a flow of order " +
                               flow_order.str() + ", budget is " + std::to_string(opt.budget));
    const long long N = flow_order.convert_to<long long>();
    const long long total = pre_quotient.convert_to<long long>();

    // per generator: all m-subsets in lexicographic order, plus the index
    // of each subset's rotation by one step
    std::vector<std::vector<std::vector<long long>>> subsets(r);
    std::vector<std::vector<long long>> rotated(r);
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<long long> pick(static_cast<std::size_t>(m));
        for (long long j = 0; j < m; ++j) pick[static_cast<std::size_t>(j)] = j;
        for (;;) {
            subsets[i].push_back(pick);
            // next m-combination of {0..n_i-1} in lexicographic order
            std::size_t pos = pick.size();
            while (pos > 0 && pick[pos - 1] == n[i] - static_cast<long long>(pick.size() - pos) - 1)
                --pos;
            if (pos == 0) break;
            long long v = ++pick[pos - 1];
            for (std::size_t j = pos; j < pick.size(); ++j) pick[j] = ++v;
        }
        rotated[i].resize(subsets[i].size());
        for (std::size_t s = 0; s < subsets[i].size(); ++s) {
            std::vector<long long> next = subsets[i][s];
            for (long long& e : next) e = (e + 1) % n[i];
            std::sort(next.begin(), next.end());
            auto it = std::lower_bound(subsets[i].begin(), subsets[i].end(), next);
            if (it == subsets[i].end() || *it != next)
                throw std::logic_error("distinct-eigenvalue census: rotation left the subset list");
            rotated[i][s] = static_cast<long long>(it - subsets[i].begin());
        }
    }

    std::vector<long long> stride(r);
    long long acc = 1;
    for (std::size_t i = 0; i < r; ++i) {
        stride[i] = acc;
        acc *= static_cast<long long>(subsets[i].size());
    }

    CensusReport report;
    report.pre_quotient = pre_quotient;
    std::vector<bool> visited(static_cast<std::size_t>(total), false);
    std::vector<long long> coords(r);
    for (long long start = 0; start < total; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        ++report.total_orbits;
        long long rem = start;
        for (std::size_t i = 0; i < r; ++i) {
            coords[i] = rem % static_cast<long long>(subsets[i].size());
            rem /= static_cast<long long>(subsets[i].size());
        }
        if (opt.witnesses) {
            std::vector<std::vector<RootOfUnity>> witness(r);
            for (std::size_t i = 0; i < r; ++i)
                for (long long e : subsets[i][static_cast<std::size_t>(coords[i])])
                    witness[i].push_back(RootOfUnity::from_fraction(e, n[i]));
            report.subset_witnesses.push_back(std::move(witness));
        }
        long long cur = start;
        do {
            visited[static_cast<std::size_t>(cur)] = true;
            cur = 0;
            for (std::size_t i = 0; i < r; ++i) {
                coords[i] = rotated[i][static_cast<std::size_t>(coords[i])];
                cur += coords[i] * stride[i];
            }
        } while (cur != start);
    }

    // audit: Burnside over the full flow; a shift fixes an m-subset of
    // Z_{n_i} iff the subset is a union of whole rotation cycles
    Int fixed_sum = 0;
    for (long long k = 0; k < N; ++k) {
        Int fixed = 1;
        for (std::size_t i = 0; i < r; ++i) {
            long long g = std::gcd(n[i], k);
            long long cycle = n[i] / g;
            fixed *= m % cycle == 0 ? exact::binomial(g, m / cycle) : Int(0);
        }
        fixed_sum += fixed;
    }
    if (fixed_sum % N != 0 || fixed_sum / N != report.total_orbits)
        throw std::logic_error(
            "distinct-eigenvalue census: Burnside audit disagrees with orbit walk");

    report.exceptional_orbits = 0;
    report.component_count = report.total_orbits;
    return report;
}

/// Closed form for the rank-2 distinct-eigenvalue census in GL(2,C) (and
/// PGL(2,C), which has the same component count). Empty result: exponents
/// not coprime or rank not 2, where the formula does not apply.
inline std::optional<Int> gl2_irr_components(const groups::GroupSpec& spec) {
    if (spec.rank() != 2) return std::nullopt;
    long long n1 = spec.exponents[0];
    long long n2 = spec.exponents[1];
    if (std::gcd(n1, n2) != 1) return std::nullopt;
    return Int(n1 / 2) * Int(n2 / 2);
}

struct McCruddenBound {
    bool bound_ok = false;
    Int lhs;
    Int rhs;
};

/// Checks the root-extraction class bound at the identity of GL(m,C):
/// the number of n-th root classes is at most n times the number of
/// n-th root classes with unit determinant (angle sum zero).
inline McCruddenBound mccrudden_bound_check(long long m, long long n,
                                            long long budget = 10'000'000) {
    if (m < 1 || n < 1) throw std::invalid_argument("mccrudden_bound_check: m, n must be >= 1");
    McCruddenBound out;
    out.lhs = exact::binomial(m + n - 1, n - 1);
    if (out.lhs > budget)
        throw domain_error("BudgetExceeded", "bound check needs " + out.lhs.str() +
                                                 " multisets, budget is " + std::to_string(budget));
    Int det_one = 0;
    std::vector<long long> idx(static_cast<std::size_t>(m), 0);
    for (;;) {
        long long angle_sum = 0;
        for (long long k : idx) angle_sum += k;
        if (angle_sum % n == 0) ++det_one;
        std::size_t pos = idx.size();
        while (pos > 0 && idx[pos - 1] == n - 1) --pos;
        if (pos == 0) break;
        long long v = ++idx[pos - 1];
        for (std::size_t j = pos; j < idx.size(); ++j) idx[j] = v;
    }
    out.rhs = Int(n) * det_one;
    out.bound_ok = out.lhs <= out.rhs;
    return out;
}

}  // namespace charvar::census
