#pragma once

#include "charvar/integer.hpp"
#include "charvar/smith.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace charvar::groups {

using exact::Int;

/// Exponent tuple (n_1,...,n_r) of the one-relator family
/// <g_1,...,g_r | g_1^{n_1} = g_2^{n_2} = ... = g_r^{n_r}>.
struct GroupSpec {
    std::vector<long long> exponents;

    explicit GroupSpec(std::vector<long long> n) : exponents(std::move(n)) {
        if (exponents.empty()) throw std::invalid_argument("GroupSpec: need at least one exponent");
        for (long long v : exponents)
            if (v < 1) throw std::invalid_argument("GroupSpec: exponents must be >= 1");
    }

    std::size_t rank() const { return exponents.size(); }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

enum class GroupClass { Knot, Link };

/// Knot exactly when the exponents are pairwise coprime.
inline GroupClass classify(const GroupSpec& spec) {
    for (std::size_t i = 0; i < spec.rank(); ++i)
        for (std::size_t j = i + 1; j < spec.rank(); ++j)
            if (exact::gcd(Int(spec.exponents[i]), Int(spec.exponents[j])) != 1)
                return GroupClass::Link;
    return GroupClass::Knot;
}

/// Relation matrix of the abelianized presentation, r x (r-1):
/// column j carries -n_j at row j and n_{j+1} at row j+1.
inline exact::IntMatrix presentation_matrix(const GroupSpec& spec) {
    const std::size_t r = spec.rank();
    if (r < 2)
        throw std::invalid_argument("presentation_matrix: a single generator has no relations");
    exact::IntMatrix A(r, r - 1);
    for (std::size_t j = 0; j + 1 < r; ++j) {
        A(j, j) = -spec.exponents[j];
        A(j + 1, j) = spec.exponents[j + 1];
    }
    return A;
}

/// Z^free_rank plus cyclic factors; torsion lists the invariant factors
/// exceeding 1, in divisibility order. free_rank is always 1 here: the
/// relation matrix has full column rank r-1.
struct Abelianization {
    long long free_rank = 1;
    std::vector<Int> torsion;

    friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

inline Abelianization abelianize(const GroupSpec& spec) {
    Abelianization ab;
    if (spec.rank() == 1) return ab;  // free of rank 1, nothing to quotient
    exact::SmithDecomposition snf = exact::smith_normal_form(presentation_matrix(spec));
    long long nonzero = 0;
    for (const Int& f : snf.factors) {
        if (f != 0) ++nonzero;
        if (f > 1) ab.torsion.push_back(f);
    }
    ab.free_rank = static_cast<long long>(spec.rank()) - nonzero;
    return ab;
}

/// Witness that the abelianization is generated by a single element x:
/// x = sum b_i g_i with g_j = (N/n_j) x, N = prod n_i.
struct AbelianGenerator {
    std::vector<Int> coefficients;         // the b_i
    std::vector<Int> witness_multipliers;  // the N/n_j
};

/// Empty result means the group is a link group and no such generator exists.
inline std::optional<AbelianGenerator> abelian_generator(const GroupSpec& spec) {
    std::vector<Int> ns(spec.exponents.begin(), spec.exponents.end());
    std::optional<std::vector<Int>> b = exact::multi_bezout(ns);
    if (!b) return std::nullopt;
    Int N = 1;
    for (const Int& n : ns) N *= n;
    std::vector<Int> mult;
    mult.reserve(ns.size());
    for (const Int& n : ns) mult.push_back(N / n);
    return AbelianGenerator{std::move(*b), std::move(mult)};
}

}  // namespace charvar::groups
