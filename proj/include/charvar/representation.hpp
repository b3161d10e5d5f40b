#pragma once

#include "charvar/error.hpp"
#include "charvar/groups.hpp"
#include "charvar/root_of_unity.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace charvar::replab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// tolerance ladder: exact-by-construction checks, relation verification,
// and path following, each an order of magnitude apart plus headroom
inline constexpr double kConstructionTol = 1e-12;
inline constexpr double kVerifyTol = 1e-9;
inline constexpr double kPathTol = 1e-8;

/// Deterministic replacement for the implementation-defined standard
/// distributions; with a fixed seed the draw sequence is identical on
/// every platform. Never shared between call sites.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    double uniform() {  // [0,1), 53-bit resolution
        return static_cast<double>(state_() >> 11) * 0x1.0p-53;
    }

    double gaussian() {  // Box-Muller
        double u = 0.0;
        while (u == 0.0) u = uniform();
        double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
    }

    Complex complex_gaussian() {
        double re = gaussian();
        double im = gaussian();
        return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
    }

private:
    std::mt19937_64 state_;
};

/// Numeric image of the generators: matrices[i] represents generator i.
struct Representation {
    groups::GroupSpec spec;
    std::vector<ComplexMatrix> matrices;
    double tolerance = kVerifyTol;

    Eigen::Index size() const { return matrices.empty() ? 0 : matrices.front().rows(); }
};

namespace detail {

inline void require_square_finite(const ComplexMatrix& a, const char* where) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw std::invalid_argument(std::string(where) + ": matrices must be square and nonempty");
    if (!a.allFinite())
        throw std::invalid_argument(std::string(where) + ": matrix entries must be finite");
}

}  // namespace detail

inline void validate(const Representation& rep) {
    if (rep.matrices.size() != rep.spec.rank())
        throw std::invalid_argument("representation: one matrix per generator required");
    if (!(rep.tolerance > 0))
        throw std::invalid_argument("representation: tolerance must be positive");
    for (const ComplexMatrix& a : rep.matrices) {
        detail::require_square_finite(a, "representation");
        if (a.rows() != rep.size())
            throw std::invalid_argument("representation: matrices must share one size");
        if (std::abs(a.determinant()) <= rep.tolerance)
            throw std::invalid_argument("representation: matrices must be invertible");
    }
}

inline ComplexMatrix matrix_power(const ComplexMatrix& a, long long e) {
    detail::require_square_finite(a, "matrix_power");
    ComplexMatrix base = a;
    if (e < 0) {
        base = a.inverse();
        e = -e;
    }
    ComplexMatrix acc = ComplexMatrix::Identity(a.rows(), a.cols());
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

/// Complex-gaussian draw filtered to condition number <= 100, so that
/// conjugation by the result loses at most ~4 digits.
inline ComplexMatrix random_invertible(Rng& rng, Eigen::Index m) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        ComplexMatrix g(m, m);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < m; ++j) g(i, j) = rng.complex_gaussian();
        Eigen::JacobiSVD<ComplexMatrix> svd(g);
        double smin = svd.singularValues()(m - 1);
        if (smin > 0 && svd.singularValues()(0) / smin <= 100.0) return g;
    }
    throw std::runtime_error("random_invertible: no well-conditioned draw in 64 attempts");
}

/// Prescription for a representation built generator by generator as
/// g_i D_i g_i^{-1}: eigenvalue multisets D_i plus optional conjugators.
struct EigenConfig {
    groups::GroupSpec spec;
    std::vector<std::vector<exact::RootOfUnity>> roots;  // one multiset of size m per generator
    int sign = 1;
    std::optional<std::vector<ComplexMatrix>> conjugators;
};

inline Representation build_representation(const EigenConfig& config, std::uint64_t seed = 0,
                                           double tolerance = kVerifyTol) {
    const std::size_t r = config.spec.rank();
    if (config.sign != 1 && config.sign != -1)
        throw std::invalid_argument("build_representation: sign must be +1 or -1");
    if (config.roots.size() != r)
        throw std::invalid_argument("build_representation: one eigenvalue multiset per generator");
    const std::size_t m = config.roots.front().size();
    if (m == 0) throw std::invalid_argument("build_representation: empty eigenvalue multiset");
    for (std::size_t i = 0; i < r; ++i) {
        if (config.roots[i].size() != m)
            throw std::invalid_argument("build_representation: eigenvalue multisets must share one size");
        for (const exact::RootOfUnity& q : config.roots[i]) {
            exact::RootOfUnity p = q.power(config.spec.exponents[i]);
            bool ok = config.sign == 1 ? p.is_one() : p.is_minus_one();
            if (!ok)
                throw std::invalid_argument(
                    "build_representation: eigenvalue incompatible with its exponent and sign");
        }
    }

    std::vector<ComplexMatrix> conjugators;
    if (config.conjugators) {
        if (config.conjugators->size() != r)
            throw std::invalid_argument("build_representation: one conjugator per generator");
        for (const ComplexMatrix& g : *config.conjugators) {
            detail::require_square_finite(g, "build_representation");
            if (g.rows() != static_cast<Eigen::Index>(m))
                throw std::invalid_argument(
                    "build_representation: conjugator size must match eigenvalue count");
            if (std::abs(g.determinant()) < kConstructionTol)
                throw domain_error("SingularConjugator",
                                   "conjugator determinant below construction threshold");
        }
        conjugators = *config.conjugators;
    } else {
        Rng rng(seed);
        conjugators.reserve(r);
        for (std::size_t i = 0; i < r; ++i)
            conjugators.push_back(random_invertible(rng, static_cast<Eigen::Index>(m)));
    }

    Representation rep{config.spec, {}, tolerance};
    rep.matrices.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
        ComplexMatrix d = ComplexMatrix::Zero(static_cast<Eigen::Index>(m),
                                              static_cast<Eigen::Index>(m));
        for (std::size_t j = 0; j < m; ++j)
            d(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) =
                config.roots[i][j].value();
        rep.matrices.push_back(conjugators[i] * d * conjugators[i].inverse());
    }
    return rep;
}

/// Relation check: all generator powers A_i^{n_i} must coincide, and when
/// they agree with a scalar matrix the shared scalar is the central
/// charge. omega == 1 certifies a representation of the free product of
/// the cyclic groups Z_{n_i} (the relator acts trivially).
struct RelationCheck {
    double max_residual = 0.0;
    std::optional<Complex> omega;

    bool central() const { return omega.has_value(); }
};

inline RelationCheck verify_relations(const Representation& rep) {
    validate(rep);
    const std::size_t r = rep.spec.rank();
    std::vector<ComplexMatrix> powers;
    powers.reserve(r);
    for (std::size_t i = 0; i < r; ++i)
        powers.push_back(matrix_power(rep.matrices[i], rep.spec.exponents[i]));

    RelationCheck check;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            check.max_residual = std::max(check.max_residual, (powers[i] - powers[j]).norm());

    const Eigen::Index m = rep.size();
    Complex candidate = powers.front().trace() / static_cast<double>(m);
    double scalar_deviation = 0.0;
    ComplexMatrix eye = ComplexMatrix::Identity(m, m);
    for (const ComplexMatrix& p : powers)
        scalar_deviation = std::max(scalar_deviation, (p - candidate * eye).norm());
    if (scalar_deviation <= rep.tolerance) check.omega = candidate;
    return check;
}

}  // namespace charvar::replab
