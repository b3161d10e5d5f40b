#pragma once

#include "charvar/representation.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace charvar::replab {

namespace detail {

inline bool is_scalar_2x2(const ComplexMatrix& a, double tolerance) {
    Complex mean = a.trace() / 2.0;
    return (a - mean * ComplexMatrix::Identity(2, 2)).norm() <=
           tolerance * std::max(1.0, a.norm());
}

// v is an eigenvector of the 2x2 matrix a iff a*v is parallel to v
inline bool is_eigenvector_2x2(const ComplexMatrix& a, const Eigen::Vector2cd& v,
                               double tolerance) {
    Eigen::Vector2cd w = a * v;
    Complex cross = w(0) * v(1) - w(1) * v(0);
    return std::abs(cross) <= tolerance * std::max(1.0, a.norm()) * v.squaredNorm();
}

inline bool has_common_eigenvector_2x2(const Representation& rep, double tolerance) {
    const ComplexMatrix* anchor = nullptr;
    for (const ComplexMatrix& a : rep.matrices)
        if (!is_scalar_2x2(a, tolerance)) {
            anchor = &a;
            break;
        }
    if (!anchor) return true;  // all scalar, every line is invariant

    // a common eigenvector must be an eigenvector of the anchor, and a
    // 2x2 matrix has at most two eigenlines to try
    Eigen::ComplexEigenSolver<ComplexMatrix> es(*anchor);
    if (es.info() != Eigen::Success)
        throw domain_error("Ambiguous", "eigen-decomposition failed on a generator image");
    for (Eigen::Index c = 0; c < 2; ++c) {
        Eigen::Vector2cd v = es.eigenvectors().col(c);
        bool shared = true;
        for (const ComplexMatrix& a : rep.matrices)
            if (!is_eigenvector_2x2(a, v, tolerance)) {
                shared = false;
                break;
            }
        if (shared) return true;
    }
    return false;
}

}  // namespace detail

/// Commutator test for irreducibility of a 2x2 representation, cross
/// checked against the common-eigenvector criterion. The band between
/// tolerance and 10x tolerance is refused as undecidable, as is any
/// disagreement between the two tests.
inline bool is_irreducible_sl2(const Representation& rep) {
    validate(rep);
    if (rep.size() != 2)
        throw std::invalid_argument("is_irreducible_sl2: only 2x2 representations");

    double commutator_max = 0.0;
    const ComplexMatrix eye = ComplexMatrix::Identity(2, 2);
    for (std::size_t i = 0; i < rep.matrices.size(); ++i)
        for (std::size_t j = i + 1; j < rep.matrices.size(); ++j) {
            ComplexMatrix c = rep.matrices[i] * rep.matrices[j] * rep.matrices[i].inverse() *
                              rep.matrices[j].inverse();
            commutator_max = std::max(commutator_max, (c - eye).norm());
        }

    if (commutator_max >= rep.tolerance && commutator_max <= 10.0 * rep.tolerance)
        throw domain_error("Ambiguous",
                           "largest commutator norm " + std::to_string(commutator_max) +
                               " falls in the undecided band; tighten tolerance or input");
    bool irreducible = commutator_max > 10.0 * rep.tolerance;
    bool shared_line = detail::has_common_eigenvector_2x2(rep, rep.tolerance);
    if (irreducible == shared_line)
        throw domain_error("Ambiguous", "commutator and common-eigenvector tests disagree");
    return irreducible;
}

struct EigenspanCheck {
    Eigen::Index dim_base = 0;
    Eigen::Index dim_power = 0;
    bool equal = false;
};

/// Compares the dimension of the span of eigenvectors of A and of A^k.
/// For invertible A the two spans always agree; this op measures the
/// dimensions instead of assuming them, as numerical ranks of the
/// assembled eigenvector bases at the given relative tolerance.
inline EigenspanCheck eigenspan_check(const ComplexMatrix& a, long long k,
                                      double tolerance = kVerifyTol) {
    detail::require_square_finite(a, "eigenspan_check");
    if (k == 0) throw std::invalid_argument("eigenspan_check: power must be nonzero");
    if (std::abs(a.determinant()) <= kConstructionTol)
        throw domain_error("IllConditioned", "matrix is numerically singular");

    auto eigenvector_rank = [&](const ComplexMatrix& m) {
        Eigen::ComplexEigenSolver<ComplexMatrix> es(m);
        if (es.info() != Eigen::Success)
            throw domain_error("IllConditioned", "eigen-decomposition did not converge");
        ComplexMatrix v = es.eigenvectors();
        ComplexMatrix lambda = es.eigenvalues().asDiagonal();
        double residual = (m * v - v * lambda).norm();
        if (residual > tolerance * std::max(1.0, m.norm()))
            throw domain_error("IllConditioned",
                               "eigen-decomposition residual " + std::to_string(residual) +
                                   " exceeds tolerance");
        Eigen::JacobiSVD<ComplexMatrix> svd(v);
        Eigen::Index rank = 0;
        double top = svd.singularValues()(0);
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > tolerance * top) ++rank;
        return rank;
    };

    EigenspanCheck out;
    out.dim_base = eigenvector_rank(a);
    out.dim_power = eigenvector_rank(matrix_power(a, k));
    out.equal = out.dim_base == out.dim_power;
    return out;
}

/// One step of the retraction that normalizes the central charge: scales
/// generator i by |omega|^{-s/n_i}, so the charge moves to |omega|^{1-s}
/// times its phase, reaching the unit circle at s = 1.
inline Representation sdr_step(const Representation& rep, double s) {
    if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("sdr_step: s must lie in [0,1]");
    RelationCheck check = verify_relations(rep);
    if (!check.omega)
        throw domain_error("NonCentral", "generator powers do not share a scalar value");
    double lambda = std::abs(*check.omega);
    Representation out = rep;
    for (std::size_t i = 0; i < out.matrices.size(); ++i)
        out.matrices[i] *= std::pow(lambda, -s / static_cast<double>(rep.spec.exponents[i]));
    return out;
}

/// The rotation flow connecting components over different central
/// charges: multiplies generator i by e^{2 pi i k/n_i}. A full cycle
/// (k = lcm of the exponents) is the identity.
inline Representation z_flow(const Representation& rep, long long k) {
    RelationCheck check = verify_relations(rep);
    if (!check.omega)
        throw domain_error("NonCentral", "generator powers do not share a scalar value");
    if (std::abs(std::abs(*check.omega) - 1.0) > rep.tolerance)
        throw domain_error("NonCentral", "central charge must have modulus 1");
    Representation out = rep;
    for (std::size_t i = 0; i < out.matrices.size(); ++i) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(k % rep.spec.exponents[i]) /
                       static_cast<double>(rep.spec.exponents[i]);
        out.matrices[i] *= std::polar(1.0, angle);
    }
    return out;
}

/// Deformation of a central representation onto its diagonal (abelian)
/// limit: conjugates each generator by exp(t log(V_i^{-1})) where V_i is
/// its eigenvector basis. Sample 0 is the input; sample `steps` is the
/// exact diagonal endpoint, which is the closed form of the path at t=1.
inline std::vector<Representation> path_to_abelian(const Representation& rep, int steps,
                                                   std::uint64_t seed = 0) {
    validate(rep);
    if (rep.size() > 4)
        throw std::invalid_argument("path_to_abelian: supported up to 4x4 matrices");
    if (steps < 1) throw std::invalid_argument("path_to_abelian: steps must be >= 1");

    const Eigen::Index m = rep.size();
    const std::size_t r = rep.spec.rank();
    const ComplexMatrix eye = ComplexMatrix::Identity(m, m);

    // diagonalize every generator before looking at centrality: a
    // defective generator must fail as NotDiagonalizable even though it
    // can also never be exactly central
    std::vector<ComplexMatrix> basis(r), diagonal(r);
    std::vector<bool> already_diagonal(r);
    for (std::size_t i = 0; i < r; ++i) {
        const ComplexMatrix& a = rep.matrices[i];
        ComplexMatrix off = a;
        off.diagonal().setZero();
        if (off.norm() <= kConstructionTol * std::max(1.0, a.norm())) {
            // keep diagonal generators fixed; the eigensolver would
            // permute their entries and wiggle a path that should be
            // constant
            already_diagonal[i] = true;
            basis[i] = eye;
            diagonal[i] = ComplexMatrix(a.diagonal().asDiagonal());
            continue;
        }
        Eigen::ComplexEigenSolver<ComplexMatrix> es(a);
        if (es.info() != Eigen::Success)
            throw domain_error("NotDiagonalizable", "eigen-decomposition did not converge");
        ComplexMatrix v = es.eigenvectors();
        Eigen::JacobiSVD<ComplexMatrix> svd(v);
        double smin = svd.singularValues()(m - 1);
        if (smin <= 0 || svd.singularValues()(0) / smin > 1e8)
            throw domain_error("NotDiagonalizable",
                               "eigenvector basis condition number exceeds 1e8");
        basis[i] = v;
        diagonal[i] = ComplexMatrix(es.eigenvalues().asDiagonal());
    }

    RelationCheck check = verify_relations(rep);
    if (!check.omega)
        throw domain_error("NonCentral", "generator powers do not share a scalar value");

    // principal log of V^{-1}; when an eigenvalue sits on the negative
    // real axis, rephase the eigenvector columns (a det-preserving
    // unitary move) and retry
    Rng rng(seed);
    std::vector<ComplexMatrix> log_conjugator(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (already_diagonal[i]) {
            log_conjugator[i] = ComplexMatrix::Zero(m, m);
            continue;
        }
        bool safe = false;
        for (int attempt = 0; attempt < 8 && !safe; ++attempt) {
            ComplexMatrix w = basis[i].inverse();
            Eigen::ComplexEigenSolver<ComplexMatrix> es(w);
            safe = es.info() == Eigen::Success;
            for (Eigen::Index j = 0; safe && j < m; ++j) {
                Complex mu = es.eigenvalues()(j);
                if (std::abs(mu) < kConstructionTol ||
                    std::numbers::pi - std::abs(std::arg(mu)) < 1e-6)
                    safe = false;
            }
            if (safe) {
                log_conjugator[i] = w.log();
            } else {
                for (Eigen::Index j = 0; j < m; ++j)
                    basis[i].col(j) *= std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
            }
        }
        if (!safe)
            throw domain_error("NotDiagonalizable",
                               "no principal logarithm branch found for an eigenvector basis");
    }

    const double residual_budget = 100.0 * std::max(check.max_residual, kConstructionTol);
    std::vector<Representation> path;
    path.reserve(static_cast<std::size_t>(steps) + 1);
    for (int j = 0; j <= steps; ++j) {
        if (j == 0) {
            path.push_back(rep);
            continue;
        }
        Representation sample{rep.spec, {}, rep.tolerance};
        sample.matrices.reserve(r);
        if (j == steps) {
            for (std::size_t i = 0; i < r; ++i) sample.matrices.push_back(diagonal[i]);
        } else {
            double t = static_cast<double>(j) / static_cast<double>(steps);
            for (std::size_t i = 0; i < r; ++i) {
                if (already_diagonal[i]) {
                    sample.matrices.push_back(rep.matrices[i]);
                    continue;
                }
                ComplexMatrix h = (t * log_conjugator[i]).exp();
                sample.matrices.push_back(h * rep.matrices[i] * h.inverse());
            }
        }
        if (verify_relations(sample).max_residual > residual_budget)
            throw std::runtime_error("path_to_abelian: relation residual degraded along the path");
        path.push_back(std::move(sample));
    }
    return path;
}

/// Coordinate of the two-sided torus quotient of SL(2,C): the entry
/// product a*d, invariant under diag(l,1/l) * A * diag(u,1/u). The
/// complementary product is b*c = a*d - 1.
inline Complex double_coset_invariant(const ComplexMatrix& a, double tolerance = kVerifyTol) {
    detail::require_square_finite(a, "double_coset_invariant");
    if (a.rows() != 2) throw std::invalid_argument("double_coset_invariant: 2x2 input required");
    Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (std::abs(det - 1.0) > tolerance)
        throw domain_error("DeterminantNotOne", "input must have determinant 1");
    return a(0, 0) * a(1, 1);
}

}  // namespace charvar::replab
