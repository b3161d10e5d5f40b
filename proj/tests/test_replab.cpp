#include <charvar/charvar.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

namespace ex = charvar::exact;
namespace gr = charvar::groups;
namespace rl = charvar::replab;

using ex::RootOfUnity;
using gr::GroupSpec;
using rl::Complex;
using rl::ComplexMatrix;
using rl::Representation;

namespace {

ComplexMatrix diag2(Complex a, Complex b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

// diag(lambda, 1/lambda), the standard torus element of SL(2,C)
ComplexMatrix torus2(Complex lambda) { return diag2(lambda, 1.0 / lambda); }

ComplexMatrix jordan2(Complex lambda) {
  ComplexMatrix m = diag2(lambda, lambda);
  m(0, 1) = 1.0;
  return m;
}

Representation make_rep(GroupSpec spec, std::vector<ComplexMatrix> ms,
                        double tol = rl::kVerifyTol) {
  return Representation{std::move(spec), std::move(ms), tol};
}

rl::EigenConfig config45() {
  rl::EigenConfig cfg{GroupSpec{{4, 5}},
                      {{RootOfUnity::from_fraction(1, 4), RootOfUnity::from_fraction(3, 4)},
                       {RootOfUnity::from_fraction(1, 5), RootOfUnity::from_fraction(4, 5)}},
                      1,
                      std::nullopt};
  return cfg;
}

double matrices_distance(const Representation& a, const Representation& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.matrices.size(); ++i)
    d = std::max(d, (a.matrices[i] - b.matrices[i]).norm());
  return d;
}

}  // namespace

TEST(Rng, DeterministicAcrossInstances) {
  rl::Rng a(99), b(99), c(100);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 64; ++i) {
    double x = a.uniform(), y = b.uniform(), z = c.uniform();
    all_equal = all_equal && x == y;
    any_diff = any_diff || x != z;
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
  }
  EXPECT_TRUE(all_equal);
  EXPECT_TRUE(any_diff);
  for (int i = 0; i < 64; ++i) ASSERT_TRUE(std::isfinite(a.gaussian()));
}

TEST(Rng, RandomInvertibleIsWellConditioned) {
  rl::Rng rng(3);
  for (int it = 0; it < 20; ++it) {
    ComplexMatrix g = rl::random_invertible(rng, 3);
    Eigen::JacobiSVD<ComplexMatrix> svd(g);
    double cond = svd.singularValues()(0) / svd.singularValues()(2);
    ASSERT_LE(cond, 100.0);
  }
}

TEST(MatrixPower, BasicLaws) {
  rl::Rng rng(17);
  ComplexMatrix a = rl::random_invertible(rng, 3);
  EXPECT_NEAR((rl::matrix_power(a, 0) - ComplexMatrix::Identity(3, 3)).norm(), 0.0, 1e-15);
  ComplexMatrix m5 = a * a * a * a * a;
  EXPECT_LE((rl::matrix_power(a, 5) - m5).norm(), 1e-10 * m5.norm());
  ComplexMatrix inv2 = rl::matrix_power(a, -2);
  EXPECT_LE((inv2 * a * a - ComplexMatrix::Identity(3, 3)).norm(), 1e-10);
}

TEST(Validate, RejectsMalformedInput) {
  GroupSpec spec{{2, 3}};
  EXPECT_THROW(rl::validate(make_rep(spec, {ComplexMatrix::Identity(2, 2)})),
               std::invalid_argument);
  EXPECT_THROW(rl::validate(make_rep(spec, {ComplexMatrix::Identity(2, 2),
                                            ComplexMatrix::Identity(3, 3)})),
               std::invalid_argument);
  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(rl::validate(make_rep(spec, {bad, ComplexMatrix::Identity(2, 2)})),
               std::invalid_argument);
  EXPECT_THROW(rl::validate(make_rep(spec, {ComplexMatrix::Zero(2, 2),
                                            ComplexMatrix::Identity(2, 2)})),
               std::invalid_argument);
  rl::validate(make_rep(spec, {ComplexMatrix::Identity(2, 2),
                               ComplexMatrix::Identity(2, 2)}));
}

TEST(Build, IdentityConjugatorsGiveDiagonalMatrices) {
  auto cfg = config45();
  cfg.conjugators = std::vector<ComplexMatrix>{ComplexMatrix::Identity(2, 2),
                                               ComplexMatrix::Identity(2, 2)};
  auto rep = rl::build_representation(cfg);
  Complex i(0.0, 1.0);
  EXPECT_LE((rep.matrices[0] - diag2(i, -i)).norm(), 1e-15);
  auto zeta = RootOfUnity::from_fraction(1, 5).value();
  auto zeta4 = RootOfUnity::from_fraction(4, 5).value();
  EXPECT_LE((rep.matrices[1] - diag2(zeta, zeta4)).norm(), 1e-15);

  auto check = rl::verify_relations(rep);
  EXPECT_LE(check.max_residual, 1e-12);
  ASSERT_TRUE(check.central());
  EXPECT_NEAR(check.omega->real(), 1.0, 1e-12);
  EXPECT_NEAR(check.omega->imag(), 0.0, 1e-12);
}

TEST(Build, SeededBuildVerifiesWithTinyResidual) {
  auto rep = rl::build_representation(config45(), 7);
  auto check = rl::verify_relations(rep);
  EXPECT_LE(check.max_residual, 1e-12);
  ASSERT_TRUE(check.central());
  EXPECT_NEAR(std::abs(*check.omega - Complex(1.0, 0.0)), 0.0, 1e-12);
}

TEST(Build, MinusSignCentralChargeIsMinusOne) {
  rl::EigenConfig cfg{GroupSpec{{3, 5}},
                      {{RootOfUnity::from_fraction(1, 6), RootOfUnity::from_fraction(5, 6)},
                       {RootOfUnity::from_fraction(1, 10), RootOfUnity::from_fraction(9, 10)}},
                      -1,
                      std::nullopt};
  auto rep = rl::build_representation(cfg, 11);
  auto check = rl::verify_relations(rep);
  EXPECT_LE(check.max_residual, 1e-12);
  ASSERT_TRUE(check.central());
  EXPECT_NEAR(check.omega->real(), -1.0, 1e-12);
  EXPECT_NEAR(check.omega->imag(), 0.0, 1e-12);
}

TEST(Build, DeterministicInSeed) {
  auto a = rl::build_representation(config45(), 42);
  auto b = rl::build_representation(config45(), 42);
  auto c = rl::build_representation(config45(), 43);
  EXPECT_EQ(matrices_distance(a, b), 0.0);
  EXPECT_GT(matrices_distance(a, c), 1e-6);
}

TEST(Build, RejectsBadInput) {
  // eigenvalue incompatible with exponent and sign
  rl::EigenConfig wrong{GroupSpec{{4}}, {{RootOfUnity::from_fraction(1, 8)}}, 1, std::nullopt};
  EXPECT_THROW(rl::build_representation(wrong), std::invalid_argument);

  auto cfg = config45();
  cfg.conjugators = std::vector<ComplexMatrix>{ComplexMatrix::Zero(2, 2),
                                               ComplexMatrix::Identity(2, 2)};
  try {
    rl::build_representation(cfg);
    FAIL() << "expected SingularConjugator";
  } catch (const charvar::domain_error& e) {
    EXPECT_EQ(e.name(), "SingularConjugator");
  }
}

TEST(Verify, NonCentralTorusPairHasResidualTwo) {
  Complex i(0.0, 1.0);
  auto rep = make_rep(GroupSpec{{4, 5}}, {torus2(i), torus2(i)});
  auto check = rl::verify_relations(rep);
  EXPECT_NEAR(check.max_residual, 2.0, 1e-12);
  EXPECT_FALSE(check.central());
}

TEST(Verify, TrivialRepresentationCertifiesFreeProduct) {
  auto rep = make_rep(GroupSpec{{2, 3}}, {ComplexMatrix::Identity(1, 1),
                                          ComplexMatrix::Identity(1, 1)});
  auto check = rl::verify_relations(rep);
  EXPECT_EQ(check.max_residual, 0.0);
  ASSERT_TRUE(check.central());
  EXPECT_EQ(*check.omega, Complex(1.0, 0.0));
}

TEST(Irreducible, DiagonalPairIsReducible) {
  auto cfg = config45();
  cfg.conjugators = std::vector<ComplexMatrix>{ComplexMatrix::Identity(2, 2),
                                               ComplexMatrix::Identity(2, 2)};
  auto rep = rl::build_representation(cfg);
  EXPECT_FALSE(rl::is_irreducible_sl2(rep));
}

TEST(Irreducible, ScalarPairIsReducible) {
  auto rep = make_rep(GroupSpec{{2, 2}}, {ComplexMatrix::Identity(2, 2),
                                          -ComplexMatrix::Identity(2, 2)});
  EXPECT_FALSE(rl::is_irreducible_sl2(rep));
}

TEST(Irreducible, GenericSeededPairIsIrreducible) {
  auto rep = rl::build_representation(config45(), 5);
  EXPECT_TRUE(rl::is_irreducible_sl2(rep));
}

TEST(Irreducible, UndecidedBandRefuses) {
  // a nearly-commuting pair keeps the commutator norm small, so the
  // tolerance placed at a fifth of it stays far below the determinant
  auto cfg = config45();
  ComplexMatrix nudge = ComplexMatrix::Identity(2, 2);
  nudge(0, 1) = 1e-3;
  cfg.conjugators =
      std::vector<ComplexMatrix>{ComplexMatrix::Identity(2, 2), nudge};
  auto rep = rl::build_representation(cfg);
  double commutator_max = 0.0;
  const ComplexMatrix eye = ComplexMatrix::Identity(2, 2);
  for (std::size_t i = 0; i < rep.matrices.size(); ++i)
    for (std::size_t j = i + 1; j < rep.matrices.size(); ++j) {
      ComplexMatrix c = rep.matrices[i] * rep.matrices[j] * rep.matrices[i].inverse() *
                        rep.matrices[j].inverse();
      commutator_max = std::max(commutator_max, (c - eye).norm());
    }
  ASSERT_GT(commutator_max, 0.0);
  ASSERT_LT(commutator_max, 0.1);
  rep.tolerance = commutator_max / 5.0;
  try {
    rl::is_irreducible_sl2(rep);
    FAIL() << "expected Ambiguous";
  } catch (const charvar::domain_error& e) {
    EXPECT_EQ(e.name(), "Ambiguous");
  }
}

TEST(Eigenspan, JordanBlockKeepsDeficientSpan) {
  auto check = rl::eigenspan_check(jordan2(1.0), 3);
  EXPECT_EQ(check.dim_base, 1);
  EXPECT_EQ(check.dim_power, 1);
  EXPECT_TRUE(check.equal);
}

TEST(Eigenspan, DiagonalizableSpansFull) {
  auto check = rl::eigenspan_check(diag2(2.0, 3.0), -1);
  EXPECT_EQ(check.dim_base, 2);
  EXPECT_EQ(check.dim_power, 2);
  EXPECT_TRUE(check.equal);

  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m.topLeftCorner(2, 2) = jordan2(2.0);
  m(2, 2) = 5.0;
  auto check3 = rl::eigenspan_check(m, 2);
  EXPECT_EQ(check3.dim_base, 2);
  EXPECT_EQ(check3.dim_power, 2);
  EXPECT_TRUE(check3.equal);
}

TEST(Eigenspan, SeededSweepAlwaysEqual) {
  rl::Rng rng(29);
  for (int it = 0; it < 60; ++it) {
    int m = 2 + it % 3;
    ComplexMatrix g = rl::random_invertible(rng, m);
    ComplexMatrix d = ComplexMatrix::Zero(m, m);
    for (int j = 0; j < m; ++j)
      d(j, j) = std::polar(0.5 + rng.uniform(), 2.0 * std::numbers::pi * rng.uniform());
    ComplexMatrix a = g * d * g.inverse();
    long long k = 1 + it % 5;
    if (it % 2 == 0) k = -k;
    auto check = rl::eigenspan_check(a, k);
    ASSERT_TRUE(check.equal) << "iteration " << it;
    ASSERT_EQ(check.dim_base, m);
  }
}

TEST(Eigenspan, RejectsBadInput) {
  EXPECT_THROW(rl::eigenspan_check(diag2(2.0, 3.0), 0), std::invalid_argument);
  try {
    rl::eigenspan_check(diag2(0.0, 3.0), 2);
    FAIL() << "expected IllConditioned";
  } catch (const charvar::domain_error& e) {
    EXPECT_EQ(e.name(), "IllConditioned");
  }
}

TEST(Sdr, NormalizesModulusInOneStep) {
  auto rep = make_rep(GroupSpec{{3}}, {ComplexMatrix::Identity(1, 1) * 8.0});
  auto before = rl::verify_relations(rep);
  ASSERT_TRUE(before.central());
  EXPECT_NEAR(std::abs(*before.omega), 512.0, 1e-9);

  auto after = rl::sdr_step(rep, 1.0);
  EXPECT_NEAR(std::abs(after.matrices[0](0, 0)), 1.0, 1e-12);
  auto check = rl::verify_relations(after);
  ASSERT_TRUE(check.central());
  EXPECT_NEAR(std::abs(*check.omega), 1.0, 1e-12);
}

TEST(Sdr, InterpolatesModulusGeometrically) {
  // omega = 4 on a rank-1 spec: half a step moves |omega| to 4^{1/2}
  auto rep = make_rep(GroupSpec{{2}}, {ComplexMatrix::Identity(1, 1) * 2.0});
  auto half = rl::sdr_step(rep, 0.5);
  auto check = rl::verify_relations(half);
  ASSERT_TRUE(check.central());
  EXPECT_NEAR(std::abs(*check.omega), 2.0, 1e-12);

  // multi-generator: scaling a unit-charge build by c^{1/n_i} sets omega = c
  auto built = rl::build_representation(config45(), 13);
  for (std::size_t i = 0; i < 2; ++i)
    built.matrices[i] *= std::pow(3.0, 1.0 / static_cast<double>(built.spec.exponents[i]));
  auto scaled_check = rl::verify_relations(built);
  ASSERT_TRUE(scaled_check.central());
  EXPECT_NEAR(std::abs(*scaled_check.omega), 3.0, 1e-9);
  auto normalized = rl::sdr_step(built, 1.0);
  auto norm_check = rl::verify_relations(normalized);
  ASSERT_TRUE(norm_check.central());
  EXPECT_NEAR(std::abs(*norm_check.omega), 1.0, 1e-12);
}

TEST(Sdr, FixedPoints) {
  auto rep = rl::build_representation(config45(), 19);
  // s = 0 never moves
  EXPECT_EQ(matrices_distance(rl::sdr_step(rep, 0.0), rep), 0.0);
  // |omega| = 1 is a fixed line of the retraction (up to the rounding in
  // the measured modulus)
  EXPECT_LE(matrices_distance(rl::sdr_step(rep, 0.7), rep), 1e-12);
}

TEST(Sdr, RejectsNonCentralAndBadParameter) {
  Complex i(0.0, 1.0);
  auto rep = make_rep(GroupSpec{{4, 5}}, {torus2(i), torus2(i)});
  try {
    rl::sdr_step(rep, 0.5);
    FAIL() << "expected NonCentral";
  } catch (const charvar::domain_error& e) {
    EXPECT_EQ(e.name(), "NonCentral");
  }
  auto good = rl::build_representation(config45(), 19);
  EXPECT_THROW(rl::sdr_step(good, 1.5), std::invalid_argument);
  EXPECT_THROW(rl::sdr_step(good, -0.1), std::invalid_argument);
}

TEST(ZFlow, QuarterTurnOnIdentity) {
  auto rep = make_rep(GroupSpec{{4}}, {ComplexMatrix::Identity(2, 2)});
  auto out = rl::z_flow(rep, 1);
  Complex i(0.0, 1.0);
  EXPECT_LE((out.matrices[0] - i * ComplexMatrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(ZFlow, FullCycleIsIdentity) {
  auto rep = rl::build_representation(config45(), 23);
  EXPECT_EQ(matrices_distance(rl::z_flow(rep, 0), rep), 0.0);
  // lcm(4,5) = 20 makes every factor e^{2 pi i 0} = 1 exactly
  EXPECT_EQ(matrices_distance(rl::z_flow(rep, 20), rep), 0.0);
}

TEST(ZFlow, ComposesAdditively) {
  auto rep = rl::build_representation(config45(), 23);
  auto two_steps = rl::z_flow(rl::z_flow(rep, 7), 13);
  EXPECT_LE(matrices_distance(two_steps, rep), 1e-12);
}

TEST(ZFlow, PreservesResidual) {
  auto rep = rl::build_representation(config45(), 31);
  double before = rl::verify_relations(rep).max_residual;
  double after = rl::verify_relations(rl::z_flow(rep, 3)).max_residual;
  EXPECT_LE(std::abs(after - before), 1e-12);
}

TEST(ZFlow, RejectsNonUnitCharge) {
  auto rep = rl::build_representation(config45(), 13);
  for (std::size_t i = 0; i < 2; ++i)
    rep.matrices[i] *= std::pow(3.0, 1.0 / static_cast<double>(rep.spec.exponents[i]));
  try {
    rl::z_flow(rep, 1);
    FAIL() << "expected NonCentral";
  } catch (const charvar::domain_error& e) {
    EXPECT_EQ(e.name(), "NonCentral");
  }
}

TEST(Path, DiagonalInputGivesConstantPath) {
  auto cfg = config45();
  cfg.conjugators = std::vector<ComplexMatrix>{ComplexMatrix::Identity(2, 2),
                                               ComplexMatrix::Identity(2, 2)};
  auto rep = rl::build_representation(cfg);
  auto path = rl::path_to_abelian(rep, 6);
  ASSERT_EQ(path.size(), 7u);
  for (const auto& sample : path) EXPECT_EQ(matrices_distance(sample, rep), 0.0);
}

TEST(Path, SeededBuildReachesCommutingDiagonalEndpoint) {
  auto rep = rl::build_representation(config45(), 37);
  auto path = rl::path_to_abelian(rep, 8);
  ASSERT_EQ(path.size(), 9u);
  EXPECT_EQ(matrices_distance(path.front(), rep), 0.0);

  const auto& endpoint = path.back();
  for (const auto& a : endpoint.matrices) {
    ComplexMatrix off = a;
    off.diagonal().setZero();
    EXPECT_EQ(off.norm(), 0.0);
  }
  ComplexMatrix commutator = endpoint.matrices[0] * endpoint.matrices[1] -
                             endpoint.matrices[1] * endpoint.matrices[0];
  EXPECT_LE(commutator.norm(), 1e-8);

  // endpoint still satisfies the relations about as well as the input
  double res = rl::verify_relations(endpoint).max_residual;
  EXPECT_LE(res, 1e-9);
}

TEST(Path, DefectiveGeneratorIsNotDiagonalizable) {
  auto rep = make_rep(GroupSpec{{1}}, {jordan2(1.0)});
  try {
    rl::path_to_abelian(rep, 4);
    FAIL() << "expected NotDiagonalizable";
  } catch (const charvar::domain_error& e) {
    EXPECT_EQ(e.name(), "NotDiagonalizable");
  }
}

TEST(Path, NonCentralDiagonalPairRefuses) {
  Complex i(0.0, 1.0);
  auto rep = make_rep(GroupSpec{{4, 5}}, {torus2(i), torus2(i)});
  try {
    rl::path_to_abelian(rep, 4);
    FAIL() << "expected NonCentral";
  } catch (const charvar::domain_error& e) {
    EXPECT_EQ(e.name(), "NonCentral");
  }
}

TEST(Path, RejectsBadParameters) {
  auto rep = rl::build_representation(config45(), 41);
  EXPECT_THROW(rl::path_to_abelian(rep, 0), std::invalid_argument);
  auto big = make_rep(GroupSpec{{2, 3}}, {ComplexMatrix::Identity(5, 5),
                                          ComplexMatrix::Identity(5, 5)});
  EXPECT_THROW(rl::path_to_abelian(big, 4), std::invalid_argument);
}

TEST(DoubleCoset, FrozenValues) {
  EXPECT_NEAR(std::abs(rl::double_coset_invariant(ComplexMatrix::Identity(2, 2)) - 1.0),
              0.0, 1e-15);
  ComplexMatrix a(2, 2);
  a << Complex(2, 0), Complex(3, 0), Complex(1, 0), Complex(2, 0);
  EXPECT_NEAR(std::abs(rl::double_coset_invariant(a) - 4.0), 0.0, 1e-15);
  ComplexMatrix b(2, 2);
  b << Complex(1, 0), Complex(1, 0), Complex(1, 0), Complex(2, 0);
  EXPECT_NEAR(std::abs(rl::double_coset_invariant(b) - 2.0), 0.0, 1e-15);
}

TEST(DoubleCoset, RejectsWrongDeterminant) {
  try {
    rl::double_coset_invariant(2.0 * ComplexMatrix::Identity(2, 2));
    FAIL() << "expected DeterminantNotOne";
  } catch (const charvar::domain_error& e) {
    EXPECT_EQ(e.name(), "DeterminantNotOne");
  }
}

TEST(DoubleCoset, InvariantUnderTorusTranslations) {
  rl::Rng rng(47);
  for (int it = 0; it < 100; ++it) {
    // random determinant-one matrix
    ComplexMatrix g = rl::random_invertible(rng, 2);
    Complex det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    ComplexMatrix a = g / std::sqrt(det);
    Complex x = rl::double_coset_invariant(a);

    Complex lambda = std::polar(0.5 + 1.5 * rng.uniform(),
                                2.0 * std::numbers::pi * rng.uniform());
    Complex mu = std::polar(0.5 + 1.5 * rng.uniform(),
                            2.0 * std::numbers::pi * rng.uniform());
    ComplexMatrix translated = torus2(lambda) * a * torus2(mu);
    Complex y = rl::double_coset_invariant(translated);
    ASSERT_LE(std::abs(x - y), 1e-12 * std::max(1.0, std::abs(x)));
    // the complementary entry product stays determined by x
    Complex bc = translated(0, 1) * translated(1, 0);
    ASSERT_LE(std::abs(bc - (y - 1.0)), 1e-9);
  }
}
