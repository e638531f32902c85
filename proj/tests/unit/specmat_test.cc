#include <gtest/gtest.h>

#include <cmath>

#include "advbound/specmat/matrix_json.h"
#include "advbound/specmat/spectral.h"
#include "advbound/specmat/sym_matrix.h"
#include "generators.h"
#include "oracles.h"

namespace advbound::specmat {
namespace {

using boolfn::BitString;

std::vector<BitString> labels_of(int n) {
  std::vector<BitString> out;
  for (std::uint32_t c = 0; c < (1u << n); ++c) out.emplace_back(c, n);
  return out;
}

SymMatrix and_gadget(double b1, double b2) {
  SymMatrix m(labels_of(2));
  m.set(1, 3, b1);  // (01, 11)
  m.set(2, 3, b2);  // (10, 11)
  return m;
}

SymMatrix random_symmetric(testing::Rng& rng, int n, bool nonnegative, double density = 0.6) {
  SymMatrix m(labels_of(n));
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = r; c < m.dim(); ++c) {
      if (rng.coin(density)) m.set(r, c, nonnegative ? rng.uniform(0.0, 2.0) : rng.uniform(-2.0, 2.0));
    }
  }
  return m;
}

TEST(SymMatrixTest, StorageIsSymmetric) {
  SymMatrix m(labels_of(1));
  m.set(0, 1, 3.0);
  EXPECT_EQ(m(1, 0), 3.0);
  EXPECT_THROW(SymMatrix::from_rows(labels_of(1), {{0.0, 1.0}, {2.0, 0.0}}), std::invalid_argument);
  EXPECT_THROW(SymMatrix({BitString::parse("01"), BitString::parse("01")}), std::invalid_argument);
  EXPECT_THROW(SymMatrix({BitString::parse("01"), BitString::parse("1")}), std::invalid_argument);
}

TEST(SymMatrixTest, HadamardExamples) {
  const auto a = and_gadget(3, 4);
  EXPECT_EQ(hadamard(a, all_ones(a.labels())), a);
  EXPECT_TRUE(hadamard(a, SymMatrix(a.labels())).is_zero());
  const auto b = SymMatrix::from_rows(labels_of(1), {{0, 3}, {3, 0}});
  const auto mask = SymMatrix::from_rows(labels_of(1), {{0, 1}, {1, 0}});
  EXPECT_EQ(hadamard(b, mask), b);
  EXPECT_THROW(hadamard(a, b), std::invalid_argument);
}

TEST(SymMatrixTest, DifferenceMasks) {
  const auto labels = labels_of(2);
  const auto d1 = difference_mask(labels, 1);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const bool differ = labels[r].bit(1) != labels[c].bit(1);
      EXPECT_EQ(d1(r, c), differ ? 1.0 : 0.0);
    }
  }
  EXPECT_EQ(d1(0, 2), 1.0);  // 00, 10
  EXPECT_EQ(d1(0, 3), 1.0);  // 00, 11
  EXPECT_EQ(d1(1, 2), 1.0);  // 01, 10
  EXPECT_EQ(d1(1, 3), 1.0);  // 01, 11
  EXPECT_EQ(d1(0, 1), 0.0);
  const auto d2 = difference_mask(labels, 2);
  EXPECT_EQ(d2(0, 1), 1.0);
  EXPECT_EQ(d2(0, 2), 0.0);
  EXPECT_EQ(difference_mask(labels_of(1), 1), SymMatrix::from_rows(labels_of(1), {{0, 1}, {1, 0}}));
  EXPECT_THROW(difference_mask(labels, 3), std::out_of_range);
  EXPECT_THROW(difference_mask(labels, 0), std::out_of_range);
}

TEST(SpectralTest, Identity) {
  const auto r = spectral_norm(SymMatrix::from_rows(labels_of(1), {{1, 0}, {0, 1}}));
  EXPECT_NEAR(r.norm, 1.0, 1e-15);
}

TEST(SpectralTest, AndGadgetNormIsHypotenuse) {
  const auto r = spectral_norm(and_gadget(3, 4));
  EXPECT_NEAR(r.norm, 5.0, 1e-12);
  EXPECT_NEAR(r.eigenvalue, 5.0, 1e-12);
  EXPECT_LE(r.residual, 1e-9 * 5.0);
}

TEST(SpectralTest, SwapMatrix) {
  const auto r = spectral_norm(SymMatrix::from_rows(labels_of(1), {{0, 1}, {1, 0}}));
  EXPECT_NEAR(r.norm, 1.0, 1e-15);
  ASSERT_EQ(r.vector.size(), 2u);
  EXPECT_NEAR(r.vector[0], 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(r.vector[1], 1.0 / std::sqrt(2.0), 1e-12);
}

TEST(SpectralTest, PrincipalVectorOfUnitGadget) {
  const auto r = principal_eigenvector(and_gadget(1, 1));
  EXPECT_NEAR(r.eigenvalue, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(r.vector[0], 0.0, 1e-12);
  EXPECT_NEAR(r.vector[1], 0.5, 1e-12);
  EXPECT_NEAR(r.vector[2], 0.5, 1e-12);
  EXPECT_NEAR(r.vector[3], 1.0 / std::sqrt(2.0), 1e-12);
}

TEST(SpectralTest, ZeroMatrix) {
  const auto r = principal_eigenvector(SymMatrix(labels_of(2)));
  EXPECT_EQ(r.norm, 0.0);
  EXPECT_EQ(spectral_norm(SymMatrix(labels_of(2))).norm, 0.0);
}

TEST(SpectralTest, PrincipalRejectsNegativeEntries) {
  EXPECT_THROW(principal_eigenvector(SymMatrix::from_rows(labels_of(1), {{0, -1}, {-1, 0}})), std::invalid_argument);
}

TEST(SpectralTest, NegativeDominantEigenvalue) {
  // Eigenvalues -3 and 1: the norm is 3 with a signed eigenvalue of -3.
  const auto r = spectral_norm(SymMatrix::from_rows(labels_of(1), {{-1, 2}, {2, -1}}));
  EXPECT_NEAR(r.norm, 3.0, 1e-12);
  EXPECT_NEAR(r.eigenvalue, -3.0, 1e-12);
}

TEST(SpectralTest, OrientationMakesLargestEntryPositive) {
  testing::Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = spectral_norm(random_symmetric(rng, 3, false));
    std::size_t arg = 0;
    for (std::size_t k = 1; k < r.vector.size(); ++k) {
      if (std::abs(r.vector[k]) > std::abs(r.vector[arg]) * (1 + 1e-12)) arg = k;
    }
    EXPECT_GT(r.vector[arg], 0.0);
  }
}

TEST(SpectralTest, JacobiMatchesEigenOnRandomMatrices) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + rng.below(5);
    const auto m = random_symmetric(rng, n, rng.coin());
    const auto sys = jacobi_eigensystem(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle::dense(m));
    ASSERT_EQ(sys.values.size(), m.dim());
    const double scale = std::max(1.0, m.frobenius_norm());
    for (std::size_t k = 0; k < m.dim(); ++k) {
      EXPECT_NEAR(sys.values[k], es.eigenvalues()(static_cast<long>(k)), 1e-10 * scale);
      EXPECT_LE(eigen_residual(m, sys.vectors[k], sys.values[k]), 1e-9 * scale);
      EXPECT_NEAR(euclidean_norm(sys.vectors[k]), 1.0, 1e-12);
    }
    const auto r = spectral_norm(m);
    EXPECT_NEAR(r.norm, oracle::norm(m), 1e-10 * scale);
    EXPECT_LE(r.residual, 1e-9 * std::max(1.0, r.norm));
    if (!m.is_zero()) {
      EXPECT_NEAR(euclidean_norm(r.vector), 1.0, 1e-12);
    }
  }
}

TEST(SpectralTest, PowerIterationMatchesEigenAboveJacobiLimit) {
  testing::Rng rng(13);
  EigenOptions small_jacobi;
  small_jacobi.jacobi_max_dim = 4;
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = random_symmetric(rng, 4, true, 0.3);
    const auto r = principal_eigenvector(m, small_jacobi);
    EXPECT_NEAR(r.norm, oracle::norm(m), 1e-9 * std::max(1.0, r.norm));
    EXPECT_LE(r.residual, 1e-9 * std::max(1.0, r.norm));
    for (double v : r.vector) EXPECT_GE(v, -1e-10);
  }
}

TEST(SpectralTest, PowerIterationOnLargeBipartiteMatrix) {
  // 512 x 512: handled by the power path with default options.
  testing::Rng rng(17);
  const auto f = testing::random_function(rng, 9);
  const auto g = testing::random_gamma(rng, f, 0.05);
  const auto r = spectral_norm(g.matrix);
  EXPECT_NEAR(r.norm, oracle::norm(g.matrix), 1e-9 * r.norm);
  EXPECT_LE(r.residual, 1e-9 * std::max(1.0, r.norm));
}

TEST(SpectralTest, ReportsNonConvergence) {
  EigenOptions tight;
  tight.jacobi_max_dim = 1;
  tight.power_max_iterations = 2;
  tight.power_tolerance = 1e-15;
  testing::Rng rng(19);
  const auto m = random_symmetric(rng, 4, true, 0.9);
  try {
    spectral_norm(m, tight);
    FAIL() << "expected a convergence error";
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.residual(), 0.0);
  }
}

TEST(SpectralProperty, MaskDominanceAndMonotonicity) {
  testing::Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + rng.below(4);
    const auto a = random_symmetric(rng, n, true);
    SymMatrix b = a;
    for (std::size_t r = 0; r < b.dim(); ++r) {
      for (std::size_t c = r; c < b.dim(); ++c) b.set(r, c, a(r, c) + (rng.coin(0.3) ? rng.uniform(0.0, 1.0) : 0.0));
    }
    EXPECT_LE(spectral_norm(a).norm, spectral_norm(b).norm + 1e-10);
    for (int i = 1; i <= n; ++i) {
      EXPECT_LE(spectral_norm(hadamard(a, difference_mask(a.labels(), i))).norm, spectral_norm(a).norm + 1e-10);
    }
  }
}

TEST(SpectralProperty, TensorProductNormIsProduct) {
  testing::Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const int na = 1 + rng.below(2);
    const int nb = 1 + rng.below(3);
    const auto a = random_symmetric(rng, na, rng.coin());
    const auto b = random_symmetric(rng, nb, rng.coin());
    SymMatrix t(labels_of(na + nb));
    for (std::size_t r1 = 0; r1 < a.dim(); ++r1) {
      for (std::size_t c1 = 0; c1 < a.dim(); ++c1) {
        for (std::size_t r2 = 0; r2 < b.dim(); ++r2) {
          for (std::size_t c2 = 0; c2 < b.dim(); ++c2) {
            t.set(r1 * b.dim() + r2, c1 * b.dim() + c2, a(r1, c1) * b(r2, c2));
          }
        }
      }
    }
    EXPECT_NEAR(spectral_norm(t).norm, spectral_norm(a).norm * spectral_norm(b).norm, 1e-9);
  }
}

TEST(MatrixJsonTest, RoundTripIsExact) {
  testing::Rng rng(31);
  const auto m = random_symmetric(rng, 3, false);
  const auto text = to_json(m).dump();
  EXPECT_EQ(matrix_from_json(nlohmann::json::parse(text)), m);
}

TEST(MatrixJsonTest, RejectsAsymmetryAndBadShapes) {
  EXPECT_THROW(matrix_from_json(nlohmann::json::parse(R"({"labels": ["0", "1"], "entries": [[0, 1], [1.0000001, 0]]})")),
               std::invalid_argument);
  EXPECT_THROW(matrix_from_json(nlohmann::json::parse(R"({"labels": ["0", "1"], "entries": [[0, 1]]})")),
               std::invalid_argument);
  EXPECT_THROW(matrix_from_json(nlohmann::json::parse(R"({"labels": ["0", "2"], "entries": [[0, 1], [1, 0]]})")),
               std::invalid_argument);
  EXPECT_THROW(matrix_from_json(nlohmann::json::parse(R"({"entries": []})")), std::invalid_argument);
}

}  // namespace
}  // namespace advbound::specmat
