#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "ncreal/eigen_sym.hpp"

using namespace ncreal;
using namespace ncreal::testing;

TEST(Jacobi, ReconstructsRandomSymmetric) {
  Gen gen(61);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::MatrixXd A = gen.symmetric(10);
    const JacobiEigenSolver eig(A);
    const auto& V = eig.eigenvectors();
    const auto& l = eig.eigenvalues();
    EXPECT_LE((V * l.asDiagonal() * V.transpose() - A).norm(), 1e-9);
    EXPECT_LE((V.transpose() * V - Eigen::MatrixXd::Identity(10, 10)).norm(), 1e-10);
    const Eigen::VectorXd ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(A).eigenvalues();
    EXPECT_LE((l - ref).norm(), 1e-9);
    for (int i = 1; i < 10; ++i) EXPECT_LE(l(i - 1), l(i));
  }
}

TEST(Jacobi, WarmStartGivesSameSpectrum) {
  Gen gen(62);
  JacobiEigenSolver eig;
  Eigen::MatrixXd A = gen.symmetric(8);
  eig.compute(A);
  for (int k = 0; k < 5; ++k) {
    A += 1e-3 * gen.symmetric(8);
    eig.compute(A, true);
    const Eigen::VectorXd ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(A).eigenvalues();
    EXPECT_LE((eig.eigenvalues() - ref).norm(), 1e-9);
  }
}

TEST(Jacobi, RejectsNonSymmetric) {
  Eigen::MatrixXd A(2, 2);
  A << 1, 2, 3, 4;
  EXPECT_THROW(JacobiEigenSolver{A}, std::invalid_argument);
}

TEST(ProjectPsd, ClipsNegativeEigenvalue) {
  Eigen::MatrixXd A(2, 2);
  A << 0, 1, 1, 0;
  Eigen::MatrixXd expected(2, 2);
  expected << 0.5, 0.5, 0.5, 0.5;
  EXPECT_LE((project_psd(A) - expected).norm(), 1e-12);
}

TEST(ProjectPsd, IdempotentPsdAndNearest) {
  Gen gen(63);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::MatrixXd A = gen.symmetric(6);
    const Eigen::MatrixXd P = project_psd(A);
    EXPECT_GE(min_eigenvalue(P), -1e-12);
    EXPECT_LE((project_psd(P) - P).norm(), 1e-10);
    // No random PSD matrix is closer to A.
    for (int k = 0; k < 20; ++k) {
      const Eigen::MatrixXd B = gen.matrix(6, 3);
      EXPECT_GE((B * B.transpose() - A).norm(), (P - A).norm() - 1e-12);
    }
  }
}
