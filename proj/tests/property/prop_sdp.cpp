#include <gtest/gtest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "ncreal/eigen_sym.hpp"
#include "ncreal/real_sdp.hpp"
#include "ncreal/real_test.hpp"
#include "oracles.hpp"

using namespace ncreal;
using namespace ncreal::testing;

TEST(SdpProperty, PsdProjectionIsNearest) {
  Gen gen(501);
  for (int t = 0; t < 20; ++t) {
    const Eigen::MatrixXd S = gen.symmetric(10) * 3;
    const Eigen::MatrixXd X = project_psd(S);
    EXPECT_GE(min_eigenvalue(X), -1e-12);
    const double d = (S - X).norm();
    for (int k = 0; k < 100; ++k) {
      const Eigen::MatrixXd Q = gen.matrix(10, 10);
      EXPECT_LE(d, (S - Q.transpose() * Q).norm() + 1e-12);
    }
  }
}

TEST(SdpProperty, AffineProjectionIsFeasibleAndIdempotent) {
  const std::vector<std::vector<std::string>> cases{
      {"x1 x1* - x1* x1 - 1"}, {"x1 x1* - x1*^2 + 2 x1 + 4"}, {"x1^2 x1* + x1 - 3"}, {"x1*^2 + x1 x1* - 2 x1* + 1"}};
  Gen gen(502);
  for (const auto& texts : cases) {
    const RealSdp sdp = build_real_sdp(left_groebner(Ps(texts)));
    const AffineProjector proj(sdp.problem);
    ASSERT_TRUE(proj.consistent());
    for (int t = 0; t < 10; ++t) {
      const Eigen::VectorXd g = proj.project(svec(gen.symmetric(static_cast<int>(sdp.problem.n))));
      EXPECT_LE(proj.residual(g, proj.recover_free(g)), 1e-10);
      EXPECT_LE((proj.project(g) - g).norm(), 1e-10);
    }
  }
}

TEST(SdpProperty, GapNeverIncreases) {
  const std::vector<std::string> cases{"x1 x1* - x1* x1 - 1", "x1^2 x1* + x1 - 3", "x1 x1*^2 + x1* - 1"};
  SolverOptions opt;
  opt.record_history = true;
  opt.max_iter = 3000;
  for (const auto& text : cases) {
    const FeasibilityResult r = solve_feasibility(build_real_sdp(left_groebner({P(text)})).problem, opt);
    for (std::size_t i = 1; i < r.history.size(); ++i) EXPECT_LE(r.history[i], r.history[i - 1] * (1 + 1e-9) + 1e-15);
  }
}

TEST(SdpProperty, FeasibleResultsGiveValidCertificates) {
  const std::vector<std::string> cases{"x1 x1*", "x1 x1* + x1", "x1*^2 x1^2 - 1"};
  for (const auto& text : cases) {
    const RealSdp sdp = build_real_sdp(left_groebner({P(text)}));
    const FeasibilityResult r = solve_feasibility(sdp.problem);
    if (r.status != FeasibilityStatus::Feasible) continue;
    EXPECT_GE(r.min_eigenvalue, -1e-10);
    VerifyOptions vo;
    vo.residual_tol = 50 * SolverOptions{}.tol;
    EXPECT_TRUE(verify_nonreal_certificate(sdp.basis.polys, certificate_from_solution(sdp, r, 1e-9), vo)) << text;
  }
}
