#include <gtest/gtest.h>

#include "helpers.hpp"
#include "ncreal/real_sdp.hpp"
#include "ncreal/real_test.hpp"

using namespace ncreal;
using namespace ncreal::testing;

namespace {

RealSdp sdp_for(const std::vector<std::string>& gens, int g = 1) { return build_real_sdp(left_groebner(Ps(gens, g))); }

}  // namespace

TEST(BuildRealSdp, Sizes) {
  const RealSdp sdp = sdp_for({"x1 x1* - x1* x1 - 1"});
  EXPECT_EQ(sdp.d, 2);
  ASSERT_EQ(sdp.multiplier_words.size(), 1u);
  EXPECT_EQ(sdp.multiplier_words[0].size(), 3u);
  EXPECT_EQ(sdp.problem.num_free(), 3);
  EXPECT_THROW(build_real_sdp(LeftGroebnerBasis{}), std::invalid_argument);
}

TEST(BuildRealSdp, GramBasisSkipsNonStandardWords) {
  const RealSdp sdp = sdp_for({"x1^2 - x1*", "x1* x1 x1 + 1"});
  for (const Word& w : sdp.gram_basis) {
    EXPECT_LT(w.degree(), sdp.d);
    EXPECT_TRUE(is_standard(w, sdp.basis));
  }
}

TEST(ExactCheck, CommutatorForcesNegativeDiagonal) {
  const ExactInfeasibility e = exact_infeasibility_check(sdp_for({"x1 x1* - x1* x1 - 1"}));
  EXPECT_TRUE(e.attempted);
  EXPECT_TRUE(e.proven);
  EXPECT_NE(e.reason.find("G(x1*, x1*) forced to -1"), std::string::npos) << e.reason;
}

TEST(ExactCheck, AnalyticLinearForcesZeroTrace) {
  const RealSdp sdp = sdp_for({"x1"});
  EXPECT_EQ(sdp.problem.n, 1);
  const ExactInfeasibility e = exact_infeasibility_check(sdp);
  EXPECT_TRUE(e.proven);
}

TEST(ExactCheck, FeasibleProblemIsNotProven) {
  const ExactInfeasibility e = exact_infeasibility_check(sdp_for({"x1 x1*"}));
  EXPECT_TRUE(e.attempted);
  EXPECT_FALSE(e.proven);
}

TEST(ExactCheck, SkipsLargeProblems) {
  const ExactInfeasibility e = exact_infeasibility_check(sdp_for({"x1 x1* - x1* x1 - 1"}), 3);
  EXPECT_FALSE(e.attempted);
  EXPECT_FALSE(e.proven);
}

TEST(ExactCertificate, RoundsOntoSingularFace) {
  // Only rank-one Gram matrices are feasible here.
  const RealSdp sdp = sdp_for({"x1 x1* - x1*^2 + 2 x1 + 4"});
  const FeasibilityResult r = solve_feasibility(sdp.problem);
  ASSERT_LT(r.gap, 1e-2);
  const auto cert = exact_certificate_from_solution(sdp, r.G);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->exactness, Exactness::Exact);
  EXPECT_TRUE(verify_nonreal_certificate(sdp.basis.polys, *cert));
}

TEST(ExactCertificate, RoundsInteriorSolution) {
  const RealSdp sdp = sdp_for({"x1 x1*"});
  const FeasibilityResult r = solve_feasibility(sdp.problem);
  ASSERT_EQ(r.status, FeasibilityStatus::Feasible);
  const auto cert = exact_certificate_from_solution(sdp, r.G);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(verify_nonreal_certificate(sdp.basis.polys, *cert));
  const NonRealCertificate numeric = certificate_from_solution(sdp, r, 1e-9);
  EXPECT_TRUE(verify_nonreal_certificate(sdp.basis.polys, numeric));
}

TEST(ExactCertificate, RejectsWrongShape) {
  const RealSdp sdp = sdp_for({"x1 x1*"});
  EXPECT_FALSE(exact_certificate_from_solution(sdp, Eigen::MatrixXd::Identity(sdp.problem.n + 1, sdp.problem.n + 1)));
}
