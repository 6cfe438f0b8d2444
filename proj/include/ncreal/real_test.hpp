#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncreal/left_ideal.hpp"
#include "ncreal/order.hpp"
#include "ncreal/sdp.hpp"
#include "ncreal/verdict.hpp"

namespace ncreal {

enum class Method { Auto, Exact, Sdp };
const char* to_string(Method m);
/// "auto", "exact" or "sdp"; throws std::invalid_argument otherwise.
Method parse_method(const std::string& text);

struct RealTestConfig {
  MonomialOrder order;
  Method method = Method::Auto;
  SolverOptions solver;
  bool exact_post_check = true;
  std::size_t exact_check_max_vars = 6000;
  /// Eigenvalues of a numeric Gram matrix at or below this are dropped.
  double drop_tol = 1e-9;
  /// Numeric certificates: residual bound is residual_factor * solver.tol.
  double residual_factor = 50;
  /// Numeric certificates: a square counts as outside the ideal when its
  /// weighted normal form has a coefficient above this.
  double ideal_tol = 1e-6;
  /// Unconverged runs with gap at or below this get one exact rounding try.
  double boundary_gap = 1e-2;
};

/// Real iff every word left over after dropping left multiples of other
/// listed words is left unshrinkable. Throws for an empty list or the empty
/// word.
RealnessVerdict real_monomial_ideal(const std::vector<Word>& words, int num_vars);

/// Tests each prefix of the factorization p = c p1 ... pk.
RealnessVerdict real_principal_homogeneous(const Polynomial& p, const MonomialOrder& order = {});

/// Degree-one generator p = a + b* + c.
RealnessVerdict real_linear(const Polynomial& p);

/// Closed form for a univariate (g = 1) generator of degree two.
RealnessVerdict real_quadratic_univariate(const Polynomial& p);

/// Nonconstant p whose words are each analytic or antianalytic.
bool is_analytic_plus_antianalytic(const Polynomial& p);
RealnessVerdict real_analytic_antianalytic(const Polynomial& p);

/// Real when every generator is analytic (and the list is nonempty).
std::optional<RealnessVerdict> analytic_fastpath(const std::vector<Polynomial>& gens);

/// Real when no prefix of the leading polynomial's factorization gives a
/// sum p1...pl + (p1...pl)* that is an SOS up to sign (zero included).
std::optional<RealnessVerdict> realness_prefilter_principal(const Polynomial& p, const MonomialOrder& order = {});

/// Groebner basis, semidefinite feasibility and, when it does not find a
/// certificate, the exact infeasibility check.
RealnessVerdict real_sdp_route(const std::vector<Polynomial>& gens, const RealTestConfig& config = {});

/// Full dispatch. Every NotReal verdict carries a verified certificate.
RealnessVerdict real_test(const std::vector<Polynomial>& gens, const RealTestConfig& config = {});

struct VerifyOptions {
  MonomialOrder order;
  double residual_tol = 5e-7;
  double ideal_tol = 1e-6;
};

struct VerifyReport {
  bool accepted = false;
  double residual = 0;
  std::string reason;
};

VerifyReport verify_certificate_report(const std::vector<Polynomial>& gens, const NonRealCertificate& cert,
                                       const VerifyOptions& options = {});

inline bool verify_nonreal_certificate(const std::vector<Polynomial>& gens, const NonRealCertificate& cert,
                                       const VerifyOptions& options = {}) {
  return verify_certificate_report(gens, cert, options).accepted;
}

/// sum_k (q_k p_k + p_k* q_k*).
Polynomial certificate_rhs(const std::vector<Polynomial>& gens, const std::vector<Polynomial>& multipliers);

}  // namespace ncreal
