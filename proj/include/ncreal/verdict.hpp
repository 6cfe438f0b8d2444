#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncreal/gram.hpp"
#include "ncreal/polynomial.hpp"

namespace ncreal {

enum class RealStatus { Real, NotReal, NumericallyReal, Inconclusive };
const char* to_string(RealStatus s);

enum class Exactness { Exact, Numeric };
const char* to_string(Exactness e);

/// sos = sum_k (multipliers[k] generators[k] + generators[k]* multipliers[k]*),
/// with one multiplier per generator of the tested list.
struct NonRealCertificate {
  std::vector<Polynomial> multipliers;
  SosCertificate sos;
  Exactness exactness = Exactness::Exact;
  /// Largest coefficient of the identity's defect (0 when exact).
  double residual = 0;
};

struct RealnessVerdict {
  RealStatus status = RealStatus::Inconclusive;
  /// Deciding procedure, e.g. "monomial", "quadratic-closed-form", "sdp".
  std::string method;
  std::optional<NonRealCertificate> certificate;
  std::optional<double> residual;
  /// Human readable diagnostics.
  std::string detail;
};

}  // namespace ncreal
