#pragma once

#include <json.hpp>

#include "ncreal/evaluate.hpp"
#include "ncreal/gram.hpp"
#include "ncreal/verdict.hpp"

namespace ncreal {

using Json = nlohmann::json;

/// {"weights": ["1/2", ...], "polys": ["x1 + 1", ...]}
Json to_json(const SosCertificate& cert);
SosCertificate sos_certificate_from_json(const Json& j, int num_vars);

/// The SOS fields plus "multipliers", "exactness" and "residual".
Json to_json(const NonRealCertificate& cert);
/// Accepts the full form or a bare SOS certificate together with
/// "multipliers"; "exactness" defaults to exact-rational.
NonRealCertificate nonreal_certificate_from_json(const Json& j, int num_vars);

/// {"status", "method", "certificate", "residual", "detail"}; certificate and
/// residual are null when absent.
Json to_json(const RealnessVerdict& v);

/// {"n": 2, "X": [[[0, 1], [0, 0]], ...], "v": [1, 0]}
MatrixPoint point_from_json(const Json& j);
Json to_json(const MatrixPoint& pt);

}  // namespace ncreal
