#include "ncreal/json_io.hpp"

#include <stdexcept>

#include "ncreal/parse.hpp"

namespace ncreal {

namespace {

Polynomial poly_from_json(const Json& j, int num_vars) {
  if (!j.is_string()) throw std::invalid_argument("expected a polynomial string");
  return parse_polynomial(j.get<std::string>(), num_vars);
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) return from_double(j.get<double>());
  throw std::invalid_argument("expected a rational string or number");
}

Json matrix_to_json(const Eigen::MatrixXd& M) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < M.cols(); ++k) row.push_back(M(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(const SosCertificate& cert) {
  Json j;
  j["weights"] = Json::array();
  j["polys"] = Json::array();
  for (const auto& w : cert.weights) j["weights"].push_back(to_string(w));
  for (const auto& p : cert.polys) j["polys"].push_back(to_string(p));
  return j;
}

SosCertificate sos_certificate_from_json(const Json& j, int num_vars) {
  if (!j.is_object() || !j.contains("weights") || !j.contains("polys"))
    throw std::invalid_argument("certificate needs \"weights\" and \"polys\"");
  const Json& w = j.at("weights");
  const Json& p = j.at("polys");
  if (!w.is_array() || !p.is_array()) throw std::invalid_argument("\"weights\" and \"polys\" must be arrays");
  SosCertificate cert;
  for (const auto& x : w) cert.weights.push_back(rational_from_json(x));
  for (const auto& x : p) cert.polys.push_back(poly_from_json(x, num_vars));
  return cert;
}

Json to_json(const NonRealCertificate& cert) {
  Json j = to_json(cert.sos);
  j["multipliers"] = Json::array();
  for (const auto& q : cert.multipliers) j["multipliers"].push_back(to_string(q));
  j["exactness"] = to_string(cert.exactness);
  j["residual"] = cert.residual;
  return j;
}

NonRealCertificate nonreal_certificate_from_json(const Json& j, int num_vars) {
  NonRealCertificate cert;
  cert.sos = sos_certificate_from_json(j, num_vars);
  if (!j.contains("multipliers") || !j.at("multipliers").is_array())
    throw std::invalid_argument("certificate needs a \"multipliers\" array");
  for (const auto& x : j.at("multipliers")) cert.multipliers.push_back(poly_from_json(x, num_vars));
  if (j.contains("exactness")) {
    const std::string e = j.at("exactness").get<std::string>();
    if (e == to_string(Exactness::Exact)) {
      cert.exactness = Exactness::Exact;
    } else if (e == to_string(Exactness::Numeric)) {
      cert.exactness = Exactness::Numeric;
    } else {
      throw std::invalid_argument("unknown exactness '" + e + "'");
    }
  }
  if (j.contains("residual") && j.at("residual").is_number()) cert.residual = j.at("residual").get<double>();
  return cert;
}

Json to_json(const RealnessVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["method"] = v.method;
  j["certificate"] = v.certificate ? to_json(*v.certificate) : Json(nullptr);
  j["residual"] = v.residual ? Json(*v.residual) : Json(nullptr);
  j["detail"] = v.detail;
  return j;
}

MatrixPoint point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("X") || !j.contains("v"))
    throw std::invalid_argument("point needs \"n\", \"X\" and \"v\"");
  MatrixPoint pt;
  pt.n = j.at("n").get<int>();
  if (pt.n <= 0) throw std::invalid_argument("point: n must be positive");
  for (const auto& M : j.at("X")) {
    if (!M.is_array() || static_cast<int>(M.size()) != pt.n) throw std::invalid_argument("point: X matrices must be n x n");
    Eigen::MatrixXd X(pt.n, pt.n);
    for (int r = 0; r < pt.n; ++r) {
      const Json& row = M.at(r);
      if (!row.is_array() || static_cast<int>(row.size()) != pt.n)
        throw std::invalid_argument("point: X matrices must be n x n");
      for (int c = 0; c < pt.n; ++c) X(r, c) = row.at(c).get<double>();
    }
    pt.X.push_back(std::move(X));
  }
  const Json& v = j.at("v");
  if (!v.is_array() || static_cast<int>(v.size()) != pt.n) throw std::invalid_argument("point: v must have n entries");
  pt.v.resize(pt.n);
  for (int r = 0; r < pt.n; ++r) pt.v(r) = v.at(r).get<double>();
  return pt;
}

Json to_json(const MatrixPoint& pt) {
  Json j;
  j["n"] = pt.n;
  j["X"] = Json::array();
  for (const auto& X : pt.X) j["X"].push_back(matrix_to_json(X));
  j["v"] = Json::array();
  for (Eigen::Index i = 0; i < pt.v.size(); ++i) j["v"].push_back(pt.v(i));
  return j;
}

}  // namespace ncreal
