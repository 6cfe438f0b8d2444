#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ncreal/factorization.hpp"
#include "ncreal/gram.hpp"
#include "ncreal/json_io.hpp"
#include "ncreal/left_ideal.hpp"
#include "ncreal/parse.hpp"
#include "ncreal/real_test.hpp"

namespace ncreal::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> exprs;
  std::string file;
  std::string positional;
  int num_vars = 0;
  std::string order;
  bool json = false;
  std::string method = "auto";
  double tol = SolverOptions{}.tol;
  int max_iter = SolverOptions{}.max_iter;
  std::string cert_file;
  std::string point_file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Generator lines from -e, the positional argument and -f, comments removed.
std::vector<std::string> generator_lines(const Options& o) {
  std::vector<std::string> lines = o.exprs;
  if (!o.positional.empty()) lines.push_back(o.positional);
  if (!o.file.empty()) {
    std::istringstream in(read_file(o.file));
    for (std::string line; std::getline(in, line);) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      lines.push_back(line);
    }
  }
  if (lines.empty()) throw UsageError("no polynomial given (use -e or -f)");
  return lines;
}

int infer_num_vars(const Options& o, const std::vector<std::string>& texts) {
  if (o.num_vars > 0) return o.num_vars;
  int g = 1;
  for (const auto& t : texts) g = std::max(g, max_variable_index(t));
  return g;
}

std::vector<Polynomial> load_generators(const Options& o, int* num_vars = nullptr) {
  const auto lines = generator_lines(o);
  const int g = infer_num_vars(o, lines);
  if (num_vars) *num_vars = g;
  return parse_generators(lines, g);
}

Polynomial load_single(const Options& o) {
  auto gens = load_generators(o);
  if (gens.size() != 1) throw UsageError("expected exactly one polynomial");
  return gens.front();
}

MonomialOrder load_order(const Options& o) {
  return o.order.empty() ? MonomialOrder() : MonomialOrder::parse(o.order);
}

void print_sos(std::ostream& out, const SosCertificate& cert, const std::string& indent) {
  for (std::size_t k = 0; k < cert.polys.size(); ++k)
    out << indent << to_string(cert.weights[k]) << " * (" << to_string(cert.polys[k]) << ")* ("
        << to_string(cert.polys[k]) << ")\n";
}

int cmd_parse(const Options& o, std::ostream& out) {
  int g = 0;
  const auto gens = load_generators(o, &g);
  if (o.json) {
    Json j;
    j["num_vars"] = g;
    j["polynomials"] = Json::array();
    for (const auto& p : gens) j["polynomials"].push_back(to_string(p));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& p : gens) out << to_string(p) << "\n";
  }
  return kDecided;
}

int cmd_factor(const Options& o, std::ostream& out) {
  const Polynomial p = load_single(o);
  if (!p.is_homogeneous() || p.is_zero()) throw UsageError("factor: need a nonzero homogeneous polynomial");
  const Factorization f = factor_homogeneous(p, load_order(o));
  if (o.json) {
    Json j;
    j["scalar"] = to_string(f.scalar);
    j["factors"] = Json::array();
    for (const auto& q : f.factors) j["factors"].push_back(to_string(q));
    out << j.dump(2) << "\n";
  } else {
    out << to_string(f) << "\n";
  }
  return kDecided;
}

int cmd_sos(const Options& o, std::ostream& out) {
  const Polynomial p = load_single(o);
  bool is_sos = false;
  SosCertificate cert;
  std::vector<std::string> witness;
  if (p.is_homogeneous() || p.is_zero()) {
    const SosResult r = p.is_zero() ? SosResult{true, {}, {}} : is_sos_homogeneous(p);
    is_sos = r.is_sos;
    cert = r.certificate;
    const auto words = p.is_zero() ? std::vector<Word>{} : words_of_degree(p.num_vars(), p.degree() / 2);
    for (Eigen::Index i = 0; i < r.witness.size(); ++i)
      if (r.witness(i) != 0) witness.push_back(to_string(r.witness(i)) + " " + to_string(words[i]));
  } else if (auto a = symmetric_quadratic_coefficients(p)) {
    const auto c = sos_quadratic_certificate(*a);
    is_sos = c.has_value();
    if (c) cert = *c;
  } else {
    throw UsageError("sos: need a homogeneous polynomial or a univariate symmetric quadratic");
  }
  if (o.json) {
    Json j;
    j["sos"] = is_sos;
    j["certificate"] = is_sos ? to_json(cert) : Json(nullptr);
    j["witness"] = witness;
    out << j.dump(2) << "\n";
  } else {
    out << "sos: " << (is_sos ? "yes" : "no") << "\n";
    if (is_sos) print_sos(out, cert, "  ");
    if (!witness.empty()) {
      out << "negative direction:";
      for (const auto& w : witness) out << " [" << w << "]";
      out << "\n";
    }
  }
  return kDecided;
}

int cmd_unshrinkable(const Options& o, std::ostream& out) {
  const Polynomial p = load_single(o);
  if (!p.is_monomial() || p.terms().begin()->second != 1) throw UsageError("unshrinkable: need a single word");
  const Word w = p.terms().begin()->first;
  ShrinkSplit split;
  const bool shrinkable = find_shrink_split(w, split);
  if (o.json) {
    Json j;
    j["word"] = to_string(w);
    j["unshrinkable"] = !shrinkable;
    if (shrinkable) j["split"] = {{"u", to_string(split.u)}, {"v", to_string(split.v)}};
    out << j.dump(2) << "\n";
  } else {
    out << (shrinkable ? "false" : "true") << "\n";
    if (shrinkable) out << "u = " << to_string(split.u) << ", v = " << to_string(split.v) << "\n";
  }
  return kDecided;
}

int cmd_groebner(const Options& o, std::ostream& out) {
  const LeftGroebnerBasis B = left_groebner(load_generators(o), load_order(o));
  if (o.json) {
    Json j;
    j["basis"] = Json::array();
    for (const auto& p : B.polys) j["basis"].push_back(to_string(p));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& p : B.polys) out << to_string(p) << "\n";
  }
  return kDecided;
}

int cmd_real(const Options& o, std::ostream& out) {
  const auto gens = load_generators(o);
  RealTestConfig config;
  config.order = load_order(o);
  config.method = parse_method(o.method);
  config.solver.tol = o.tol;
  config.solver.max_iter = o.max_iter;
  const RealnessVerdict v = real_test(gens, config);
  if (o.json) {
    out << to_json(v).dump(2) << "\n";
  } else {
    out << "status: " << to_string(v.status) << "\n";
    out << "method: " << v.method << "\n";
    if (!v.detail.empty()) out << "detail: " << v.detail << "\n";
    if (v.certificate) {
      const auto& c = *v.certificate;
      out << "certificate (" << to_string(c.exactness) << "):\n";
      for (std::size_t k = 0; k < c.multipliers.size(); ++k)
        out << "  q" << k + 1 << " = " << to_string(c.multipliers[k]) << "\n";
      out << "  sum of squares:\n";
      print_sos(out, c.sos, "    ");
    }
    if (v.residual) out << "residual: " << std::setprecision(3) << *v.residual << "\n";
  }
  const bool decided = v.status == RealStatus::Real || v.status == RealStatus::NotReal;
  return decided ? kDecided : kUndecided;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto lines = generator_lines(o);
  if (o.cert_file.empty()) throw UsageError("verify: need --cert FILE");
  Json j = Json::parse(read_file(o.cert_file));
  if (j.contains("status")) {
    if (!j.contains("certificate") || j.at("certificate").is_null())
      throw UsageError("verify: the verdict carries no certificate");
    j = j.at("certificate");
  }
  std::vector<std::string> texts = lines;
  for (const char* key : {"polys", "multipliers"})
    if (j.contains(key) && j.at(key).is_array())
      for (const auto& s : j.at(key))
        if (s.is_string()) texts.push_back(s.get<std::string>());
  const int g = infer_num_vars(o, texts);
  const auto gens = parse_generators(lines, g);
  const NonRealCertificate cert = nonreal_certificate_from_json(j, g);
  VerifyOptions vo;
  vo.order = load_order(o);
  vo.residual_tol = RealTestConfig{}.residual_factor * o.tol;
  const VerifyReport report = verify_certificate_report(gens, cert, vo);
  if (o.json) {
    Json r;
    r["accepted"] = report.accepted;
    r["residual"] = report.residual;
    r["reason"] = report.reason;
    out << r.dump(2) << "\n";
  } else {
    out << (report.accepted ? "accepted" : "rejected") << ": " << report.reason << "\n";
  }
  return report.accepted ? kDecided : kRejected;
}

int cmd_eval(const Options& o, std::ostream& out) {
  if (o.point_file.empty()) throw UsageError("eval: need --point FILE");
  const MatrixPoint pt = point_from_json(Json::parse(read_file(o.point_file)));
  Options with_g = o;
  if (with_g.num_vars == 0) with_g.num_vars = std::max<int>(1, static_cast<int>(pt.X.size()));
  const auto gens = load_generators(with_g);
  Json values = Json::array();
  double worst = 0;
  for (const auto& p : gens) {
    const Eigen::VectorXd y = apply(p, pt);
    worst = std::max(worst, y.norm());
    std::vector<double> entries(y.data(), y.data() + y.size());
    values.push_back(entries);
    if (!o.json) {
      out << to_string(p) << " :";
      for (double x : entries) out << " " << x;
      out << "\n";
    }
  }
  const bool zero = worst <= o.tol;
  if (o.json) {
    Json j;
    j["values"] = values;
    j["max_norm"] = worst;
    j["in_zero_set"] = zero;
    out << j.dump(2) << "\n";
  } else {
    out << "max |p(X)v| = " << worst << (zero ? " (point lies in the zero set)" : "") << "\n";
  }
  return kDecided;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Realness of left ideals in the free *-algebra"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool positional) {
    sub->add_option("-e,--expr", o.exprs, "Polynomial (repeatable)");
    sub->add_option("-f,--file", o.file, "Generator file, one polynomial per line");
    sub->add_option("-g,--num-vars", o.num_vars, "Number of variables (default: largest index used)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--order", o.order, "Letter ranking, greatest first, e.g. \"x1,x1*,x2,x2*\"");
    sub->add_flag("--json", o.json, "Machine readable output");
    if (positional) sub->add_option("poly", o.positional, "Polynomial");
  };

  auto* parse = app.add_subcommand("parse", "Parse and print polynomials in normal form");
  auto* factor = app.add_subcommand("factor", "Factor a homogeneous polynomial");
  auto* sos = app.add_subcommand("sos", "Exact sum-of-squares test");
  auto* unshrinkable = app.add_subcommand("unshrinkable", "Is a word left unshrinkable");
  auto* groebner = app.add_subcommand("groebner", "Left Groebner basis");
  auto* real = app.add_subcommand("real", "Decide whether the left ideal is real");
  auto* verify = app.add_subcommand("verify", "Check a non-realness certificate");
  auto* eval = app.add_subcommand("eval", "Evaluate p(X)v at a matrix point");
  for (auto* sub : {parse, factor, sos, unshrinkable}) common(sub, true);
  for (auto* sub : {groebner, real, verify, eval}) common(sub, false);

  real->add_option("--method", o.method, "auto, exact or sdp")->check(CLI::IsMember({"auto", "exact", "sdp"}));
  for (auto* sub : {real, verify, eval})
    sub->add_option("--tol", o.tol, "Numeric tolerance")->check(CLI::PositiveNumber);
  real->add_option("--max-iter", o.max_iter, "Solver iteration limit")->check(CLI::PositiveNumber);
  verify->add_option("--cert", o.cert_file, "Verdict or certificate JSON")->required();
  eval->add_option("--point", o.point_file, "Point JSON {\"n\", \"X\", \"v\"}")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kDecided : kUsage;
  }

  try {
    if (parse->parsed()) return cmd_parse(o, out);
    if (factor->parsed()) return cmd_factor(o, out);
    if (sos->parsed()) return cmd_sos(o, out);
    if (unshrinkable->parsed()) return cmd_unshrinkable(o, out);
    if (groebner->parsed()) return cmd_groebner(o, out);
    if (real->parsed()) return cmd_real(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (eval->parsed()) return cmd_eval(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "json error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ncreal::cli
