/*
   Copyright 2026 The mockradial Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mockradial/errors.hpp"
#include "mockradial/exact.hpp"
#include "mockradial/parallel.hpp"
#include "mockradial/radial.hpp"
#include "mockradial/verify.hpp"

namespace mockradial::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "mockradial/1";

struct RunConfig {
  long a = 0, b = 1, A = 0, B = 1, h = 1, k = 1;
  int precision = 50;
  std::string t_start = "0.2";
  int t_steps = 9;
  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 1;
  int samples = 25;
  long kmax = 0;  // 0 selects the per-command default
  std::string identity = "all";
  int order_cap = 600;
  double tolerance = 0.0;  // 0 selects the per-command default
  long bmax = 6, Amax = 3, Bmax = 4;
  bool with_limits = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", an integer, or a plain decimal such as "0.2" exactly.
Rational parse_rational(const std::string& s) {
  if (s.empty()) throw UsageError("empty number");
  Rational r;
  const auto dot = s.find('.');
  try {
    if (dot == std::string::npos) {
      r = Rational(s);
    } else {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      if (digits.empty() || digits == "-" || digits.find_first_not_of("-0123456789") != std::string::npos) {
        throw UsageError("not a decimal: " + s);
      }
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
      r = Rational(Integer(digits), den);
    }
  } catch (const std::invalid_argument&) {
    throw UsageError("not a number: " + s);
  }
  r.canonicalize();
  return r;
}

Json real_json(const BigComplex& z, int digits) {
  return Json{{"re", z.real().to_string(digits)}, {"im", z.imag().to_string(digits)}, {"digits", digits}};
}

Json double_json(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
  return Json{{"value", buf}, {"digits", digits}};
}

Json exact_json(const CyclotomicNumber& x, int digits) {
  const CyclotomicNumber m = x.minimal();
  Json coeffs = Json::array();
  for (const Rational& c : m.coefficients()) coeffs.push_back(c.get_str());
  return Json{{"order", m.order()},
              {"coeffs", std::move(coeffs)},
              {"value", m.to_string()},
              {"decimal", real_json(embed_complex(m, digits), digits)}};
}

Json params_json(const SpecializationParams& p) { return Json{{"a", p.a}, {"b", p.b}, {"A", p.A}, {"B", p.B}}; }

Json cusp_json(const CuspData& c) {
  return Json{{"h", c.h},           {"k", c.k},         {"label", to_string(c.label)},
              {"kprime", c.kprime}, {"Bprime", c.Bprime}, {"mu", c.mu.get_str()},
              {"inQ", c.in_Q},      {"supported", is_supported(c.label)}};
}

Json trace_json(const EdgeTrace& tr, int digits) {
  Json steps = Json::array();
  for (const ReductionStep& s : tr.steps) {
    steps.push_back({{"kind", s.kind == TransportKind::ShiftFeq ? "shift" : "invert"},
                     {"from", s.from.minimal().to_string()},
                     {"to", s.to.minimal().to_string()}});
  }
  Json j{{"sigma", tr.sigma},
         {"ell", tr.ell},
         {"shifts", tr.shifts},
         {"inverted", tr.inverted},
         {"path_matched", tr.path_matched},
         {"closed_before_reduction", tr.closed_before_reduction},
         {"closed_after_reduction", tr.closed_after_reduction},
         {"steps", std::move(steps)}};
  if (tr.chain) {
    j["chain"] = {{"scale", exact_json(tr.chain->scale, digits)}, {"offset", exact_json(tr.chain->offset, digits)}};
  } else {
    j["chain"] = nullptr;
  }
  return j;
}

Json limit_json(const RadialLimitResult& r, int digits) {
  Json j{{"label", to_string(r.label)}};
  j["exact"] = r.exact ? exact_json(*r.exact, digits) : Json(nullptr);
  j["numeric"] = r.numeric ? real_json(*r.numeric, digits) : Json(nullptr);
  j["companion"] = {{"form", to_string(r.companion.form)},
                    {"kprime", r.companion.kprime},
                    {"inverted", r.companion.inverted},
                    {"shifts", r.companion.shifts}};
  if (r.reduction_trace) j["reduction"] = trace_json(*r.reduction_trace, digits);
  return j;
}

Json header(const std::string& command) { return Json{{"schema", kSchema}, {"command", command}}; }

// Text output is the JSON tree flattened to "path: value" lines, which keeps
// the two formats in lockstep without a second set of printers.
void flatten(const Json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, os);
  } else if (j.is_array()) {
    if (j.empty()) os << path << ": []\n";
    std::size_t i = 0;
    for (const auto& value : j) flatten(value, path + "[" + std::to_string(i++) + "]", os);
  } else if (j.is_string()) {
    os << path << ": " << j.get<std::string>() << "\n";
  } else {
    os << path << ": " << j.dump() << "\n";
  }
}

void emit(const Json& j, const std::string& format, std::ostream& os) {
  if (format == "text") {
    flatten(j, "", os);
  } else {
    os << j.dump(2) << "\n";
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

SpecializationParams params_of(const RunConfig& c) {
  SpecializationParams p{c.a, c.b, c.A, c.B};
  p.validate();
  return p;
}

RadialSchedule schedule_of(const RunConfig& c) {
  return RadialSchedule::standard(parse_rational(c.t_start), c.t_steps, c.precision);
}

int cmd_classify(const RunConfig& c, std::ostream& os) {
  const SpecializationParams p = params_of(c);
  const CuspData cusp = cusp_data(p, c.h, c.k);
  Json j = header("classify");
  j["params"] = params_json(p);
  const Json cj = cusp_json(cusp);
  for (const auto& [key, value] : cj.items()) j[key] = value;
  j["field_order"] = nullptr;
  try {
    j["field_order"] = field_order(p, cusp);
  } catch (const OrderLimitExceeded&) {
    // The label does not depend on the field, so classification still succeeds.
  }
  emit(j, c.format, os);
  return kSuccess;
}

int cmd_limit(const RunConfig& c, std::ostream& os) {
  const SpecializationParams p = params_of(c);
  const RadialLimitResult r = radial_limit(p, c.h, c.k, c.precision);
  Json j = header("limit");
  j["params"] = params_json(p);
  j["cusp"] = cusp_json(r.cusp);
  const Json lj = limit_json(r, c.precision);
  for (const auto& [key, value] : lj.items()) j[key] = value;
  emit(j, c.format, os);
  return r.exact ? kSuccess : kUnsupported;
}

int cmd_verify_radial(const RunConfig& c, std::ostream& os) {
  const SpecializationParams p = params_of(c);
  const double tol = c.tolerance > 0 ? c.tolerance : 1e-3;
  const ConvergenceReport rep = radial_check(p, c.h, c.k, schedule_of(c), tol);
  Json j = header("verify-radial");
  j["params"] = params_json(p);
  j["cusp"] = cusp_json(rep.limit.cusp);
  j["limit"] = limit_json(rep.limit, c.precision);
  Json pts = Json::array();
  for (const ResidualPoint& r : rep.residuals) {
    pts.push_back({{"t", r.t.get_str()},
                   {"residual", double_json(r.residual)},
                   {"log10_residual", double_json(r.log10_residual)},
                   {"digits_used", r.digits_used}});
  }
  j["residuals"] = std::move(pts);
  j["monotone_tail"] = rep.monotone_tail;
  j["final_residual"] = double_json(rep.final_residual);
  j["tolerance"] = double_json(rep.tolerance);
  j["passed"] = rep.passed;
  emit(j, c.format, os);
  return rep.passed ? kSuccess : kVerificationFailed;
}

int cmd_check(const RunConfig& c, std::ostream& os) {
  std::vector<IdentityId> ids;
  if (c.identity == "all") {
    ids = all_identities();
  } else {
    const auto id = parse_identity(c.identity);
    if (!id) throw UsageError("unknown identity: " + c.identity);
    ids.push_back(*id);
  }
  if (c.samples < 1) throw UsageError("--samples must be positive");
  std::optional<double> tol;
  if (c.tolerance > 0) tol = c.tolerance;
  // identity_check already spreads its samples across workers, so the
  // identities themselves run one after another.
  Json reports = Json::array();
  bool ok = true;
  for (IdentityId id : ids) {
    const IdentityReport r = identity_check(id, c.samples, c.seed, c.precision, tol);
    ok = ok && r.passed;
    reports.push_back({{"identity", to_string(r.id)},
                       {"samples", r.samples},
                       {"digits", r.digits},
                       {"max_residual", double_json(r.max_residual)},
                       {"tolerance", double_json(r.tolerance)},
                       {"passed", r.passed}});
  }
  Json j = header("check");
  j["seed"] = c.seed;
  j["reports"] = std::move(reports);
  j["passed"] = ok;
  emit(j, c.format, os);
  return ok ? kSuccess : kVerificationFailed;
}

int cmd_corollary(const RunConfig& c, std::ostream& os) {
  const long kmax = c.kmax > 0 ? c.kmax : 30;
  const auto items = corollary_check(kmax);
  Json list = Json::array();
  bool ok = true;
  for (const CorollaryItem& it : items) {
    ok = ok && it.passed;
    list.push_back({{"k", it.k}, {"h", it.h}, {"passed", it.passed}});
  }
  Json j = header("corollary");
  j["kmax"] = kmax;
  j["checked"] = items.size();
  j["items"] = std::move(list);
  j["passed"] = ok;
  emit(j, c.format, os);
  return ok ? kSuccess : kVerificationFailed;
}

int cmd_conjecture(const RunConfig& c, std::ostream& os) {
  const long kmax = c.kmax > 0 ? c.kmax : 8;
  const auto items = conjecture_check(kmax);
  Json counterexamples = Json::array();
  std::size_t passed = 0;
  for (const ConjectureItem& it : items) {
    if (it.passed) {
      ++passed;
      continue;
    }
    Json rec{{"k", it.k}, {"h", it.h}};
    rec["m"] = it.m ? Json(*it.m) : Json(nullptr);
    rec["hypothesis"] = to_string(it.hypothesis);
    rec["x"] = exact_json(it.x, c.precision);
    rec["lhs"] = it.lhs ? exact_json(*it.lhs, c.precision) : Json(nullptr);
    rec["rhs"] = it.rhs ? exact_json(*it.rhs, c.precision) : Json(nullptr);
    counterexamples.push_back(std::move(rec));
  }
  Json j = header("conjecture");
  j["kmax"] = kmax;
  j["checked"] = items.size();
  j["passed_items"] = passed;
  j["counterexamples"] = std::move(counterexamples);
  j["passed"] = passed == items.size();
  emit(j, c.format, os);
  return passed == items.size() ? kSuccess : kVerificationFailed;
}

struct ScanRecord {
  Tuple tuple;
  CuspData cusp;
  std::optional<CyclotomicNumber> exact;
  std::string error;
};

int cmd_scan(const RunConfig& c, std::ostream& os) {
  const long kmax = c.kmax > 0 ? c.kmax : 12;
  if (c.bmax < 1 || c.Amax < 0 || c.Bmax < 1) throw UsageError("scan ranges must be nonnegative");
  const auto tuples = enumerate_tuples(c.bmax, c.Amax, c.Bmax, kmax);
  const auto records = parallel_map(tuples.size(), [&](std::size_t i) {
    ScanRecord r;
    r.tuple = tuples[i];
    r.cusp = cusp_data(r.tuple.params, r.tuple.h, r.tuple.k);
    if (c.with_limits && is_supported(r.cusp.label)) {
      try {
        r.exact = radial_limit(r.tuple.params, r.tuple.h, r.tuple.k, c.precision).exact;
      } catch (const Error& e) {
        r.error = e.what();
      }
    }
    return r;
  });

  if (c.format == "csv") {
    os << "a,b,A,B,h,k,label,kprime,Bprime,mu,inQ";
    if (c.with_limits) os << ",order,exact,error";
    os << "\n";
    for (const ScanRecord& r : records) {
      const auto& p = r.tuple.params;
      os << p.a << ',' << p.b << ',' << p.A << ',' << p.B << ',' << r.cusp.h << ',' << r.cusp.k << ','
         << to_string(r.cusp.label) << ',' << r.cusp.kprime << ',' << r.cusp.Bprime << ','
         << csv_field(r.cusp.mu.get_str()) << ',' << (r.cusp.in_Q ? "true" : "false");
      if (c.with_limits) {
        if (r.exact) {
          const CyclotomicNumber m = r.exact->minimal();
          os << ',' << m.order() << ',' << csv_field(m.to_string());
        } else {
          os << ",,";
        }
        os << ',' << csv_field(r.error);
      }
      os << "\n";
    }
    return kSuccess;
  }

  Json list = Json::array();
  for (const ScanRecord& r : records) {
    Json rec{{"params", params_json(r.tuple.params)}, {"cusp", cusp_json(r.cusp)}};
    if (c.with_limits) {
      rec["exact"] = r.exact ? exact_json(*r.exact, c.precision) : Json(nullptr);
      if (!r.error.empty()) rec["error"] = r.error;
    }
    list.push_back(std::move(rec));
  }
  Json j = header("scan");
  j["ranges"] = {{"bmax", c.bmax}, {"Amax", c.Amax}, {"Bmax", c.Bmax}, {"kmax", kmax}};
  j["count"] = records.size();
  j["records"] = std::move(list);
  emit(j, c.format, os);
  return kSuccess;
}

void validate(const RunConfig& c, const std::string& command) {
  if (c.precision < 10) throw UsageError("--precision must be at least 10");
  if (c.t_steps < 3) throw UsageError("--t-steps must be at least 3");
  const Rational t = parse_rational(c.t_start);
  if (t <= 0 || t > Rational(1, 2)) throw UsageError("--t-start must lie in (0, 0.5]");
  if (c.format == "csv" && command != "scan") throw UsageError("csv output is only available for scan");
  if (c.order_cap < 6) throw UsageError("--order-cap must be at least 6");
  if (c.tolerance < 0) throw UsageError("--tolerance must be positive");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radial limits of the universal mock theta function g3", "mockradial"};
  // --h is the cusp numerator, so help is reachable through --help only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1, 1);
  RunConfig c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--precision", c.precision, "Working precision in decimal digits")->capture_default_str();
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub->add_option("--out", c.out_path, "Write the report to this file instead of stdout");
    sub->add_option("--order-cap", c.order_cap, "Largest cyclotomic order accepted")->capture_default_str();
  };
  auto add_tuple = [&](CLI::App* sub) {
    sub->add_option("--a", c.a, "Numerator of the root of unity in x")->capture_default_str();
    sub->add_option("--b", c.b, "Order of the root of unity in x")->capture_default_str();
    sub->add_option("--A", c.A, "Power of q in x")->capture_default_str();
    sub->add_option("--B", c.B, "Power of q used as the nome")->capture_default_str();
    sub->add_option("--h", c.h, "Cusp numerator")->capture_default_str();
    sub->add_option("--k", c.k, "Cusp denominator")->capture_default_str();
  };

  CLI::App* classify = app.add_subcommand("classify", "Case label and invariants at a cusp");
  add_common(classify);
  add_tuple(classify);

  CLI::App* limit = app.add_subcommand("limit", "Exact radial limit with its companion");
  add_common(limit);
  add_tuple(limit);

  CLI::App* verify = app.add_subcommand("verify-radial", "Numerical radial convergence check");
  add_common(verify);
  add_tuple(verify);
  verify->add_option("--t-start", c.t_start, "First radial parameter t")->capture_default_str();
  verify->add_option("--t-steps", c.t_steps, "Number of halvings of t")->capture_default_str();
  verify->add_option("--tolerance", c.tolerance, "Pass threshold for the final residual (default 1e-3)");

  CLI::App* check = app.add_subcommand("check", "Random-sample identity suites");
  add_common(check);
  check->add_option("--identity", c.identity, "Identity id or 'all'")->capture_default_str();
  check->add_option("--samples", c.samples, "Samples per identity")->capture_default_str();
  check->add_option("--seed", c.seed, "Sampler seed")->capture_default_str();
  check->add_option("--tolerance", c.tolerance, "Override the residual threshold");

  CLI::App* corollary = app.add_subcommand("corollary", "Exact check of the fifth-order corollary");
  add_common(corollary);
  corollary->add_option("--kmax", c.kmax, "Largest k (default 30)");

  CLI::App* conjecture = app.add_subcommand("conjecture", "Exact check of the finite-sum conjecture");
  add_common(conjecture);
  conjecture->add_option("--kmax", c.kmax, "Largest k (default 8)");

  CLI::App* scan = app.add_subcommand("scan", "Classify every tuple in a range");
  add_common(scan);
  scan->add_option("--bmax", c.bmax, "Largest b")->capture_default_str();
  scan->add_option("--Amax", c.Amax, "Largest A")->capture_default_str();
  scan->add_option("--Bmax", c.Bmax, "Largest B")->capture_default_str();
  scan->add_option("--kmax", c.kmax, "Largest k (default 12)");
  scan->add_flag("--limits", c.with_limits, "Also compute exact limits for supported tuples");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    validate(c, command);
    set_order_cap(c.order_cap);

    std::ostringstream buffer;
    int code = kSuccess;
    if (command == "classify") code = cmd_classify(c, buffer);
    else if (command == "limit") code = cmd_limit(c, buffer);
    else if (command == "verify-radial") code = cmd_verify_radial(c, buffer);
    else if (command == "check") code = cmd_check(c, buffer);
    else if (command == "corollary") code = cmd_corollary(c, buffer);
    else if (command == "conjecture") code = cmd_conjecture(c, buffer);
    else code = cmd_scan(c, buffer);

    if (c.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream f(c.out_path);
      if (!f) throw UsageError("cannot open " + c.out_path);
      f << buffer.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedCase& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const OrderLimitExceeded& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace mockradial::cli
