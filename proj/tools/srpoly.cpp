// Command-line front end; all work happens behind the C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "srpoly/capi.h"

using nlohmann::json;

namespace {

[[noreturn]] void die(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(2);
}

struct Poly {
  srp_poly* h = nullptr;
  ~Poly() { srp_poly_free(h); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  srp_string_free(s);
  return out;
}

void load_poly(Poly& poly, const std::vector<std::string>& coeffs, const std::string& file) {
  std::vector<std::string> c = coeffs;
  if (!file.empty()) {
    if (!c.empty()) die("give coefficients inline or with --file, not both");
    std::ifstream in(file);
    if (!in) die("cannot open '" + file + "'");
    json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      die(std::string("bad input file: ") + e.what());
    }
    if (!j.contains("g") || !j.contains("coeffs")) die("input file needs \"g\" and \"coeffs\"");
    for (const auto& x : j["coeffs"]) c.push_back(x.get<std::string>());
    if (static_cast<int>(c.size()) != j["g"].get<int>() + 1)
      die("coeffs length must be g+1");
  }
  if (c.size() < 2) die("need coefficients c_0 ... c_g (g >= 1)");
  std::vector<const char*> argv;
  for (const auto& s : c) argv.push_back(s.c_str());
  char* err = nullptr;
  if (srp_poly_create(argv.data(), argv.size(), &poly.h, &err)) die(take(err));
}

std::string fmt_rat(const json& r) {
  if (r.is_null()) return "-";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", r["approx"].get<double>());
  return r["exact"].get<std::string>() + " (" + buf + ")";
}

std::string fmt_ratfunc(const json& r) {
  if (r.is_null()) return "-";
  std::string den = r["den"].get<std::string>();
  if (den == "1") return r["num"].get<std::string>();
  return "(" + r["num"].get<std::string>() + ") / (" + den + ")";
}

void print_check_table(const json& j) {
  std::cout << "g = " << j["g"] << ", coefficients:";
  for (const auto& c : j["coeffs"]) std::cout << " " << c.get<std::string>();
  std::cout << "\n";
  if (j.contains("log")) {
    const json& lg = j["log"];
    std::cout << "\nlog mode (log q = 1): verdict " << lg["verdict"].get<std::string>();
    if (lg["fail_step"].get<int>() != 0)
      std::cout << " at step " << lg["fail_step"] << " (" << lg["fail_reason"].get<std::string>()
                << ")";
    std::cout << "\n  step  m\n";
    for (const auto& s : lg["steps"])
      std::cout << "  " << s["n"] << "     " << fmt_rat(s["m"]) << "  [" << s["status"].get<std::string>()
                << "]\n";
    if (lg["r"]["available"].get<bool>()) {
      std::cout << "  R_1..R_2g:";
      const auto& vals = lg["r"]["values"];
      for (size_t n = 1; n < vals.size(); ++n) std::cout << " " << vals[n]["exact"].get<std::string>();
      std::cout << "\n";
    } else {
      std::cout << "  R-sequence unavailable from step " << lg["r"]["unavailable_step"] << "\n";
    }
  }
  if (j.contains("omega")) {
    const json& om = j["omega"];
    std::cout << "\nomega mode (t = q^omega): verdict " << om["verdict"].get<std::string>()
              << (om["exact"].get<bool>() ? " [exact Sturm]" : " [sampled only]") << "\n";
    for (const auto& s : om["steps"]) {
      std::cout << "  step " << s["n"] << "  m = " << fmt_ratfunc(s["m"]);
      if (s.contains("certificate") && !s["certificate"].is_null())
        std::cout << (s["certificate"]["positive"].get<bool>() ? "  [positive on (1,inf)]"
                                                               : "  [NOT positive]");
      std::cout << "\n";
    }
  }
}

void print_rvalues_table(const json& j) {
  std::cout << "g = " << j["g"] << ", verdict " << j["verdict"].get<std::string>() << "\n";
  if (j["r"]["available"].get<bool>()) {
    const auto& vals = j["r"]["values"];
    for (size_t n = 1; n < vals.size(); ++n)
      std::cout << "R_" << n << " = " << fmt_rat(vals[n]) << "\n";
  } else {
    std::cout << "R-sequence unavailable from step " << j["r"]["unavailable_step"] << "\n";
    const auto& pm = j["r"]["partial_m"];
    for (size_t i = 0; i < pm.size(); ++i)
      std::cout << "m at step " << i + 1 << " = " << fmt_rat(pm[i]) << "\n";
  }
  if (j.contains("closed_form_matches"))
    std::cout << "closed-form cross-check: "
              << (j["closed_form_matches"].get<bool>() ? "match" : "MISMATCH") << "\n";
}

void print_verify_table(const json& j) {
  for (const auto& c : j["checks"]) {
    std::string status = c["status"].get<std::string>();
    std::cout << "  [" << status << "] " << c["name"].get<std::string>();
    if (c.contains("residual") && status != "info")
      std::cout << "  residual " << c["residual"].get<double>() << " tol "
                << c["tolerance"].get<double>();
    if (c.contains("detail")) std::cout << "  (" << c["detail"].get<std::string>() << ")";
    if (c.contains("reason")) std::cout << "  (" << c["reason"].get<std::string>() << ")";
    std::cout << "\n";
  }
  std::cout << (j["passed"].get<bool>() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
}

void print_experiment_table(const json& j) {
  std::cout << "mode,g,count,agree\n";
  for (const auto& row : j["summary"])
    std::cout << row["mode"].get<std::string>() << "," << row["g"] << "," << row["count"] << ","
              << row["agree"] << "\n";
  std::cout << "total " << j["total"] << ", agree " << j["agree"] << "\n";
  if (!j["disagreements"].empty()) {
    std::cout << "DISAGREEMENTS:\n" << j["disagreements"].dump(2) << "\n";
  }
}

void print_check_csv(const json& j) {
  std::cout << "mode,n,k,status,m\n";
  if (j.contains("log"))
    for (const auto& s : j["log"]["steps"])
      std::cout << "log," << s["n"] << "," << s["k"] << "," << s["status"].get<std::string>()
                << "," << (s["m"].is_null() ? "-" : s["m"]["exact"].get<std::string>()) << "\n";
  if (j.contains("omega"))
    for (const auto& s : j["omega"]["steps"])
      std::cout << "omega," << s["n"] << "," << s["k"] << "," << s["status"].get<std::string>()
                << ",\"" << fmt_ratfunc(s["m"]) << "\"\n";
}

void print_rvalues_csv(const json& j) {
  std::cout << "n,R_n\n";
  if (!j["r"]["available"].get<bool>()) return;
  const auto& vals = j["r"]["values"];
  for (size_t n = 1; n < vals.size(); ++n)
    std::cout << n << "," << vals[n]["exact"].get<std::string>() << "\n";
}

// H(a) = diag(1/m, m) step dump: one row per geometric interval.
void print_verify_csv(const json& j) {
  std::cout << "n,a_start,a_end,m\n";
  char buf[128];
  for (const auto& s : j["hamiltonian"]) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g", s["n"].get<int>(),
                  s["a_start"].get<double>(), s["a_end"].get<double>(), s["m"].get<double>());
    std::cout << buf << "\n";
  }
}

void print_experiment_csv(const json& j) {
  std::cout << "mode,g,count,agree\n";
  for (const auto& row : j["summary"])
    std::cout << row["mode"].get<std::string>() << "," << row["g"] << "," << row["count"] << ","
              << row["agree"] << "\n";
}

double default_q() {
  if (const char* env = std::getenv("SRPOLY_Q")) {
    try {
      double q = std::stod(env);
      if (q > 1.0) return q;
    } catch (...) {
    }
    std::cerr << "warning: ignoring bad SRPOLY_Q\n";
  }
  return 2.0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact unit-circle zero test for self-reciprocal polynomials"};
  app.require_subcommand(1);
  std::string format = "json";

  std::vector<std::string> coeffs;
  std::string file, mode = "both", battery = "all", modes = "all", grange = "1..6";
  bool sampled = false, lambdas = false;
  double q = default_q(), omega = 0.5;
  int count = 100;
  std::uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "run the positivity criteria");
  check->add_option("coeffs", coeffs, "c_0 ... c_g");
  check->add_option("--file", file, "JSON input {\"g\": int, \"coeffs\": [\"p/q\", ...]}");
  check->add_option("--mode", mode, "log, omega or both");
  check->add_flag("--sampled", sampled, "omega mode: sample t values instead of exact Sturm");

  auto* rvalues = app.add_subcommand("rvalues", "print the R-sequence exactly");
  rvalues->add_option("coeffs", coeffs, "c_0 ... c_g (or lambda_1 ... lambda_g with --lambdas)");
  rvalues->add_option("--file", file, "JSON input file");
  rvalues->add_flag("--lambdas", lambdas, "inputs are factor parameters lambda_j");

  auto* verify = app.add_subcommand("verify", "run the analytic verification battery");
  verify->add_option("coeffs", coeffs, "c_0 ... c_g");
  verify->add_option("--file", file, "JSON input file");
  verify->add_option("--battery", battery, "canonical, factorization, kernel, omega or all");
  verify->add_option("--q", q, "base q > 1 for the floating-point objects");
  verify->add_option("--omega", omega, "omega > 0 for the omega battery");

  auto* experiment = app.add_subcommand("experiment", "criterion-vs-oracle agreement runs");
  experiment->add_option("--modes", modes, "comma-separated instance modes or all");
  experiment->add_option("--g-range", grange, "like 1..6");
  experiment->add_option("--count", count, "instances per (mode, g)");
  experiment->add_option("--seed", seed, "base seed");

  for (CLI::App* sub : {check, rvalues, verify, experiment})
    sub->add_option("--format", format, "json, table or csv")->envname("SRPOLY_FORMAT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (format != "json" && format != "table" && format != "csv") die("unknown format");

  char* err = nullptr;
  char* out = nullptr;

  if (check->parsed()) {
    Poly poly;
    load_poly(poly, coeffs, file);
    if (srp_check(poly.h, mode.c_str(), sampled ? 0 : 1, &out, &err)) die(take(err));
    std::string payload = take(out);
    if (format == "json") std::cout << payload << "\n";
    else if (format == "csv") print_check_csv(json::parse(payload));
    else print_check_table(json::parse(payload));
    return 0;
  }

  if (rvalues->parsed()) {
    std::string payload;
    if (lambdas) {
      if (!file.empty()) die("--lambdas takes inline values");
      if (coeffs.empty()) die("need lambda values");
      std::vector<const char*> argv2;
      for (const auto& s : coeffs) argv2.push_back(s.c_str());
      if (srp_rvalues_lambdas(argv2.data(), argv2.size(), &out, &err)) die(take(err));
      payload = take(out);
    } else {
      Poly poly;
      load_poly(poly, coeffs, file);
      if (srp_rvalues(poly.h, &out, &err)) die(take(err));
      payload = take(out);
    }
    if (format == "json") std::cout << payload << "\n";
    else if (format == "csv") print_rvalues_csv(json::parse(payload));
    else print_rvalues_table(json::parse(payload));
    return 0;
  }

  if (verify->parsed()) {
    Poly poly;
    load_poly(poly, coeffs, file);
    if (srp_verify(poly.h, battery.c_str(), q, omega, &out, &err)) die(take(err));
    std::string payload = take(out);
    json j = json::parse(payload);
    if (format == "json") std::cout << payload << "\n";
    else if (format == "csv") print_verify_csv(j);
    else print_verify_table(j);
    return j["passed"].get<bool>() ? 0 : 1;
  }

  if (experiment->parsed()) {
    auto dots = grange.find("..");
    if (dots == std::string::npos) die("--g-range must look like 1..6");
    int g_min = 0, g_max = 0;
    try {
      g_min = std::stoi(grange.substr(0, dots));
      g_max = std::stoi(grange.substr(dots + 2));
    } catch (...) {
      die("--g-range must look like 1..6");
    }
    if (srp_experiment(modes.c_str(), g_min, g_max, count, seed, &out, &err)) die(take(err));
    std::string payload = take(out);
    if (format == "json") std::cout << payload << "\n";
    else if (format == "csv") print_experiment_csv(json::parse(payload));
    else print_experiment_table(json::parse(payload));
    return 0;
  }
  return 2;
}
