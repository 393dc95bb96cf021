#include "srpoly/capi.h"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstring>
#include <random>
#include <sstream>
#include <string>

#include "srpoly/canonical.hpp"
#include "srpoly/closed_forms.hpp"
#include "srpoly/criterion.hpp"
#include "srpoly/oracle.hpp"

using nlohmann::json;
using namespace srp;

struct srp_poly {
  SelfReciprocalPoly p;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error, const std::string& msg) {
  if (error) *error = dup_string(msg);
}

json rat_json(const Rat& x) {
  return json{{"exact", rat_to_string(x)}, {"approx", rat_to_double(x)}};
}

json ratfunc_json(const RationalFunction& f) {
  return json{{"num", f.num().to_string("t")}, {"den", f.den().to_string("t")}};
}

json coeffs_json(const SelfReciprocalPoly& p) {
  json a = json::array();
  for (const Rat& c : p.coeffs()) a.push_back(rat_to_string(c));
  return a;
}

json log_report_json(const CriterionReport& rep) {
  json steps = json::array();
  const int g = rep.rec.g;
  for (size_t i = 0; i < rep.rec.steps.size(); ++i) {
    const auto& s = rep.rec.steps[i];
    int n = static_cast<int>(i) + 1;
    json row{{"n", n}, {"k", 2 * g - n}, {"status", to_string(s.status)}};
    row["m"] = s.m ? rat_json(*s.m) : json(nullptr);
    steps.push_back(row);
  }
  json r;
  r["available"] = rep.rseq.available;
  if (rep.rseq.available) {
    json vals = json::array();
    for (const Rat& x : rep.rseq.r) vals.push_back(rat_json(x));
    r["values"] = vals;
  } else {
    r["unavailable_step"] = rep.rseq.unavailable_step;
  }
  return json{{"verdict", to_string(rep.verdict)},
              {"fail_step", rep.fail_step},
              {"fail_reason", to_string(rep.fail_reason)},
              {"m_2g", rat_json(m2g_log(g))},
              {"steps", steps},
              {"r", r}};
}

json omega_report_json(const OmegaReport& rep, bool exact) {
  json steps = json::array();
  for (size_t i = 0; i < rep.rec.steps.size(); ++i) {
    const auto& s = rep.rec.steps[i];
    int n = static_cast<int>(i) + 1;
    json row{{"n", n}, {"k", 2 * rep.rec.g - n}, {"status", to_string(s.status)}};
    row["m"] = s.m ? ratfunc_json(*s.m) : json(nullptr);
    if (i < rep.certificates.size() && exact) {
      const auto& c = rep.certificates[i];
      row["certificate"] = json{{"positive", c.positive},
                                {"roots_num_right_of_one", c.roots_num},
                                {"roots_den_right_of_one", c.roots_den}};
    }
    steps.push_back(row);
  }
  json r = json::array();
  for (const RationalFunction& f : rep.r) r.push_back(ratfunc_json(f));
  return json{{"verdict", to_string(rep.verdict)},
              {"exact", exact},
              {"fail_step", rep.fail_step},
              {"fail_reason", to_string(rep.fail_reason)},
              {"m_2g", ratfunc_json(m2g_omega(rep.rec.g))},
              {"steps", steps},
              {"r", r}};
}

// ---- verify battery ----------------------------------------------------

struct CheckSink {
  json checks = json::array();
  bool all_pass = true;

  void pass(const std::string& name, double residual, double tol, const std::string& detail = "") {
    add(name, residual <= tol ? "pass" : "fail", residual, tol, detail);
  }
  void exact(const std::string& name, bool ok, const std::string& detail = "") {
    add(name, ok ? "pass" : "fail", ok ? 0.0 : 1.0, 0.0, detail);
  }
  void skip(const std::string& name, const std::string& reason) {
    json c{{"name", name}, {"status", "skipped"}, {"reason", reason}};
    checks.push_back(c);
  }
  void info(const std::string& name, const std::string& detail) {
    checks.push_back(json{{"name", name}, {"status", "info"}, {"detail", detail}});
  }
  void add(const std::string& name, const std::string& status, double residual, double tol,
           const std::string& detail) {
    json c{{"name", name}, {"status", status}, {"residual", residual}, {"tolerance", tol}};
    if (!detail.empty()) c["detail"] = detail;
    if (status == "fail") all_pass = false;
    checks.push_back(c);
  }
};

cplx random_z(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  return {d(rng), d(rng)};
}

double rel(cplx got, cplx want) {
  return std::abs(got - want) / std::max(std::abs(want), 1.0);
}

void canonical_battery(CheckSink& sink, const SelfReciprocalPoly& p, double q) {
  CanonicalSystem sys(p, q);
  ExpPolyFunctions f(p, q);
  std::mt19937_64 rng(20240229ull);
  const int g = p.g();

  if (sys.defined_steps() < 1) {
    sink.skip("canonical", "no recursion step defined");
    return;
  }

  double worst_a = 0.0, worst_b = 0.0, worst_parity = 0.0;
  for (int i = 0; i < 20; ++i) {
    cplx z = random_z(rng);
    auto [A1, B1] = sys.eval_AB(1.0, z);
    worst_a = std::max(worst_a, rel(A1, f.A(z)));
    worst_b = std::max(worst_b, rel(B1, f.B(z)));
    worst_parity = std::max({worst_parity, rel(f.A(-z), f.A(z)), rel(f.B(-z), -f.B(z))});
  }
  sink.pass("boundary_A_at_1", worst_a, 1e-10);
  sink.pass("boundary_B_at_1", worst_b, 1e-10);
  sink.pass("A_even_B_odd", worst_parity, 1e-10);

  if (sys.defined_steps() < 2 * g) {
    sink.skip("continuity_breakpoints", "singular step: state vectors incomplete");
    sink.skip("end_limit", "singular step");
  } else {
    double worst = 0.0;
    for (int n = 1; n < 2 * g; ++n) {
      double bp = std::pow(q, n / 2.0);
      for (int i = 0; i < 5; ++i) {
        cplx z = random_z(rng);
        auto [Al, Bl] = sys.eval_AB(bp * (1.0 - 1e-13), z);
        auto [Ar, Br] = sys.eval_AB(bp, z);
        worst = std::max({worst, rel(Al, Ar), rel(Bl, Br)});
      }
    }
    sink.pass("continuity_breakpoints", worst, 1e-9);

    auto [Ae, Be] = sys.eval_AB(std::pow(q, g) * (1.0 - 1e-13), 0.0);
    double end_res = std::hypot(Ae.real() - sys.boundary_value(), std::abs(Be));
    sink.pass("end_limit", end_res / std::max(std::abs(sys.boundary_value()), 1.0), 1e-9);
  }

  // ODE residual inside a step that exists even for partial sequences
  {
    std::uniform_real_distribution<double> frac(0.15, 0.35);
    double a = std::pow(q, frac(rng));
    cplx z = random_z(rng);
    double r1 = sys.ode_residual(a, z, 1e-4);
    double r2 = sys.ode_residual(a, z, 5e-5);
    sink.pass("ode_residual_h1e-4", r1, 1e-6);
    double ratio = r2 > 0 ? r1 / r2 : 4.0;
    sink.exact("ode_convergence_order2", ratio > 3.5 && ratio < 4.5,
               "h/2 residual ratio " + std::to_string(ratio));
  }

  if (!sys.all_m_positive()) {
    sink.skip("transfer_product", "requires every m > 0");
    sink.skip("hb_inequality_sampling", "requires every m > 0");
  } else {
    double worst = 0.0, worst_det = 0.0;
    std::uniform_real_distribution<double> fa(0.0, g - 1e-9);
    for (int i = 0; i < 10; ++i) {
      double a = std::pow(q, fa(rng));
      cplx z = random_z(rng);
      auto [At, Bt] = sys.transfer_product(a, z);
      auto [Av, Bv] = sys.eval_AB(a, z);
      worst = std::max({worst, rel(At, Av), rel(Bt, Bv)});
      cplx m[2][2];
      CanonicalSystem::transfer_factor(0.5 * std::log(q), sys.m(1 + i % (2 * g)), z, m);
      worst_det = std::max(worst_det, std::abs(m[0][0] * m[1][1] - m[0][1] * m[1][0] - 1.0));
    }
    sink.pass("transfer_product_vs_eval", worst, 1e-9);
    sink.pass("transfer_factor_det_1", worst_det, 1e-12);

    bool hb = true;
    for (int i = 0; i < 20; ++i) {
      cplx z = random_z(rng);
      z = {z.real(), std::abs(z.imag()) + 0.05};
      if (!(std::abs(f.Esharp(z)) < std::abs(f.E(z)))) hb = false;
    }
    sink.info("hb_inequality_sampling",
              std::string(hb ? "|E#(z)| < |E(z)| at all 20 sampled upper-half z"
                             : "violated at a sampled z") +
                  " (sampling evidence, not a proof)");
  }
}

void factorization_battery(CheckSink& sink, const SelfReciprocalPoly& p) {
  std::mt19937_64 rng(77001ull);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
  try {
    bool ok = true;
    for (int i = 0; i < 20; ++i) {
      Rat x = make_rat(num(rng), den(rng));
      ok = ok && factorization_identity(p, x);
    }
    sink.exact("factorization_20_random_x", ok);
  } catch (const not_applicable_error& e) {
    sink.skip("factorization_20_random_x", e.what());
  }
}

void kernel_battery(CheckSink& sink, const SelfReciprocalPoly& p, double q) {
  CanonicalSystem sys(p, q);
  if (!sys.all_m_positive()) {
    sink.skip("kernel", "requires every m > 0");
    return;
  }
  std::mt19937_64 rng(90210ull);
  std::uniform_real_distribution<double> fa(0.0, p.g() - 1e-9), im(0.2, 1.5);
  double worst_herm = 0.0, worst_id = 0.0;
  bool positive = true, monotone = true;
  for (int i = 0; i < 10; ++i) {
    double a1 = std::pow(q, fa(rng)), a2 = std::pow(q, fa(rng));
    if (a1 > a2) std::swap(a1, a2);
    cplx z = random_z(rng), w = random_z(rng);
    z = {z.real(), im(rng)};
    cplx K1 = sys.kernel_K(a1, z, w), K2 = sys.kernel_K(a1, w, z);
    worst_herm = std::max(worst_herm, std::abs(K1 - std::conj(K2)) /
                                          std::max(std::abs(K1), 1.0));
    if (a2 > a1 * (1 + 1e-9))
      worst_id = std::max(worst_id, sys.kernel_identity_residual(a1, a2, z, w));
    double d1 = sys.kernel_diag(a1, z), d2 = sys.kernel_diag(a2, z);
    if (!(d1 > 0.0)) positive = false;
    if (a2 > a1 * (1 + 1e-9) && !(d1 > d2)) monotone = false;
  }
  sink.pass("kernel_hermitian", worst_herm, 1e-10);
  sink.pass("kernel_identity_quadrature", worst_id, 1e-6);
  sink.exact("kernel_diag_positive", positive);
  sink.exact("kernel_diag_decreasing_in_a", monotone);
}

void omega_battery(CheckSink& sink, const SelfReciprocalPoly& p, double q, double omv) {
  OmegaFunctions om(p, q, omv);
  const CanonicalSystem& sys = om.system();
  ExpPolyFunctions base(p, q);
  std::mt19937_64 rng(31415ull);
  const int g = p.g();

  if (sys.defined_steps() < 2 * g) {
    sink.skip("omega_battery", "omega recursion hit a singular step");
    return;
  }
  double worst_b = 0.0, worst_e = 0.0;
  for (int i = 0; i < 20; ++i) {
    cplx z = random_z(rng);
    auto [A1, B1] = sys.eval_AB(1.0, z);
    worst_b = std::max({worst_b, rel(A1, om.A(z)), rel(B1, om.B(z))});
    worst_e = std::max(worst_e, rel(om.E(z), base.A(z + cplx(0, omv))));
  }
  sink.pass("omega_boundary_at_1", worst_b, 1e-10);
  sink.pass("omega_E_is_shifted_A", worst_e, 1e-12);

  std::uniform_real_distribution<double> frac(0.15, 0.35);
  double a = std::pow(q, frac(rng));
  sink.pass("omega_ode_residual", sys.ode_residual(a, random_z(rng), 1e-4), 1e-6);

  {
    double worst = 0.0;
    for (int n = 1; n < 2 * g; ++n) {
      double bp = std::pow(q, n / 2.0);
      cplx z = random_z(rng);
      auto [Al, Bl] = sys.eval_AB(bp * (1.0 - 1e-13), z);
      auto [Ar, Br] = sys.eval_AB(bp, z);
      worst = std::max({worst, rel(Al, Ar), rel(Bl, Br)});
    }
    sink.pass("omega_continuity_breakpoints", worst, 1e-9);
  }

  if (sys.all_m_positive()) {
    double worst = 0.0;
    std::uniform_real_distribution<double> fa(0.0, g - 1e-9);
    for (int i = 0; i < 10; ++i) {
      double a2 = std::pow(q, fa(rng));
      cplx z = random_z(rng);
      auto [At, Bt] = sys.transfer_product(a2, z);
      auto [Av, Bv] = sys.eval_AB(a2, z);
      worst = std::max({worst, rel(At, Av), rel(Bt, Bv)});
    }
    sink.pass("omega_transfer_product_vs_eval", worst, 1e-9);
    sink.info("omega_hamiltonian_positive", "true");
  } else {
    // Positivity of H depends on where the zeros are; report, don't fail.
    sink.info("omega_hamiltonian_positive", "false");
  }
}

json verify_json(const SelfReciprocalPoly& p, const std::string& battery, double q,
                 double omv) {
  CheckSink sink;

  {
    RootReport roots = find_roots(p);
    sink.pass("oracle_root_residual", roots.max_residual, 1e-10);
    sink.info("oracle_summary",
              std::string("all_on_circle=") + (roots.all_on_circle ? "true" : "false") +
                  " all_simple=" + (roots.all_simple ? "true" : "false"));
    sink.info("square_free", square_free(p) ? "true" : "false");
  }

  bool all = battery == "all";
  if (all || battery == "canonical") canonical_battery(sink, p, q);
  if (all || battery == "factorization") factorization_battery(sink, p);
  if (all || battery == "kernel") kernel_battery(sink, p, q);
  if (all || battery == "omega") omega_battery(sink, p, q, omv);

  // H(a) step dump for external plotting: piecewise-constant m over
  // geometric intervals; truncated after a singular recursion step.
  json ham = json::array();
  {
    CanonicalSystem sys(p, q);
    for (const HamiltonianStep& s : sys.hamiltonian().steps)
      ham.push_back(json{{"n", s.n}, {"a_start", s.a_start}, {"a_end", s.a_end}, {"m", s.m}});
  }

  return json{{"schema_version", 1},
              {"command", "verify"},
              {"g", p.g()},
              {"coeffs", coeffs_json(p)},
              {"battery", battery},
              {"q", q},
              {"omega", omv},
              {"hamiltonian", ham},
              {"checks", sink.checks},
              {"passed", sink.all_pass}};
}

std::vector<InstanceMode> parse_modes(const std::string& modes) {
  if (modes == "all" || modes.empty())
    return {InstanceMode::OnCircleSimple, InstanceMode::OnCircleMultiple,
            InstanceMode::OffCircle, InstanceMode::Mixed};
  std::vector<InstanceMode> out;
  std::stringstream ss(modes);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "OnCircleSimple") out.push_back(InstanceMode::OnCircleSimple);
    else if (tok == "OnCircleMultiple") out.push_back(InstanceMode::OnCircleMultiple);
    else if (tok == "OffCircle") out.push_back(InstanceMode::OffCircle);
    else if (tok == "Mixed") out.push_back(InstanceMode::Mixed);
    else throw std::invalid_argument("unknown instance mode '" + tok + "'");
  }
  return out;
}

json experiment_json(const std::string& modes, int g_min, int g_max, int count,
                     uint64_t seed) {
  json summary = json::array();
  json disagreements = json::array();
  int total = 0, agree = 0;
  for (InstanceMode mode : parse_modes(modes)) {
    for (int g = g_min; g <= g_max; ++g) {
      int mode_agree = 0;
      for (int i = 0; i < count; ++i) {
        SelfReciprocalPoly p = random_instance(mode, g, seed + static_cast<uint64_t>(i));
        CriterionReport lg = run_log(p);
        OmegaReport om = run_omega(p);
        RootReport roots = find_roots(p);
        bool sf = square_free(p);
        bool ok_log = (lg.verdict == Verdict::AllOnCircleSimple) ==
                      (roots.all_on_circle && sf);
        bool ok_om = (om.verdict == Verdict::AllOnCircle) == roots.all_on_circle;
        ++total;
        if (ok_log && ok_om) {
          ++agree;
          ++mode_agree;
        } else {
          disagreements.push_back(json{{"mode", to_string(mode)},
                                       {"g", g},
                                       {"seed", seed + static_cast<uint64_t>(i)},
                                       {"coeffs", coeffs_json(p)},
                                       {"log_verdict", to_string(lg.verdict)},
                                       {"omega_verdict", to_string(om.verdict)},
                                       {"oracle_all_on_circle", roots.all_on_circle},
                                       {"square_free", sf}});
        }
      }
      summary.push_back(json{{"mode", to_string(mode)},
                             {"g", g},
                             {"count", count},
                             {"agree", mode_agree}});
    }
  }
  return json{{"schema_version", 1},
              {"command", "experiment"},
              {"modes", modes},
              {"g_min", g_min},
              {"g_max", g_max},
              {"count", count},
              {"seed", seed},
              {"total", total},
              {"agree", agree},
              {"summary", summary},
              {"disagreements", disagreements}};
}

template <class F>
srp_status guarded(char** error, F&& body) {
  try {
    body();
    return SRP_OK;
  } catch (const parse_error& e) {
    set_error(error, e.what());
    return SRP_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    set_error(error, e.what());
    return SRP_ERR_INVALID;
  } catch (const std::domain_error& e) {
    set_error(error, e.what());
    return SRP_ERR_STATE;
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return SRP_ERR_INTERNAL;
  }
}

std::vector<Rat> parse_rat_list(const char* const* items, size_t count) {
  std::vector<Rat> out;
  for (size_t i = 0; i < count; ++i) out.push_back(rat_from_string(items[i]));
  return out;
}

json rvalues_body(const SelfReciprocalPoly& p) {
  CriterionReport rep = run_log(p);
  json r;
  r["available"] = rep.rseq.available;
  if (rep.rseq.available) {
    json vals = json::array();
    for (const Rat& x : rep.rseq.r) vals.push_back(rat_json(x));
    r["values"] = vals;
  } else {
    r["unavailable_step"] = rep.rseq.unavailable_step;
    json partial = json::array();
    for (const auto& s : rep.rec.steps)
      partial.push_back(s.m ? rat_json(*s.m) : json(nullptr));
    r["partial_m"] = partial;
  }
  return json{{"schema_version", 1},
              {"command", "rvalues"},
              {"g", p.g()},
              {"coeffs", coeffs_json(p)},
              {"verdict", to_string(rep.verdict)},
              {"r", r}};
}

}  // namespace

extern "C" {

srp_status srp_poly_create(const char* const* coeffs, size_t count, srp_poly** out,
                           char** error) {
  return guarded(error, [&] {
    if (!coeffs || count < 2) throw std::invalid_argument("need at least c_0 and c_1");
    std::vector<Rat> c = parse_rat_list(coeffs, count);
    *out = new srp_poly{SelfReciprocalPoly(static_cast<int>(count) - 1, std::move(c))};
  });
}

srp_status srp_poly_from_lambdas(const char* const* lambdas, size_t count, const char* c0,
                                 srp_poly** out, char** error) {
  return guarded(error, [&] {
    if (!lambdas || count < 1) throw std::invalid_argument("need at least one lambda");
    LambdaSpec spec;
    spec.lambdas = parse_rat_list(lambdas, count);
    spec.c0 = c0 ? rat_from_string(c0) : Rat(1);
    *out = new srp_poly{from_lambdas(spec)};
  });
}

void srp_poly_free(srp_poly* p) { delete p; }

int srp_poly_genus(const srp_poly* p) { return p ? p->p.g() : 0; }

srp_status srp_check(const srp_poly* p, const char* mode, int omega_exact, char** json_out,
                     char** error) {
  return guarded(error, [&] {
    if (!p || !json_out) throw std::invalid_argument("null argument");
    std::string m = mode ? mode : "both";
    if (m != "log" && m != "omega" && m != "both")
      throw std::invalid_argument("mode must be log, omega or both");
    json out{{"schema_version", 1},
             {"command", "check"},
             {"g", p->p.g()},
             {"coeffs", coeffs_json(p->p)},
             {"mode", m}};
    if (m == "log" || m == "both") out["log"] = log_report_json(run_log(p->p));
    if (m == "omega" || m == "both")
      out["omega"] = omega_report_json(run_omega(p->p, omega_exact != 0), omega_exact != 0);
    *json_out = dup_string(out.dump(2));
  });
}

srp_status srp_rvalues(const srp_poly* p, char** json_out, char** error) {
  return guarded(error, [&] {
    if (!p || !json_out) throw std::invalid_argument("null argument");
    *json_out = dup_string(rvalues_body(p->p).dump(2));
  });
}

srp_status srp_rvalues_lambdas(const char* const* lambdas, size_t count, char** json_out,
                               char** error) {
  return guarded(error, [&] {
    if (!lambdas || count < 1 || !json_out) throw std::invalid_argument("null argument");
    LambdaSpec spec;
    spec.lambdas = parse_rat_list(lambdas, count);
    SelfReciprocalPoly p = from_lambdas(spec);
    json out = rvalues_body(p);
    json lam = json::array();
    for (const Rat& l : spec.lambdas) lam.push_back(rat_to_string(l));
    out["lambdas"] = lam;
    if (count <= 3) {
      try {
        std::vector<Rat> cf = r_closed_form_lambdas(spec.lambdas);
        json vals = json::array();
        for (const Rat& x : cf) vals.push_back(rat_json(x));
        out["closed_form"] = vals;
        bool match = out["r"]["available"].get<bool>();
        if (match) {
          CriterionReport rep = run_log(p);
          for (size_t n = 0; n < cf.size(); ++n) match = match && rep.rseq.r[n] == cf[n];
        }
        out["closed_form_matches"] = match;
      } catch (const division_by_zero&) {
        out["closed_form"] = nullptr;
      }
    }
    *json_out = dup_string(out.dump(2));
  });
}

srp_status srp_verify(const srp_poly* p, const char* battery, double q, double omega,
                      char** json_out, char** error) {
  return guarded(error, [&] {
    if (!p || !json_out) throw std::invalid_argument("null argument");
    std::string b = battery ? battery : "all";
    if (b != "all" && b != "canonical" && b != "factorization" && b != "kernel" &&
        b != "omega")
      throw std::invalid_argument("unknown battery '" + b + "'");
    if (!(q > 1.0)) throw std::invalid_argument("q must exceed 1");
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
    *json_out = dup_string(verify_json(p->p, b, q, omega).dump(2));
  });
}

srp_status srp_experiment(const char* modes, int g_min, int g_max, int count, uint64_t seed,
                          char** json_out, char** error) {
  return guarded(error, [&] {
    if (!json_out) throw std::invalid_argument("null argument");
    if (g_min < 1 || g_max < g_min) throw std::invalid_argument("bad g range");
    if (count < 0) throw std::invalid_argument("count must be >= 0");
    *json_out =
        dup_string(experiment_json(modes ? modes : "all", g_min, g_max, count, seed).dump(2));
  });
}

void srp_string_free(char* s) { std::free(s); }

const char* srp_version(void) { return "1.0.0"; }

}  // extern "C"
