// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "srpoly/capi.h"
#include "srpoly/closed_forms.hpp"
#include "srpoly/criterion.hpp"
#include "srpoly/linsys.hpp"
#include "srpoly/oracle.hpp"

using namespace srp;
using nlohmann::json;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& what) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", idx, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

Rat rand_rat(std::mt19937_64& rng, long span, long den) {
  return make_rat(static_cast<long>(rng() % (2 * span + 1)) - span,
                  1 + static_cast<long>(rng() % den));
}

// --- criteria 1 and 2: printed closed forms vs the recursion, exact ----

bool closed_forms_from_coeffs() {
  std::mt19937_64 rng(1001);
  for (int g = 1; g <= 3; ++g) {
    int done = 0;
    while (done < 100) {
      std::vector<Rat> c(static_cast<size_t>(g) + 1);
      for (auto& x : c) x = rand_rat(rng, 9, 4);
      if (sgn(c[0]) == 0) continue;
      SelfReciprocalPoly p(g, c);
      auto rep = run_log(p);
      if (!rep.rseq.available) continue;
      std::vector<Rat> cf;
      try {
        cf = r_closed_form_coeffs(p);
      } catch (const division_by_zero&) {
        continue;
      }
      if (cf.size() != rep.rseq.r.size()) return false;
      for (size_t n = 0; n < cf.size(); ++n)
        if (!(cf[n] == rep.rseq.r[n])) return false;
      ++done;
    }
  }
  return true;
}

bool closed_forms_from_lambdas() {
  std::mt19937_64 rng(2002);
  for (int g = 1; g <= 3; ++g) {
    int done = 0;
    while (done < 100) {
      std::vector<Rat> lam(static_cast<size_t>(g));
      for (auto& x : lam) x = rand_rat(rng, 150, 1) / 100;
      LambdaSpec spec;
      spec.lambdas = lam;
      spec.c0 = Rat(1 + static_cast<long>(rng() % 4));
      SelfReciprocalPoly p = from_lambdas(spec);
      auto rep = run_log(p);
      if (!rep.rseq.available) continue;
      std::vector<Rat> cf;
      try {
        cf = r_closed_form_lambdas(lam);
      } catch (const division_by_zero&) {
        continue;
      }
      if (cf.size() != rep.rseq.r.size()) return false;
      for (size_t n = 0; n < cf.size(); ++n)
        if (!(cf[n] == rep.rseq.r[n])) return false;
      ++done;
    }
  }
  return true;
}

// --- criterion 3: the singular counterexample ---------------------------

bool counterexample_instance() {
  SelfReciprocalPoly p(2, {Rat(4), Rat(-16), Rat(23)});
  auto rep = run_log(p);
  bool ok = rep.verdict == Verdict::Fails && rep.fail_step == 2 &&
            rep.fail_reason == StepStatus::NumeratorZero &&
            *rep.rec.steps[0].m == make_rat(1, 2);
  RootReport roots = find_roots(p);
  ok = ok && !roots.all_on_circle && roots.all_simple && square_free(p);
  int off = 0;
  for (const auto& r : roots.roots)
    if (!r.on_circle) {
      ++off;
      double mag = std::abs(r.value);
      ok = ok && (std::abs(mag - 2.0) < 1e-8 || std::abs(mag - 0.5) < 1e-8);
    }
  return ok && off == 2;
}

// --- criteria 4 and 5: criterion-vs-oracle equivalence ------------------

bool oracle_equivalence_log(int* count_out) {
  int count = 0, bad = 0;
  for (int mode = 0; mode < 4; ++mode)
    for (int g = 1; g <= 6; ++g)
      for (unsigned seed = 1; seed <= 21; ++seed) {
        SelfReciprocalPoly p = random_instance(static_cast<InstanceMode>(mode), g, seed);
        bool crit = run_log(p).verdict == Verdict::AllOnCircleSimple;
        RootReport r = find_roots(p);
        bool oracle = r.all_on_circle && square_free(p);
        ++count;
        if (crit != oracle) ++bad;
      }
  *count_out = count;
  return bad == 0 && count >= 500;
}

bool oracle_equivalence_omega(int* count_out) {
  int count = 0, bad = 0, multi_rescued = 0;
  for (int mode = 0; mode < 4; ++mode)
    for (int g = 1; g <= 3; ++g)
      for (unsigned seed = 1; seed <= 25; ++seed) {
        SelfReciprocalPoly p = random_instance(static_cast<InstanceMode>(mode), g, seed);
        bool crit = run_omega(p, /*exact=*/true).verdict == Verdict::AllOnCircle;
        bool oracle = find_roots(p).all_on_circle;
        ++count;
        if (crit != oracle) ++bad;
        if (crit && static_cast<InstanceMode>(mode) == InstanceMode::OnCircleMultiple &&
            run_log(p).verdict != Verdict::AllOnCircleSimple)
          ++multi_rescued;
      }
  *count_out = count;
  return bad == 0 && count >= 300 && multi_rescued > 0;
}

// --- criterion 6: t -> 1 limit and the linear rate ----------------------

bool limit_and_rate() {
  std::vector<Rat> eps = {make_rat(1, 1000), make_rat(1, 10000), make_rat(1, 100000)};
  int done = 0;
  unsigned seed = 0;
  while (done < 50) {
    ++seed;
    int g = 1 + static_cast<int>(seed % 3);
    SelfReciprocalPoly p = random_instance(InstanceMode::OnCircleSimple, g, seed);
    auto rows = limit_check(p);
    for (const auto& row : rows)
      if (!(row.omega_defined && row.log_defined && row.equal)) return false;
    OmegaReport om = run_omega(p, /*exact=*/false, {});
    if (om.r.empty()) return false;
    CriterionReport lg = run_log(p);
    for (int n = 1; n <= 2 * g; ++n) {
      double logd[3];
      bool degenerate = false;
      for (int i = 0; i < 3; ++i) {
        Rat d = om.r[static_cast<size_t>(n)].eval_at(Rat(1) + eps[static_cast<size_t>(i)]) -
                lg.rseq.r[static_cast<size_t>(n)];
        if (sgn(d) == 0) {
          degenerate = true;  // R_n constant in t; no rate to fit
          break;
        }
        logd[i] = std::log(std::abs(rat_to_double(d)));
      }
      if (degenerate) continue;
      // least-squares slope of log|diff| against log(eps)
      double lx[3], mx = 0, my = 0;
      for (int i = 0; i < 3; ++i) {
        lx[i] = std::log(rat_to_double(eps[static_cast<size_t>(i)]));
        mx += lx[i] / 3.0;
        my += logd[i] / 3.0;
      }
      double sxy = 0, sxx = 0;
      for (int i = 0; i < 3; ++i) {
        sxy += (lx[i] - mx) * (logd[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
      }
      // R_n(1/t) = R_n(t) (both m_n and m_2g flip sign under t -> 1/t), so
      // the rate is exactly quadratic; anything >= ~linear certifies the
      // |R_n(c;1+eps) - R_n(c)| <= C*eps bound.
      double slope = sxy / sxx;
      if (slope < 0.8) return false;
    }
    ++done;
  }
  return true;
}

// --- criterion 7: matrix layer against brute-force elimination ----------

Rat det_by_elimination(Mat<Rat> M) {
  Rat det(1);
  for (int col = 0; col < M.cols; ++col) {
    int pivot = -1;
    for (int r = col; r < M.rows; ++r)
      if (sgn(M.at(r, col)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      for (int c = 0; c < M.cols; ++c) std::swap(M.at(pivot, c), M.at(col, c));
      det = -det;
    }
    det *= M.at(col, col);
    for (int r = col + 1; r < M.rows; ++r) {
      if (sgn(M.at(r, col)) == 0) continue;
      Rat f = M.at(r, col) / M.at(col, col);
      for (int c = col; c < M.cols; ++c) M.at(r, c) -= f * M.at(col, c);
    }
  }
  return det;
}

bool matrix_layer() {
  std::mt19937_64 rng(7007);
  for (int k = 1; k <= 12; ++k)
    for (int i = 0; i < 20; ++i) {
      Rat m = rand_rat(rng, 19, 7);
      if (sgn(m) == 0) m = Rat(1);
      if (!(det_by_elimination(build_P(k, m)) == det_P_closed_form(k, m))) return false;
      if (i == 0 && !(build_P(k, m) * build_step(k, m) == build_Q<Rat>(k))) return false;
    }
  return !(build_P(0, Rat(2)) * build_step(0, Rat(2)) == build_Q<Rat>(0)) ? false : true;
}

// --- criteria 8-13: analytic batteries through the C API ----------------

json run_verify(const SelfReciprocalPoly& p, const char* battery, double q, double om) {
  std::vector<std::string> cs;
  for (const Rat& c : p.coeffs()) cs.push_back(rat_to_string(c));
  std::vector<const char*> ptrs;
  for (const auto& s : cs) ptrs.push_back(s.c_str());
  srp_poly* h = nullptr;
  char* err = nullptr;
  if (srp_poly_create(ptrs.data(), ptrs.size(), &h, &err) != SRP_OK) {
    std::fprintf(stderr, "poly_create: %s\n", err ? err : "?");
    srp_string_free(err);
    return {};
  }
  char* out = nullptr;
  srp_status st = srp_verify(h, battery, q, om, &out, &err);
  srp_poly_free(h);
  if (st != SRP_OK) {
    std::fprintf(stderr, "verify: %s\n", err ? err : "?");
    srp_string_free(err);
    return {};
  }
  json j = json::parse(out);
  srp_string_free(out);
  return j;
}

bool checks_pass(const json& j, const std::vector<std::string>& names) {
  if (j.is_null() || j.empty()) return false;
  for (const std::string& want : names) {
    bool found = false;
    for (const auto& c : j["checks"])
      if (c["name"] == want) {
        found = true;
        if (c["status"] != "pass") return false;
      }
    if (!found) return false;
  }
  return true;
}

std::string info_detail(const json& j, const std::string& name) {
  for (const auto& c : j["checks"])
    if (c["name"] == name && c.contains("detail")) return c["detail"].get<std::string>();
  return "";
}

std::vector<SelfReciprocalPoly> battery_instances() {
  std::vector<SelfReciprocalPoly> out;
  for (unsigned seed = 1; seed <= 20; ++seed)
    out.push_back(random_instance(InstanceMode::OnCircleSimple, 1 + (seed - 1) % 3, seed));
  return out;
}

bool canonical_battery_ok(const std::vector<json>& reports) {
  for (const auto& j : reports)
    if (!checks_pass(j, {"boundary_A_at_1", "boundary_B_at_1", "A_even_B_odd",
                         "continuity_breakpoints", "end_limit"}))
      return false;
  return true;
}

bool ode_battery_ok(const std::vector<json>& reports) {
  for (const auto& j : reports)
    if (!checks_pass(j, {"ode_residual_h1e-4", "ode_convergence_order2"})) return false;
  return true;
}

bool transfer_battery_ok(const std::vector<json>& reports) {
  for (const auto& j : reports)
    if (!checks_pass(j, {"transfer_product_vs_eval", "transfer_factor_det_1"})) return false;
  return true;
}

bool factorization_battery_ok(const std::vector<SelfReciprocalPoly>& ps) {
  for (const auto& p : ps)
    if (!checks_pass(run_verify(p, "factorization", 2.0, 0.5), {"factorization_20_random_x"}))
      return false;
  return true;
}

bool kernel_battery_ok(const std::vector<SelfReciprocalPoly>& ps) {
  for (const auto& p : ps)
    if (!checks_pass(run_verify(p, "kernel", 2.0, 0.5),
                     {"kernel_hermitian", "kernel_identity_quadrature", "kernel_diag_positive",
                      "kernel_diag_decreasing_in_a"}))
      return false;
  return true;
}

bool omega_battery_ok() {
  std::vector<SelfReciprocalPoly> ps;
  for (unsigned seed = 1; seed <= 4; ++seed)
    ps.push_back(random_instance(InstanceMode::OnCircleSimple, 1 + (seed - 1) % 2, seed));
  SelfReciprocalPoly multi(1, {Rat(1), Rat(2)});  // (x+1)^2
  if (run_log(multi).verdict == Verdict::AllOnCircleSimple) return false;
  ps.push_back(multi);
  for (double om : {0.25, 1.0, 3.0})
    for (const auto& p : ps) {
      json j = run_verify(p, "omega", 2.0, om);
      if (!checks_pass(j, {"omega_boundary_at_1", "omega_E_is_shifted_A", "omega_ode_residual",
                           "omega_continuity_breakpoints", "omega_transfer_product_vs_eval"}))
        return false;
      if (info_detail(j, "omega_hamiltonian_positive") != "true") return false;
    }
  return true;
}

}  // namespace

int main() {
  report(1, closed_forms_from_coeffs(),
         "printed R_n closed forms match the recursion exactly (g <= 3, 100 each)");
  report(2, closed_forms_from_lambdas(),
         "lambda-parameter closed forms match after expansion (g <= 3, 100 each)");
  report(3, counterexample_instance(),
         "counterexample (4, -16, 23): m = 1/2, NumeratorZero at step 2, roots {2, 1/2} off T");
  int n4 = 0, n5 = 0;
  bool ok4 = oracle_equivalence_log(&n4);
  report(4, ok4, "log verdict <=> oracle (on circle and simple), " + std::to_string(n4) +
                     " instances, g 1..6, zero disagreements");
  bool ok5 = oracle_equivalence_omega(&n5);
  report(5, ok5, "exact omega verdict <=> oracle (on circle), " + std::to_string(n5) +
                     " instances incl. multiple zeros, zero disagreements");
  report(6, limit_and_rate(),
         "R_n(c;t) -> R_n(c) as t -> 1, exact limits, rate at least linear (50 instances)");
  report(7, matrix_layer(),
         "det P_k matches closed form and P_k M_k = Q_k, k <= 12, elimination oracle");

  std::vector<SelfReciprocalPoly> ps = battery_instances();
  std::vector<json> canonical;
  for (const auto& p : ps) canonical.push_back(run_verify(p, "canonical", 2.0, 0.5));
  report(8, canonical_battery_ok(canonical),
         "canonical battery: boundary, breakpoint continuity, end limit (20 instances, q=2)");
  report(9, ode_battery_ok(canonical), "ODE residual <= 1e-6 with O(h^2) convergence");
  report(10, transfer_battery_ok(canonical),
         "transfer product matches eval to 1e-9; factors unimodular to 1e-12");
  report(11, factorization_battery_ok(ps),
         "exact Gaussian-rational factorization at 20 random x per instance");
  report(12, kernel_battery_ok(ps),
         "kernel integral identity to 1e-6 and diagonal monotonicity");
  report(13, omega_battery_ok(),
         "omega battery at omega in {1/4, 1, 3}, incl. multiple-root instance");

  if (failures == 0) {
    std::printf("acceptance: all 13 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
