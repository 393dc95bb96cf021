#include "srpoly/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace srp {

namespace {

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::complex<double> horner_deriv(const std::vector<double>& c, std::complex<double> z) {
  std::complex<double> acc(0.0, 0.0);
  for (size_t i = c.size(); i-- > 1;) acc = acc * z + static_cast<double>(i) * c[i];
  return acc;
}

std::complex<double> polish(const std::vector<double>& c, std::complex<double> z) {
  for (int it = 0; it < 50; ++it) {
    std::complex<double> f = horner(c, z);
    std::complex<double> df = horner_deriv(c, z);
    if (std::abs(df) < 1e-300) break;
    std::complex<double> step = f / df;
    z -= step;
    if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
  }
  return z;
}

// Yun square-free factorization: returns the factors of multiplicity
// 1, 2, ... (some possibly constant).
std::vector<UniPoly> squarefree_factors(const UniPoly& P) {
  std::vector<UniPoly> out;
  UniPoly d = P.derivative();
  UniPoly a = UniPoly::gcd(P, d);
  UniPoly w = UniPoly::divmod(P, a).first;
  while (w.degree() > 0) {
    UniPoly y = UniPoly::gcd(w, a);
    out.push_back(UniPoly::divmod(w, y).first);
    a = UniPoly::divmod(a, y).first;
    w = std::move(y);
  }
  return out;
}

// Roots of a square-free polynomial: companion eigenvalues + Newton polish.
std::vector<std::complex<double>> simple_roots(const UniPoly& f, double* max_residual) {
  std::vector<double> c;
  for (const Rat& x : f.coeffs()) c.push_back(rat_to_double(x));
  const int d = f.degree();
  // Backward-error scale: |f(z)| is compared against sum |c_i| |z|^i, the
  // magnitude the evaluation itself carries at that radius.
  auto scale_at = [&c](double r) {
    double s = 0.0, rp = 1.0;
    for (double x : c) {
      s += std::abs(x) * rp;
      rp *= r;
    }
    return s;
  };

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -c[static_cast<size_t>(i)] / c.back();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
  if (solver.info() != Eigen::Success) throw oracle_failure("eigenvalue iteration failed");

  std::vector<std::complex<double>> roots;
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> jitter(-1e-6, 1e-6);
  for (int i = 0; i < d; ++i) {
    std::complex<double> z = solver.eigenvalues()(i);
    z = polish(c, z);
    double res = std::abs(horner(c, z)) / scale_at(std::abs(z));
    for (int attempt = 0; attempt < 8 && res > 1e-10; ++attempt) {
      std::complex<double> w = polish(c, z + std::complex<double>(jitter(rng), jitter(rng)));
      double r2 = std::abs(horner(c, w)) / scale_at(std::abs(w));
      if (r2 < res) {
        z = w;
        res = r2;
      }
    }
    if (res > 1e-10) throw oracle_failure("root residual above 1e-10");
    *max_residual = std::max(*max_residual, res);
    roots.push_back(z);
  }
  return roots;
}

}  // namespace

bool square_free(const SelfReciprocalPoly& p) {
  UniPoly P(p.full_coeffs());
  return UniPoly::gcd(P, P.derivative()).degree() == 0;
}

RootReport find_roots(const SelfReciprocalPoly& p) {
  RootReport rep;
  // Multiple roots are ill-conditioned for eigenvalue methods, so split
  // off exact multiplicities first; every numeric root is then simple.
  std::vector<UniPoly> factors = squarefree_factors(UniPoly(p.full_coeffs()));
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    for (std::complex<double> z : simple_roots(factors[i], &rep.max_residual)) {
      RootInfo info;
      info.value = z;
      info.multiplicity = static_cast<int>(i) + 1;
      info.distance = std::abs(z) - 1.0;
      info.on_circle = std::abs(info.distance) <= 1e-9;
      for (int copy = 0; copy <= static_cast<int>(i); ++copy) rep.roots.push_back(info);
    }
  }
  rep.all_on_circle = std::all_of(rep.roots.begin(), rep.roots.end(),
                                  [](const RootInfo& r) { return r.on_circle; });
  rep.all_simple = square_free(p);
  return rep;
}

SelfReciprocalPoly from_lambdas(const LambdaSpec& spec) {
  UniPoly P = UniPoly::constant(spec.c0);
  int g = 0;
  for (const Rat& lam : spec.lambdas) {
    P = P * UniPoly({Rat(1), -2 * lam, Rat(1)});
    ++g;
  }
  for (const auto& [u, v] : spec.complex_pairs) {
    if (sgn(v) == 0) throw std::invalid_argument("complex pair needs v != 0");
    P = P * UniPoly({Rat(1), -4 * u, Rat(2) + 4 * (u * u + v * v), -4 * u, Rat(1)});
    g += 2;
  }
  if (g < 1) throw std::invalid_argument("at least one factor required");
  std::vector<Rat> c(P.coeffs().rbegin(), P.coeffs().rbegin() + g + 1);
  return SelfReciprocalPoly(g, std::move(c));
}

const char* to_string(InstanceMode m) {
  switch (m) {
    case InstanceMode::OnCircleSimple: return "OnCircleSimple";
    case InstanceMode::OnCircleMultiple: return "OnCircleMultiple";
    case InstanceMode::OffCircle: return "OffCircle";
    case InstanceMode::Mixed: return "Mixed";
  }
  return "?";
}

SelfReciprocalPoly random_instance(InstanceMode mode, int g, std::uint64_t seed) {
  if (g < 1) throw std::invalid_argument("g must be >= 1");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(g) * 1315423911ULL +
                      static_cast<std::uint64_t>(mode));
  // lambdas on the grid n/100; |n| <= 98 keeps a 1/50 margin from +-1
  std::uniform_int_distribution<int> inner(-98, 98);
  std::uniform_int_distribution<int> outer(102, 300);
  std::uniform_int_distribution<int> coin(0, 1);

  auto draw_inner_distinct = [&](std::vector<Rat>& out, int count) {
    while (count > 0) {
      Rat lam = make_rat(inner(rng), 100);
      bool dup = false;
      for (const Rat& x : out) dup = dup || x == lam;
      if (dup) continue;
      out.push_back(lam);
      --count;
    }
  };

  LambdaSpec spec;
  spec.c0 = Rat(1 + static_cast<int>(rng() % 5));
  switch (mode) {
    case InstanceMode::OnCircleSimple:
      draw_inner_distinct(spec.lambdas, g);
      break;
    case InstanceMode::OnCircleMultiple:
      if (g == 1 || coin(rng)) {
        spec.lambdas.push_back(coin(rng) ? Rat(1) : Rat(-1));  // root at -+1, squared factor
        if (g > 1) draw_inner_distinct(spec.lambdas, g - 1);
      } else {
        draw_inner_distinct(spec.lambdas, g - 1);
        spec.lambdas.push_back(spec.lambdas[rng() % spec.lambdas.size()]);
      }
      break;
    case InstanceMode::OffCircle: {
      int slots = g;
      if (g >= 2 && coin(rng)) {
        Rat u = make_rat(inner(rng), 100);
        Rat v = make_rat(outer(rng), 100);  // |lambda| > 1 forces a quadruple off T
        spec.complex_pairs.emplace_back(u, v);
        slots -= 2;
      } else {
        Rat lam = make_rat(outer(rng), 100);
        spec.lambdas.push_back(coin(rng) ? lam : -lam);
        --slots;
      }
      if (slots > 0) draw_inner_distinct(spec.lambdas, slots);
      break;
    }
    case InstanceMode::Mixed: {
      int pick = static_cast<int>(rng() % 3);
      InstanceMode sub = pick == 0   ? InstanceMode::OnCircleSimple
                         : pick == 1 ? InstanceMode::OnCircleMultiple
                                     : InstanceMode::OffCircle;
      return random_instance(sub, g, rng());
    }
  }
  return from_lambdas(spec);
}

}  // namespace srp
