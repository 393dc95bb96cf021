#include "srpoly/canonical.hpp"

#include <algorithm>
#include <cmath>

namespace srp {

namespace {

// (q^k/a)^{iz} + (q^k/a)^{-iz} and the matching difference
cplx cos_pair(double lq, int k, double a, cplx z) {
  cplx e = std::exp(cplx(0, 1) * z * (k * lq - std::log(a)));
  return e + 1.0 / e;
}

cplx sin_pair(double lq, int k, double a, cplx z) {
  cplx e = std::exp(cplx(0, 1) * z * (k * lq - std::log(a)));
  return e - 1.0 / e;
}

double vec_norm(cplx x, cplx y) { return std::sqrt(std::norm(x) + std::norm(y)); }

}  // namespace

ExpPolyFunctions::ExpPolyFunctions(const SelfReciprocalPoly& p, double q)
    : g_(p.g()), q_(q), logq_(std::log(q)) {
  if (!(q > 1.0)) throw std::invalid_argument("q must exceed 1");
  for (const Rat& x : p.coeffs()) c_.push_back(rat_to_double(x));
}

cplx ExpPolyFunctions::A(cplx z) const {
  cplx acc(c_[static_cast<size_t>(g_)], 0.0);
  for (int k = 0; k < g_; ++k) {
    cplx e = std::exp(cplx(0, 1) * z * static_cast<double>(g_ - k) * logq_);
    acc += c_[static_cast<size_t>(k)] * (e + 1.0 / e);
  }
  return acc;
}

cplx ExpPolyFunctions::B(cplx z) const {
  cplx acc(0.0, 0.0);
  for (int k = 0; k < g_; ++k) {
    cplx e = std::exp(cplx(0, 1) * z * static_cast<double>(g_ - k) * logq_);
    acc += static_cast<double>(g_ - k) * c_[static_cast<size_t>(k)] * (e - 1.0 / e);
  }
  return cplx(0, -1) * logq_ * acc;
}

double Hamiltonian::m_at(double a) const {
  for (const auto& s : steps)
    if (a >= s.a_start && a < s.a_end) return s.m;
  throw out_of_domain_error();
}

CanonicalSystem::CanonicalSystem(const SelfReciprocalPoly& p, double q) {
  if (!(q > 1.0)) throw std::invalid_argument("q must exceed 1");
  g_ = p.g();
  q_ = q;
  logq_ = std::log(q);
  e0_ = rat_to_double(p.at_one());
  Recursion<Rat> rec = run_recursion(g_, initial_vector_log(p));
  defined_ = static_cast<int>(rec.vectors.size()) - 1;
  for (const auto& vec : rec.vectors) {
    std::vector<double> vf;
    size_t half = vec.size() / 2;
    for (size_t j = 0; j < vec.size(); ++j) {
      double x = rat_to_double(vec[j]);
      vf.push_back(j < half ? x : x * logq_);  // second half carries a log q factor
    }
    v_.push_back(std::move(vf));
  }
  for (int n = 1; n <= defined_; ++n)
    m_.push_back(rat_to_double(*rec.steps[static_cast<size_t>(n - 1)].m) / logq_);
}

CanonicalSystem CanonicalSystem::omega(const SelfReciprocalPoly& p, double q, double om) {
  if (!(q > 1.0)) throw std::invalid_argument("q must exceed 1");
  if (!(om > 0.0)) throw std::invalid_argument("omega must be positive");
  CanonicalSystem sys;
  sys.g_ = p.g();
  sys.q_ = q;
  sys.logq_ = std::log(q);
  const double t = std::pow(q, om);
  Recursion<RationalFunction> rec = run_recursion(sys.g_, initial_vector_omega(p));
  sys.defined_ = static_cast<int>(rec.vectors.size()) - 1;
  for (const auto& vec : rec.vectors) {
    std::vector<double> vf;
    for (const auto& f : vec) vf.push_back(f.eval_double(t));
    sys.v_.push_back(std::move(vf));
  }
  for (int n = 1; n <= sys.defined_; ++n)
    sys.m_.push_back(rec.steps[static_cast<size_t>(n - 1)].m->eval_double(t));
  // E_{q,omega}(0) = A_q(i omega) = sum c_k (t^{g-k} + t^{-(g-k)}) + c_g
  double e0 = rat_to_double(p.c(sys.g_));
  for (int k = 0; k < sys.g_; ++k)
    e0 += rat_to_double(p.c(k)) * (std::pow(t, sys.g_ - k) + std::pow(t, -(sys.g_ - k)));
  sys.e0_ = e0;
  return sys;
}

bool CanonicalSystem::all_m_positive() const {
  if (defined_ != 2 * g_) return false;
  return std::all_of(m_.begin(), m_.end(), [](double m) { return m > 0.0; });
}

Hamiltonian CanonicalSystem::hamiltonian() const {
  Hamiltonian H;
  H.g = g_;
  H.q = q_;
  for (int n = 1; n <= defined_; ++n) {
    HamiltonianStep s;
    s.n = n;
    s.a_start = std::pow(q_, (n - 1) / 2.0);
    s.a_end = std::pow(q_, n / 2.0);
    s.m = m_[static_cast<size_t>(n - 1)];
    H.steps.push_back(s);
  }
  return H;
}

int CanonicalSystem::interval_of(double a) const {
  if (!(a >= 1.0) || !(a < std::pow(q_, g_))) throw out_of_domain_error();
  int n = static_cast<int>(std::floor(2.0 * std::log(a) / logq_)) + 1;
  n = std::max(1, std::min(n, 2 * g_));
  while (n > 1 && a < std::pow(q_, (n - 1) / 2.0)) --n;
  while (n < 2 * g_ && a >= std::pow(q_, n / 2.0)) ++n;
  return n;
}

std::pair<cplx, cplx> CanonicalSystem::eval_AB(double a, cplx z) const {
  int n = interval_of(a);
  if (n > defined_) throw not_applicable_error("state vector undefined past a singular step");
  const std::vector<double>& v = v_[static_cast<size_t>(n)];
  const int half = 2 * g_ - n + 1;  // v has length 2*half
  cplx A(0, 0), B(0, 0);
  for (int j = 0; j < half; ++j) {
    A += v[static_cast<size_t>(j)] * cos_pair(logq_, g_ - j, a, z);
    B += v[static_cast<size_t>(half + j)] * sin_pair(logq_, g_ - j, a, z);
  }
  return {0.5 * A, cplx(0, -0.5) * B};
}

double CanonicalSystem::ode_residual(double a, cplx z, double h) const {
  int n = interval_of(a);
  double lo = std::pow(q_, (n - 1) / 2.0), hi = std::pow(q_, n / 2.0);
  if (!(a - h > lo) || !(a + h < hi)) throw interval_error();
  auto [Ap, Bp] = eval_AB(a + h, z);
  auto [Am, Bm] = eval_AB(a - h, z);
  auto [A0, B0] = eval_AB(a, z);
  cplx dA = (Ap - Am) / (2.0 * h), dB = (Bp - Bm) / (2.0 * h);
  double m = m_[static_cast<size_t>(n - 1)];
  // -a d/da (A,B) = z [[0,-1],[1,0]] H(a) (A,B) = z (-m B, A/m)
  cplx rx = z * (-m * B0), ry = z * (A0 / m);
  cplx lx = -a * dA, ly = -a * dB;
  double denom = std::max({vec_norm(rx, ry), vec_norm(lx, ly), 1.0});
  return vec_norm(lx - rx, ly - ry) / denom;
}

void CanonicalSystem::transfer_factor(double theta, double m, cplx z, cplx out[2][2]) {
  cplx c = std::cos(z * theta), s = std::sin(z * theta);
  out[0][0] = c;
  out[0][1] = -m * s;
  out[1][0] = s / m;
  out[1][1] = c;
}

std::pair<cplx, cplx> CanonicalSystem::transfer_product(double a, cplx z) const {
  if (!all_m_positive()) throw not_applicable_error("transfer product requires all m > 0");
  int n = interval_of(a);
  cplx acc[2][2], f[2][2];
  transfer_factor(n / 2.0 * logq_ - std::log(a), m_[static_cast<size_t>(n - 1)], z, acc);
  for (int k = 1; k <= 2 * g_ - n; ++k) {
    transfer_factor(0.5 * logq_, m_[static_cast<size_t>(n + k - 1)], z, f);
    cplx next[2][2];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        next[i][j] = acc[i][0] * f[0][j] + acc[i][1] * f[1][j];
    std::copy(&next[0][0], &next[0][0] + 4, &acc[0][0]);
  }
  return {e0_ * acc[0][0], e0_ * acc[1][0]};
}

cplx CanonicalSystem::kernel_K(double a, cplx z, cplx w) const {
  cplx denom = z - std::conj(w);
  if (std::abs(denom) < 1e-12) throw confluent_error();
  auto [Az, Bz] = eval_AB(a, z);
  auto [Aw, Bw] = eval_AB(a, w);
  const double pi = 3.14159265358979323846;
  return (std::conj(Aw) * Bz - std::conj(Bw) * Az) / (pi * denom);
}

double CanonicalSystem::kernel_diag(double a, cplx z) const {
  if (z.imag() == 0.0) throw confluent_error();
  auto [A, B] = eval_AB(a, z);
  auto [Ac, Bc] = eval_AB(a, std::conj(z));
  cplx E = A - cplx(0, 1) * B;
  cplx Es = std::conj(Ac - cplx(0, 1) * Bc);
  const double pi = 3.14159265358979323846;
  return (std::norm(E) - std::norm(Es)) / (4.0 * pi * z.imag());
}

namespace {

template <class F>
cplx simpson_rec(const F& f, double a, double b, cplx fa, cplx fm, cplx fb, cplx whole,
                 double tol, int depth) {
  double m = 0.5 * (a + b);
  cplx fl = f(0.5 * (a + m)), fr = f(0.5 * (m + b));
  cplx left = (m - a) / 6.0 * (fa + 4.0 * fl + fm);
  cplx right = (b - m) / 6.0 * (fm + 4.0 * fr + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_rec(f, a, m, fa, fl, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, fr, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
cplx adaptive_simpson(const F& f, double a, double b, double tol) {
  if (!(b > a)) return cplx(0, 0);
  cplx fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  cplx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 40);
}

}  // namespace

double CanonicalSystem::kernel_identity_residual(double a1, double a2, cplx z, cplx w) const {
  if (a2 < a1) std::swap(a1, a2);
  const double pi = 3.14159265358979323846;
  auto integrand = [&](double t) -> cplx {
    auto [At, Bt] = eval_AB(t, z);
    auto [Aw, Bw] = eval_AB(t, w);
    double m = m_[static_cast<size_t>(interval_of(t) - 1)];
    return (std::conj(Aw) * At / m + std::conj(Bw) * Bt * m) / t;
  };
  cplx integral(0, 0);
  for (int n = 1; n <= defined_; ++n) {
    double lo = std::max(a1, std::pow(q_, (n - 1) / 2.0));
    double hi = std::min(a2, std::pow(q_, n / 2.0));
    if (hi <= lo) continue;
    // stay clear of the right breakpoint so interval_of picks step n
    integral += adaptive_simpson(integrand, lo, hi * (1.0 - 1e-15), 1e-9);
  }
  cplx lhs = kernel_K(a1, z, w) - kernel_K(a2, z, w);
  cplx rhs = integral / pi;
  return std::abs(lhs - rhs) / std::max(std::abs(lhs), 1.0);
}

bool factorization_identity(const SelfReciprocalPoly& p, const Rat& x) {
  Recursion<Rat> rec = run_recursion(p.g(), initial_vector_log(p));
  if (!rec.complete()) throw not_applicable_error("m-sequence undefined: singular step");
  for (const auto& s : rec.steps)
    if (!s.m || is_zero(*s.m)) throw not_applicable_error("zero m in factorization");

  GaussianRat acc[2][2] = {{GaussianRat{Rat(1), Rat(0)}, GaussianRat{Rat(0), Rat(0)}},
                           {GaussianRat{Rat(0), Rat(0)}, GaussianRat{Rat(1), Rat(0)}}};
  for (const auto& s : rec.steps) {
    const Rat& m = *s.m;
    GaussianRat f[2][2] = {
        {GaussianRat{x + 1, Rat(0)}, GaussianRat{Rat(0), m * (x - 1)}},
        {GaussianRat{Rat(0), -(x - 1) / m}, GaussianRat{x + 1, Rat(0)}}};
    GaussianRat next[2][2];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        next[i][j] = acc[i][0] * f[0][j] + acc[i][1] * f[1][j];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) acc[i][j] = next[i][j];
  }
  Rat scale = p.at_one();
  for (int i = 0; i < 2 * p.g(); ++i) scale /= 2;  // / 2^{2g}
  GaussianRat rhs = GaussianRat{scale, Rat(0)} * acc[0][0];
  return is_zero(rhs.im) && rhs.re == p.eval(x);
}

OmegaFunctions::OmegaFunctions(const SelfReciprocalPoly& p, double q, double om)
    : omega_(om), base_(p, q), sys_(CanonicalSystem::omega(p, q, om)) {}

OmegaFunctions omega_objects(const SelfReciprocalPoly& p, double q, double om) {
  return OmegaFunctions(p, q, om);
}

}  // namespace srp
