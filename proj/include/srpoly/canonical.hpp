#ifndef SRPOLY_CANONICAL_HPP
#define SRPOLY_CANONICAL_HPP

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "srpoly/criterion.hpp"

namespace srp {

using cplx = std::complex<double>;

class out_of_domain_error : public std::domain_error {
 public:
  out_of_domain_error() : std::domain_error("a outside [1, q^g)") {}
};

class interval_error : public std::domain_error {
 public:
  interval_error() : std::domain_error("stencil straddles a breakpoint") {}
};

class not_applicable_error : public std::domain_error {
 public:
  explicit not_applicable_error(const char* what) : std::domain_error(what) {}
};

class confluent_error : public std::domain_error {
 public:
  confluent_error() : std::domain_error("kernel at z = conj(w) not supported") {}
};

// A_q(z) = q^{-giz} P_g(q^{iz}) and its companions, all entire in z.
class ExpPolyFunctions {
 public:
  ExpPolyFunctions(const SelfReciprocalPoly& p, double q);

  int g() const { return g_; }
  double q() const { return q_; }

  cplx A(cplx z) const;
  cplx B(cplx z) const;  // -dA/dz
  cplx E(cplx z) const { return A(z) - cplx(0, 1) * B(z); }
  cplx Esharp(cplx z) const { return std::conj(E(std::conj(z))); }

 private:
  int g_;
  double q_, logq_;
  std::vector<double> c_;  // c_0..c_g
};

struct HamiltonianStep {
  int n = 0;            // interval [q^{(n-1)/2}, q^{n/2})
  double a_start = 0.0;
  double a_end = 0.0;
  double m = 0.0;
};

// H(a) = diag(1/m(a), m(a)), piecewise constant on 2g geometric steps.
struct Hamiltonian {
  int g = 0;
  double q = 0.0;
  std::vector<HamiltonianStep> steps;  // shorter than 2g past a singular step

  double m_at(double a) const;  // throws out_of_domain_error off the defined range
};

// Floating-point canonical system on [1, q^g): the interval functions
// A(a,z), B(a,z), the Hamiltonian, the transfer-matrix product and the
// reproducing kernel. Exact state vectors are bridged to floats once at
// construction; evaluation past the first singular step is refused.
class CanonicalSystem {
 public:
  // log-mode bridge: the recursion runs exactly at log q = 1; second-half
  // vector entries are rescaled by log q and m-values by 1/log q.
  CanonicalSystem(const SelfReciprocalPoly& p, double q = 2.0);

  // omega-mode bridge: the recursion runs over Q(t) and is evaluated at
  // t = q^omega; no rescaling is needed.
  static CanonicalSystem omega(const SelfReciprocalPoly& p, double q, double om);

  int g() const { return g_; }
  double q() const { return q_; }
  int defined_steps() const { return defined_; }  // 2g when no singular step
  bool all_m_positive() const;
  double m(int n) const { return m_[static_cast<size_t>(n - 1)]; }  // n = 1..defined
  double boundary_value() const { return e0_; }  // E(0) = A(0), = P_g(1) in log mode

  Hamiltonian hamiltonian() const;

  // interval index n with q^{(n-1)/2} <= a < q^{n/2}
  int interval_of(double a) const;

  std::pair<cplx, cplx> eval_AB(double a, cplx z) const;

  // central-difference residual of the canonical ODE at a; O(h^2)
  double ode_residual(double a, cplx z, double h) const;

  // rotation-factor product path for (A,B); requires every m > 0
  std::pair<cplx, cplx> transfer_product(double a, cplx z) const;
  static void transfer_factor(double theta, double m, cplx z, cplx out[2][2]);

  cplx kernel_K(double a, cplx z, cplx w) const;
  double kernel_diag(double a, cplx z) const;  // K(a;z,z) via the E-form, Im z != 0
  // relative residual of K(a1) - K(a2) against the two-integral identity
  double kernel_identity_residual(double a1, double a2, cplx z, cplx w) const;

 private:
  CanonicalSystem() = default;

  int g_ = 0;
  double q_ = 0.0, logq_ = 0.0;
  double e0_ = 0.0;
  int defined_ = 0;
  std::vector<std::vector<double>> v_;  // v_[n] = float v_g(n), n = 0..defined
  std::vector<double> m_;               // m for step n at index n-1
};

// Exact Gaussian-rational identity
//   P_g(x) = (P_g(1)/2^{2g}) [1 0] prod_n F_n(x) [1 0]^T,
//   F_n(x) = [[x+1, i m_{2g-n}(x-1)], [-i m_{2g-n}^{-1}(x-1), x+1]].
// Throws not_applicable_error when some m is undefined or zero.
bool factorization_identity(const SelfReciprocalPoly& p, const Rat& x);

// E_{q,omega}(z) = A_q(z + i omega) and companions, plus the omega-bridged
// canonical system evaluated at t = q^omega.
class OmegaFunctions {
 public:
  OmegaFunctions(const SelfReciprocalPoly& p, double q, double om);

  double omega() const { return omega_; }

  cplx E(cplx z) const { return base_.A(z + cplx(0, omega_)); }
  cplx Esharp(cplx z) const { return base_.A(z - cplx(0, omega_)); }
  cplx A(cplx z) const { return 0.5 * (E(z) + Esharp(z)); }
  cplx B(cplx z) const { return cplx(0, 0.5) * (E(z) - Esharp(z)); }

  const CanonicalSystem& system() const { return sys_; }

 private:
  double omega_;
  ExpPolyFunctions base_;
  CanonicalSystem sys_;
};

OmegaFunctions omega_objects(const SelfReciprocalPoly& p, double q, double om);

}  // namespace srp

#endif
