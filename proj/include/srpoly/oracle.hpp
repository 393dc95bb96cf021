#ifndef SRPOLY_ORACLE_HPP
#define SRPOLY_ORACLE_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "srpoly/criterion.hpp"

namespace srp {

class oracle_failure : public std::runtime_error {
 public:
  explicit oracle_failure(const std::string& what) : std::runtime_error(what) {}
};

struct RootInfo {
  std::complex<double> value;
  int multiplicity = 1;   // cluster size within 1e-6
  bool on_circle = false; // ||rho| - 1| <= 1e-9
  double distance = 0.0;  // |rho| - 1
};

struct RootReport {
  std::vector<RootInfo> roots;  // one entry per root, multiplicities repeated
  bool all_on_circle = false;
  bool all_simple = false;  // exact (rational gcd), not numeric
  double max_residual = 0.0;
};

// All 2g roots by companion-matrix eigenvalues plus Newton polish.
// Residual bound |P(rho)| / max|coeff| <= 1e-10 or oracle_failure.
RootReport find_roots(const SelfReciprocalPoly& p);

// True iff gcd(P, P') is constant; decided exactly over Q.
bool square_free(const SelfReciprocalPoly& p);

// Real quadratic factors x^2 - 2 lambda x + 1; a conjugate pair u +- iv
// contributes the real quartic
// x^4 - 4u x^3 + (2 + 4(u^2+v^2)) x^2 - 4u x + 1 and uses two factor slots.
struct LambdaSpec {
  std::vector<Rat> lambdas;
  std::vector<std::pair<Rat, Rat>> complex_pairs;  // (u, v), v != 0
  Rat c0 = Rat(1);
};

SelfReciprocalPoly from_lambdas(const LambdaSpec& spec);

enum class InstanceMode { OnCircleSimple, OnCircleMultiple, OffCircle, Mixed };

// Deterministic per (mode, g, seed). Simple-mode lambdas stay at least
// 1/100 away from +-1 so the numeric classification has margin.
SelfReciprocalPoly random_instance(InstanceMode mode, int g, std::uint64_t seed);

const char* to_string(InstanceMode m);

}  // namespace srp

#endif
