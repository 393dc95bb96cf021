#ifndef SRPOLY_UNIPOLY_HPP
#define SRPOLY_UNIPOLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "srpoly/rational.hpp"

namespace srp {

// Dense univariate polynomial over Q, ascending powers. The coefficient
// of the highest power is nonzero unless the polynomial is zero (empty
// coefficient vector).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }
  UniPoly(std::initializer_list<Rat> ascending) : c_(ascending) { trim(); }

  static UniPoly constant(const Rat& a) { return UniPoly({a}); }
  static UniPoly monomial(const Rat& a, int k);  // a * t^k, k >= 0

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0);
  }
  const Rat& leading() const { return c_.back(); }  // pre: !is_zero()

  Rat eval(const Rat& t) const;
  double eval_double(double t) const;

  UniPoly derivative() const;

  // Quotient and remainder of exact division over Q; divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

  // Monic gcd over Q; gcd(0, 0) = 0. Runs a primitive-PRS Euclid over Z
  // internally so coefficient growth stays tame.
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);

  // Divides out rational content and fixes the sign of the leading
  // coefficient to be positive; preserves the root set.
  UniPoly primitive_part() const;

  UniPoly monic() const;  // pre: !is_zero()

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rat& s, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

}  // namespace srp

#endif
