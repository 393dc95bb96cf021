#ifndef SRPOLY_RATFUNC_HPP
#define SRPOLY_RATFUNC_HPP

#include <string>

#include "srpoly/unipoly.hpp"

namespace srp {

class pole_error : public std::domain_error {
 public:
  explicit pole_error(const std::string& at)
      : std::domain_error("pole at t = " + at) {}
};

// One-sided limit value at t -> 1+: either a finite rational or a signed
// infinity.
struct LimitAtOne {
  bool finite = true;
  Rat value;     // when finite
  int inf_sign = 0;  // +1 / -1 when infinite
};

// Reduced rational function in one variable t over Q. Canonical form:
// gcd(num, den) = 1 and den monic, so equality is coefficient equality.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_{Rat(1)} {}
  RationalFunction(int v) : num_(UniPoly::constant(Rat(v))), den_{Rat(1)} {}
  explicit RationalFunction(const Rat& v)
      : num_(UniPoly::constant(v)), den_{Rat(1)} {}
  explicit RationalFunction(UniPoly p) : num_(std::move(p)), den_{Rat(1)} {}
  RationalFunction(const UniPoly& num, const UniPoly& den) { assign_reduced(num, den); }

  static RationalFunction t() { return RationalFunction(UniPoly({Rat(0), Rat(1)})); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  Rat eval_at(const Rat& t0) const;       // throws pole_error on a den root
  double eval_double(double t0) const;    // floating point, no pole handling
  LimitAtOne limit_at_one() const;

  RationalFunction reciprocal() const;    // throws division_by_zero on 0

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void assign_reduced(const UniPoly& num, const UniPoly& den);
  UniPoly num_, den_;
};

inline RationalFunction reduce(const UniPoly& num, const UniPoly& den) {
  return RationalFunction(num, den);
}

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline int sign_at(const RationalFunction& f, const Rat& t0) {
  return sgn(f.eval_at(t0));
}

}  // namespace srp

#endif
