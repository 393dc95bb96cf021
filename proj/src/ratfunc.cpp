#include "srpoly/ratfunc.hpp"

namespace srp {

void RationalFunction::assign_reduced(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw division_by_zero();
  if (num.is_zero()) {
    num_ = UniPoly();
    den_ = UniPoly::constant(Rat(1));
    return;
  }
  UniPoly g = UniPoly::gcd(num, den);
  UniPoly n = UniPoly::divmod(num, g).first;
  UniPoly d = UniPoly::divmod(den, g).first;
  Rat lead = d.leading();
  num_ = (Rat(1) / lead) * n;
  den_ = d.monic();
}

Rat RationalFunction::eval_at(const Rat& t0) const {
  Rat d = den_.eval(t0);
  if (sgn(d) == 0) throw pole_error(rat_to_string(t0));
  return num_.eval(t0) / d;
}

double RationalFunction::eval_double(double t0) const {
  return num_.eval_double(t0) / den_.eval_double(t0);
}

LimitAtOne RationalFunction::limit_at_one() const {
  LimitAtOne lim;
  Rat d1 = den_.eval(Rat(1));
  if (sgn(d1) != 0) {
    lim.finite = true;
    lim.value = num_.eval(Rat(1)) / d1;
    return lim;
  }
  // Canonical form rules out a common root: num(1) != 0 here. Strip the
  // (t-1)^k factor from den to read off the sign just right of 1.
  UniPoly d = den_;
  UniPoly lin({Rat(-1), Rat(1)});
  Rat d_at_one = d.eval(Rat(1));
  while (sgn(d_at_one) == 0) {
    d = UniPoly::divmod(d, lin).first;
    d_at_one = d.eval(Rat(1));
  }
  lim.finite = false;
  lim.inf_sign = sgn(num_.eval(Rat(1))) * sgn(d_at_one);
  return lim;
}

RationalFunction RationalFunction::reciprocal() const {
  if (is_zero()) throw division_by_zero();
  return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw division_by_zero();
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace srp
