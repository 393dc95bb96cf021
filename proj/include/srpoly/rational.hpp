#ifndef SRPOLY_RATIONAL_HPP
#define SRPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace srp {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// once canonicalized; every constructor path below canonicalizes.
using Rat = mpq_class;

class division_by_zero : public std::domain_error {
 public:
  division_by_zero() : std::domain_error("division by zero") {}
};

class parse_error : public std::invalid_argument {
 public:
  explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

inline int sign(const Rat& x) { return sgn(x); }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

// The two-argument mpq_class constructor does not canonicalize, which
// silently breaks exact comparison; always build fractions through here.
inline Rat make_rat(long num, long den) {
  if (den == 0) throw division_by_zero();
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_from_string(const std::string& s) {
  try {
    Rat r(s);
    if (r.get_den() == 0) throw parse_error("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw parse_error("not a rational: '" + s + "'");
  }
}

// "p/q", or "p" when q = 1.
inline std::string rat_to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline double rat_to_double(const Rat& x) { return x.get_d(); }

// Exact complex rationals; only needed for the transfer-matrix
// factorization of P_g(x), whose factors carry a purely imaginary
// off-diagonal part.
struct GaussianRat {
  Rat re, im;

  GaussianRat() : re(0), im(0) {}
  GaussianRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussianRat(const Rat& r) : re(r), im(0) {}

  GaussianRat conj() const { return {re, -im}; }
  Rat norm() const { return re * re + im * im; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend GaussianRat operator+(const GaussianRat& a, const GaussianRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRat operator-(const GaussianRat& a, const GaussianRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRat operator*(const GaussianRat& a, const GaussianRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRat operator/(const GaussianRat& a, const GaussianRat& b) {
    if (b.is_zero()) throw division_by_zero();
    Rat n = b.norm();
    GaussianRat num = a * b.conj();
    return {num.re / n, num.im / n};
  }
  friend bool operator==(const GaussianRat& a, const GaussianRat& b) {
    return a.re == b.re && a.im == b.im;
  }
};

}  // namespace srp

#endif
