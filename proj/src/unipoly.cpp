#include "srpoly/unipoly.hpp"

#include <algorithm>

namespace srp {

UniPoly UniPoly::monomial(const Rat& a, int k) {
  if (sgn(a) == 0) return UniPoly();
  std::vector<Rat> c(static_cast<size_t>(k) + 1, Rat(0));
  c.back() = a;
  return UniPoly(std::move(c));
}

Rat UniPoly::eval(const Rat& t) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UniPoly::eval_double(double t) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rat(static_cast<long>(k)) * c_[k];
  return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a) {
  std::vector<Rat> c(a.c_);
  for (auto& x : c) x = -x;
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(const Rat& s, const UniPoly& a) {
  if (sgn(s) == 0) return UniPoly();
  std::vector<Rat> c(a.c_);
  for (auto& x : c) x *= s;
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw division_by_zero();
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rat> rem(a.c_);
  std::vector<Rat> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
  const Rat& lb = b.leading();
  for (int d = a.degree(); d >= b.degree();) {
    Rat f = rem[static_cast<size_t>(d)] / lb;
    quo[static_cast<size_t>(d - b.degree())] = f;
    for (int k = 0; k <= b.degree(); ++k)
      rem[static_cast<size_t>(d - b.degree() + k)] -= f * b.c_[static_cast<size_t>(k)];
    // leading term cancels exactly
    while (d >= 0 && sgn(rem[static_cast<size_t>(d)]) == 0) --d;
  }
  rem.resize(static_cast<size_t>(b.degree() > 0 ? b.degree() : 0));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::primitive_part() const {
  if (is_zero()) return UniPoly();
  mpz_class den_lcm(1), num_gcd(0);
  for (const auto& x : c_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  }
  std::vector<Rat> c(c_);
  for (auto& x : c) {
    x *= den_lcm;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
  }
  if (sgn(leading()) < 0) num_gcd = -num_gcd;
  for (auto& x : c) x /= num_gcd;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const {
  return (Rat(1) / leading()) * (*this);
}

namespace {

using u64 = unsigned long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

// Dense poly over GF(p), ascending, trailing zeros trimmed.
void gf_trim(std::vector<u64>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::vector<u64> gf_image(const std::vector<mpz_class>& z, u64 p) {
  std::vector<u64> f(z.size());
  for (size_t i = 0; i < z.size(); ++i) {
    f[i] = mpz_fdiv_ui(z[i].get_mpz_t(), p);
  }
  gf_trim(f);
  return f;
}

void gf_make_monic(std::vector<u64>& f, u64 p) {
  u64 inv = powmod(f.back(), p - 2, p);
  for (u64& c : f) c = mulmod(c, inv, p);
}

std::vector<u64> gf_gcd(std::vector<u64> f, std::vector<u64> g, u64 p) {
  while (!g.empty()) {
    gf_make_monic(g, p);
    // f mod g, in place
    while (f.size() >= g.size()) {
      u64 lead = f.back();
      size_t off = f.size() - g.size();
      if (lead != 0)
        for (size_t i = 0; i < g.size(); ++i)
          f[off + i] = (f[off + i] + p - mulmod(lead, g[i], p)) % p;
      f.pop_back();
      gf_trim(f);
    }
    std::swap(f, g);
  }
  if (!f.empty()) gf_make_monic(f, p);
  return f;
}

u64 next_modgcd_prime(size_t idx) {
  static std::vector<u64> primes;
  static mpz_class cursor = (mpz_class(1) << 62);
  while (primes.size() <= idx) {
    mpz_nextprime(cursor.get_mpz_t(), cursor.get_mpz_t());
    primes.push_back(cursor.get_ui());
  }
  return primes[idx];
}

std::vector<mpz_class> int_coeffs(const UniPoly& p) {
  UniPoly prim = p.primitive_part();
  std::vector<mpz_class> z;
  z.reserve(prim.coeffs().size());
  for (const Rat& c : prim.coeffs()) z.push_back(c.get_num());
  return z;
}

}  // namespace

// Modular gcd (Brown): gcd images over word-size primes, CRT-lifted with
// symmetric remainders and confirmed by exact trial division. Far cheaper
// than a rational PRS once coefficients grow.
UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.is_zero() ? UniPoly() : b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return UniPoly({Rat(1)});

  std::vector<mpz_class> A = int_coeffs(a), B = int_coeffs(b);
  mpz_class gamma;  // the true gcd's leading coefficient divides this
  mpz_gcd(gamma.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());

  std::vector<mpz_class> H;  // CRT accumulator, leading coeff scaled to gamma
  mpz_class M = 0;
  int best_d = -1;
  std::vector<mpz_class> last_cand;

  for (size_t idx = 0;; ++idx) {
    u64 p = next_modgcd_prime(idx);
    if (mpz_fdiv_ui(A.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(B.back().get_mpz_t(), p) == 0)
      continue;
    std::vector<u64> gp = gf_gcd(gf_image(A, p), gf_image(B, p), p);
    int d = static_cast<int>(gp.size()) - 1;
    if (d == 0) return UniPoly({Rat(1)});
    if (best_d < 0 || d < best_d) {  // previous primes were all unlucky
      best_d = d;
      H.assign(gp.size(), 0);
      M = 0;
    } else if (d > best_d) {
      continue;
    }
    u64 gam_p = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    if (M == 0) {
      for (size_t i = 0; i < gp.size(); ++i) H[i] = mulmod(gp[i], gam_p, p);
      M = p;
    } else {
      // coefficient-wise CRT: H' = H + M * ((hp - H) / M mod p)
      u64 minv = powmod(mpz_fdiv_ui(M.get_mpz_t(), p), p - 2, p);
      for (size_t i = 0; i < H.size(); ++i) {
        u64 hp = mulmod(gp[i], gam_p, p);
        u64 hm = mpz_fdiv_ui(H[i].get_mpz_t(), p);
        u64 delta = mulmod((hp + p - hm) % p, minv, p);
        H[i] += M * delta;
      }
      M *= p;
    }
    // symmetric lift, then test for stabilization before paying for the
    // exact divisions
    std::vector<mpz_class> cand(H.size());
    mpz_class half = M / 2;
    for (size_t i = 0; i < H.size(); ++i) cand[i] = H[i] > half ? H[i] - M : H[i];
    if (cand != last_cand) {
      last_cand = cand;
      continue;
    }
    std::vector<Rat> cr(cand.size());
    for (size_t i = 0; i < cand.size(); ++i) cr[i] = Rat(cand[i]);
    UniPoly C = UniPoly(std::move(cr)).primitive_part();
    if (C.degree() == best_d && divmod(a, C).second.is_zero() &&
        divmod(b, C).second.is_zero())
      return C.monic();
    last_cand.clear();  // verification failed: need more primes
  }
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rat& a = c_[static_cast<size_t>(k)];
    if (sgn(a) == 0) continue;
    if (!out.empty()) out += sgn(a) > 0 ? " + " : " - ";
    Rat mag = out.empty() ? a : Rat(abs(a));
    std::string coeff = rat_to_string(mag);
    if (k == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace srp
