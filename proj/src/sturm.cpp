#include "srpoly/sturm.hpp"

#include <vector>

namespace srp {

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

// Chain members may only be rescaled by positive constants; restore the
// original leading sign after stripping the content.
UniPoly positive_scale(const UniPoly& p) {
  UniPoly q = p.primitive_part();
  return sgn(p.leading()) < 0 ? -q : q;
}

// Descartes' rule on f(1+u): with 0 or 1 coefficient sign variations the
// number of roots in (1, inf) counted with multiplicity is exactly the
// variation count; otherwise the rule is only an upper bound and we
// return -1. Much cheaper than a Sturm chain on large inputs.
// pre: f(1) != 0.
int descartes_right_of_one(const UniPoly& f) {
  std::vector<Rat> b = f.primitive_part().coeffs();
  const size_t n = b.size();
  for (size_t i = 0; i + 1 < n; ++i)  // Taylor shift by 1, in place
    for (size_t j = n - 1; j > i; --j) b[j - 1] += b[j];
  int vars = 0, prev = 0;
  for (const Rat& c : b) {
    int s = sgn(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars <= 1 ? vars : -1;
}

}  // namespace

int sturm_count_right_of_one(const UniPoly& p) {
  if (p.is_zero()) throw zero_polynomial_error();
  if (p.degree() == 0) return 0;

  // A root exactly at t = 1 is excluded from the open interval; strip it
  // so neither counting method sees the left endpoint as a root.
  const UniPoly lin({Rat(-1), Rat(1)});
  UniPoly f0 = p;
  while (!f0.is_zero() && sgn(f0.eval(Rat(1))) == 0)
    f0 = UniPoly::divmod(f0, lin).first;
  if (f0.degree() <= 0) return 0;

  // Fast path: a decisive Descartes count needs no square-free reduction
  // (0 variations means no roots at all; 1 means a single simple root).
  if (int d = descartes_right_of_one(f0); d >= 0) return d;

  // Square-free part; Sturm then counts each distinct root once and the
  // chain terminates in a nonzero constant.
  UniPoly f = UniPoly::divmod(f0, UniPoly::gcd(f0, f0.derivative())).first;
  if (f.degree() <= 0) return 0;

  std::vector<UniPoly> chain;
  chain.push_back(positive_scale(f));
  chain.push_back(positive_scale(f.derivative()));
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    UniPoly r = UniPoly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;  // cannot happen for a square-free head
    chain.push_back(positive_scale(-r));
  }

  std::vector<int> at_one, at_inf;
  at_one.reserve(chain.size());
  at_inf.reserve(chain.size());
  for (const auto& q : chain) {
    at_one.push_back(sgn(q.eval(Rat(1))));
    at_inf.push_back(sgn(q.leading()));
  }
  return sign_changes(at_one) - sign_changes(at_inf);
}

bool positive_on_right_ray(const RationalFunction& f) {
  if (f.is_zero()) return false;
  if (sturm_count_right_of_one(f.num() * f.den()) != 0) return false;
  if (f.den().degree() > 0 && sturm_count_right_of_one(f.den()) != 0) return false;
  return sgn(f.eval_at(Rat(2))) > 0;
}

}  // namespace srp
