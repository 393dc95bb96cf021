#include "srpoly/closed_forms.hpp"

#include <stdexcept>

namespace srp {

namespace {

Rat ratio(const Rat& num, const Rat& den) {
  if (sgn(den) == 0) throw division_by_zero();
  return num / den;
}

Rat sq(const Rat& x) { return x * x; }

}  // namespace

std::vector<Rat> r_closed_form_coeffs(const SelfReciprocalPoly& p) {
  const int g = p.g();
  std::vector<Rat> R(static_cast<size_t>(2 * g + 1), Rat(1));
  if (g == 1) {
    const Rat c0 = p.c(0), c1 = p.c(1);
    R[2] = ratio(2 * c0 + c1, 2 * c0 - c1);
  } else if (g == 2) {
    const Rat c0 = p.c(0), c1 = p.c(1), c2 = p.c(2);
    R[2] = ratio(4 * c0 + c1, 4 * c0 - c1);
    R[3] = ratio(8 * c0 * c0 - 2 * c1 * c1 + 4 * c0 * c2,
                 8 * c0 * c0 + c1 * c1 - 4 * c0 * c2);
    R[4] = ratio(2 * c0 + 2 * c1 + c2, 2 * c0 - 2 * c1 + c2);
  } else if (g == 3) {
    const Rat c0 = p.c(0), c1 = p.c(1), c2 = p.c(2), c3 = p.c(3);
    R[2] = ratio(6 * c0 + c1, 6 * c0 - c1);
    R[3] = ratio(18 * c0 * c0 - 3 * c1 * c1 + 6 * c0 * c2,
                 18 * c0 * c0 + 2 * c1 * c1 - 6 * c0 * c2);
    R[4] = ratio(36 * c0 * c0 * c0 + 6 * c0 * c0 * c1 - c0 * c1 * c1 + 4 * c1 * c1 * c1 -
                     14 * c0 * c1 * c2 + c1 * c1 * c2 - 4 * c0 * c2 * c2 +
                     18 * c0 * c0 * c3 + 3 * c0 * c1 * c3,
                 36 * c0 * c0 * c0 - 6 * c0 * c0 * c1 - c0 * c1 * c1 - 4 * c1 * c1 * c1 +
                     14 * c0 * c1 * c2 + c1 * c1 * c2 - 4 * c0 * c2 * c2 -
                     18 * c0 * c0 * c3 + 3 * c0 * c1 * c3);
    const Rat c0_2 = c0 * c0, c1_2 = c1 * c1, c2_2 = c2 * c2, c3_2 = c3 * c3;
    R[5] = ratio(108 * c0_2 * c0_2 - 21 * c0_2 * c1_2 - 12 * c1_2 * c1_2 +
                     108 * c0_2 * c0 * c2 + 42 * c0 * c1_2 * c2 - 12 * c0_2 * c2_2 +
                     3 * c1_2 * c2_2 - 12 * c0 * c2_2 * c2 - 54 * c0_2 * c1 * c3 -
                     6 * c1_2 * c1 * c3 + 30 * c0 * c1 * c2 * c3 - 27 * c0_2 * c3_2,
                 108 * c0_2 * c0_2 + 9 * c0_2 * c1_2 + 8 * c1_2 * c1_2 -
                     108 * c0_2 * c0 * c2 - 42 * c0 * c1_2 * c2 + 36 * c0_2 * c2_2 +
                     c1_2 * c2_2 - 4 * c0 * c2_2 * c2 + 54 * c0_2 * c1 * c3 -
                     4 * c1_2 * c1 * c3 + 18 * c0 * c1 * c2 * c3 - 27 * c0_2 * c3_2);
    R[6] = ratio(2 * c0 + 2 * c1 + 2 * c2 + c3, 2 * c0 - 2 * c1 + 2 * c2 - c3);
  } else {
    throw std::invalid_argument("closed forms printed only for g <= 3");
  }
  return R;
}

std::vector<Rat> r_closed_form_lambdas(const std::vector<Rat>& lam) {
  const int g = static_cast<int>(lam.size());
  std::vector<Rat> R(static_cast<size_t>(2 * g + 1), Rat(1));
  if (g == 1) {
    R[2] = ratio(1 - lam[0], 1 + lam[0]);
  } else if (g == 2) {
    const Rat &l1 = lam[0], &l2 = lam[1];
    R[2] = ratio((1 - l1) + (1 - l2), (1 + l1) + (1 + l2));
    R[3] = 2 * ratio((1 - l1 * l1) + (1 - l2 * l2), sq(l1 - l2));
    R[4] = ratio((1 - l1) * (1 - l2), (1 + l1) * (1 + l2));
  } else if (g == 3) {
    const Rat &l1 = lam[0], &l2 = lam[1], &l3 = lam[2];
    R[2] = ratio((1 - l1) + (1 - l2) + (1 - l3), (1 + l1) + (1 + l2) + (1 + l3));
    R[3] = 3 * ratio((1 - l1 * l1) + (1 - l2 * l2) + (1 - l3 * l3),
                     sq(l1 - l2) + sq(l1 - l3) + sq(l2 - l3));
    R[4] = ratio((1 - l1) * (1 - l2) * sq(l1 - l2) + (1 - l1) * (1 - l3) * sq(l1 - l3) +
                     (1 - l2) * (1 - l3) * sq(l2 - l3),
                 (1 + l1) * (1 + l2) * sq(l1 - l2) + (1 + l1) * (1 + l3) * sq(l1 - l3) +
                     (1 + l2) * (1 + l3) * sq(l2 - l3));
    R[5] = 3 * ratio((1 - l1 * l1) * (1 - l2 * l2) * sq(l1 - l2) +
                         (1 - l1 * l1) * (1 - l3 * l3) * sq(l1 - l3) +
                         (1 - l2 * l2) * (1 - l3 * l3) * sq(l2 - l3),
                     sq(l1 - l2) * sq(l1 - l3) * sq(l2 - l3));
    R[6] = ratio((1 - l1) * (1 - l2) * (1 - l3), (1 + l1) * (1 + l2) * (1 + l3));
  } else {
    throw std::invalid_argument("closed forms printed only for g <= 3");
  }
  return R;
}

}  // namespace srp
