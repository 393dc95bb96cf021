#ifndef SRPOLY_LINSYS_HPP
#define SRPOLY_LINSYS_HPP

#include <stdexcept>
#include <vector>

#include "srpoly/ratfunc.hpp"
#include "srpoly/rational.hpp"

namespace srp {

class singular_step_error : public std::domain_error {
 public:
  singular_step_error() : std::domain_error("P_k(m) is singular: m = 0") {}
};

// Small dense matrix over an exact scalar ring (Rat or RationalFunction).
template <class S>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<S> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, S(0)) {}

  S& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const S& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        if (is_zero(x.at(i, k))) continue;
        for (int j = 0; j < y.cols; ++j) {
          if (is_zero(y.at(k, j))) continue;
          z.at(i, j) += x.at(i, k) * y.at(k, j);
        }
      }
    return z;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    std::vector<S> out(static_cast<size_t>(rows), S(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        if (is_zero(at(i, j)) || is_zero(v[static_cast<size_t>(j)])) continue;
        out[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
      }
    return out;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

namespace detail {

// The folded half-blocks share one shape: row 1 touches entry 1 (and, for
// the widened W variant, entry k+2); the remaining rows pair entry r with
// entry k+3-r. For odd k the self-paired middle entry (k+3)/2 appears as a
// single 1 in the plus block and is dropped from the minus block.
template <class S>
void fill_half_block(Mat<S>& M, int k, int row0, int col0, bool plus, bool widened) {
  const S one(1);
  const S pm = plus ? S(1) : S(-1);
  int r = row0;
  M.at(r, col0 + 0) = one;
  if (widened) M.at(r, col0 + k + 1) = pm;
  ++r;
  for (int i = 2; 2 * i <= k + 2; ++i, ++r) {  // pairs (i, k+3-i), i < k+3-i
    M.at(r, col0 + i - 1) = one;
    M.at(r, col0 + (k + 3 - i) - 1) = pm;
  }
  if (k % 2 == 1 && plus) M.at(r, col0 + (k + 3) / 2 - 1) = one;  // middle
}

template <class S>
int half_rows(int k, bool plus) {
  if (k % 2 == 0) return (k + 2) / 2;
  return plus ? (k + 3) / 2 : (k + 1) / 2;
}

}  // namespace detail

// (2k+2) x (2k+2) matrix P_k(m): folded plus/minus blocks on the two
// halves and k rows tying the two halves together through m.
template <class S>
Mat<S> build_P(int k, const S& m) {
  Mat<S> P(2 * k + 2, 2 * k + 2);
  int rp = detail::half_rows<S>(k, true);
  int rm = detail::half_rows<S>(k, false);
  detail::fill_half_block(P, k, 0, 0, true, false);
  detail::fill_half_block(P, k, rp, k + 1, false, false);
  for (int j = 0; j < k; ++j) {
    P.at(rp + rm + j, 1 + j) = S(1);
    P.at(rp + rm + j, (k + 1) + 1 + j) = S(0) - m;
  }
  return P;
}

// (2k+2) x (2k+4) matrix Q_k: the widened folded blocks over the two input
// halves, bottom k rows zero.
template <class S>
Mat<S> build_Q(int k) {
  Mat<S> Q(2 * k + 2, 2 * k + 4);
  int rp = detail::half_rows<S>(k, true);
  detail::fill_half_block(Q, k, 0, 0, true, true);
  detail::fill_half_block(Q, k, rp, k + 2, false, true);
  return Q;
}

// Closed form of P_k(m)^{-1} Q_k, the one-step propagator of the state
// recursion. Output rows: p_1..p_{k+1} then q_1..q_{k+1}; input columns:
// x_1..x_{k+2} then y_1..y_{k+2}. Solving the P u = Q v block system gives
//   p_1 = x_1 + x_{k+2},           q_1 = y_1 - y_{k+2},
// and for each pair (r, s = k+3-r):
//   p_r, p_s = (x_r + x_s)/2 +- (m/2)(y_r - y_s),
//   q_r, q_s = (x_r + x_s)/(2m) +- (y_r - y_s)/2,
// with the odd-k middle entry t: p_t = x_t, q_t = x_t / m.
// Rows 1 and k+2 contain no m.
template <class S>
Mat<S> build_step(int k, const S& m) {
  if (k >= 1 && is_zero(m)) throw singular_step_error();
  Mat<S> M(2 * k + 2, 2 * k + 4);
  const int X = 0, Y = k + 2;       // input column offsets
  const int P = 0, QQ = k + 1;      // output row offsets
  const S half = S(1) / S(2);
  M.at(P + 0, X + 0) = S(1);
  M.at(P + 0, X + k + 1) = S(1);
  M.at(QQ + 0, Y + 0) = S(1);
  M.at(QQ + 0, Y + k + 1) = S(-1);
  for (int r = 2; 2 * r <= k + 2; ++r) {
    int s = k + 3 - r;
    const S mh = m * half;
    const S imh = half / m;
    M.at(P + r - 1, X + r - 1) = half;
    M.at(P + r - 1, X + s - 1) = half;
    M.at(P + r - 1, Y + r - 1) = mh;
    M.at(P + r - 1, Y + s - 1) = S(0) - mh;
    M.at(P + s - 1, X + r - 1) = half;
    M.at(P + s - 1, X + s - 1) = half;
    M.at(P + s - 1, Y + r - 1) = S(0) - mh;
    M.at(P + s - 1, Y + s - 1) = mh;
    M.at(QQ + r - 1, X + r - 1) = imh;
    M.at(QQ + r - 1, X + s - 1) = imh;
    M.at(QQ + r - 1, Y + r - 1) = half;
    M.at(QQ + r - 1, Y + s - 1) = S(0) - half;
    M.at(QQ + s - 1, X + r - 1) = imh;
    M.at(QQ + s - 1, X + s - 1) = imh;
    M.at(QQ + s - 1, Y + r - 1) = S(0) - half;
    M.at(QQ + s - 1, Y + s - 1) = half;
  }
  if (k % 2 == 1) {
    int t = (k + 3) / 2;
    M.at(P + t - 1, X + t - 1) = S(1);
    M.at(QQ + t - 1, X + t - 1) = S(1) / m;
  }
  return M;
}

// det P_k(m) = eps * 2^j * m^e with the parity classes
//   k = 2j+1: e = j+1, eps = +1 for j = 2,3 mod 4, else -1;
//   k = 2j:   e = j,   eps = +1 for j = 0,1 mod 4, else -1.
template <class S>
S det_P_closed_form(int k, const S& m) {
  if (k < 1) throw std::invalid_argument("det_P_closed_form: k >= 1");
  int j = (k - 1) / 2;
  int e, eps;
  if (k % 2 == 1) {
    e = j + 1;
    eps = (j % 4 == 2 || j % 4 == 3) ? 1 : -1;
  } else {
    j = k / 2;
    e = j;
    eps = (j % 4 == 0 || j % 4 == 1) ? 1 : -1;
  }
  S pow2(1);
  for (int i = 0; i < j; ++i) pow2 = pow2 * S(2);
  S me(1);
  for (int i = 0; i < e; ++i) me = me * m;
  S r = pow2 * me;
  return eps > 0 ? r : S(0) - r;
}

}  // namespace srp

#endif
