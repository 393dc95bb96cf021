#include "srpoly/criterion.hpp"

#include <cassert>
#include <stdexcept>

namespace srp {

SelfReciprocalPoly::SelfReciprocalPoly(int g, std::vector<Rat> coeffs)
    : g_(g), c_(std::move(coeffs)) {
  if (g_ < 1) throw std::invalid_argument("g must be >= 1");
  if (static_cast<int>(c_.size()) != g_ + 1)
    throw std::invalid_argument("expected g+1 coefficients c_0..c_g");
  if (sgn(c_[0]) == 0)
    throw std::invalid_argument("c_0 must be nonzero (degree exactly 2g)");
}

std::vector<Rat> SelfReciprocalPoly::full_coeffs() const {
  std::vector<Rat> f(static_cast<size_t>(2 * g_ + 1));
  for (int k = 0; k <= 2 * g_; ++k)
    f[static_cast<size_t>(k)] = c_[static_cast<size_t>(k <= g_ ? k : 2 * g_ - k)];
  return f;
}

Rat SelfReciprocalPoly::eval(const Rat& x) const {
  Rat acc(0);
  auto f = full_coeffs();
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat SelfReciprocalPoly::at_one() const {
  Rat s(0);
  for (int k = 0; k < g_; ++k) s += c_[static_cast<size_t>(k)];
  return 2 * s + c_[static_cast<size_t>(g_)];
}

const char* to_string(StepStatus s) {
  switch (s) {
    case StepStatus::OK: return "OK";
    case StepStatus::NumeratorZero: return "NumeratorZero";
    case StepStatus::DenominatorZero: return "DenominatorZero";
    case StepStatus::NonPositive: return "NonPositive";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::AllOnCircleSimple: return "AllOnCircleSimple";
    case Verdict::AllOnCircle: return "AllOnCircle";
    case Verdict::Fails: return "Fails";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

template <class S>
Step<S> recursion_step(int k, const std::vector<S>& v, std::vector<S>* out) {
  assert(static_cast<int>(v.size()) == 2 * k + 4);
  Step<S> step;
  S num = v[0] + v[static_cast<size_t>(k + 1)];
  S den = v[static_cast<size_t>(k + 2)] - v[static_cast<size_t>(2 * k + 3)];
  if (is_zero(den)) {
    step.status = StepStatus::DenominatorZero;
    return step;
  }
  S m = num / den;
  step.m = m;
  if (is_zero(m)) {
    step.status = StepStatus::NumeratorZero;  // P_k(0) is singular for k >= 1
    if (k >= 1) return step;
  }
  if (out) {
    *out = build_step(k, m).apply(v);
    // Internal consistency: the marked entries of v' reproduce m.
    assert((*out)[0] == m * (*out)[static_cast<size_t>(k + 1)]);
  }
  return step;
}

template <class S>
Recursion<S> run_recursion(int g, std::vector<S> v0) {
  Recursion<S> rec;
  rec.g = g;
  rec.vectors.push_back(std::move(v0));
  for (int n = 1; n <= 2 * g; ++n) {
    int k = 2 * g - n;
    std::vector<S> next;
    Step<S> step = recursion_step(k, rec.vectors.back(), &next);
    bool singular = step.status == StepStatus::DenominatorZero ||
                    (step.status == StepStatus::NumeratorZero && k >= 1);
    rec.steps.push_back(std::move(step));
    if (singular) {
      rec.failed_step = n;
      break;
    }
    rec.vectors.push_back(std::move(next));
  }
  return rec;
}

template Step<Rat> recursion_step(int, const std::vector<Rat>&, std::vector<Rat>*);
template Step<RationalFunction> recursion_step(int, const std::vector<RationalFunction>&,
                                               std::vector<RationalFunction>*);
template Recursion<Rat> run_recursion(int, std::vector<Rat>);
template Recursion<RationalFunction> run_recursion(int, std::vector<RationalFunction>);

std::vector<Rat> initial_vector_log(const SelfReciprocalPoly& p) {
  const int g = p.g();
  std::vector<Rat> v(static_cast<size_t>(4 * g + 2));
  for (int j = 0; j <= 2 * g; ++j) {
    int k = j <= g ? j : 2 * g - j;
    v[static_cast<size_t>(j)] = p.c(k);
    // second half at log q = 1: (g-j) c_j, mirrored with negative sign
    v[static_cast<size_t>(2 * g + 1 + j)] = Rat(g - j) * p.c(k);
  }
  return v;
}

std::vector<RationalFunction> initial_vector_omega(const SelfReciprocalPoly& p) {
  const int g = p.g();
  std::vector<RationalFunction> v(static_cast<size_t>(4 * g + 2));
  for (int j = 0; j <= 2 * g; ++j) {
    int k = j <= g ? j : 2 * g - j;
    int e = g - j;  // coefficient times t^e, e may be negative
    RationalFunction entry =
        e >= 0 ? RationalFunction(UniPoly::monomial(p.c(k), e))
               : RationalFunction(UniPoly::constant(p.c(k)), UniPoly::monomial(Rat(1), -e));
    v[static_cast<size_t>(j)] = entry;
    v[static_cast<size_t>(2 * g + 1 + j)] = entry;
  }
  return v;
}

Rat m2g_log(int g) { return Rat(1) / Rat(g); }

RationalFunction m2g_omega(int g) {
  UniPoly t2g_plus = UniPoly::monomial(Rat(1), 2 * g) + UniPoly::constant(Rat(1));
  UniPoly t2g_minus = UniPoly::monomial(Rat(1), 2 * g) - UniPoly::constant(Rat(1));
  return RationalFunction(t2g_plus, t2g_minus);
}

namespace {

// Alternating products of the m-values; M(0) is the m_{2g} convention
// and M(n) = m_{2g-n}.
template <class S>
std::vector<S> r_products(int g, const std::vector<S>& M) {
  std::vector<S> R(static_cast<size_t>(2 * g + 1), S(1));
  for (int n = 1; n <= 2 * g; ++n) {
    S prod(1);
    if (n % 2 == 1) {
      for (int j = 0; 2 * j + 1 <= n; ++j)
        prod = prod * (M[static_cast<size_t>(2 * j + 1)] / M[static_cast<size_t>(2 * j)]);
    } else {
      for (int j = 0; 2 * j + 2 <= n; ++j)
        prod = prod * (M[static_cast<size_t>(2 * j + 2)] / M[static_cast<size_t>(2 * j + 1)]);
    }
    R[static_cast<size_t>(n)] = prod;
  }
  return R;
}

}  // namespace

RSequenceResult r_sequence(const Recursion<Rat>& rec) {
  RSequenceResult res;
  const int g = rec.g;
  std::vector<Rat> M(static_cast<size_t>(2 * g + 1));
  M[0] = m2g_log(g);
  for (int n = 1; n <= 2 * g; ++n) {
    if (n > static_cast<int>(rec.steps.size()) || !rec.steps[static_cast<size_t>(n - 1)].m ||
        is_zero(*rec.steps[static_cast<size_t>(n - 1)].m)) {
      res.unavailable_step = n;
      return res;
    }
    M[static_cast<size_t>(n)] = *rec.steps[static_cast<size_t>(n - 1)].m;
  }
  res.r = r_products(g, M);
  // relation m_{2g-n} = m_{2g} R_{n-1} R_n
  for (int n = 1; n <= 2 * g; ++n)
    assert(M[static_cast<size_t>(n)] ==
           M[0] * res.r[static_cast<size_t>(n - 1)] * res.r[static_cast<size_t>(n)]);
  res.available = true;
  return res;
}

std::vector<RationalFunction> r_sequence_omega(const Recursion<RationalFunction>& rec) {
  const int g = rec.g;
  std::vector<RationalFunction> M(static_cast<size_t>(2 * g + 1));
  M[0] = m2g_omega(g);
  for (int n = 1; n <= 2 * g; ++n) {
    if (n > static_cast<int>(rec.steps.size()) || !rec.steps[static_cast<size_t>(n - 1)].m ||
        rec.steps[static_cast<size_t>(n - 1)].m->is_zero())
      return {};
    M[static_cast<size_t>(n)] = *rec.steps[static_cast<size_t>(n - 1)].m;
  }
  return r_products(g, M);
}

CriterionReport run_log(const SelfReciprocalPoly& p) {
  CriterionReport rep;
  rep.mode = Mode::LogQ;
  rep.rec = run_recursion(p.g(), initial_vector_log(p));
  rep.rseq = r_sequence(rep.rec);
  for (size_t i = 0; i < rep.rec.steps.size(); ++i) {
    auto& s = rep.rec.steps[i];
    StepStatus st = s.status;
    if (st == StepStatus::OK && s.m && sgn(*s.m) < 0) st = StepStatus::NonPositive;
    if (st != StepStatus::OK && rep.fail_step == 0) {
      rep.fail_step = static_cast<int>(i) + 1;
      rep.fail_reason = st;
    }
  }
  rep.verdict = rep.fail_step == 0 && rep.rec.complete() ? Verdict::AllOnCircleSimple
                                                         : Verdict::Fails;
  return rep;
}

const std::vector<Rat>& default_omega_samples() {
  static const std::vector<Rat> samples = {make_rat(3, 2), Rat(2), Rat(3), Rat(5)};
  return samples;
}

namespace {

// The omega recursion is run projectively: the working vector w equals
// the true state vector times an untracked scalar function of t, which
// cancels in every m (a ratio of entries). Keeping the entries as plain
// polynomials with coprime integer coefficients avoids the per-operation
// gcd reductions of RationalFunction arithmetic, which dominate the cost
// for larger g.
void remove_content(std::vector<UniPoly>& w) {
  UniPoly g;
  for (const UniPoly& e : w) {
    g = UniPoly::gcd(g, e);
    if (!g.is_zero() && g.degree() == 0) break;
  }
  if (g.degree() > 0)
    for (UniPoly& e : w) e = UniPoly::divmod(e, g).first;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const UniPoly& e : w)
    for (const Rat& c : e.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
  for (const UniPoly& e : w)
    for (const Rat& c : e.coeffs()) num_gcd = gcd(num_gcd, mpz_class(c.get_num() * (den_lcm / c.get_den())));
  if (num_gcd == 0) return;
  Rat s(den_lcm, num_gcd);
  s.canonicalize();
  for (UniPoly& e : w) e = s * e;
}

// One projective step: same statuses and m as recursion_step, with the
// output vector scaled by 2 * num(m) * den(m) to stay polynomial.
Step<RationalFunction> proj_step(int k, const std::vector<UniPoly>& w,
                                 std::vector<UniPoly>* out) {
  assert(static_cast<int>(w.size()) == 2 * k + 4);
  Step<RationalFunction> step;
  UniPoly num = w[0] + w[static_cast<size_t>(k + 1)];
  UniPoly den = w[static_cast<size_t>(k + 2)] - w[static_cast<size_t>(2 * k + 3)];
  if (den.is_zero()) {
    step.status = StepStatus::DenominatorZero;
    return step;
  }
  RationalFunction m(num, den);
  step.m = m;
  if (m.is_zero()) {
    step.status = StepStatus::NumeratorZero;
    if (k >= 1) return step;
  }
  if (!out) return step;
  out->assign(static_cast<size_t>(2 * k + 2), UniPoly());
  if (k == 0) {  // the step matrix carries no m; scale 1 suffices
    (*out)[0] = num;
    (*out)[1] = den;
    return step;
  }
  const UniPoly &N = m.num(), &D = m.den();
  UniPoly ND = N * D, N2 = N * N, D2 = D * D;
  const Rat two(2);
  (*out)[0] = two * (ND * num);
  (*out)[static_cast<size_t>(k + 1)] = two * (ND * den);
  for (int r = 2; 2 * r <= k + 2; ++r) {
    int s = k + 3 - r;
    UniPoly xs = w[static_cast<size_t>(r - 1)] + w[static_cast<size_t>(s - 1)];
    UniPoly ys = w[static_cast<size_t>(k + 1 + r)] - w[static_cast<size_t>(k + 1 + s)];
    UniPoly nd_xs = ND * xs, n2_ys = N2 * ys, d2_xs = D2 * xs, nd_ys = ND * ys;
    (*out)[static_cast<size_t>(r - 1)] = nd_xs + n2_ys;
    (*out)[static_cast<size_t>(s - 1)] = nd_xs - n2_ys;
    (*out)[static_cast<size_t>(k + r)] = d2_xs + nd_ys;
    (*out)[static_cast<size_t>(k + s)] = d2_xs - nd_ys;
  }
  if (k % 2 == 1) {
    int t = (k + 3) / 2;
    (*out)[static_cast<size_t>(t - 1)] = two * (ND * w[static_cast<size_t>(t - 1)]);
    (*out)[static_cast<size_t>(k + t)] = two * (D2 * w[static_cast<size_t>(t - 1)]);
  }
  remove_content(*out);
  return step;
}

OmegaStepCertificate certify_exact(const RationalFunction& m) {
  OmegaStepCertificate cert;
  if (m.is_zero()) return cert;  // not positive
  cert.roots_num = sturm_count_right_of_one(m.num());
  cert.roots_den = sturm_count_right_of_one(m.den());
  // No zeros or poles right of t = 1 plus one positive sample certifies
  // positivity of both m and 1/m on the whole ray.
  cert.positive =
      cert.roots_num == 0 && cert.roots_den == 0 && sgn(m.eval_at(Rat(2))) > 0;
  return cert;
}

OmegaStepCertificate certify_sampled(const RationalFunction& m, const std::vector<Rat>& samples) {
  OmegaStepCertificate cert;
  cert.positive = true;
  for (const Rat& t0 : samples) {
    if (sgn(m.den().eval(t0)) == 0 || sgn(m.eval_at(t0)) <= 0) {
      cert.positive = false;
      break;
    }
  }
  return cert;
}

}  // namespace

OmegaReport run_omega(const SelfReciprocalPoly& p, bool exact,
                      const std::vector<Rat>& samples) {
  OmegaReport rep;
  const int g = p.g();
  rep.rec.g = g;
  // Projective initial vector: the true initial state times t^g.
  std::vector<UniPoly> w(static_cast<size_t>(4 * g + 2));
  for (int j = 0; j <= 2 * g; ++j) {
    int k = j <= g ? j : 2 * g - j;
    w[static_cast<size_t>(j)] = UniPoly::monomial(p.c(k), 2 * g - j);
    w[static_cast<size_t>(2 * g + 1 + j)] = w[static_cast<size_t>(j)];
  }
  for (int n = 1; n <= 2 * g; ++n) {
    int k = 2 * g - n;
    std::vector<UniPoly> next;
    Step<RationalFunction> step = proj_step(k, w, &next);
    bool singular = step.status == StepStatus::DenominatorZero ||
                    (step.status == StepStatus::NumeratorZero && k >= 1);
    rep.rec.steps.push_back(step);
    if (singular) {
      rep.rec.failed_step = n;
      rep.fail_step = n;
      rep.fail_reason = rep.rec.steps.back().status;
      rep.verdict = Verdict::Fails;
      return rep;
    }
    const RationalFunction& m = *rep.rec.steps.back().m;
    OmegaStepCertificate cert = exact ? certify_exact(m) : certify_sampled(m, samples);
    rep.certificates.push_back(cert);
    if (!cert.positive) {
      // Verdict decided; skip the (increasingly expensive) later steps.
      rep.fail_step = n;
      rep.fail_reason = StepStatus::NonPositive;
      rep.verdict = Verdict::Fails;
      return rep;
    }
    w = std::move(next);
  }
  rep.r = r_sequence_omega(rep.rec);
  rep.verdict = exact ? Verdict::AllOnCircle : Verdict::Inconclusive;
  return rep;
}

std::vector<LimitCheckRow> limit_check(const SelfReciprocalPoly& p) {
  CriterionReport log_rep = run_log(p);
  OmegaReport om_rep = run_omega(p, /*exact=*/false, {});
  std::vector<LimitCheckRow> rows;
  for (int n = 1; n <= 2 * p.g(); ++n) {
    LimitCheckRow row;
    row.n = n;
    if (!om_rep.r.empty()) {
      row.omega_defined = true;
      row.limit = om_rep.r[static_cast<size_t>(n)].limit_at_one();
    }
    if (log_rep.rseq.available) {
      row.log_defined = true;
      row.log_value = log_rep.rseq.r[static_cast<size_t>(n)];
    }
    row.equal = row.omega_defined && row.log_defined && row.limit.finite &&
                row.limit.value == row.log_value;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace srp
