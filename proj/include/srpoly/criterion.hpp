#ifndef SRPOLY_CRITERION_HPP
#define SRPOLY_CRITERION_HPP

#include <optional>
#include <string>
#include <vector>

#include "srpoly/linsys.hpp"
#include "srpoly/ratfunc.hpp"
#include "srpoly/rational.hpp"
#include "srpoly/sturm.hpp"

namespace srp {

// P_g(x) = sum_{k<g} c_k (x^{2g-k} + x^k) + c_g x^g, degree exactly 2g.
class SelfReciprocalPoly {
 public:
  SelfReciprocalPoly(int g, std::vector<Rat> coeffs);

  int g() const { return g_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& c(int k) const { return c_[static_cast<size_t>(k)]; }

  // Full ascending coefficient list c_0,...,c_g,...,c_0 of length 2g+1.
  std::vector<Rat> full_coeffs() const;
  Rat eval(const Rat& x) const;
  Rat at_one() const;  // P_g(1) = 2*sum_{k<g} c_k + c_g

 private:
  int g_;
  std::vector<Rat> c_;
};

enum class StepStatus { OK, NumeratorZero, DenominatorZero, NonPositive };
enum class Verdict { AllOnCircleSimple, AllOnCircle, Fails, Inconclusive };

const char* to_string(StepStatus s);
const char* to_string(Verdict v);

template <class S>
struct Step {
  StepStatus status = StepStatus::OK;
  std::optional<S> m;  // defined unless DenominatorZero
};

// Outcome of running the 2g-step state recursion over scalar ring S.
// Vectors are kept for the canonical-system constructions; vectors[n] is
// v_g(n) (so vectors[0] is the initial vector of length 4g+2).
template <class S>
struct Recursion {
  int g = 0;
  std::vector<Step<S>> steps;           // indexed by n-1, n = 1..2g
  std::vector<std::vector<S>> vectors;  // 0..last defined n
  int failed_step = 0;                  // 0 if none; else first bad n

  bool complete() const { return failed_step == 0 && static_cast<int>(steps.size()) == 2 * g; }
};

// One step of the recursion: m from the marked entries of v, then
// v' = (P^{-1}Q) v, with the consistency identity m = v'[1]/v'[k+2] checked.
template <class S>
Step<S> recursion_step(int k, const std::vector<S>& v, std::vector<S>* out);

// Runs the recursion from the given initial vector; halts at the first
// singular step (the verdict is already decided there).
template <class S>
Recursion<S> run_recursion(int g, std::vector<S> v0);

std::vector<Rat> initial_vector_log(const SelfReciprocalPoly& p);
std::vector<RationalFunction> initial_vector_omega(const SelfReciprocalPoly& p);

enum class Mode { LogQ, Omega };

struct RSequenceResult {
  bool available = false;
  int unavailable_step = 0;  // first n with undefined/zero m when !available
  std::vector<Rat> r;        // R_0..R_{2g}
};

struct CriterionReport {
  Mode mode = Mode::LogQ;
  Recursion<Rat> rec;
  RSequenceResult rseq;
  Verdict verdict = Verdict::Inconclusive;
  int fail_step = 0;
  StepStatus fail_reason = StepStatus::OK;
};

struct OmegaStepCertificate {
  bool positive = false;            // m and 1/m finite and positive on (1,inf)
  int roots_num = -1, roots_den = -1;  // Sturm counts on (1,inf)
};

struct OmegaReport {
  Recursion<RationalFunction> rec;
  std::vector<OmegaStepCertificate> certificates;  // per step when exact
  std::vector<Rat> r_limits_defined;               // unused placeholder
  Verdict verdict = Verdict::Inconclusive;
  int fail_step = 0;
  StepStatus fail_reason = StepStatus::OK;
  std::vector<RationalFunction> r;  // R_0..R_{2g} when all m defined
};

// Exact-rational verdict at log q = 1: zeros all on the unit circle and
// simple iff the recursion completes with every m positive.
CriterionReport run_log(const SelfReciprocalPoly& p);

const std::vector<Rat>& default_omega_samples();

// Verdict over Q(t), t = q^omega (multiple zeros allowed). With exact = true the
// "for every omega > 0" condition is decided by Sturm positivity on
// (1, inf); with exact = false only the given samples t > 1 are checked,
// which is sound for rejection only.
OmegaReport run_omega(const SelfReciprocalPoly& p, bool exact = true,
                      const std::vector<Rat>& samples = default_omega_samples());

// R_0..R_{2g} from a completed m-sequence; also verifies the relation
// m_{2g-n} = m_{2g} R_{n-1} R_n at every n.
RSequenceResult r_sequence(const Recursion<Rat>& rec);
std::vector<RationalFunction> r_sequence_omega(const Recursion<RationalFunction>& rec);

// m_{2g} convention: 1/g in log mode (log q = 1),
// (t^g + t^-g)/(t^g - t^-g) in omega mode.
Rat m2g_log(int g);
RationalFunction m2g_omega(int g);

struct LimitCheckRow {
  int n = 0;
  bool omega_defined = false;
  LimitAtOne limit;     // of R_n(c; t) at t -> 1+
  bool log_defined = false;
  Rat log_value;        // R_n(c)
  bool equal = false;
};

// Cross check: the omega R-sequence evaluated at t -> 1 against the log one.
std::vector<LimitCheckRow> limit_check(const SelfReciprocalPoly& p);

}  // namespace srp

#endif
