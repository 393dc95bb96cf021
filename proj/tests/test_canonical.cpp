#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "srpoly/canonical.hpp"
#include "srpoly/oracle.hpp"

using namespace srp;

namespace {

double rel(cplx a, cplx b) {
  double scale = std::max({std::abs(a), std::abs(b), 1.0});
  return std::abs(a - b) / scale;
}

cplx rand_z(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  return {d(rng), d(rng)};
}

}  // namespace

TEST_CASE("A and B basics") {
  SelfReciprocalPoly p(2, {Rat(1), Rat(-1), Rat(2)});
  ExpPolyFunctions f(p, 2.0);
  // A(0) = P_g(1), B(0) = 0
  CHECK(std::abs(f.A(0.0) - 2.0) < 1e-12);
  CHECK(std::abs(f.B(0.0)) < 1e-12);
  // A even, B odd on the real axis
  for (double x : {0.3, 1.1, 2.7}) {
    CHECK(std::abs(f.A(x) - f.A(-x)) < 1e-12);
    CHECK(std::abs(f.B(x) + f.B(-x)) < 1e-12);
  }
  // B = -dA/dz (central difference)
  double h = 1e-6;
  cplx z(0.4, 0.2);
  cplx dA = (f.A(z + h) - f.A(z - h)) / (2.0 * h);
  CHECK(std::abs(f.B(z) + dA) < 1e-6);
  // E^sharp is the reflected conjugate
  CHECK(std::abs(f.Esharp(z) - std::conj(f.E(std::conj(z)))) < 1e-12);
}

TEST_CASE("canonical system boundary, continuity and end limit") {
  std::mt19937_64 rng(1234);
  for (unsigned seed = 1; seed <= 8; ++seed) {
    SelfReciprocalPoly p = random_instance(InstanceMode::OnCircleSimple, 2, seed);
    CanonicalSystem sys(p, 2.0);
    REQUIRE(sys.defined_steps() == 4);
    CHECK(sys.all_m_positive());
    ExpPolyFunctions f(p, 2.0);

    for (int i = 0; i < 20; ++i) {
      cplx z = rand_z(rng);
      auto [A1, B1] = sys.eval_AB(1.0, z);
      CHECK(rel(A1, f.A(z)) < 1e-10);
      CHECK(rel(B1, f.B(z)) < 1e-10);
    }
    // continuity across every interior breakpoint q^{n/2}
    for (int n = 1; n < 4; ++n) {
      double bp = std::pow(2.0, n / 2.0);
      cplx z = rand_z(rng);
      auto [Al, Bl] = sys.eval_AB(bp * (1.0 - 1e-13), z);
      auto [Ar, Br] = sys.eval_AB(bp, z);
      CHECK(rel(Al, Ar) < 1e-9);
      CHECK(rel(Bl, Br) < 1e-9);
    }
    // (A, B) -> (P_g(1), 0) at the right end
    auto [Ae, Be] = sys.eval_AB(std::pow(2.0, 2.0) * (1.0 - 1e-13), 0.0);
    CHECK(std::abs(Ae - sys.boundary_value()) < 1e-9);
    CHECK(std::abs(Be) < 1e-9);
  }
}

TEST_CASE("hamiltonian steps and interval lookup") {
  SelfReciprocalPoly p(2, {Rat(1), Rat(-1), Rat(2)});
  CanonicalSystem sys(p, 2.0);
  Hamiltonian H = sys.hamiltonian();
  REQUIRE(H.steps.size() == 4);
  for (int n = 1; n <= 4; ++n) {
    const auto& s = H.steps[static_cast<size_t>(n - 1)];
    CHECK(s.n == n);
    CHECK(s.a_start == doctest::Approx(std::pow(2.0, (n - 1) / 2.0)));
    CHECK(s.a_end == doctest::Approx(std::pow(2.0, n / 2.0)));
    CHECK(s.m == doctest::Approx(sys.m(n)));
    CHECK(H.m_at(0.5 * (s.a_start + s.a_end)) == doctest::Approx(s.m));
  }
  CHECK(sys.interval_of(1.0) == 1);
  CHECK(sys.interval_of(1.5) == 2);
  CHECK_THROWS_AS(sys.interval_of(4.0), out_of_domain_error);
  CHECK_THROWS_AS(sys.interval_of(0.5), out_of_domain_error);
}

TEST_CASE("ODE residual is small and O(h^2)") {
  std::mt19937_64 rng(777);
  SelfReciprocalPoly p = random_instance(InstanceMode::OnCircleSimple, 3, 5);
  CanonicalSystem sys(p, 2.0);
  REQUIRE(sys.defined_steps() == 6);
  std::uniform_real_distribution<double> fa(0.05, 2.95);
  for (int i = 0; i < 6; ++i) {
    double a = std::pow(2.0, fa(rng) / 2.0) * 1.001;
    if (sys.interval_of(a * (1 + 2e-4)) != sys.interval_of(a * (1 - 2e-4))) continue;
    cplx z = rand_z(rng);
    double r1 = sys.ode_residual(a, z, 1e-4);
    double r2 = sys.ode_residual(a, z, 5e-5);
    CHECK(r1 < 1e-6);
    if (r2 > 1e-13) {  // below that, roundoff swamps the ratio
      CHECK(r1 / r2 > 3.5);
      CHECK(r1 / r2 < 4.5);
    }
  }
}

TEST_CASE("transfer product path equals direct evaluation") {
  std::mt19937_64 rng(31337);
  for (unsigned seed = 1; seed <= 5; ++seed) {
    SelfReciprocalPoly p = random_instance(InstanceMode::OnCircleSimple, 2, seed);
    CanonicalSystem sys(p, 2.0);
    REQUIRE(sys.all_m_positive());
    std::uniform_real_distribution<double> fa(0.0, 2.0 - 1e-9);
    for (int i = 0; i < 10; ++i) {
      double a = std::pow(2.0, fa(rng));
      cplx z = rand_z(rng);
      auto [At, Bt] = sys.transfer_product(a, z);
      auto [Av, Bv] = sys.eval_AB(a, z);
      CHECK(rel(At, Av) < 1e-9);
      CHECK(rel(Bt, Bv) < 1e-9);
    }
    // each rotation factor is unimodular
    cplx F[2][2];
    CanonicalSystem::transfer_factor(0.37, sys.m(1), cplx(0.5, 0.25), F);
    cplx det = F[0][0] * F[1][1] - F[0][1] * F[1][0];
    CHECK(std::abs(det - 1.0) < 1e-12);
  }
}

TEST_CASE("exact factorization identity") {
  std::mt19937_64 rng(2024);
  for (unsigned seed = 1; seed <= 6; ++seed) {
    SelfReciprocalPoly p = random_instance(InstanceMode::OnCircleSimple, 2, seed);
    for (int i = 0; i < 10; ++i) {
      Rat x = make_rat(static_cast<long>(rng() % 201) - 100, 1 + static_cast<long>(rng() % 20));
      CHECK(factorization_identity(p, x));
    }
  }
  // m-sequence undefined: the factorization does not exist
  SelfReciprocalPoly sing(2, {Rat(4), Rat(-16), Rat(23)});
  CHECK_THROWS_AS(factorization_identity(sing, Rat(2)), not_applicable_error);
}

TEST_CASE("kernel identities") {
  std::mt19937_64 rng(90210);
  SelfReciprocalPoly p(2, {Rat(1), Rat(-1), Rat(2)});
  CanonicalSystem sys(p, 2.0);
  std::uniform_real_distribution<double> fa(0.0, 2.0 - 1e-6);
  for (int i = 0; i < 10; ++i) {
    double a1 = std::pow(2.0, fa(rng)), a2 = std::pow(2.0, fa(rng));
    cplx z = rand_z(rng), w = rand_z(rng);
    if (std::abs(z - std::conj(w)) < 1e-3) continue;
    // Hermitian symmetry
    CHECK(std::abs(sys.kernel_K(a1, z, w) - std::conj(sys.kernel_K(a1, w, z))) < 1e-10);
    // two-term integral identity for K(a1) - K(a2)
    CHECK(sys.kernel_identity_residual(a1, a2, z, w) < 1e-6);
  }
  // diagonal positivity; the diagonal decreases as a grows
  cplx z(0.5, 0.8);
  double prev = 1e300;
  for (double fr : {0.2, 0.7, 1.2, 1.7}) {
    double a = std::pow(2.0, fr);
    double d = sys.kernel_diag(a, z);
    CHECK(d > 0.0);
    CHECK(d < prev);
    prev = d;
  }
  CHECK_THROWS_AS(sys.kernel_K(1.5, cplx(0.3, 0.4), cplx(0.3, -0.4)), confluent_error);
}

TEST_CASE("omega objects") {
  SelfReciprocalPoly p(1, {Rat(1), Rat(2)});  // (x+1)^2: log-mode undefined
  CHECK(run_log(p).verdict == Verdict::Fails);
  for (double om : {0.25, 1.0, 3.0}) {
    OmegaFunctions f = omega_objects(p, 2.0, om);
    const CanonicalSystem& sys = f.system();
    REQUIRE(sys.defined_steps() == 2);
    CHECK(sys.all_m_positive());  // the omega Hamiltonian exists and is positive
    cplx z(0.7, 0.3);
    // E is the shifted A of the base functions
    ExpPolyFunctions base(p, 2.0);
    CHECK(std::abs(f.E(z) - base.A(z + cplx(0.0, om))) < 1e-12);
    CHECK(std::abs(f.A(z) - 0.5 * (f.E(z) + f.Esharp(z))) < 1e-12);
    // boundary value at a = 1
    auto [A1, B1] = sys.eval_AB(1.0, z);
    CHECK(rel(A1, f.A(z)) < 1e-9);
    CHECK(rel(B1, f.B(z)) < 1e-9);
  }
}

TEST_CASE("A_{q,omega} converges to A_q as omega -> 0") {
  SelfReciprocalPoly p(2, {Rat(1), Rat(1), Rat(1)});
  ExpPolyFunctions base(p, 2.0);
  cplx z(0.4, 0.1);
  double prev_a = -1.0, prev_b = -1.0;
  for (double om : {0.1, 0.05, 0.025}) {
    OmegaFunctions f = omega_objects(p, 2.0, om);
    double da = std::abs(f.A(z) - base.A(z));
    double db = std::abs(f.B(z) / om - base.B(z));
    if (prev_a > 0) {
      CHECK(da < 0.3 * prev_a);  // O(omega^2)
      CHECK(db < 0.3 * prev_b);
    }
    prev_a = da;
    prev_b = db;
  }
}
