#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "srpoly/ratfunc.hpp"
#include "srpoly/rational.hpp"
#include "srpoly/sturm.hpp"
#include "srpoly/unipoly.hpp"

using namespace srp;

TEST_CASE("make_rat canonicalizes where the raw two-arg ctor does not") {
  // mpq_class(44, 100) keeps 44/100 internally and breaks exact ==.
  Rat raw(44, 100);
  CHECK(raw.get_num() == 44);  // not reduced
  Rat r = make_rat(44, 100);
  CHECK(r.get_num() == 11);
  CHECK(r.get_den() == 25);
  CHECK(r == make_rat(11, 25));
  CHECK(make_rat(-44, 100) == make_rat(11, -25));
  CHECK_THROWS_AS(make_rat(1, 0), division_by_zero);
}

TEST_CASE("rational string round trip") {
  CHECK(rat_to_string(make_rat(3, 7)) == "3/7");
  CHECK(rat_to_string(Rat(-5)) == "-5");
  CHECK(rat_from_string("3/7") == make_rat(3, 7));
  CHECK(rat_from_string("-12/8") == make_rat(-3, 2));
  CHECK_THROWS_AS(rat_from_string("x"), parse_error);
  CHECK_THROWS_AS(rat_from_string("1/0"), parse_error);
}

TEST_CASE("GaussianRat field ops") {
  GaussianRat i{Rat(0), Rat(1)};
  CHECK(i * i == GaussianRat{Rat(-1), Rat(0)});
  GaussianRat z{make_rat(1, 2), make_rat(-3, 4)};
  CHECK(z * z.conj() == GaussianRat{z.norm(), Rat(0)});
  CHECK(z / z == GaussianRat{Rat(1), Rat(0)});
  CHECK_THROWS_AS(z / GaussianRat{}, division_by_zero);
}

TEST_CASE("unipoly basics") {
  UniPoly p({Rat(1), Rat(2), Rat(1)});  // (t+1)^2
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rat(3)) == Rat(16));
  CHECK(p.derivative() == UniPoly({Rat(2), Rat(2)}));
  CHECK(UniPoly({Rat(0), Rat(0)}).is_zero());
  CHECK(UniPoly::monomial(Rat(0), 5).is_zero());

  auto [q, r] = UniPoly::divmod(p, UniPoly({Rat(1), Rat(1)}));
  CHECK(q == UniPoly({Rat(1), Rat(1)}));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(UniPoly::divmod(p, UniPoly()), division_by_zero);
}

TEST_CASE("primitive_part and monic") {
  UniPoly p({make_rat(2, 3), make_rat(4, 3)});
  CHECK(p.primitive_part() == UniPoly({Rat(1), Rat(2)}));
  CHECK((-p).primitive_part() == UniPoly({Rat(1), Rat(2)}));  // sign forced positive
  CHECK(p.monic() == UniPoly({make_rat(1, 2), Rat(1)}));
}

// Reference rational-PRS gcd; the library gcd is modular and must agree.
static UniPoly prs_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.is_zero() ? UniPoly() : b.monic();
  if (b.is_zero()) return a.monic();
  UniPoly f = a, g = b;
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    UniPoly r = UniPoly::divmod(f, g).second;
    f = std::move(g);
    g = r.is_zero() ? UniPoly() : r.primitive_part();
  }
  return f.monic();
}

TEST_CASE("modular gcd agrees with a rational PRS on random inputs") {
  std::mt19937_64 rng(20260823);
  auto rand_poly = [&](int deg) {
    std::vector<Rat> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = make_rat(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 6));
    return UniPoly(std::move(c));
  };
  for (int trial = 0; trial < 60; ++trial) {
    UniPoly common = rand_poly(static_cast<int>(rng() % 4));
    UniPoly a = rand_poly(static_cast<int>(rng() % 6)) * common;
    UniPoly b = rand_poly(static_cast<int>(rng() % 6)) * common;
    UniPoly g1 = UniPoly::gcd(a, b);
    UniPoly g2 = prs_gcd(a, b);
    CHECK(g1 == g2);
    if (!a.is_zero() && !b.is_zero() && !common.is_zero()) {
      CHECK(UniPoly::divmod(a, g1).second.is_zero());
      CHECK(UniPoly::divmod(b, g1).second.is_zero());
    }
  }
  CHECK(UniPoly::gcd(UniPoly(), UniPoly()).is_zero());
  UniPoly p({Rat(2), Rat(4)});
  CHECK(UniPoly::gcd(p, UniPoly()) == p.monic());
}

TEST_CASE("rational function canonical form") {
  UniPoly t2m1({Rat(-1), Rat(0), Rat(1)});  // t^2 - 1
  UniPoly tm1({Rat(-1), Rat(1)});
  RationalFunction f(t2m1, tm1);
  CHECK(f == RationalFunction(UniPoly({Rat(1), Rat(1)})));  // reduced to t + 1
  RationalFunction g(UniPoly({Rat(2)}), UniPoly({Rat(0), Rat(4)}));
  CHECK(g.num() == UniPoly({make_rat(1, 2)}));  // den monic
  CHECK(g.den() == UniPoly({Rat(0), Rat(1)}));
}

TEST_CASE("rational function arithmetic and evaluation") {
  RationalFunction t = RationalFunction::t();
  RationalFunction f = (t * t - 1) / (t + 1);  // = t - 1
  CHECK(f == t - 1);
  CHECK(f.eval_at(Rat(5)) == Rat(4));
  RationalFunction h = RationalFunction(1) / (t - 1);
  CHECK_THROWS_AS(h.eval_at(Rat(1)), pole_error);
  CHECK(h.reciprocal() == t - 1);
  CHECK_THROWS_AS(RationalFunction(0).reciprocal(), division_by_zero);
  CHECK(f.eval_double(2.0) == doctest::Approx(1.0));
}

TEST_CASE("limit at one") {
  RationalFunction t = RationalFunction::t();
  auto l1 = ((t * t - 1) / (t - 1)).limit_at_one();
  CHECK(l1.finite);
  CHECK(l1.value == Rat(2));
  auto l2 = (RationalFunction(1) / ((t - 1) * (t - 1))).limit_at_one();
  CHECK_FALSE(l2.finite);
  CHECK(l2.inf_sign == 1);
  auto l3 = (RationalFunction(-1) / ((t - 1) * (t - 1))).limit_at_one();
  CHECK(l3.inf_sign == -1);
}

TEST_CASE("sturm count right of one") {
  // (t-2)(t-3): two roots right of 1
  CHECK(sturm_count_right_of_one(UniPoly({Rat(6), Rat(-5), Rat(1)})) == 2);
  // roots at 1 are excluded
  CHECK(sturm_count_right_of_one(UniPoly({Rat(-1), Rat(1)})) == 0);
  // multiple root counted once: (t-2)^2
  CHECK(sturm_count_right_of_one(UniPoly({Rat(4), Rat(-4), Rat(1)})) == 1);
  CHECK(sturm_count_right_of_one(UniPoly({Rat(7)})) == 0);
  CHECK_THROWS_AS(sturm_count_right_of_one(UniPoly()), zero_polynomial_error);
}

TEST_CASE("sturm chain sign regression") {
  // (t^2+1)(t^2+t+1)(t-1)(t+1)(t^2-t+1) has no roots right of 1; a chain
  // whose members get their leading sign flipped reports 2.
  UniPoly p = UniPoly({Rat(1), Rat(0), Rat(1)}) * UniPoly({Rat(1), Rat(1), Rat(1)}) *
              UniPoly({Rat(-1), Rat(1)}) * UniPoly({Rat(1), Rat(1)}) *
              UniPoly({Rat(1), Rat(-1), Rat(1)});
  CHECK(sturm_count_right_of_one(p) == 0);
}

TEST_CASE("sturm counts cross-checked against constructed root sets") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    UniPoly p({Rat(1)});
    int expect = 0;
    int nroots = 1 + static_cast<int>(rng() % 4);
    std::vector<Rat> used;
    for (int i = 0; i < nroots; ++i) {
      Rat root = make_rat(static_cast<long>(rng() % 13) - 6, 2);
      bool fresh = true;
      for (const Rat& u : used) fresh = fresh && u != root;
      used.push_back(root);
      p = p * UniPoly({-root, Rat(1)});
      if (fresh && root > 1) ++expect;
    }
    p = p * UniPoly({Rat(1), Rat(0), Rat(1)});  // plus a complex pair
    CHECK(sturm_count_right_of_one(p) == expect);
  }
}

TEST_CASE("positive on right ray") {
  RationalFunction t = RationalFunction::t();
  CHECK(positive_on_right_ray((t * t + 1) / (t * t - 1)));  // m_2g shape at g=1
  CHECK_FALSE(positive_on_right_ray(t - 2));                // sign change at 2
  CHECK_FALSE(positive_on_right_ray(1 / (t - 3)));          // pole right of 1
  CHECK_FALSE(positive_on_right_ray(RationalFunction(0)));
  CHECK(positive_on_right_ray(RationalFunction(make_rat(1, 7))));
  CHECK_FALSE(positive_on_right_ray(RationalFunction(Rat(-2))));
}
