#ifndef SRPOLY_STURM_HPP
#define SRPOLY_STURM_HPP

#include "srpoly/ratfunc.hpp"
#include "srpoly/unipoly.hpp"

namespace srp {

class zero_polynomial_error : public std::domain_error {
 public:
  zero_polynomial_error() : std::domain_error("zero polynomial") {}
};

// Number of distinct real roots of p in the open interval (1, +inf),
// decided exactly by a Sturm chain evaluated at t = 1 and t = +inf.
int sturm_count_right_of_one(const UniPoly& p);

// True iff f(t) is finite and strictly positive for every t in (1, inf):
// num*den has no root right of 1 and an interior sample is positive.
bool positive_on_right_ray(const RationalFunction& f);

}  // namespace srp

#endif
