#ifndef SRPOLY_CLOSED_FORMS_HPP
#define SRPOLY_CLOSED_FORMS_HPP

#include <vector>

#include "srpoly/criterion.hpp"

namespace srp {

// Printed closed forms of R_0..R_{2g}; available for g <= 3 only.
// Throws division_by_zero when a denominator vanishes for the given input
// and std::invalid_argument for g > 3.
std::vector<Rat> r_closed_form_coeffs(const SelfReciprocalPoly& p);

// Same values through the factor parameters lambda_1..lambda_g with
// P = c_0 prod (x^2 - 2 lambda_j x + 1); c_0 drops out.
std::vector<Rat> r_closed_form_lambdas(const std::vector<Rat>& lam);

}  // namespace srp

#endif
