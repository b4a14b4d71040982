#pragma once

#include <gmpxx.h>

#include <vector>

#include "skewspec/specfun.hpp"

// Exact rational polynomial arithmetic. Coefficient-level statements
// (monicity, derivative identities, kernel read-off) are asserted here rather
// than in floating point, where leading-coefficient tests are meaningless.
namespace skewspec::ratpoly {

using Rat = mpq_class;
using Poly = std::vector<Rat>;  // coeffs[i] * z^i

int degree(const Poly& p);
Rat leading(const Poly& p);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rat& s);
Poly mul(const Poly& a, const Poly& b);
Poly derivative(const Poly& p);
Rat eval(const Poly& p, const Rat& x);
double eval_double(const Poly& p, double x);

// Exact coefficient vectors by recurrence on coefficients.
Poly hermite_coeffs(int n);
Poly laguerre_coeffs(int n, int nu);

// Rational family parameters: param = tau for Hermite, mu^2 for Laguerre.
struct RatParams {
    specfun::PolyFamily family;
    int nu;
    Rat param;

    Rat alpha() const { return family == specfun::PolyFamily::Hermite ? param : Rat(1) - param; }
};

// Monic C_k coefficients (same normalization as specfun::c_poly).
Poly c_poly_coeffs(const RatParams& p, int k);

// Skew-orthogonal polynomial q_k coefficients, arbitrary odd constant c.
Poly q_coeffs(const RatParams& p, int k, const Rat& c);

// h_n / h_k as an exact rational (the sqrt(2pi)/8pi prefactors cancel).
Rat norm_ratio(const RatParams& p, int n, int k);

}  // namespace skewspec::ratpoly
