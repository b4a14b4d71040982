#pragma once

#include <vector>

#include "skewspec/common.hpp"

namespace skewspec::specfun {

// Physicists' Hermite polynomial H_n, three-term recurrence
// H_{n+1} = 2 z H_n - 2 n H_{n-1}.
double hermite(int n, double x);
Complex hermite(int n, Complex z);

// Generalized Laguerre L_n^nu, recurrence
// (n+1) L_{n+1} = (2n+nu+1-z) L_n - (n+nu) L_{n-1}.
double laguerre(int n, int nu, double x);
Complex laguerre(int n, int nu, Complex z);

// Modified Bessel function of the second kind K_order(x), x > 0.
// Supported orders: nonnegative integers and half-odd integers (the weight
// functions only need order nu/2 with integer nu). Throws std::domain_error
// for x <= 0 or unsupported order.
double bessel_k(double order, double x);

// e^x K_order(x); safe against underflow of the e^{-x} envelope.
double bessel_k_scaled(double order, double x);

// Complementary error function. Thin wrapper so the whole weight layer goes
// through one audited surface.
double erfc(double x);

enum class PolyFamily { Hermite, Laguerre };

// Parameters of the rescaled polynomial families C_k.
//   Hermite:  C_k(z) = (tau/2)^{k/2} H_k(z / sqrt(2 tau)),   scale = sqrt(2 tau)
//   Laguerre: C_k(z) = (-1)^k (1-mu^2)^k k! L_k^nu(z/(1-mu^2)), scale = 1-mu^2
// Both are monic of degree k (the (-1)^k makes the odd Laguerre ones monic).
// They satisfy the scale-friendly recurrences
//   Hermite:  C_{k+1} = z C_k - tau k C_{k-1}
//   Laguerre: C_{k+1} = (z - a(2k+nu+1)) C_k - a^2 k (k+nu) C_{k-1},  a = scale
// which stay finite at tau = 0 (pure monomials).
struct PolyParams {
    PolyFamily family = PolyFamily::Hermite;
    int nu = 0;        // Laguerre index; ignored by Hermite
    double scale = 1;  // see above

    static PolyParams hermite_family(double tau);
    static PolyParams laguerre_family(int nu, double mu);

    double tau() const { return 0.5 * scale * scale; }
    void validate() const;
};

// Monic rescaled polynomial C_k(z).
Complex c_poly(const PolyParams& params, int k, Complex z);
double c_poly(const PolyParams& params, int k, double x);

// C_0(z) .. C_kmax(z) in one recurrence sweep.
std::vector<Complex> c_poly_all(const PolyParams& params, int kmax, Complex z);
std::vector<double> c_poly_all(const PolyParams& params, int kmax, double x);

}  // namespace skewspec::specfun
