#pragma once

#include <vector>

#include "skewspec/specfun.hpp"
#include "skewspec/weights.hpp"

namespace skewspec::sop {

// Quenched skew-orthogonal polynomial family. Monic, q_0 = 1, q_1 = z + c;
// the arbitrary constant c multiplies the even polynomial inside each odd one
// and cancels identically in the kernel.
struct SkewPolyFamily {
    specfun::PolyParams params;
    double c = 0.0;

    static SkewPolyFamily hermite(double tau, double c = 0.0);
    static SkewPolyFamily laguerre(int nu, double mu, double c = 0.0);
    static SkewPolyFamily for_ensemble(const ensembles::EnsembleSpec& spec, double c = 0.0);

    double tau() const { return params.tau(); }
    double musq() const { return 1.0 - params.scale; }

    Complex q(int k, Complex z) const;
    std::vector<Complex> q_all(int kmax, Complex z) const;

    // Skew norms h_k:
    //   Hermite:  2 (tau+1) sqrt(2 pi) (2k)!
    //   Laguerre: 8 pi (4 mu^2) (2k)! (2k+nu)! (1+mu^2)^{4k+nu+1}
    double norm_h(int k) const;

    // K_{2N}(z1,z2) = sum_{k<N} [q_{2k+1}(z1) q_{2k}(z2) - (z1<->z2)] / h_k.
    // Odd n_eigs unsupported (odd-count kernels carry an extra correction).
    Complex kernel(int n_eigs, Complex z1, Complex z2) const;

    // <det(z-J) det(u-J)>_{n_eigs}: closed double sums, evaluated through the
    // rescaled C_k so nothing blows up at small tau / small 1-mu^2.
    Complex expect_two_dets(int n_eigs, Complex z, Complex u) const;
};

// t_n(kappa) = <q_n | 1/(kappa - z)>; kappa must stay clear of the truncated
// integration support (throws std::domain_error otherwise).
Complex cauchy_transform(const SkewPolyFamily& family, int n, Complex kappa,
                         const weights::WeightSpec& w, const quad::QuadratureSpec& q);

}  // namespace skewspec::sop
