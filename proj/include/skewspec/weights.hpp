#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "skewspec/ensembles.hpp"
#include "skewspec/quadrature.hpp"

namespace skewspec::weights {

// Which polynomial factor multiplies the weights when masses are switched on.
//   PlusMSquared:  chiral (x + m^2),  Ginibre (x^2 + m^2)
//   MinusMSquared: (m^2 - x) for both, i.e. per-eigenvalue insertion of
//                  det(m^2 - .), the convention the massive Pfaffian formulas
//                  are written in. The verification suite selects the one
//                  under which the massive SOP come out skew-orthogonal.
enum class MassSign { PlusMSquared, MinusMSquared };

struct WeightSpec {
    ensembles::EnsembleSpec ensemble;
    bool include_masses = false;
    MassSign mass_sign = MassSign::MinusMSquared;

    void validate() const;
};

// Real-eigenvalue weight h(x).
//   chiral:  2 |x|^{nu/2} K_{nu/2}(eta_+ |x|) exp(eta_- x) * mass factors
//            (throws std::domain_error at the x = 0 singular point)
//   Ginibre: exp(-x^2 / (2(1+tau))) * mass factors
double weight_h(const WeightSpec& w, double x);

// Complex-pair weight g(z, z*), Im z > 0.
//   Ginibre: exp(-(z^2+z*^2)/(2(1+tau))) erfc(|z-z*| / sqrt(2(1-tau^2)))
//   chiral:  2 |z z*|^{nu/2} exp(eta_-(z+z*)) *
//            int_0^inf dt/t exp[-eta_+^2 t (z^2+z*^2) - 1/(4t)]
//                          K_{nu/2}(2 eta_+^2 t z z*) erfc(eta_+ sqrt(t)|z*-z|)
//   evaluated on the log axis t = e^s with adaptive panels inside a scanned
//   bracket; all exponentials are combined before exponentiation.
double weight_g(const WeightSpec& w, Complex z, double inner_rel_tol = 1e-10);

// The two-term split of the antisymmetric measure F (metadata only).
struct FSplitInfo {
    struct Term {
        std::string name;
        std::string formula;
    };
    std::vector<Term> terms;
    std::string beta4_note;
};
FSplitInfo measure_F_split(const WeightSpec& w);

// Truncation domain for the skew-product integrals, chosen by scanning the
// weight (times a growth allowance for polynomial integrands of degree
// max_degree) until it falls below 1e-16 of its peak.
struct Domain {
    double x_lo = 0, x_hi = 0;  // real line
    double y_hi = 0;            // half-plane height
    std::vector<double> x_seed_edges;
    std::vector<double> y_seed_edges;
};
Domain weight_domain(const WeightSpec& w, int max_degree, const quad::QuadratureSpec& q);

// A family of functions evaluated together at one point (so kernel/Gram
// integrands share the weight evaluation).
struct PairBasis {
    int count = 0;
    std::function<void(Complex, std::span<Complex>)> eval_all;
};

// Antisymmetric Gram matrix G_ij = <f_i | f_j> of the basis under the skew
// product; reduction of the measure F:
//   <f|g> = iint_{x1<x2} h(x1)h(x2) [f(x1)g(x2) - f(x2)g(x1)]
//         + 2i int_{Im z>0} g(z,z*) [f(z)g(z*) - f(z*)g(z)] d^2z
Eigen::MatrixXcd skew_gram(const PairBasis& basis, const WeightSpec& w,
                           const quad::QuadratureSpec& q, int max_degree_hint = -1);

// Single skew product of two functions.
Complex skew_product(const std::function<Complex(Complex)>& f,
                     const std::function<Complex(Complex)>& g, const WeightSpec& w,
                     const quad::QuadratureSpec& q, int max_degree_hint = -1);

// Monomial moment matrix M_ab = <z^a | z^b>, a,b = 0..max_deg.
Eigen::MatrixXcd monomial_moments(int max_deg, const WeightSpec& w, const quad::QuadratureSpec& q);

}  // namespace skewspec::weights
