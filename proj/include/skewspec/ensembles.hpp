#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "skewspec/common.hpp"
#include "skewspec/rng.hpp"

namespace skewspec::ensembles {

enum class Model { Chiral, Ginibre };

struct EnsembleSpec {
    Model model = Model::Ginibre;
    int n = 1;                   // N
    int nu = 0;                  // chiral zero modes
    double mu = 0.5;             // chiral non-Hermiticity, (0,1] for sampling
    double tau = 0.0;            // Ginibre non-Hermiticity, [0,1)
    int nf = 0;                  // flavour count
    std::vector<double> masses;  // nf masses m_f > 0

    double eta_plus() const { return (1.0 + mu * mu) / (4.0 * mu * mu); }
    double eta_minus() const { return (1.0 - mu * mu) / (4.0 * mu * mu); }

    void validate() const;
};

// Classified eigenvalue set: ordered real eigenvalues plus upper-half-plane
// representatives of conjugate pairs.
struct Spectrum {
    std::vector<double> real_eigs;    // ascending
    std::vector<Complex> pair_reps;   // Im > 0, ascending in Re
    int zero_modes = 0;
};

// Chiral sampling: P, Q with i.i.d. standard normal entries, A = P + mu Q,
// B = P - mu Q. This realizes the density
//   exp[-1/2 eta_+ Tr(AA^T + BB^T) + eta_- Tr(AB^T)],
// since Tr(PP^T)+Tr(QQ^T) = eta_+ Tr(AA^T+BB^T) - 2 eta_- Tr(AB^T).
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> sample_chiral(const EnsembleSpec& spec, StreamRng& rng);

// Ginibre sampling: J = S + A sqrt((1-tau)/(1+tau)) with S symmetric,
// A antisymmetric, S_ii ~ N(0, 1+tau), S_ij, A_ij ~ N(0, (1+tau)/2) for i<j.
// Resulting moments: Var(J_ij) = 1 off-diagonal, Cov(J_ij, J_ji) = tau,
// Var(J_ii) = 1+tau, i.e. density ∝ exp[-Tr(JJ^T - tau J^2)/(2(1-tau^2))].
Eigen::MatrixXd sample_ginibre(const EnsembleSpec& spec, StreamRng& rng);

// C = A B^T; its eigenvalues are the z_j (squared Dirac eigenvalues).
Eigen::MatrixXd chiral_z_matrix(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

// Split a conjugation-closed eigenvalue multiset into real eigenvalues and
// upper-half-plane pair representatives. An eigenvalue is real iff
// |Im| <= tol_scale * (1 + |lambda|). Throws ValidationError if the complex
// remainder cannot be matched into conjugate pairs.
Spectrum classify_spectrum(const std::vector<Complex>& eigs, double tol_scale = 1e-9,
                           int zero_modes = 0);

}  // namespace skewspec::ensembles
