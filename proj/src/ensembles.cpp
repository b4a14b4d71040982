#include "skewspec/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace skewspec::ensembles {

void EnsembleSpec::validate() const {
    if (n < 1) throw ValidationError("EnsembleSpec: n must be >= 1");
    if (nf < 0) throw ValidationError("EnsembleSpec: nf must be >= 0");
    if (int(masses.size()) != nf) throw ValidationError("EnsembleSpec: masses length must equal nf");
    for (double m : masses)
        if (!(m > 0)) throw ValidationError("EnsembleSpec: masses must be positive");
    if (model == Model::Chiral) {
        if (nu < 0) throw ValidationError("EnsembleSpec: nu must be >= 0");
        if (!(mu > 0.0) || mu > 1.0) throw ValidationError("EnsembleSpec: mu must lie in (0,1]");
    } else {
        if (!(tau >= 0.0) || !(tau < 1.0)) throw ValidationError("EnsembleSpec: tau must lie in [0,1)");
    }
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> sample_chiral(const EnsembleSpec& spec, StreamRng& rng) {
    spec.validate();
    if (spec.model != Model::Chiral) throw ValidationError("sample_chiral: spec.model must be Chiral");
    const int rows = spec.n, cols = spec.n + spec.nu;
    Eigen::MatrixXd a(rows, cols), b(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            double p = rng.normal();
            double q = rng.normal();
            a(i, j) = p + spec.mu * q;
            b(i, j) = p - spec.mu * q;
        }
    return {a, b};
}

Eigen::MatrixXd sample_ginibre(const EnsembleSpec& spec, StreamRng& rng) {
    spec.validate();
    if (spec.model != Model::Ginibre) throw ValidationError("sample_ginibre: spec.model must be Ginibre");
    const int n = spec.n;
    const double gamma = std::sqrt((1.0 - spec.tau) / (1.0 + spec.tau));
    const double sd_diag = std::sqrt(1.0 + spec.tau);
    const double sd_off = std::sqrt(0.5 * (1.0 + spec.tau));
    Eigen::MatrixXd j(n, n);
    for (int i = 0; i < n; ++i) {
        j(i, i) = sd_diag * rng.normal();
        for (int k = i + 1; k < n; ++k) {
            double s = sd_off * rng.normal();
            double a = sd_off * rng.normal();
            j(i, k) = s + gamma * a;
            j(k, i) = s - gamma * a;
        }
    }
    return j;
}

Eigen::MatrixXd chiral_z_matrix(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ValidationError("chiral_z_matrix: A and B must have equal shapes");
    return a * b.transpose();
}

Spectrum classify_spectrum(const std::vector<Complex>& eigs, double tol_scale, int zero_modes) {
    if (!(tol_scale > 0)) throw ValidationError("classify_spectrum: tol_scale must be > 0");
    Spectrum s;
    s.zero_modes = zero_modes;
    std::vector<Complex> up, down;
    for (const Complex& z : eigs) {
        if (std::abs(z.imag()) <= tol_scale * (1.0 + std::abs(z))) {
            s.real_eigs.push_back(z.real());
        } else if (z.imag() > 0) {
            up.push_back(z);
        } else {
            down.push_back(z);
        }
    }
    if (up.size() != down.size()) {
        std::ostringstream os;
        os << "classify_spectrum: unpaired complex eigenvalues (" << up.size() << " upper vs "
           << down.size() << " lower); tolerance too small?";
        throw ValidationError(os.str());
    }
    auto lex = [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return std::abs(a.imag()) < std::abs(b.imag());
    };
    std::sort(up.begin(), up.end(), lex);
    std::sort(down.begin(), down.end(), lex);
    for (size_t k = 0; k < up.size(); ++k) {
        Complex z = up[k], zc = std::conj(down[k]);
        if (std::abs(z - zc) > 1e3 * tol_scale * (1.0 + std::abs(z))) {
            std::ostringstream os;
            os << "classify_spectrum: conjugate matching failed: " << z.real() << "+" << z.imag()
               << "i vs partner " << down[k].real() << down[k].imag() << "i";
            throw ValidationError(os.str());
        }
        s.pair_reps.push_back(0.5 * (z + zc));
    }
    std::sort(s.real_eigs.begin(), s.real_eigs.end());
    std::sort(s.pair_reps.begin(), s.pair_reps.end(), lex);
    return s;
}

}  // namespace skewspec::ensembles
