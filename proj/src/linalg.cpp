#include "skewspec/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace skewspec::linalg {

Complex pfaffian(Eigen::MatrixXcd a, double skew_tol) {
    const auto n = a.rows();
    if (n != a.cols()) throw ValidationError("pfaffian: matrix must be square");
    if (n % 2 != 0) throw ValidationError("pfaffian: dimension must be even");
    if (n == 0) return Complex(1.0);

    double scale = a.cwiseAbs().maxCoeff();
    if (scale > 0) {
        double dev = (a + a.transpose()).cwiseAbs().maxCoeff();
        if (dev > skew_tol * scale * double(n)) {
            std::ostringstream os;
            os << "pfaffian: input is not skew-symmetric (|A+A^T|max = " << dev
               << ", scale = " << scale << ")";
            throw ValidationError(os.str());
        }
    }
    a = 0.5 * (a - a.transpose().eval());

    Complex pf(1.0);
    for (Eigen::Index k = 0; k + 1 < n; k += 2) {
        // pivot: largest |A(i,k)| for i > k
        Eigen::Index p = k + 1;
        double best = std::abs(a(k + 1, k));
        for (Eigen::Index i = k + 2; i < n; ++i) {
            double v = std::abs(a(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best == 0.0) return Complex(0.0);
        if (p != k + 1) {
            a.row(p).swap(a.row(k + 1));
            a.col(p).swap(a.col(k + 1));
            pf = -pf;
        }
        pf *= a(k, k + 1);
        Complex inv = 1.0 / a(k + 1, k);
        for (Eigen::Index i = k + 2; i < n; ++i) {
            Complex t = a(i, k) * inv;
            if (t == Complex(0.0)) continue;
            a.row(i) -= t * a.row(k + 1);
            a.col(i) -= t * a.col(k + 1);
        }
    }
    return pf;
}

double pfaffian(const Eigen::MatrixXd& a, double skew_tol) {
    return pfaffian(Eigen::MatrixXcd(a.cast<Complex>()), skew_tol).real();
}

std::vector<Complex> eigenvalues_real_matrix(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw ValidationError("eigenvalues_real_matrix: matrix must be square");
    if (!m.allFinite()) throw ValidationError("eigenvalues_real_matrix: non-finite entries");
    if (m.rows() == 0) return {};
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        std::ostringstream os;
        os << "eigenvalues_real_matrix: QR iteration failed to converge (dim = " << m.rows()
           << ", |M| = " << m.norm() << ", |M - M^T| = " << (m - m.transpose()).norm() << ")";
        throw NumericError(os.str());
    }
    std::vector<Complex> eigs(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) eigs[size_t(i)] = solver.eigenvalues()[i];

    // Enforce exact conjugation closure: pair each Im>0 eigenvalue with its
    // nearest Im<0 partner and replace both by the symmetrized pair.
    std::vector<size_t> up, down;
    for (size_t i = 0; i < eigs.size(); ++i) {
        if (eigs[i].imag() > 0)
            up.push_back(i);
        else if (eigs[i].imag() < 0)
            down.push_back(i);
    }
    auto by_re = [&](size_t i, size_t j) {
        if (eigs[i].real() != eigs[j].real()) return eigs[i].real() < eigs[j].real();
        return std::abs(eigs[i].imag()) < std::abs(eigs[j].imag());
    };
    std::sort(up.begin(), up.end(), by_re);
    std::sort(down.begin(), down.end(), by_re);
    size_t npair = std::min(up.size(), down.size());
    for (size_t k = 0; k < npair; ++k) {
        Complex z = 0.5 * (eigs[up[k]] + std::conj(eigs[down[k]]));
        eigs[up[k]] = z;
        eigs[down[k]] = std::conj(z);
    }
    // leftover unpaired complex values (rounding artifacts) collapse to real
    if (up.size() > npair)
        for (size_t k = npair; k < up.size(); ++k) eigs[up[k]] = Complex(eigs[up[k]].real(), 0.0);
    if (down.size() > npair)
        for (size_t k = npair; k < down.size(); ++k)
            eigs[down[k]] = Complex(eigs[down[k]].real(), 0.0);
    return eigs;
}

Complex vandermonde(std::span<const Complex> pts) {
    Complex prod(1.0);
    for (size_t k = 1; k < pts.size(); ++k)
        for (size_t l = 0; l < k; ++l) prod *= pts[k] - pts[l];
    return prod;
}

Complex modified_vandermonde(std::span<const Complex> pts) {
    const auto n = Eigen::Index(pts.size());
    if (n == 0) return Complex(1.0);
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index b = 0; b < n; ++b) {
        Complex z = pts[size_t(b)];
        Complex pw(1.0);
        for (Eigen::Index a = 0; a < n - 1; ++a) {
            m(a, b) = pw;
            pw *= z;
        }
        m(n - 1, b) = pw * z;  // power n, skipping n-1
    }
    return Eigen::FullPivLU<Eigen::MatrixXcd>(m).determinant();
}

}  // namespace skewspec::linalg
