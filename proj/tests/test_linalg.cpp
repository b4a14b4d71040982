#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "skewspec/linalg.hpp"
#include "skewspec/rng.hpp"

using namespace skewspec;
namespace la = skewspec::linalg;

namespace {

// Pfaffian by cofactor expansion along the first row (exponential; oracle for
// small dimensions only, independent of the elimination path).
Complex pfaffian_cofactor(const Eigen::MatrixXcd& a) {
    const auto n = a.rows();
    if (n == 0) return Complex(1);
    if (n % 2) return Complex(0);
    if (n == 2) return a(0, 1);
    Complex sum(0);
    for (Eigen::Index j = 1; j < n; ++j) {
        Eigen::MatrixXcd sub(n - 2, n - 2);
        Eigen::Index r = 0;
        for (Eigen::Index i = 1; i < n; ++i) {
            if (i == j) continue;
            Eigen::Index c = 0;
            for (Eigen::Index k = 1; k < n; ++k) {
                if (k == j) continue;
                sub(r, c++) = a(i, k);
            }
            ++r;
        }
        double sign = (j % 2 == 1) ? 1.0 : -1.0;
        sum += sign * a(0, j) * pfaffian_cofactor(sub);
    }
    return sum;
}

Eigen::MatrixXcd random_skew(int n, StreamRng& rng) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Complex v(rng.normal(), rng.normal());
            a(i, j) = v;
            a(j, i) = -v;
        }
    return a;
}

// characteristic polynomial coefficients by Faddeev-LeVerrier, then roots of
// the companion matrix
std::vector<Complex> companion_roots(const Eigen::MatrixXd& m) {
    const int n = int(m.rows());
    std::vector<double> c(size_t(n) + 1, 0.0);  // p(z) = z^n + c[n-1] z^{n-1} + ... + c[0]
    Eigen::MatrixXd mk = Eigen::MatrixXd::Identity(n, n);
    c[size_t(n)] = 1.0;
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        double ck = -mk.trace() / k;
        c[size_t(n - k)] = ck;
        mk += ck * Eigen::MatrixXd::Identity(n, n);
    }
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[size_t(i)];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    std::vector<Complex> out(size_t(n), Complex(0));
    for (int i = 0; i < n; ++i) out[size_t(i)] = es.eigenvalues()[i];
    return out;
}

double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
    // greedy nearest matching; fine for well-separated spectra
    double worst = 0;
    for (const Complex& x : a) {
        double best = 1e300;
        size_t arg = 0;
        for (size_t i = 0; i < b.size(); ++i)
            if (std::abs(x - b[i]) < best) {
                best = std::abs(x - b[i]);
                arg = i;
            }
        worst = std::max(worst, best);
        b.erase(b.begin() + long(arg));
    }
    return worst;
}

}  // namespace

TEST_CASE("pfaffian sign convention: Pf of epsilon blocks") {
    Eigen::MatrixXd e2(2, 2);
    e2 << 0, 1, -1, 0;
    CHECK(la::pfaffian(e2) == doctest::Approx(1.0));

    Eigen::MatrixXd blk = Eigen::MatrixXd::Zero(4, 4);
    double h0 = 2.5, h1 = -0.7;
    blk(0, 1) = h0;
    blk(1, 0) = -h0;
    blk(2, 3) = h1;
    blk(3, 2) = -h1;
    CHECK(la::pfaffian(blk) == doctest::Approx(h0 * h1));
}

TEST_CASE("pfaffian 4x4 cofactor formula af - be + cd") {
    double a = 1.3, b = -0.2, c = 2.1, d = 0.7, e = -1.9, f = 0.5;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
    m(0, 1) = a;
    m(0, 2) = b;
    m(0, 3) = c;
    m(1, 2) = d;
    m(1, 3) = e;
    m(2, 3) = f;
    m -= Eigen::MatrixXd(m.transpose());
    CHECK(la::pfaffian(m) == doctest::Approx(a * f - b * e + c * d).epsilon(1e-13));
}

TEST_CASE("pfaffian validation errors") {
    CHECK_THROWS_AS(la::pfaffian(Eigen::MatrixXd(Eigen::MatrixXd::Zero(3, 3))), ValidationError);
    Eigen::MatrixXd notskew(2, 2);
    notskew << 0.5, 1.0, -1.0, 0.0;
    CHECK_THROWS_AS(la::pfaffian(notskew), ValidationError);
    CHECK(la::pfaffian(Eigen::MatrixXd(Eigen::MatrixXd::Zero(0, 0))) == doctest::Approx(1.0));
}

TEST_CASE("pfaffian vs cofactor-expansion oracle, complex, dims 2-8") {
    StreamRng rng(41);
    for (int n : {2, 4, 6, 8})
        for (int rep = 0; rep < 5; ++rep) {
            auto a = random_skew(n, rng);
            Complex got = la::pfaffian(a);
            Complex want = pfaffian_cofactor(a);
            CHECK(std::abs(got - want) < 1e-10 * std::max(1.0, std::abs(want)));
        }
}

TEST_CASE("pfaffian(A)^2 = det(A) on 200 random skew matrices, dims 2-10") {
    StreamRng rng(7);
    int count = 0;
    while (count < 200) {
        for (int n = 2; n <= 10 && count < 200; n += 2, ++count) {
            auto a = random_skew(n, rng);
            Complex pf = la::pfaffian(a);
            Complex det = a.determinant();
            CHECK(std::abs(pf * pf - det) <= 1e-9 * std::max(1.0, std::abs(det)));
        }
    }
}

TEST_CASE("pfaffian(B A B^T) = det(B) pfaffian(A), dims 2-8") {
    StreamRng rng(11);
    for (int n : {2, 4, 6, 8})
        for (int rep = 0; rep < 6; ++rep) {
            auto a = random_skew(n, rng);
            Eigen::MatrixXcd b(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) b(i, j) = Complex(rng.normal(), rng.normal());
            Eigen::MatrixXcd bab = b * a * b.transpose();
            bab = 0.5 * (bab - bab.transpose().eval());
            Complex lhs = la::pfaffian(bab);
            Complex rhs = b.determinant() * la::pfaffian(a);
            CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
        }
}

TEST_CASE("eigenvalues: fixed small cases") {
    Eigen::MatrixXd rot(2, 2);
    rot << 0, 1, -1, 0;
    auto ev = la::eigenvalues_real_matrix(rot);
    REQUIRE(ev.size() == 2);
    double found_up = 0, found_dn = 0;
    for (auto& z : ev) {
        if (z.imag() > 0) found_up = std::abs(z - Complex(0, 1));
        if (z.imag() < 0) found_dn = std::abs(z - Complex(0, -1));
    }
    CHECK(found_up < 1e-14);
    CHECK(found_dn < 1e-14);

    Eigen::MatrixXd diag(2, 2);
    diag << 2, 0, 0, 3;
    auto ev2 = la::eigenvalues_real_matrix(diag);
    CHECK(multiset_distance(ev2, {Complex(2), Complex(3)}) < 1e-14);
}

TEST_CASE("eigenvalues vs companion-matrix oracle, random 6x6, fixed seed") {
    StreamRng rng(2024);
    Eigen::MatrixXd m(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m(i, j) = rng.normal();
    auto got = la::eigenvalues_real_matrix(m);
    auto want = companion_roots(m);
    CHECK(multiset_distance(got, want) < 1e-8);
}

TEST_CASE("eigenvalue multiset exactly conjugation-closed after symmetrization") {
    StreamRng rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        Eigen::MatrixXd m(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) m(i, j) = rng.normal();
        auto ev = la::eigenvalues_real_matrix(m);
        for (const Complex& z : ev) {
            if (z.imag() == 0.0) continue;
            bool found = false;
            for (const Complex& w : ev)
                if (w == std::conj(z)) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("vandermonde: small cases") {
    std::vector<Complex> one{Complex(3.2)};
    CHECK(la::vandermonde(one) == Complex(1));
    std::vector<Complex> two{Complex(1), Complex(3)};
    CHECK(la::vandermonde(two) == Complex(2));
    std::vector<Complex> three{Complex(1), Complex(2), Complex(4)};
    CHECK(la::vandermonde(three) == Complex(6));
}

TEST_CASE("modified vandermonde: determinant form and (sum z) Delta identity") {
    std::vector<Complex> two{Complex(1), Complex(2)};
    CHECK(std::abs(la::modified_vandermonde(two) - Complex(3)) < 1e-13);

    StreamRng rng(9);
    for (int n = 2; n <= 8; ++n) {
        std::vector<Complex> pts(size_t(n), Complex(0));
        Complex s(0);
        for (auto& z : pts) {
            z = Complex(rng.normal(), rng.normal());
            s += z;
        }
        Complex det = la::modified_vandermonde(pts);
        Complex id = s * la::vandermonde(pts);
        CHECK(std::abs(det - id) <= 1e-10 * std::max(1.0, std::abs(id)));
    }
}

TEST_CASE("Berezinian identity: det[{z^b} | 1/(kappa - z)] = Delta / prod(kappa - z)") {
    StreamRng rng(13);
    for (int n = 1; n <= 3; ++n) {
        const int dim = 2 * n;
        std::vector<Complex> z(size_t(dim), Complex(0));
        double maxabs = 0;
        for (auto& p : z) {
            p = Complex(rng.normal(), rng.normal());
            maxabs = std::max(maxabs, std::abs(p));
        }
        Complex kappa = Complex(2.5 * maxabs + 1.0, 1.3 * maxabs);
        Eigen::MatrixXcd m(dim, dim);
        for (int a = 0; a < dim; ++a) {
            Complex pw(1);
            for (int b = 0; b < dim - 1; ++b) {
                m(a, b) = pw;
                pw *= z[size_t(a)];
            }
            m(a, dim - 1) = 1.0 / (kappa - z[size_t(a)]);
        }
        Complex lhs = Eigen::FullPivLU<Eigen::MatrixXcd>(m).determinant();
        Complex rhs = la::vandermonde(z);
        for (auto& p : z) rhs /= (kappa - p);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1e-12, std::abs(rhs)));
    }
}

TEST_CASE("Cauchy-type identity for the modified Vandermonde (power 2n+1 column)") {
    StreamRng rng(17);
    for (int n = 1; n <= 2; ++n) {
        const int dim = 2 * n + 2;
        std::vector<Complex> z(size_t(dim), Complex(0));
        double maxabs = 0;
        Complex sum(0);
        for (auto& p : z) {
            p = Complex(rng.normal(), rng.normal());
            maxabs = std::max(maxabs, std::abs(p));
            sum += p;
        }
        Complex kappa = Complex(-2.2 * maxabs - 0.5, 2.0 * maxabs + 0.3);
        Eigen::MatrixXcd m(dim, dim);
        for (int a = 0; a < dim; ++a) {
            Complex pw(1);
            for (int b = 0; b < dim - 2; ++b) {
                m(a, b) = pw;
                pw *= z[size_t(a)];
            }
            m(a, dim - 2) = pw * z[size_t(a)];  // power 2n+1 (skipping 2n)
            m(a, dim - 1) = 1.0 / (kappa - z[size_t(a)]);
        }
        Complex lhs = Eigen::FullPivLU<Eigen::MatrixXcd>(m).determinant();
        Complex rhs = (sum - kappa) * la::vandermonde(z);
        for (auto& p : z) rhs /= (kappa - p);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1e-12, std::abs(rhs)));
    }
}
