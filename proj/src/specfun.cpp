#include "skewspec/specfun.hpp"

#include <cmath>
#include <limits>

namespace skewspec::specfun {

namespace {

template <class T>
T hermite_impl(int n, T z) {
    if (n <= 0) return T(1);
    T hm = T(1);
    T h = 2.0 * z;
    for (int k = 1; k < n; ++k) {
        T hn = 2.0 * z * h - 2.0 * double(k) * hm;
        hm = h;
        h = hn;
    }
    return h;
}

template <class T>
T laguerre_impl(int n, int nu, T z) {
    if (n <= 0) return T(1);
    T lm = T(1);
    T l = double(nu + 1) - z;
    for (int k = 1; k < n; ++k) {
        T ln = ((double(2 * k + nu + 1) - z) * l - double(k + nu) * lm) / double(k + 1);
        lm = l;
        l = ln;
    }
    return l;
}

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// I_0, I_1 power series; used only for x <= 8 where they converge quickly.
double bessel_i0_series(double x) {
    double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (double(k) * double(k));
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum;
}

double bessel_i1_series(double x) {
    double q = 0.25 * x * x;
    double term = 0.5 * x, sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (double(k) * double(k + 1));
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-18) break;
    }
    return sum;
}

// Power series for K_0 and K_1 (accurate for x <= 8; the log-I cancellation
// costs ~e^{2x} in significance, which is why the crossover sits at 8).
double k0_series(double x) {
    double lg = std::log(0.5 * x);
    double q = 0.25 * x * x;
    double term = 1.0, h = 0.0, sum = 0.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (double(k) * double(k));
        h += 1.0 / double(k);
        sum += term * h;
        if (term * h < std::abs(sum) * 1e-18 && k > 3) break;
    }
    return -(lg + kEulerGamma) * bessel_i0_series(x) + sum;
}

double k1_series(double x) {
    double lg = std::log(0.5 * x);
    double q = 0.25 * x * x;
    // sum_{k>=0} [h_k + h_{k+1} - 2 gamma] q^k / (k! (k+1)!)  with psi folded in
    double term = 1.0;  // q^k / (k!(k+1)!)
    double hk = 0.0, hk1 = 1.0;
    double sum = (hk + hk1 - 2.0 * kEulerGamma) * term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (double(k) * double(k + 1));
        hk += 1.0 / double(k);
        hk1 += 1.0 / double(k + 1);
        double add = (hk + hk1 - 2.0 * kEulerGamma) * term;
        sum += add;
        if (std::abs(add) < std::abs(sum) * 1e-18 && k > 3) break;
    }
    return 1.0 / x + lg * bessel_i1_series(x) - 0.25 * x * sum;
}

// Scaled asymptotic e^x K_m(x) = sqrt(pi/2x) sum_k a_k, a_0 = 1,
// a_k = a_{k-1} (4m^2 - (2k-1)^2) / (8kx). Truncated at the smallest term.
double k_asymptotic_scaled(int m, double x) {
    double mu4 = 4.0 * double(m) * double(m);
    double term = 1.0, sum = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k < 60; ++k) {
        double odd = 2.0 * k - 1.0;
        term *= (mu4 - odd * odd) / (8.0 * double(k) * x);
        if (std::abs(term) >= prev) break;  // divergent tail reached
        sum += term;
        prev = std::abs(term);
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return std::sqrt(kPi / (2.0 * x)) * sum;
}

// e^x K_m(x) for integer m >= 0: series below the crossover, asymptotic
// above, upward recurrence K_{j+1} = K_{j-1} + (2j/x) K_j (stable for K).
double k_integer_scaled(int m, double x) {
    constexpr double crossover = 8.0;
    double k0, k1;
    if (x < crossover) {
        double ex = std::exp(x);
        k0 = k0_series(x) * ex;
        k1 = k1_series(x) * ex;
    } else {
        k0 = k_asymptotic_scaled(0, x);
        k1 = k_asymptotic_scaled(1, x);
    }
    if (m == 0) return k0;
    if (m == 1) return k1;
    double km = k0, k = k1;
    for (int j = 1; j < m; ++j) {
        double kn = km + (2.0 * double(j) / x) * k;
        km = k;
        k = kn;
    }
    return k;
}

// e^x K_{n+1/2}(x) = sqrt(pi/2x) sum_{k<=n} (n+k)!/(k!(n-k)!) (2x)^{-k}, exact.
double k_half_integer_scaled(int n, double x) {
    double sum = 1.0, term = 1.0;
    for (int k = 1; k <= n; ++k) {
        term *= double(n + k) * double(n - k + 1) / (2.0 * double(k) * x);
        sum += term;
    }
    return std::sqrt(kPi / (2.0 * x)) * sum;
}

}  // namespace

double hermite(int n, double x) { return hermite_impl(n, x); }
Complex hermite(int n, Complex z) { return hermite_impl(n, z); }
double laguerre(int n, int nu, double x) { return laguerre_impl(n, nu, x); }
Complex laguerre(int n, int nu, Complex z) { return laguerre_impl(n, nu, z); }

double bessel_k_scaled(double order, double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k: requires x > 0");
    if (order < 0.0) throw std::domain_error("bessel_k: requires order >= 0");
    double r = order - std::floor(order);
    if (std::abs(r) < 1e-12) return k_integer_scaled(int(std::floor(order + 0.5)), x);
    if (std::abs(r - 0.5) < 1e-12) return k_half_integer_scaled(int(std::floor(order)), x);
    throw std::domain_error("bessel_k: only integer and half-integer orders supported");
}

double bessel_k(double order, double x) {
    return bessel_k_scaled(order, x) * std::exp(-x);
}

double erfc(double x) { return std::erfc(x); }

PolyParams PolyParams::hermite_family(double tau) {
    if (tau < 0.0) throw std::domain_error("hermite family: tau must be >= 0");
    PolyParams p;
    p.family = PolyFamily::Hermite;
    p.nu = 0;
    p.scale = std::sqrt(2.0 * tau);
    return p;
}

PolyParams PolyParams::laguerre_family(int nu, double mu) {
    if (nu < 0) throw std::domain_error("laguerre family: nu must be >= 0");
    if (!(mu > 0.0) || !(mu < 1.0))
        throw std::domain_error(
            "laguerre family: degenerate parameter, mu must lie in (0,1) "
            "(mu = 1 is maximal non-Hermiticity, unsupported)");
    PolyParams p;
    p.family = PolyFamily::Laguerre;
    p.nu = nu;
    p.scale = 1.0 - mu * mu;
    return p;
}

void PolyParams::validate() const {
    if (nu < 0) throw std::domain_error("PolyParams: nu must be >= 0");
    if (family == PolyFamily::Laguerre && !(scale > 0.0))
        throw std::domain_error("PolyParams: degenerate parameter, Laguerre scale must be > 0");
    if (scale < 0.0) throw std::domain_error("PolyParams: scale must be >= 0");
}

namespace {

template <class T>
std::vector<T> c_poly_all_impl(const PolyParams& p, int kmax, T z) {
    p.validate();
    std::vector<T> c(std::size_t(kmax) + 1);
    c[0] = T(1);
    if (kmax == 0) return c;
    if (p.family == PolyFamily::Hermite) {
        double tau = p.tau();
        c[1] = z;
        for (int k = 1; k < kmax; ++k) c[k + 1] = z * c[k] - tau * double(k) * c[k - 1];
    } else {
        double a = p.scale;
        c[1] = z - a * double(p.nu + 1);
        for (int k = 1; k < kmax; ++k)
            c[k + 1] = (z - a * double(2 * k + p.nu + 1)) * c[k] -
                       a * a * double(k) * double(k + p.nu) * c[k - 1];
    }
    return c;
}

}  // namespace

std::vector<Complex> c_poly_all(const PolyParams& p, int kmax, Complex z) {
    return c_poly_all_impl(p, kmax, z);
}
std::vector<double> c_poly_all(const PolyParams& p, int kmax, double x) {
    return c_poly_all_impl(p, kmax, x);
}
Complex c_poly(const PolyParams& p, int k, Complex z) { return c_poly_all_impl(p, k, z)[k]; }
double c_poly(const PolyParams& p, int k, double x) { return c_poly_all_impl(p, k, x)[k]; }

}  // namespace skewspec::specfun
