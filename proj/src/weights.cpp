#include "skewspec/weights.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "skewspec/specfun.hpp"

namespace skewspec::weights {

using ensembles::Model;

void WeightSpec::validate() const {
    ensemble.validate();
    if (ensemble.model == Model::Chiral && !(ensemble.mu < 1.0))
        throw ValidationError(
            "WeightSpec: mu = 1 (maximal non-Hermiticity) is outside the supported weight family");
    if (include_masses && ensemble.masses.empty() && ensemble.nf > 0)
        throw ValidationError("WeightSpec: masses requested but none supplied");
}

namespace {

double mass_factor_real(const WeightSpec& w, double x) {
    if (!w.include_masses) return 1.0;
    double f = 1.0;
    for (double m : w.ensemble.masses) {
        double m2 = m * m;
        if (w.mass_sign == MassSign::MinusMSquared)
            f *= (m2 - x);
        else
            f *= (w.ensemble.model == Model::Chiral) ? (x + m2) : (x * x + m2);
    }
    return f;
}

double mass_factor_pair(const WeightSpec& w, Complex z) {
    if (!w.include_masses) return 1.0;
    double f = 1.0;
    for (double m : w.ensemble.masses) {
        double m2 = m * m;
        if (w.mass_sign == MassSign::MinusMSquared)
            f *= std::norm(m2 - z);
        else
            f *= (w.ensemble.model == Model::Chiral) ? std::norm(z + m2) : std::norm(z * z + m2);
    }
    return f;
}

// e^{w^2} erfc(w); direct product is safe up to w ~ 24, asymptotic beyond.
double erfcx(double w) {
    if (w < 24.0) return std::exp(w * w) * std::erfc(w);
    double inv2 = 1.0 / (2.0 * w * w);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 20; ++k) {
        term *= -(2.0 * k - 1.0) * inv2;
        sum += term;
        if (std::abs(term) < 1e-17) break;
    }
    return sum / (w * std::sqrt(kPi));
}

}  // namespace

double weight_h(const WeightSpec& w, double x) {
    w.validate();
    const auto& e = w.ensemble;
    if (e.model == Model::Ginibre) {
        return std::exp(-x * x / (2.0 * (1.0 + e.tau))) * mass_factor_real(w, x);
    }
    if (x == 0.0)
        throw std::domain_error("weight_h: chiral weight is singular at x = 0 (K_{nu/2} diverges)");
    double ax = std::abs(x);
    double ep = e.eta_plus(), em = e.eta_minus();
    double val = 2.0 * std::pow(ax, 0.5 * e.nu) * specfun::bessel_k_scaled(0.5 * e.nu, ep * ax) *
                 std::exp(em * x - ep * ax);
    return val * mass_factor_real(w, x);
}

double weight_g(const WeightSpec& w, Complex z, double inner_rel_tol) {
    w.validate();
    if (!(z.imag() > 0.0)) throw std::domain_error("weight_g: requires Im z > 0");
    const auto& e = w.ensemble;
    if (e.model == Model::Ginibre) {
        double x = z.real(), y = z.imag();
        double arg = 2.0 * y / std::sqrt(2.0 * (1.0 - e.tau * e.tau));
        double expo = -(x * x - y * y) / (1.0 + e.tau) - arg * arg;
        return std::exp(expo) * erfcx(arg) * mass_factor_pair(w, z);
    }

    const double x = z.real(), y = z.imag();
    const double ep = e.eta_plus(), em = e.eta_minus();
    const double zz = x * x + y * y;            // z z*
    const double s2 = 2.0 * (x * x - y * y);    // z^2 + z*^2
    const double half_nu = 0.5 * e.nu;

    // combined exponent: 2 eta_- x - eta_+^2 t s2 - 1/(4t) - (K scaling) with
    // the K argument w(t) = 2 eta_+^2 t zz; collapses to
    //   2 eta_- x - 4 eta_+^2 t x^2 - 1/(4t)  <= 0
    auto integrand = [&](double s) {
        double t = std::exp(s);
        double warg = 2.0 * ep * ep * t * zz;
        if (warg < 1e-290) return 0.0;
        double expo = 2.0 * em * x - 4.0 * ep * ep * t * x * x - 0.25 / t;
        if (expo < -700.0) return 0.0;
        double ef = std::erfc(ep * std::sqrt(t) * 2.0 * y);
        if (ef == 0.0) return 0.0;
        return std::exp(expo) * specfun::bessel_k_scaled(half_nu, warg) * ef;
    };

    // analytic bracket: exponent -a e^s - b e^{-s} peaks at -2 sqrt(ab);
    // the erfc tail adds y^2 to the decay side.
    const double b = 0.25;
    const double a = std::max(4.0 * ep * ep * x * x, 1e-300);
    const double a_eff = std::max(4.0 * ep * ep * (x * x + y * y), 1e-300);
    const double drop = 60.0 + 10.0 * e.nu;
    auto bracket = [&](double aa, bool upper) {
        double peak = -2.0 * std::sqrt(aa * b);
        double p = peak - drop;  // negative
        double disc = std::sqrt(std::max(p * p - 4.0 * aa * b, 0.0));
        double u = upper ? (-p + disc) / (2.0 * aa) : 2.0 * b / (-p + disc);
        return std::log(u);
    };
    double s_lo = std::max(bracket(a, false), -40.0);
    double s_hi = std::min(bracket(a_eff, true), 40.0);
    if (s_hi <= s_lo) return 0.0;

    double inner;
    try {
        inner = quad::integrate_gk(integrand, s_lo, s_hi, 1e-300, inner_rel_tol, 4000,
                                   "weight_g inner t-integral");
    } catch (const QuadratureError& err) {
        std::ostringstream os;
        os << err.what() << " at z = " << x << " + " << y << "i (bracket [" << s_lo << ", " << s_hi
           << "])";
        throw QuadratureError(os.str());
    }
    return 2.0 * std::pow(zz, half_nu) * inner * mass_factor_pair(w, z);
}

FSplitInfo measure_F_split(const WeightSpec& w) {
    w.validate();
    FSplitInfo info;
    info.terms.push_back(
        {"complex-pair",
         "i g(z1,z2) [Theta(Im z1) - Theta(Im z2)] delta^2(z2 - z1*)"});
    info.terms.push_back(
        {"real-real", "1/2 h(z1) h(z2) delta(Im z1) delta(Im z2) sgn(Re z2 - Re z1)"});
    info.beta4_note =
        "beta=4 (symplectic) ensembles are already factorized with "
        "F(z1,z2) = i (z2 - z1) w(z1,z2) delta^2(z2 - z1*); recorded for reference only, "
        "not samplable here";
    return info;
}

namespace {

// scan a decaying positive profile outward from `from` until it drops below
// 1e-16 of the peak seen so far
double scan_cutoff(const std::function<double(double)>& profile, double from, double step,
                   double hard_limit) {
    double peak = 0.0;
    double t = from;
    for (int i = 0; i < 100000; ++i) {
        double v = std::abs(profile(t));
        peak = std::max(peak, v);
        if (peak > 0 && v < 1e-16 * peak && i > 4) return t;
        t += step;
        if (std::abs(t) > hard_limit) return t;
    }
    return t;
}

}  // namespace

Domain weight_domain(const WeightSpec& w, int max_degree, const quad::QuadratureSpec& q) {
    const auto& e = w.ensemble;
    Domain d;
    int deg = std::max(max_degree, 1) + (w.include_masses ? 2 * int(e.masses.size()) : 0);
    auto grow = [deg](double x) { return std::pow(1.0 + std::abs(x), deg); };

    if (e.model == Model::Ginibre) {
        double sd = std::sqrt(1.0 + e.tau);
        auto prof = [&](double x) { return weight_h(w, x) * grow(x); };
        double hi = scan_cutoff(prof, 0.0, 0.25 * sd, 1e4);
        d.x_lo = -hi;
        d.x_hi = hi;
        auto profy = [&](double y) { return weight_g(w, Complex(0.0, y)) * grow(y); };
        d.y_hi = scan_cutoff(profy, 0.05, 0.1 * std::sqrt(1.0 - e.tau) + 0.01, 1e4);
        if (q.real_line_cutoff > 0) {
            d.x_lo = -q.real_line_cutoff;
            d.x_hi = q.real_line_cutoff;
        }
        if (q.half_plane_radius > 0) d.y_hi = q.half_plane_radius;
        int nx = 16;
        for (int i = 0; i <= nx; ++i)
            d.x_seed_edges.push_back(d.x_lo + (d.x_hi - d.x_lo) * i / double(nx));
        int ny = 6;
        for (int i = 0; i <= ny; ++i) d.y_seed_edges.push_back(d.y_hi * i / double(ny));
        return d;
    }

    // chiral: e^{-x/2}-type decay on the right, e^{-x/(2 mu^2)} on the left,
    // integrable singularity at 0
    auto prof = [&](double x) { return (x == 0.0 ? 0.0 : weight_h(w, x)) * grow(x); };
    d.x_hi = scan_cutoff(prof, 1.0, 1.0, 1e5);
    d.x_lo = -scan_cutoff([&](double x) { return prof(-x); }, 1.0, 0.5, 1e5);
    auto profy = [&](double y) { return weight_g(w, Complex(0.3 * d.x_hi, y)) * grow(y); };
    d.y_hi = scan_cutoff(profy, 0.5, 0.5, 1e4);
    if (q.real_line_cutoff > 0) {
        d.x_lo = -q.real_line_cutoff;
        d.x_hi = q.real_line_cutoff;
    }
    if (q.half_plane_radius > 0) d.y_hi = q.half_plane_radius;

    // geometric edges into the singular point from both sides
    const double hole = 1e-18;
    std::vector<double> left, right;
    for (double t = hole; t < -d.x_lo; t *= 4.0) left.push_back(-t);
    left.push_back(d.x_lo);
    std::sort(left.begin(), left.end());
    for (double t = hole; t < d.x_hi; t *= 4.0) right.push_back(t);
    right.push_back(d.x_hi);
    std::sort(right.begin(), right.end());
    d.x_seed_edges = left;
    d.x_seed_edges.insert(d.x_seed_edges.end(), right.begin(), right.end());

    int ny = 6;
    for (int i = 0; i <= ny; ++i) d.y_seed_edges.push_back(d.y_hi * i / double(ny));
    // cluster x tiles near 0 for the 2d part as well (handled by refinement)
    return d;
}

Eigen::MatrixXcd skew_gram(const PairBasis& basis, const WeightSpec& w,
                           const quad::QuadratureSpec& q, int max_degree_hint) {
    w.validate();
    q.validate();
    const int K = basis.count;
    if (K < 1) throw ValidationError("skew_gram: empty basis");
    const int P = K * (K - 1) / 2;
    int deg = max_degree_hint > 0 ? max_degree_hint : K;
    Domain dom = weight_domain(w, deg, q);

    std::vector<Complex> fbuf(size_t(K), Complex(0)), fbuf2(size_t(K), Complex(0));

    // ---- real-line part: iint_{x1<x2} h h (f_i(x1) f_j(x2) - f_j(x1) f_i(x2))
    auto driver = [&](double x) {
        if (w.ensemble.model == Model::Chiral && x == 0.0) return 0.0;
        double hx = weight_h(w, x);
        if (hx == 0.0) return 0.0;
        basis.eval_all(Complex(x, 0.0), fbuf);
        double m = 0.0;
        for (const Complex& c : fbuf) m = std::max(m, std::abs(c));
        return hx * m;
    };
    auto edges = quad::ChebGrid::refine_edges(driver, dom.x_seed_edges, 24,
                                              std::min(q.rel_tol, 1e-9), q.max_subdivisions,
                                              "skew_gram real part");
    quad::ChebGrid grid(std::move(edges), 24);
    const auto& xs = grid.nodes();
    const size_t NN = xs.size();

    // channel layout: per function, re and im of h(x) f(x)
    std::vector<std::vector<double>> re(size_t(K), std::vector<double>(NN, 0.0));
    std::vector<std::vector<double>> im(size_t(K), std::vector<double>(NN, 0.0));
    std::vector<double> hv(NN, 0.0);
    for (size_t t = 0; t < NN; ++t) {
        double x = xs[t];
        hv[t] = (w.ensemble.model == Model::Chiral && x == 0.0) ? 0.0 : weight_h(w, x);
        basis.eval_all(Complex(x, 0.0), fbuf);
        for (int i = 0; i < K; ++i) {
            re[size_t(i)][t] = hv[t] * fbuf[size_t(i)].real();
            im[size_t(i)][t] = hv[t] * fbuf[size_t(i)].imag();
        }
    }
    std::vector<quad::ChebGrid::Cumulative> cre;
    std::vector<quad::ChebGrid::Cumulative> cim;
    cre.resize(size_t(K));
    cim.resize(size_t(K));
    for (int i = 0; i < K; ++i) {
        cre[size_t(i)] = grid.cumulative(re[size_t(i)]);
        cim[size_t(i)] = grid.cumulative(im[size_t(i)]);
    }

    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(K, K);
    std::vector<double> tmp_re(NN), tmp_im(NN);
    for (int i = 0; i < K; ++i)
        for (int j = i + 1; j < K; ++j) {
            // integrand over x2: h f_j(x2) S_i(x2) - h f_i(x2) S_j(x2)
            for (size_t t = 0; t < NN; ++t) {
                Complex fjx(re[size_t(j)][t], im[size_t(j)][t]);  // h * f_j
                Complex fix(re[size_t(i)][t], im[size_t(i)][t]);
                Complex si(cre[size_t(i)].at_nodes[t], cim[size_t(i)].at_nodes[t]);
                Complex sj(cre[size_t(j)].at_nodes[t], cim[size_t(j)].at_nodes[t]);
                Complex v = fjx * si - fix * sj;
                tmp_re[t] = v.real();
                tmp_im[t] = v.imag();
            }
            g(i, j) = Complex(grid.integrate(tmp_re), grid.integrate(tmp_im));
        }

    // ---- half-plane part: 2i g(z,z*) [f_i(z) f_j(z*) - f_i(z*) f_j(z)]
    const int nv = 2 * P;
    // refine x seeds for the 2d part when the chiral grid is singular-graded:
    // reuse the (possibly long) seed list but cap it
    std::vector<double> xseed = dom.x_seed_edges;
    if (xseed.size() > 24) {
        std::vector<double> compact;
        size_t stride = xseed.size() / 20 + 1;
        for (size_t i = 0; i < xseed.size(); i += stride) compact.push_back(xseed[i]);
        if (compact.back() != xseed.back()) compact.push_back(xseed.back());
        xseed = compact;
    }
    auto f2d = [&](double x, double y, std::span<double> out) {
        Complex z(x, y);
        double gw = weight_g(w, z, std::min(1e-9, q.rel_tol * 1e-2));
        if (gw == 0.0) {
            std::fill(out.begin(), out.end(), 0.0);
            return;
        }
        basis.eval_all(z, fbuf);
        basis.eval_all(std::conj(z), fbuf2);
        int v = 0;
        for (int i = 0; i < K; ++i)
            for (int j = i + 1; j < K; ++j) {
                Complex val = Complex(0.0, 2.0) * gw *
                              (fbuf[size_t(i)] * fbuf2[size_t(j)] - fbuf2[size_t(i)] * fbuf[size_t(j)]);
                out[size_t(v)] = val.real();
                out[size_t(v) + size_t(P)] = val.imag();
                ++v;
            }
    };
    auto cpart = quad::integrate2d(f2d, nv, xseed, dom.y_seed_edges, q.abs_tol, q.rel_tol,
                                   q.max_subdivisions, "skew_gram half-plane part");
    int v = 0;
    for (int i = 0; i < K; ++i)
        for (int j = i + 1; j < K; ++j) {
            g(i, j) += Complex(cpart[size_t(v)], cpart[size_t(v) + size_t(P)]);
            ++v;
        }

    for (int i = 0; i < K; ++i)
        for (int j = 0; j < i; ++j) g(i, j) = -g(j, i);
    return g;
}

Complex skew_product(const std::function<Complex(Complex)>& f,
                     const std::function<Complex(Complex)>& g, const WeightSpec& w,
                     const quad::QuadratureSpec& q, int max_degree_hint) {
    PairBasis basis;
    basis.count = 2;
    basis.eval_all = [&](Complex z, std::span<Complex> out) {
        out[0] = f(z);
        out[1] = g(z);
    };
    return skew_gram(basis, w, q, max_degree_hint)(0, 1);
}

Eigen::MatrixXcd monomial_moments(int max_deg, const WeightSpec& w, const quad::QuadratureSpec& q) {
    PairBasis basis;
    basis.count = max_deg + 1;
    basis.eval_all = [max_deg](Complex z, std::span<Complex> out) {
        Complex p(1.0);
        for (int k = 0; k <= max_deg; ++k) {
            out[size_t(k)] = p;
            p *= z;
        }
    };
    return skew_gram(basis, w, q, max_deg);
}

}  // namespace skewspec::weights
