#include "skewspec/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace skewspec::quad {

namespace {

// 15 Kronrod nodes on [-1,1] in ascending order plus K15 and embedded G7
// weights (G7 weight zero off the Gauss subset).
struct Gk15Rule {
    double node[15];
    double wk[15];
    double wg[15];
    Gk15Rule() {
        const auto& ka = boost::math::quadrature::gauss_kronrod<double, 15>::abscissa();
        const auto& kw = boost::math::quadrature::gauss_kronrod<double, 15>::weights();
        const auto& gw = boost::math::quadrature::gauss<double, 7>::weights();
        for (int i = 0; i < 15; ++i) {
            int d = i - 7;  // signed offset from center
            int a = std::abs(d);
            node[i] = (d < 0 ? -ka[a] : ka[a]);
            wk[i] = kw[a];
            wg[i] = (a % 2 == 0) ? gw[a / 2] : 0.0;
        }
    }
};

const Gk15Rule& gk15() {
    static const Gk15Rule rule;
    return rule;
}

}  // namespace

double integrate_gk(const std::function<double(double)>& f, double a, double b, double abs_tol,
                    double rel_tol, int max_panels, const char* what) {
    struct Panel {
        double a, b, est, err;
    };
    const auto& r = gk15();
    auto eval = [&](double lo, double hi) {
        double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        double sk = 0, sg = 0;
        for (int i = 0; i < 15; ++i) {
            double v = f(c + h * r.node[i]);
            sk += r.wk[i] * v;
            sg += r.wg[i] * v;
        }
        return Panel{lo, hi, sk * h, std::abs(sk - sg) * h};
    };
    auto cmp = [](const Panel& p, const Panel& q) { return p.err < q.err; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> heap(cmp);
    double est = 0, err = 0;
    Panel first = eval(a, b);
    est = first.est;
    err = first.err;
    heap.push(first);
    int used = 1;
    while (err > std::max(abs_tol, rel_tol * std::abs(est))) {
        if (used >= max_panels || heap.empty()) {
            std::ostringstream os;
            os << what << ": 1d quadrature did not reach tolerance (est = " << est
               << ", err = " << err << ", panels = " << used << ")";
            throw QuadratureError(os.str());
        }
        Panel worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        Panel l = eval(worst.a, mid), rp = eval(mid, worst.b);
        est += l.est + rp.est - worst.est;
        err += l.err + rp.err - worst.err;
        heap.push(l);
        heap.push(rp);
        ++used;
    }
    return est;
}

ChebGrid::ChebGrid(std::vector<double> edges, int order) : edges_(std::move(edges)), m_(order) {
    if (edges_.size() < 2) throw ValidationError("ChebGrid: need at least one panel");
    if (!std::is_sorted(edges_.begin(), edges_.end()))
        throw ValidationError("ChebGrid: edges must be ascending");
    costab_.resize(size_t(m_ + 2) * size_t(m_ + 1));
    for (int k = 0; k <= m_ + 1; ++k)
        for (int j = 0; j <= m_; ++j)
            costab_[size_t(k) * size_t(m_ + 1) + size_t(j)] = std::cos(kPi * k * j / double(m_));
    nodes_.reserve((edges_.size() - 1) * size_t(m_ + 1));
    for (size_t p = 0; p + 1 < edges_.size(); ++p) {
        double c = 0.5 * (edges_[p] + edges_[p + 1]), h = 0.5 * (edges_[p + 1] - edges_[p]);
        for (int j = 0; j <= m_; ++j) {
            double u = -costab_[size_t(m_ + 1) + size_t(j)];  // -cos(pi j / m): ascending
            nodes_.push_back(c + h * u);
        }
    }
}

void ChebGrid::coeffs(std::span<const double> v, std::span<double> c) const {
    for (int k = 0; k <= m_; ++k) {
        double acc = 0.5 * (v[0] * costab_[size_t(k) * size_t(m_ + 1)] +
                            v[size_t(m_)] * costab_[size_t(k) * size_t(m_ + 1) + size_t(m_)]);
        for (int j = 1; j < m_; ++j)
            acc += v[size_t(j)] * costab_[size_t(k) * size_t(m_ + 1) + size_t(j)];
        double s = (k % 2 == 0 ? 1.0 : -1.0) * 2.0 / double(m_);
        c[size_t(k)] = s * acc;
    }
    c[0] *= 0.5;
    c[size_t(m_)] *= 0.5;
}

ChebGrid::Cumulative ChebGrid::cumulative(std::span<const double> values) const {
    if (values.size() != nodes_.size()) throw ValidationError("ChebGrid: value count mismatch");
    Cumulative out;
    out.at_nodes.resize(values.size());
    std::vector<double> c(size_t(m_) + 1), b(size_t(m_) + 2);
    double prefix = 0;
    for (size_t p = 0; p + 1 < edges_.size(); ++p) {
        double h = 0.5 * (edges_[p + 1] - edges_[p]);
        auto v = values.subspan(p * size_t(m_ + 1), size_t(m_ + 1));
        coeffs(v, c);
        // antiderivative coefficients: B_1 = c0 - c2/2, B_n = (c_{n-1}-c_{n+1})/(2n)
        b[1] = c[0] - (m_ >= 2 ? 0.5 * c[2] : 0.0);
        for (int n = 2; n <= m_ + 1; ++n) {
            double lo = c[size_t(n - 1)];
            double hi = (n + 1 <= m_) ? c[size_t(n + 1)] : 0.0;
            b[size_t(n)] = (lo - hi) / (2.0 * n);
        }
        double b0 = 0;
        for (int n = 1; n <= m_ + 1; ++n) b0 -= (n % 2 == 0 ? 1.0 : -1.0) * b[size_t(n)];
        b[0] = b0;  // F(-1) = 0
        for (int j = 0; j <= m_; ++j) {
            // T_k(u_j) = (-1)^k cos(pi k j / m) with u_j = -cos(pi j / m)
            double f = 0;
            for (int k = 0; k <= m_ + 1; ++k) {
                double t = (k % 2 == 0 ? 1.0 : -1.0) *
                           costab_[size_t(k) * size_t(m_ + 1) + size_t(j)];
                f += b[size_t(k)] * t;
            }
            out.at_nodes[p * size_t(m_ + 1) + size_t(j)] = prefix + h * f;
        }
        double panel_total = 0;
        for (int k = 0; k <= m_ + 1; ++k) panel_total += b[size_t(k)] * (1.0 - (k % 2 == 0 ? 1.0 : -1.0));
        prefix += h * panel_total;
    }
    out.total = prefix;
    return out;
}

double ChebGrid::integrate(std::span<const double> values) const {
    if (values.size() != nodes_.size()) throw ValidationError("ChebGrid: value count mismatch");
    std::vector<double> c(size_t(m_) + 1);
    double total = 0;
    for (size_t p = 0; p + 1 < edges_.size(); ++p) {
        double h = 0.5 * (edges_[p + 1] - edges_[p]);
        coeffs(values.subspan(p * size_t(m_ + 1), size_t(m_ + 1)), c);
        double s = 2.0 * c[0];
        for (int k = 2; k <= m_; k += 2) s += 2.0 * c[size_t(k)] / (1.0 - double(k) * double(k));
        total += h * s;
    }
    return total;
}

std::vector<double> ChebGrid::refine_edges(const std::function<double(double)>& driver,
                                           std::vector<double> edges, int order, double tol,
                                           int max_panels, const char* what) {
    std::vector<double> cosv(size_t(order) + 1);
    for (int j = 0; j <= order; ++j) cosv[size_t(j)] = -std::cos(kPi * j / double(order));
    ChebGrid probe({0.0, 1.0}, order);  // reuse its coeff tables via a lambda below

    auto panel_stats = [&](double lo, double hi, double& tail, double& peak) {
        double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        std::vector<double> v(size_t(order) + 1);
        peak = 0;
        for (int j = 0; j <= order; ++j) {
            v[size_t(j)] = driver(c + h * cosv[size_t(j)]);
            peak = std::max(peak, std::abs(v[size_t(j)]));
        }
        std::vector<double> cf(size_t(order) + 1);
        probe.coeffs(v, cf);
        tail = 0;
        for (int k = order - 2; k <= order; ++k) tail = std::max(tail, std::abs(cf[size_t(k)]));
        // a panel whose total mass is negligible needs no resolution
        tail *= (hi - lo);
        return;
    };

    for (int round = 0; round < 40; ++round) {
        std::vector<double> tails(edges.size() - 1), peaks(edges.size() - 1);
        double scale = 0;
        for (size_t p = 0; p + 1 < edges.size(); ++p) {
            panel_stats(edges[p], edges[p + 1], tails[p], peaks[p]);
            scale = std::max(scale, peaks[p] * (edges[p + 1] - edges[p]));
        }
        std::vector<double> next;
        next.push_back(edges.front());
        bool split_any = false;
        for (size_t p = 0; p + 1 < edges.size(); ++p) {
            if (tails[p] > tol * (scale + 1e-300)) {
                next.push_back(0.5 * (edges[p] + edges[p + 1]));
                split_any = true;
            }
            next.push_back(edges[p + 1]);
        }
        if (!split_any) return edges;
        if (int(next.size()) > max_panels) {
            std::ostringstream os;
            os << what << ": grid refinement exceeded " << max_panels << " panels";
            throw QuadratureError(os.str());
        }
        edges = std::move(next);
    }
    return edges;
}

std::vector<double> integrate2d(const Integrand2D& f, int nv, std::vector<double> x_edges,
                                std::vector<double> y_edges, double abs_tol, double rel_tol,
                                int max_panels, const char* what) {
    const auto& r = gk15();
    struct Panel {
        double x0, x1, y0, y1;
        std::vector<double> est;
        double err = 0;  // max over components of per-component error
        std::vector<double> errv;
    };

    std::vector<double> sum(size_t(nv), 0.0), errsum(size_t(nv), 0.0);
    std::vector<double> buf(size_t(nv), 0.0);

    auto eval = [&](double x0, double x1, double y0, double y1) {
        Panel p;
        p.x0 = x0;
        p.x1 = x1;
        p.y0 = y0;
        p.y1 = y1;
        p.est.assign(size_t(nv), 0.0);
        p.errv.assign(size_t(nv), 0.0);
        std::vector<double> gg(size_t(nv), 0.0);
        double cx = 0.5 * (x0 + x1), hx = 0.5 * (x1 - x0);
        double cy = 0.5 * (y0 + y1), hy = 0.5 * (y1 - y0);
        for (int i = 0; i < 15; ++i) {
            double x = cx + hx * r.node[i];
            for (int j = 0; j < 15; ++j) {
                double y = cy + hy * r.node[j];
                f(x, y, buf);
                double wkk = r.wk[i] * r.wk[j];
                double wgg = r.wg[i] * r.wg[j];
                for (int v = 0; v < nv; ++v) {
                    p.est[size_t(v)] += wkk * buf[size_t(v)];
                    if (wgg != 0.0) gg[size_t(v)] += wgg * buf[size_t(v)];
                }
            }
        }
        double jac = hx * hy;
        for (int v = 0; v < nv; ++v) {
            p.est[size_t(v)] *= jac;
            p.errv[size_t(v)] = std::abs(p.est[size_t(v)] - jac * gg[size_t(v)]);
            p.err = std::max(p.err, p.errv[size_t(v)]);
        }
        return p;
    };

    auto cmp = [](const Panel& a, const Panel& b) { return a.err < b.err; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> heap(cmp);

    int used = 0;
    for (size_t i = 0; i + 1 < x_edges.size(); ++i)
        for (size_t j = 0; j + 1 < y_edges.size(); ++j) {
            Panel p = eval(x_edges[i], x_edges[i + 1], y_edges[j], y_edges[j + 1]);
            for (int v = 0; v < nv; ++v) {
                sum[size_t(v)] += p.est[size_t(v)];
                errsum[size_t(v)] += p.errv[size_t(v)];
            }
            heap.push(std::move(p));
            ++used;
        }

    auto converged = [&]() {
        for (int v = 0; v < nv; ++v)
            if (errsum[size_t(v)] > std::max(abs_tol, rel_tol * std::abs(sum[size_t(v)])))
                return false;
        return true;
    };

    while (!converged()) {
        if (used >= max_panels || heap.empty()) {
            std::ostringstream os;
            os << what << ": 2d quadrature did not reach tolerance (panels = " << used << ")";
            throw QuadratureError(os.str());
        }
        Panel worst = heap.top();
        heap.pop();
        for (int v = 0; v < nv; ++v) {
            sum[size_t(v)] -= worst.est[size_t(v)];
            errsum[size_t(v)] -= worst.errv[size_t(v)];
        }
        double mx = 0.5 * (worst.x0 + worst.x1), my = 0.5 * (worst.y0 + worst.y1);
        const double quads[4][4] = {{worst.x0, mx, worst.y0, my},
                                    {mx, worst.x1, worst.y0, my},
                                    {worst.x0, mx, my, worst.y1},
                                    {mx, worst.x1, my, worst.y1}};
        for (auto& q : quads) {
            Panel p = eval(q[0], q[1], q[2], q[3]);
            for (int v = 0; v < nv; ++v) {
                sum[size_t(v)] += p.est[size_t(v)];
                errsum[size_t(v)] += p.errv[size_t(v)];
            }
            heap.push(std::move(p));
        }
        used += 3;
    }

    // re-sum the surviving panels in a fixed order; the incremental running
    // sum above accumulates add/subtract roundoff
    std::vector<Panel> rest;
    while (!heap.empty()) {
        rest.push_back(heap.top());
        heap.pop();
    }
    std::sort(rest.begin(), rest.end(), [](const Panel& a, const Panel& b) {
        if (a.x0 != b.x0) return a.x0 < b.x0;
        if (a.y0 != b.y0) return a.y0 < b.y0;
        if (a.x1 != b.x1) return a.x1 < b.x1;
        return a.y1 < b.y1;
    });
    std::fill(sum.begin(), sum.end(), 0.0);
    for (const Panel& p : rest)
        for (int v = 0; v < nv; ++v) sum[size_t(v)] += p.est[size_t(v)];
    return sum;
}

}  // namespace skewspec::quad
