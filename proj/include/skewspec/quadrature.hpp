#pragma once

#include <functional>
#include <span>
#include <vector>

#include "skewspec/common.hpp"

namespace skewspec::quad {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-7;
    double real_line_cutoff = 0;   // 0 = choose per weight by scanning
    double half_plane_radius = 0;  // 0 = choose per weight by scanning
    int max_subdivisions = 20000;

    void validate() const {
        if (!(abs_tol > 0) || !(rel_tol > 0))
            throw ValidationError("QuadratureSpec: tolerances must be > 0");
        if (max_subdivisions < 1)
            throw ValidationError("QuadratureSpec: max_subdivisions must be >= 1");
    }
};

// Adaptive Gauss-Kronrod 7/15 on [a,b]; error from the embedded Gauss rule.
double integrate_gk(const std::function<double(double)>& f, double a, double b, double abs_tol,
                    double rel_tol, int max_panels, const char* what);

// Panelized Chebyshev-Lobatto grid with exact per-panel antiderivatives.
// Carries the ordered (cumulative) inner integrals of the skew product and of
// the jpdf sector sums, so nothing is ever integrated across the sgn kink.
class ChebGrid {
  public:
    ChebGrid(std::vector<double> edges, int order = 24);

    // Bisect panels until `driver` is spectrally resolved on each (coefficient
    // tail below tol relative to the global scale).
    static std::vector<double> refine_edges(const std::function<double(double)>& driver,
                                            std::vector<double> edges, int order, double tol,
                                            int max_panels, const char* what);

    const std::vector<double>& nodes() const { return nodes_; }
    int order() const { return m_; }
    size_t panels() const { return edges_.size() - 1; }

    struct Cumulative {
        std::vector<double> at_nodes;  // integral from grid start to each node
        double total = 0;
    };
    Cumulative cumulative(std::span<const double> values) const;
    double integrate(std::span<const double> values) const;

  private:
    std::vector<double> edges_;
    int m_;
    std::vector<double> nodes_;   // (m_+1) per panel, ascending within panel
    std::vector<double> costab_;  // cos(pi*k*j/m), k = 0..m+1, j = 0..m

    void coeffs(std::span<const double> v, std::span<double> c) const;  // panel values -> cheb coeffs
};

// Vector-valued 2D integration over a rectangle set by tensor GK 7/15 panels
// with greedy quad-tree refinement. `f(x, y, out)` fills nv components.
using Integrand2D = std::function<void(double, double, std::span<double>)>;

std::vector<double> integrate2d(const Integrand2D& f, int nv, std::vector<double> x_edges,
                                std::vector<double> y_edges, double abs_tol, double rel_tol,
                                int max_panels, const char* what);

}  // namespace skewspec::quad
