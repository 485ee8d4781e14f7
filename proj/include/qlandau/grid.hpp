#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qlandau/sector.hpp"
#include "qlandau/units.hpp"

namespace qlandau {

// Uniform 1D grid with Dirichlet ends; y_i = y_min + i h, h = (y_max-y_min)/(n-1).
struct Grid1D {
    double y_min = 0.0; // m
    double y_max = 0.0; // m
    int n_points = 0;

    Grid1D() = default;
    Grid1D(double ymin, double ymax, int n) : y_min(ymin), y_max(ymax), n_points(n) {
        if (!(ymax > ymin)) throw std::invalid_argument("Grid1D: y_max must exceed y_min");
        if (n < 16) throw std::invalid_argument("Grid1D: n_points must be >= 16");
    }

    double spacing() const { return (y_max - y_min) / (n_points - 1); }
    double point(int i) const { return y_min + i * spacing(); }

    std::vector<double> points() const {
        std::vector<double> y(n_points);
        for (int i = 0; i < n_points; ++i) y[i] = point(i);
        return y;
    }
};

inline constexpr int DEFAULT_GRID_POINTS = 32768;

// Default eigensolving grid for a confined sector: symmetric, extent
// +-(sqrt(2 n_levels + 1) + 6) oscillator lengths. The point count keeps the
// first n_levels <= 10 eigenvalues of the 3-point stencil below 1e-6 relative
// error (measured by the convergence suite; 2048 points would give ~5e-5).
inline Grid1D default_grid(const PhysParams& p, const Sector& s, int n_levels,
                           int n_points = DEFAULT_GRID_POINTS) {
    if (classify_sector(s) != Confinement::Confined)
        throw std::domain_error("default_grid: confined sector required");
    if (n_levels < 1) throw std::invalid_argument("default_grid: n_levels must be >= 1");
    const UnitScale u = to_natural_units(p, std::abs(s.kx));
    const double extent = (std::sqrt(2.0 * n_levels + 1.0) + 6.0) * u.length;
    return Grid1D(-extent, extent, n_points);
}

} // namespace qlandau
