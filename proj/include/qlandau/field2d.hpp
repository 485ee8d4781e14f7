#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qlandau/fft.hpp"

namespace qlandau {

enum class BoundaryY { MaskAbsorber, None };

// Torus in x (circumference Lx), Fourier-periodic in y. Allowed longitudinal
// wave numbers are 2 pi j / Lx. Row-major storage [ix][iy].
struct Grid2D {
    double Lx = 0.0;    // m
    int n_x = 0;
    double y_min = 0.0; // m
    double y_max = 0.0; // m
    int n_y = 0;
    BoundaryY boundary_y = BoundaryY::MaskAbsorber;

    Grid2D() = default;
    Grid2D(double lx, int nx, double ymin, double ymax, int ny,
           BoundaryY by = BoundaryY::MaskAbsorber)
        : Lx(lx), n_x(nx), y_min(ymin), y_max(ymax), n_y(ny), boundary_y(by) {
        if (!(lx > 0.0)) throw std::invalid_argument("Grid2D: Lx must be > 0");
        if (!(ymax > ymin)) throw std::invalid_argument("Grid2D: y_max must exceed y_min");
        if (nx < 8 || ny < 8)
            throw std::invalid_argument("Grid2D: n_x and n_y must be >= 8");
        if ((nx & (nx - 1)) != 0 || (ny & (ny - 1)) != 0)
            throw std::invalid_argument("Grid2D: n_x and n_y must be powers of two");
    }

    double hx() const { return Lx / n_x; }
    double hy() const { return (y_max - y_min) / n_y; }
    double x(int i) const { return i * hx(); }
    double y(int j) const { return y_min + j * hy(); }
    std::size_t size() const { return static_cast<std::size_t>(n_x) * n_y; }
    std::size_t idx(int ix, int iy) const {
        return static_cast<std::size_t>(ix) * n_y + iy;
    }

    std::vector<double> kx_values() const { return fft_wavenumbers(n_x, Lx); }
    std::vector<double> ky_values() const {
        return fft_wavenumbers(n_y, y_max - y_min);
    }
};

// Two complex scalar fields (sigma_z = +1 / -1 components) on a Grid2D.
struct SpinorField {
    Grid2D grid;
    std::vector<std::complex<double>> plus;
    std::vector<std::complex<double>> minus;
    double time = 0.0; // s

    explicit SpinorField(const Grid2D& g)
        : grid(g), plus(g.size(), 0.0), minus(g.size(), 0.0) {}

    const std::vector<std::complex<double>>& component(int sigma) const {
        if (sigma == +1) return plus;
        if (sigma == -1) return minus;
        throw std::invalid_argument("component: sigma must be +1 or -1");
    }

    std::vector<std::complex<double>>& component(int sigma) {
        return const_cast<std::vector<std::complex<double>>&>(
            static_cast<const SpinorField*>(this)->component(sigma));
    }
};

inline double component_norm(const SpinorField& f, int sigma) {
    const auto& psi = f.component(sigma);
    double s = 0.0;
    for (const auto& z : psi) s += std::norm(z);
    return s * f.grid.hx() * f.grid.hy();
}

inline double total_norm(const SpinorField& f) {
    return component_norm(f, +1) + component_norm(f, -1);
}

// Probability density per unit y: rho(y_j) = sum_ix |psi(x_i, y_j)|^2 hx.
inline std::vector<double> y_marginal(const SpinorField& f, int sigma) {
    const auto& psi = f.component(sigma);
    std::vector<double> rho(f.grid.n_y, 0.0);
    for (int ix = 0; ix < f.grid.n_x; ++ix)
        for (int iy = 0; iy < f.grid.n_y; ++iy)
            rho[iy] += std::norm(psi[f.grid.idx(ix, iy)]);
    for (double& r : rho) r *= f.grid.hx();
    return rho;
}

inline double mean_y(const SpinorField& f, int sigma) {
    const auto rho = y_marginal(f, sigma);
    double n = 0.0, m = 0.0;
    for (int j = 0; j < f.grid.n_y; ++j) {
        n += rho[j];
        m += rho[j] * f.grid.y(j);
    }
    return n > 0.0 ? m / n : 0.0;
}

// rms transverse extent sqrt(<y^2>) of one component; 0 for an empty component.
inline double rms_y(const SpinorField& f, int sigma) {
    const auto rho = y_marginal(f, sigma);
    double n = 0.0, m2 = 0.0;
    for (int j = 0; j < f.grid.n_y; ++j) {
        const double y = f.grid.y(j);
        n += rho[j];
        m2 += rho[j] * y * y;
    }
    return n > 0.0 ? std::sqrt(m2 / n) : 0.0;
}

// |amplitude|^2 per torus mode, summed over y: the kx power spectrum.
inline std::vector<double> kx_power(const SpinorField& f, int sigma) {
    std::vector<std::complex<double>> work = f.component(sigma);
    FftPlans plans(f.grid.n_x, f.grid.n_y);
    plans.forward_x(work.data());
    std::vector<double> p(f.grid.n_x, 0.0);
    for (int ix = 0; ix < f.grid.n_x; ++ix)
        for (int iy = 0; iy < f.grid.n_y; ++iy)
            p[ix] += std::norm(work[f.grid.idx(ix, iy)]);
    const double scale = f.grid.hx() * f.grid.hy() / f.grid.n_x;
    for (double& v : p) v *= scale;
    return p;
}

} // namespace qlandau
