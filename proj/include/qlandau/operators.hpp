#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qlandau/fields.hpp"
#include "qlandau/field2d.hpp"
#include "qlandau/fft.hpp"
#include "qlandau/grid.hpp"
#include "qlandau/sector.hpp"
#include "qlandau/units.hpp"

namespace qlandau {

// Symmetric tridiagonal matrix over a Grid1D (Dirichlet ends).
struct TridiagonalOperator {
    std::vector<double> diag;    // J, length n_points
    std::vector<double> offdiag; // J, length n_points - 1
    Grid1D grid;

    std::vector<double> apply(const std::vector<double>& v) const {
        const std::size_t n = diag.size();
        if (v.size() != n)
            throw std::invalid_argument("TridiagonalOperator::apply: size mismatch");
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            double s = diag[i] * v[i];
            if (i > 0) s += offdiag[i - 1] * v[i - 1];
            if (i + 1 < n) s += offdiag[i] * v[i + 1];
            out[i] = s;
        }
        return out;
    }

    // Gershgorin bound on the spectral radius.
    double norm_bound() const {
        double b = 0.0;
        const std::size_t n = diag.size();
        for (std::size_t i = 0; i < n; ++i) {
            double r = std::abs(diag[i]);
            if (i > 0) r += std::abs(offdiag[i - 1]);
            if (i + 1 < n) r += std::abs(offdiag[i]);
            b = std::max(b, r);
        }
        return b;
    }
};

// H_eff = -hbar^2/2m d2/dy2 + 1/2 m omega_c^2 y^2 on the 3-point stencil:
// diag = hbar^2/(m h^2) + 1/2 m omega_c^2 y_i^2, offdiag = -hbar^2/(2 m h^2).
// Only confined sectors admit an eigensolve; the inverted channel's box
// eigenvalues would be pure discretization artifacts.
inline TridiagonalOperator build_effective_1d(const PhysParams& p, const Sector& s,
                                              const Grid1D& grid) {
    p.validate();
    switch (classify_sector(s)) {
        case Confinement::Confined: break;
        case Confinement::Unconfined:
            throw std::domain_error(
                "build_effective_1d: unconfined sector, spectrum unbounded below");
        case Confinement::Marginal:
            throw std::domain_error(
                "build_effective_1d: marginal sector (kx = 0) has no oscillator channel");
    }
    const double wc = cyclotron_frequency(p, std::abs(s.kx));
    const double h = grid.spacing();
    const double kin = p.hbar * p.hbar / (p.mass * h * h);
    TridiagonalOperator op;
    op.grid = grid;
    op.diag.resize(grid.n_points);
    op.offdiag.assign(grid.n_points - 1, -0.5 * kin);
    for (int i = 0; i < grid.n_points; ++i) {
        const double y = grid.point(i);
        op.diag[i] = kin + 0.5 * p.mass * wc * wc * y * y;
    }
    return op;
}

// V(y) = sign(kx) sigma_z 1/2 m omega_c(|kx|)^2 y^2; identically zero when kx = 0.
inline std::vector<double> potential_profile(const PhysParams& p, const Sector& s,
                                             const Grid1D& grid) {
    p.validate();
    s.validate();
    std::vector<double> v(grid.n_points, 0.0);
    if (s.kx == 0.0) return v;
    const double wc = cyclotron_frequency(p, std::abs(s.kx));
    const double sign = (s.kx > 0.0 ? 1.0 : -1.0) * s.sigma_z;
    for (int i = 0; i < grid.n_points; ++i) {
        const double y = grid.point(i);
        v[i] = sign * 0.5 * p.mass * wc * wc * y * y;
    }
    return v;
}

namespace detail {

// p_x psi via the torus Fourier representation, in place.
inline void apply_px(const Grid2D& g, const FftPlans& plans, double hbar,
                     std::vector<std::complex<double>>& psi) {
    plans.forward_x(psi.data());
    const auto kx = g.kx_values();
    for (int ix = 0; ix < g.n_x; ++ix) {
        const std::complex<double> f = hbar * kx[ix];
        for (int iy = 0; iy < g.n_y; ++iy) psi[g.idx(ix, iy)] *= f;
    }
    plans.backward_x(psi.data());
}

// (p_x^2 + p_y^2)/2m psi via full 2D Fourier representation, in place.
inline void apply_kinetic(const Grid2D& g, const FftPlans& plans,
                          const PhysParams& p,
                          std::vector<std::complex<double>>& psi) {
    plans.forward_x(psi.data());
    plans.forward_y(psi.data());
    const auto kx = g.kx_values();
    const auto ky = g.ky_values();
    const double c = p.hbar * p.hbar / (2.0 * p.mass);
    for (int ix = 0; ix < g.n_x; ++ix)
        for (int iy = 0; iy < g.n_y; ++iy)
            psi[g.idx(ix, iy)] *= c * (kx[ix] * kx[ix] + ky[iy] * ky[iy]);
    plans.backward_y(psi.data());
    plans.backward_x(psi.data());
}

} // namespace detail

// The spin-diagonal form: two scalar Hamiltonians
//   H_pm = p_x^2/2m + p_y^2/2m +- alpha gamma y^2 p_x,
// recorded with coupling_coefficient = alpha gamma hbar.
struct SpinBlockOperator {
    FieldConfig field;
    PhysParams params;
    double coupling_coefficient = 0.0; // alpha gamma hbar, kg m s^-2

    std::vector<std::complex<double>>
    apply_component(const Grid2D& g, std::vector<std::complex<double>> psi,
                    int sigma) const {
        if (psi.size() != g.size())
            throw std::invalid_argument("SpinBlockOperator: field size mismatch");
        FftPlans plans(g.n_x, g.n_y);
        auto px_psi = psi;
        detail::apply_px(g, plans, params.hbar, px_psi);
        detail::apply_kinetic(g, plans, params, psi);
        const double ag = params.alpha * field.gamma * double(sigma);
        for (int ix = 0; ix < g.n_x; ++ix)
            for (int iy = 0; iy < g.n_y; ++iy) {
                const double y = g.y(iy);
                psi[g.idx(ix, iy)] += ag * y * y * px_psi[g.idx(ix, iy)];
            }
        return psi;
    }

    SpinorField apply(const SpinorField& f) const {
        SpinorField out(f.grid);
        out.time = f.time;
        out.plus = apply_component(f.grid, f.plus, +1);
        out.minus = apply_component(f.grid, f.minus, -1);
        return out;
    }
};

inline SpinBlockOperator reduce_to_spin_diagonal(const FieldConfig& field,
                                                 const PhysParams& p) {
    field.validate();
    p.validate();
    SpinBlockOperator op;
    op.field = field;
    op.params = p;
    op.coupling_coefficient = p.alpha * field.gamma * p.hbar;
    return op;
}

// H psi in the raw moment-coupling form p^2/2m + alpha (p . A_eff), with
// A_eff = E x sigma evaluated pointwise as 2x2 matrices (the zhat component
// multiplies p_z = 0 in the plane and drops out). Agreement with the block
// form is a wiring check of the whole gauge construction.
inline SpinorField apply_raw_hamiltonian(const FieldConfig& field,
                                         const PhysParams& p,
                                         const SpinorField& f) {
    field.validate();
    p.validate();
    const Grid2D& g = f.grid;
    FftPlans plans(g.n_x, g.n_y);

    SpinorField out(g);
    out.time = f.time;
    out.plus = f.plus;
    out.minus = f.minus;
    detail::apply_kinetic(g, plans, p, out.plus);
    detail::apply_kinetic(g, plans, p, out.minus);

    auto px_plus = f.plus;
    auto px_minus = f.minus;
    detail::apply_px(g, plans, p.hbar, px_plus);
    detail::apply_px(g, plans, p.hbar, px_minus);

    for (int iy = 0; iy < g.n_y; ++iy) {
        const Eigen::Matrix2cd Ax = effective_gauge(field, g.y(iy)).A_x;
        for (int ix = 0; ix < g.n_x; ++ix) {
            const std::size_t i = g.idx(ix, iy);
            const Eigen::Vector2cd v(px_plus[i], px_minus[i]);
            const Eigen::Vector2cd w = p.alpha * (Ax * v);
            out.plus[i] += w(0);
            out.minus[i] += w(1);
        }
    }
    return out;
}

} // namespace qlandau
