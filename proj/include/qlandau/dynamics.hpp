#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlandau/constants.hpp"
#include "qlandau/field2d.hpp"
#include "qlandau/fft.hpp"
#include "qlandau/units.hpp"

namespace qlandau {

enum class SpinChoice { Plus, Minus, Superposition };

// Plane wave e^{i kx0 x} times a normalized y-Gaussian whose density rms is
// width_y; width_y = oscillator length / sqrt(2) gives the channel ground
// state. kx0 must sit on the torus lattice 2 pi j / Lx.
inline SpinorField initial_packet(const Grid2D& grid, const PhysParams& p,
                                  double kx0, double width_y, SpinChoice spin,
                                  double y_center = 0.0) {
    p.validate();
    if (!(width_y > 0.0))
        throw std::invalid_argument("initial_packet: width_y must be > 0");
    if (y_center - 4.0 * width_y < grid.y_min ||
        y_center + 4.0 * width_y > grid.y_max)
        throw std::invalid_argument("initial_packet: packet does not fit the y-grid");

    const double mode = kx0 * grid.Lx / (2.0 * PI);
    const double j = std::round(mode);
    if (std::abs(mode - j) > 1e-9 * std::max(1.0, std::abs(mode))) {
        const double lo = std::floor(mode) * 2.0 * PI / grid.Lx;
        const double hi = std::ceil(mode) * 2.0 * PI / grid.Lx;
        std::ostringstream msg;
        msg << "initial_packet: kx0 = " << kx0
            << " is not an allowed torus wave number; nearest allowed values are "
            << lo << " and " << hi;
        throw std::invalid_argument(msg.str());
    }

    SpinorField f(grid);
    std::vector<std::complex<double>> base(grid.size());
    for (int ix = 0; ix < grid.n_x; ++ix) {
        const std::complex<double> phase =
            std::exp(std::complex<double>(0.0, kx0 * grid.x(ix)));
        for (int iy = 0; iy < grid.n_y; ++iy) {
            const double dy = grid.y(iy) - y_center;
            base[grid.idx(ix, iy)] =
                phase * std::exp(-dy * dy / (4.0 * width_y * width_y));
        }
    }
    double nrm = 0.0;
    for (const auto& z : base) nrm += std::norm(z);
    nrm = std::sqrt(nrm * grid.hx() * grid.hy());
    const double comp = spin == SpinChoice::Superposition ? 1.0 / std::sqrt(2.0) : 1.0;
    for (auto& z : base) z *= comp / nrm;
    if (spin == SpinChoice::Plus || spin == SpinChoice::Superposition) f.plus = base;
    if (spin == SpinChoice::Minus || spin == SpinChoice::Superposition) f.minus = base;
    return f;
}

// Per-component norm inside |y| < y_trap, integrated by trapezoid with linear
// interpolation at the exact window edges (a sharp-indexed window makes
// cross-resolution comparisons O(h)-noisy).
inline std::pair<double, double> survival_probability(const SpinorField& f,
                                                      double y_trap) {
    const Grid2D& g = f.grid;
    if (!(y_trap > 0.0) || !(y_trap < g.y_max) || !(-y_trap > g.y_min))
        throw std::invalid_argument("survival_probability: need 0 < y_trap < y_max");
    const double hy = g.hy();
    auto window = [&](int sigma) {
        const auto rho = y_marginal(f, sigma);
        auto interp = [&](double yq) {
            const double t = (yq - g.y_min) / hy;
            const int j = std::min(static_cast<int>(std::floor(t)), g.n_y - 2);
            const double w = t - j;
            return rho[j] * (1.0 - w) + rho[j + 1] * w;
        };
        int i0 = 0;
        while (i0 < g.n_y && g.y(i0) <= -y_trap) ++i0;
        int i1 = g.n_y - 1;
        while (i1 >= 0 && g.y(i1) >= y_trap) --i1;
        if (i0 > i1) {
            // window narrower than one cell
            return 0.5 * (interp(-y_trap) + interp(y_trap)) * 2.0 * y_trap;
        }
        double s = 0.0;
        for (int i = i0; i < i1; ++i) s += 0.5 * (rho[i] + rho[i + 1]) * hy;
        s += 0.5 * (interp(-y_trap) + rho[i0]) * (g.y(i0) + y_trap);
        s += 0.5 * (interp(y_trap) + rho[i1]) * (y_trap - g.y(i1));
        return s;
    };
    return {window(+1), window(-1)};
}

struct EvolutionReport {
    std::vector<double> times;          // s
    std::vector<double> survival_plus;  // norm fraction inside |y| < y_trap
    std::vector<double> survival_minus;
    std::vector<double> width_plus;     // rms y, m
    std::vector<double> width_minus;
    std::vector<double> norm_total;
    double y_trap = 0.0;                // m
};

struct EvolveOptions {
    bool absorber = true;
    int report_stride = 1;      // sample the report every this many steps
    double y_trap = 0.0;        // 0 -> defaults to y_max/2
    int snapshot_stride = 0;    // 0 -> no snapshots
    std::string snapshot_prefix;
};

namespace detail {

inline void write_snapshot_file(const SpinorField& f, const std::string& path);

} // namespace detail

// Strang-split evolution of H = A + B with A = p_y^2/2m (diagonal in k_y) and
// B = p_x^2/2m + alpha gamma y^2 p_x sigma_z (diagonal in the mixed (k_x, y)
// representation); each factor is applied exactly, so only the splitting is
// approximate. Phases must stay below pi per applied factor (anti-aliasing).
inline std::pair<SpinorField, EvolutionReport>
evolve(SpinorField field, const PhysParams& p, double dt, int n_steps,
       const EvolveOptions& opt = {}) {
    p.validate();
    if (!(dt > 0.0)) throw std::invalid_argument("evolve: dt must be > 0");
    if (n_steps < 1) throw std::invalid_argument("evolve: n_steps must be >= 1");
    if (opt.report_stride < 1)
        throw std::invalid_argument("evolve: report_stride must be >= 1");
    const Grid2D& g = field.grid;
    const auto kx = g.kx_values();
    const auto ky = g.ky_values();
    const double ag = p.alpha * p.gamma;

    double ky2max = 0.0;
    for (double k : ky) ky2max = std::max(ky2max, k * k);
    double kxmax = 0.0;
    for (double k : kx) kxmax = std::max(kxmax, std::abs(k));
    const double ymax2 = std::pow(std::max(std::abs(g.y_min), std::abs(g.y_max)), 2);
    const double rate_a = p.hbar * ky2max / (2.0 * p.mass) / 2.0; // half step
    const double rate_b = p.hbar * kxmax * kxmax / (2.0 * p.mass) +
                          std::abs(ag) * kxmax * ymax2;
    const double rate = std::max(rate_a, rate_b);
    if (dt * rate >= PI) {
        std::ostringstream msg;
        msg << "evolve: dt * max single-factor phase = " << dt * rate
            << " >= pi; maximum allowed dt = " << PI / rate;
        throw std::invalid_argument(msg.str());
    }

    // phase tables
    std::vector<std::complex<double>> phA(g.n_y);
    for (int iy = 0; iy < g.n_y; ++iy)
        phA[iy] = std::exp(std::complex<double>(
            0.0, -p.hbar * ky[iy] * ky[iy] / (2.0 * p.mass) * dt / 2.0));
    std::vector<std::complex<double>> phB_plus(g.size()), phB_minus(g.size());
    for (int ix = 0; ix < g.n_x; ++ix) {
        const double kin = p.hbar * kx[ix] * kx[ix] / (2.0 * p.mass);
        for (int iy = 0; iy < g.n_y; ++iy) {
            const double y = g.y(iy);
            const double cpl = ag * kx[ix] * y * y;
            phB_plus[g.idx(ix, iy)] =
                std::exp(std::complex<double>(0.0, -(kin + cpl) * dt));
            phB_minus[g.idx(ix, iy)] =
                std::exp(std::complex<double>(0.0, -(kin - cpl) * dt));
        }
    }

    // cos^2 absorber ramp over the outer 10% of the y-range
    const double ramp = 0.1 * (g.y_max - g.y_min);
    std::vector<double> mask(g.n_y, 1.0);
    for (int iy = 0; iy < g.n_y; ++iy) {
        const double y = g.y(iy);
        const double d = std::max(g.y_min + ramp - y, y - (g.y_max - ramp));
        if (d > 0.0) {
            const double sfrac = std::min(d / ramp, 1.0);
            const double c = std::cos(PI * sfrac / 2.0);
            mask[iy] = c * c;
        }
    }
    const int spill_lo = static_cast<int>(std::floor(0.05 * g.n_y));
    const int spill_hi = g.n_y - spill_lo;

    FftPlans plans(g.n_x, g.n_y);
    EvolutionReport report;
    report.y_trap = opt.y_trap > 0.0 ? opt.y_trap : 0.5 * g.y_max;

    auto sample = [&]() {
        report.times.push_back(field.time);
        const auto s = survival_probability(field, report.y_trap);
        report.survival_plus.push_back(s.first);
        report.survival_minus.push_back(s.second);
        report.width_plus.push_back(rms_y(field, +1));
        report.width_minus.push_back(rms_y(field, -1));
        report.norm_total.push_back(total_norm(field));
    };
    auto snapshot = [&](int step) {
        char name[64];
        std::snprintf(name, sizeof name, "_step%06d.bin", step);
        detail::write_snapshot_file(field, opt.snapshot_prefix + name);
    };

    auto half_a = [&](std::vector<std::complex<double>>& psi) {
        plans.forward_y(psi.data());
        for (int ix = 0; ix < g.n_x; ++ix)
            for (int iy = 0; iy < g.n_y; ++iy) psi[g.idx(ix, iy)] *= phA[iy];
        plans.backward_y(psi.data());
    };
    auto full_b = [&](std::vector<std::complex<double>>& psi,
                      const std::vector<std::complex<double>>& ph) {
        plans.forward_x(psi.data());
        for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= ph[i];
        plans.backward_x(psi.data());
    };

    sample();
    if (opt.snapshot_stride > 0) snapshot(0);
    for (int step = 1; step <= n_steps; ++step) {
        half_a(field.plus);
        half_a(field.minus);
        full_b(field.plus, phB_plus);
        full_b(field.minus, phB_minus);
        half_a(field.plus);
        half_a(field.minus);
        if (opt.absorber) {
            for (int ix = 0; ix < g.n_x; ++ix)
                for (int iy = 0; iy < g.n_y; ++iy) {
                    field.plus[g.idx(ix, iy)] *= mask[iy];
                    field.minus[g.idx(ix, iy)] *= mask[iy];
                }
        } else {
            double spill = 0.0;
            for (int ix = 0; ix < g.n_x; ++ix)
                for (int iy = 0; iy < g.n_y; ++iy) {
                    if (iy >= spill_lo && iy < spill_hi) continue;
                    spill += std::norm(field.plus[g.idx(ix, iy)]) +
                             std::norm(field.minus[g.idx(ix, iy)]);
                }
            spill *= g.hx() * g.hy();
            if (spill > 1e-8) {
                std::ostringstream msg;
                msg << "evolve: support spilled into the outer 5% of the y-range "
                       "(norm "
                    << spill << " > 1e-8) at t = " << field.time + dt
                    << " with the absorber off";
                throw std::runtime_error(msg.str());
            }
        }
        field.time += dt;
        if (step % opt.report_stride == 0 || step == n_steps) sample();
        if (opt.snapshot_stride > 0 && step % opt.snapshot_stride == 0)
            snapshot(step);
    }
    return {std::move(field), std::move(report)};
}

// Binary snapshot: magic "QLSNAP1\0", int32 nx, int32 ny, float64 Lx, y_min,
// y_max, time, then nx*ny float64 |psi_plus|^2 and nx*ny float64 |psi_minus|^2,
// row-major (x outer, y inner).
namespace detail {

inline void write_snapshot_file(const SpinorField& f, const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "wb");
    if (!fp) throw std::runtime_error("cannot open snapshot file: " + path);
    const char magic[8] = {'Q', 'L', 'S', 'N', 'A', 'P', '1', '\0'};
    std::fwrite(magic, 1, 8, fp);
    const std::int32_t nx = f.grid.n_x, ny = f.grid.n_y;
    std::fwrite(&nx, sizeof nx, 1, fp);
    std::fwrite(&ny, sizeof ny, 1, fp);
    const double header[4] = {f.grid.Lx, f.grid.y_min, f.grid.y_max, f.time};
    std::fwrite(header, sizeof(double), 4, fp);
    std::vector<double> dens(f.grid.size());
    for (std::size_t i = 0; i < dens.size(); ++i) dens[i] = std::norm(f.plus[i]);
    std::fwrite(dens.data(), sizeof(double), dens.size(), fp);
    for (std::size_t i = 0; i < dens.size(); ++i) dens[i] = std::norm(f.minus[i]);
    std::fwrite(dens.data(), sizeof(double), dens.size(), fp);
    std::fclose(fp);
}

} // namespace detail

inline void write_snapshot(const SpinorField& f, const std::string& path) {
    detail::write_snapshot_file(f, path);
}

} // namespace qlandau
