#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qlandau/analytic.hpp"
#include "qlandau/quadrature.hpp"
#include "qlandau/sector.hpp"
#include "qlandau/units.hpp"

namespace qlandau {

// Boltzmann ensemble over the populated torus branch kx in [k_lo, k_cut].
// Only the px marginal of the 2D Gaussian enters: the levels are y-quantized,
// so the py dependence integrates out of the level weighting. k_lo > 0 is the
// toroidal infrared cutoff (smallest populated mode); k_cut is set so the
// Gaussian weight there is 1e-12 of its value at k_lo.
struct ThermalEnsemble {
    double temperature = 0.0; // K
    double beta_th = 0.0;     // 1 / (kB T), J^-1
    double k_lo = 0.0;        // m^-1
    double k_cut = 0.0;       // m^-1
    int n_kx_samples = 0;     // quadrature nodes used for the normalization
    double Z = 0.0;           // normalization of exp(-beta hbar^2 k^2/2m) over the domain
};

inline ThermalEnsemble make_ensemble(const PhysParams& p, double temperature_K,
                                     double k_lo) {
    p.validate();
    if (!(temperature_K > 0.0))
        throw std::domain_error("make_ensemble: temperature must be > 0");
    if (!(k_lo > 0.0)) throw std::domain_error("make_ensemble: k_lo must be > 0");
    ThermalEnsemble ens;
    ens.temperature = temperature_K;
    ens.beta_th = 1.0 / (p.kB * temperature_K);
    ens.k_lo = k_lo;
    const double lg = std::log(1e12);
    ens.k_cut = std::sqrt(k_lo * k_lo +
                          2.0 * p.mass * lg / (ens.beta_th * p.hbar * p.hbar));
    const double c = ens.beta_th * p.hbar * p.hbar / (2.0 * p.mass);
    auto f = [&](double k) { return std::exp(-c * (k * k - k_lo * k_lo)); };
    double last = 0.0;
    for (int panels = 8; panels <= (1 << 14); panels *= 2) {
        const double z = integrate_gl16(f, ens.k_lo, ens.k_cut, panels);
        ens.n_kx_samples = 16 * panels;
        if (panels > 8 && std::abs(z - last) <= 1e-12 * z) {
            ens.Z = z;
            return ens;
        }
        last = z;
    }
    ens.Z = last;
    return ens;
}

// Normalized marginal weight density w(kx) = exp(-beta hbar^2 kx^2/2m) / Z.
inline double momentum_weight(const ThermalEnsemble& ens, const PhysParams& p,
                              double kx) {
    p.validate();
    if (!(kx > 0.0))
        throw std::domain_error("momentum_weight: kx must be > 0 (populated torus branch)");
    if (kx < ens.k_lo || kx > ens.k_cut)
        throw std::domain_error("momentum_weight: kx outside the ensemble domain");
    const double c = ens.beta_th * p.hbar * p.hbar / (2.0 * p.mass);
    return std::exp(-c * (kx * kx - ens.k_lo * ens.k_lo)) / ens.Z;
}

// rms kx of the ensemble, by the same quadrature.
inline double rms_kx(const ThermalEnsemble& ens, const PhysParams& p,
                     int panels = 512) {
    const double c = ens.beta_th * p.hbar * p.hbar / (2.0 * p.mass);
    auto w = [&](double k) { return std::exp(-c * (k * k - ens.k_lo * ens.k_lo)); };
    const double m2 = integrate_gl16([&](double k) { return w(k) * k * k; },
                                     ens.k_lo, ens.k_cut, panels);
    return std::sqrt(m2 / ens.Z);
}

struct SpectralDensity {
    std::vector<double> energy_bins; // bin centers, J, uniform from 0
    std::vector<double> weights;     // bin masses, sum to 1
    double broadening_sigma = 0.0;   // J
    int n_levels = 0;
    double bin_width = 0.0;          // J
    double k_rms = 0.0;              // m^-1, thermal rms kx of the ensemble
};

namespace detail {

// Mass of a normal distribution N(mu, sigma) inside each bin of a uniform
// grid over [0, n*width]; the end bins absorb the outside tails. Only bins
// within 8 sigma are touched (the remainder is below double precision).
inline void deposit_gaussian(std::vector<double>& bins, double width, double mu,
                             double sigma, double mass) {
    const int n = static_cast<int>(bins.size());
    const double inv = 1.0 / (sigma * std::sqrt(2.0));
    const int lo = std::max(0, static_cast<int>(std::floor((mu - 8.0 * sigma) / width)));
    const int hi = std::min(n - 1, static_cast<int>(std::floor((mu + 8.0 * sigma) / width)));
    auto cdf = [&](int edge) {
        if (edge <= 0) return 0.0;
        if (edge >= n) return 1.0;
        return 0.5 * (1.0 + std::erf((edge * width - mu) * inv));
    };
    double prev = (lo == 0) ? 0.0 : cdf(lo);
    for (int b = lo; b <= hi; ++b) {
        const double next = (b == n - 1) ? 1.0 : cdf(b + 1);
        bins[b] += mass * (next - prev);
        prev = next;
    }
}

} // namespace detail

// D(E) = (1/n_levels) sum_n integral dkx w(kx) G_sigma(E - E_n(kx)) on the
// confined sigma_z = +1 branch, binned over [0, E_max + 5 sigma]. Quadrature
// panels double until the binned density is stationary to 1e-7 of its peak
// (total mass is 1 by construction, so the density shape is the convergence
// object, not the total).
inline SpectralDensity smeared_spectrum(const ThermalEnsemble& ens,
                                        const PhysParams& p, int n_levels,
                                        int bins, double sigma_E) {
    p.validate();
    if (n_levels < 1)
        throw std::invalid_argument("smeared_spectrum: n_levels must be >= 1");
    if (bins < 64) throw std::invalid_argument("smeared_spectrum: bins must be >= 64");
    if (!(sigma_E > 0.0))
        throw std::invalid_argument("smeared_spectrum: sigma_E must be > 0");

    const double e_max =
        dispersion(p, Sector{ens.k_cut, +1}, n_levels - 1) + 5.0 * sigma_E;
    const double bw = e_max / bins;
    const double c = ens.beta_th * p.hbar * p.hbar / (2.0 * p.mass);

    SpectralDensity d;
    d.broadening_sigma = sigma_E;
    d.n_levels = n_levels;
    d.bin_width = bw;
    d.energy_bins.resize(bins);
    for (int b = 0; b < bins; ++b) d.energy_bins[b] = (b + 0.5) * bw;
    d.k_rms = rms_kx(ens, p);

    std::vector<double> nodes, wq, prev;
    for (int panels = 8; panels <= (1 << 14); panels *= 2) {
        composite_gl16(ens.k_lo, ens.k_cut, panels, nodes, wq);
        double z = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            wq[i] *= std::exp(-c * (nodes[i] * nodes[i] - ens.k_lo * ens.k_lo));
            z += wq[i];
        }
        std::vector<double> acc(bins, 0.0);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const double mass = wq[i] / (z * n_levels);
            for (int n = 0; n < n_levels; ++n) {
                const double en = dispersion(p, Sector{nodes[i], +1}, n);
                detail::deposit_gaussian(acc, bw, en, sigma_E, mass);
            }
        }
        if (!prev.empty()) {
            double peak = 0.0, diff = 0.0;
            for (int b = 0; b < bins; ++b) {
                peak = std::max(peak, acc[b]);
                diff = std::max(diff, std::abs(acc[b] - prev[b]));
            }
            if (diff <= 1e-7 * peak) {
                d.weights = std::move(acc);
                return d;
            }
        }
        prev = std::move(acc);
    }
    d.weights = std::move(prev);
    return d;
}

// Strict local maxima with prominence >= prom_frac and height >= height_frac
// of the global maximum. The prominence floor rejects quadrature-level ripple.
inline std::vector<std::size_t> detect_peaks(const std::vector<double>& w,
                                             double prom_frac = 1e-3,
                                             double height_frac = 0.0) {
    std::vector<std::size_t> peaks;
    const std::size_t n = w.size();
    if (n < 3) return peaks;
    double mx = 0.0;
    for (double v : w) mx = std::max(mx, v);
    if (mx <= 0.0) return peaks;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(w[i] > w[i - 1] && w[i] >= w[i + 1])) continue;
        if (w[i] < height_frac * mx) continue;
        double lmin = w[i];
        for (std::size_t j = i; j-- > 0 && w[j] <= w[i];) lmin = std::min(lmin, w[j]);
        double rmin = w[i];
        for (std::size_t j = i + 1; j < n && w[j] <= w[i]; ++j) rmin = std::min(rmin, w[j]);
        if (w[i] - std::max(lmin, rmin) >= prom_frac * mx) peaks.push_back(i);
    }
    return peaks;
}

// Contrast (max-min)/(max+min) of the density on the closed interval between
// the two lowest detected peaks; 0 when fewer than two peaks are detected.
inline double gap_visibility(const SpectralDensity& d) {
    const auto peaks = detect_peaks(d.weights);
    if (peaks.size() < 2) return 0.0;
    double mx = 0.0, mn = std::numeric_limits<double>::infinity();
    for (std::size_t i = peaks[0]; i <= peaks[1]; ++i) {
        mx = std::max(mx, d.weights[i]);
        mn = std::min(mn, d.weights[i]);
    }
    return (mx + mn) > 0.0 ? (mx - mn) / (mx + mn) : 0.0;
}

} // namespace qlandau
