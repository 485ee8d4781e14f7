#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qlandau/constants.hpp"
#include "qlandau/sector.hpp"
#include "qlandau/units.hpp"

namespace qlandau {

inline void require_confined(const Sector& s, const char* what) {
    if (classify_sector(s) != Confinement::Confined) {
        std::ostringstream msg;
        msg << what << ": sector (kx=" << s.kx << ", sigma_z=" << s.sigma_z
            << ") is " << confinement_name(classify_sector(s))
            << ", no discrete spectrum";
        throw std::domain_error(msg.str());
    }
}

// E_n = hbar omega_c(|kx|) (n + 1/2) + hbar^2 kx^2 / 2m, confined sectors only.
inline double dispersion(const PhysParams& p, const Sector& s, int n) {
    require_confined(s, "dispersion");
    if (n < 0) throw std::domain_error("dispersion: n must be >= 0");
    const double wc = cyclotron_frequency(p, std::abs(s.kx));
    return p.hbar * wc * (n + 0.5) + p.hbar * p.hbar * s.kx * s.kx / (2.0 * p.mass);
}

// Normalized Hermite functions h_n(x) = H_n(x) e^{-x^2/2} / sqrt(2^n n! sqrt(pi)),
// by the stable recurrence h_{n+1} = sqrt(2/(n+1)) x h_n - sqrt(n/(n+1)) h_{n-1}.
// Positive leading coefficient, so h_n(x) > 0 on the x -> +inf tail.
inline double hermite_function(int n, double x) {
    double h0 = std::pow(PI, -0.25) * std::exp(-0.5 * x * x);
    if (n == 0) return h0;
    double h1 = std::sqrt(2.0) * x * h0;
    for (int k = 1; k < n; ++k) {
        const double h2 = std::sqrt(2.0 / (k + 1.0)) * x * h1 -
                          std::sqrt(k / (k + 1.0)) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

struct EigenfunctionSample {
    std::vector<double> grid_y; // m
    std::vector<double> values; // m^-1/2
    int n = 0;
};

// Transverse profile phi_n(y) = l^-1/2 h_n(y/l), l = sqrt(hbar/(m omega_c)).
// The grid must reach +-(sqrt(2n+1) + 4) oscillator lengths.
inline EigenfunctionSample eigenfunction(const PhysParams& p, const Sector& s,
                                         int n, const std::vector<double>& grid_y) {
    require_confined(s, "eigenfunction");
    if (n < 0) throw std::domain_error("eigenfunction: n must be >= 0");
    if (grid_y.size() < 2)
        throw std::invalid_argument("eigenfunction: grid needs >= 2 points");
    const UnitScale u = to_natural_units(p, std::abs(s.kx));
    const double need = (std::sqrt(2.0 * n + 1.0) + 4.0) * u.length;
    double lo = grid_y.front(), hi = grid_y.front();
    for (double y : grid_y) {
        lo = std::min(lo, y);
        hi = std::max(hi, y);
    }
    if (lo > -need || hi < need) {
        std::ostringstream msg;
        msg << "eigenfunction: grid [" << lo << ", " << hi
            << "] m too narrow for n=" << n << "; need at least +-" << need
            << " m (" << (std::sqrt(2.0 * n + 1.0) + 4.0)
            << " oscillator lengths of " << u.length << " m)";
        throw std::invalid_argument(msg.str());
    }
    EigenfunctionSample out;
    out.n = n;
    out.grid_y = grid_y;
    out.values.resize(grid_y.size());
    const double amp = 1.0 / std::sqrt(u.length);
    for (std::size_t i = 0; i < grid_y.size(); ++i)
        out.values[i] = amp * hermite_function(n, grid_y[i] / u.length);
    return out;
}

inline std::vector<double> probability_density(const EigenfunctionSample& sample) {
    std::vector<double> d(sample.values.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = sample.values[i] * sample.values[i];
    return d;
}

struct LevelSet {
    Sector sector;
    std::vector<double> energies; // J, ascending
    int n_max = 0;
    double omega_c = 0.0;         // s^-1
    double kinetic_offset = 0.0;  // hbar^2 kx^2 / 2m, J
};

inline LevelSet levels(const PhysParams& p, const Sector& s, int n_max) {
    require_confined(s, "levels");
    if (n_max < 0) throw std::domain_error("levels: n_max must be >= 0");
    LevelSet ls;
    ls.sector = s;
    ls.n_max = n_max;
    ls.omega_c = cyclotron_frequency(p, std::abs(s.kx));
    ls.kinetic_offset = p.hbar * p.hbar * s.kx * s.kx / (2.0 * p.mass);
    ls.energies.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) ls.energies.push_back(dispersion(p, s, n));
    return ls;
}

struct SpectrumScan {
    std::vector<double> kx_values;           // m^-1, in (0, k_max]
    double k_max = 0.0;                      // m^-1
    double omega_max = 0.0;                  // omega_c(k_max), s^-1
    std::vector<std::vector<double>> bands;  // bands[n][i] = E_n(kx_i) / (hbar omega_max)
};

// Band structure on the confined sigma_z = +1 branch over kx in (0, k_max],
// normalized by hbar omega_c(k_max).
inline SpectrumScan spectrum_scan(const PhysParams& p, double k_max, int n_bands,
                                  int n_k) {
    p.validate();
    if (!(k_max > 0.0)) throw std::domain_error("spectrum_scan: k_max must be > 0");
    if (n_bands < 1) throw std::domain_error("spectrum_scan: n_bands must be >= 1");
    if (n_k < 2) throw std::domain_error("spectrum_scan: n_k must be >= 2");
    SpectrumScan scan;
    scan.k_max = k_max;
    scan.omega_max = cyclotron_frequency(p, k_max);
    scan.kx_values.resize(n_k);
    for (int i = 0; i < n_k; ++i)
        scan.kx_values[i] = k_max * (i + 1.0) / n_k;
    scan.bands.assign(n_bands, std::vector<double>(n_k));
    const double scale = p.hbar * scan.omega_max;
    for (int n = 0; n < n_bands; ++n)
        for (int i = 0; i < n_k; ++i)
            scan.bands[n][i] =
                dispersion(p, Sector{scan.kx_values[i], +1}, n) / scale;
    return scan;
}

struct LandauContrast {
    double hbar_omega_c = 0.0;        // J, gap at the sector's kx
    std::vector<double> gaps;         // E_{n+1} - E_n for n < n_max, all equal
    std::vector<double> kx_values;    // kx * {1, 2, 4, 8}
    std::vector<double> gap_at_kx;    // hbar omega_c at those kx, grows as sqrt(kx)
};

// Contrast with flat magnetic Landau ladders: at fixed kx the spectrum is an
// equispaced ladder, while the spacing itself grows as sqrt(kx).
inline LandauContrast landau_contrast(const PhysParams& p, const Sector& s,
                                      int n_max) {
    require_confined(s, "landau_contrast");
    if (n_max < 1) throw std::domain_error("landau_contrast: n_max must be >= 1");
    LandauContrast r;
    r.hbar_omega_c = p.hbar * cyclotron_frequency(p, std::abs(s.kx));
    r.gaps.reserve(n_max);
    for (int n = 0; n < n_max; ++n)
        r.gaps.push_back(dispersion(p, s, n + 1) - dispersion(p, s, n));
    for (int d = 0; d < 4; ++d) {
        const double kx = std::abs(s.kx) * double(1 << d);
        r.kx_values.push_back(kx);
        r.gap_at_kx.push_back(p.hbar * cyclotron_frequency(p, kx));
    }
    return r;
}

} // namespace qlandau
