#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlandau/analytic.hpp"
#include "qlandau/dynamics.hpp"
#include "qlandau/eigensolve.hpp"
#include "qlandau/thermal.hpp"

namespace qlandau {

// 17 significant digits: round-trips every double bit-exactly, so identical
// runs produce byte-identical files.
inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

// columns: kx_over_kmax, band_n, E_over_hbar_omega_max
inline void write_spectrum_csv(const std::string& path, const SpectrumScan& scan) {
    auto out = open_out(path);
    out << "kx_over_kmax,band_n,E_over_hbar_omega_max\n";
    for (std::size_t i = 0; i < scan.kx_values.size(); ++i)
        for (std::size_t n = 0; n < scan.bands.size(); ++n)
            out << fmt17(scan.kx_values[i] / scan.k_max) << ',' << n << ','
                << fmt17(scan.bands[n][i]) << '\n';
}

// columns: y, n, density
inline void write_density_csv(const std::string& path,
                              const std::vector<EigenfunctionSample>& samples) {
    auto out = open_out(path);
    out << "y,n,density\n";
    for (const auto& s : samples) {
        const auto d = probability_density(s);
        for (std::size_t i = 0; i < s.grid_y.size(); ++i)
            out << fmt17(s.grid_y[i]) << ',' << s.n << ',' << fmt17(d[i]) << '\n';
    }
}

// columns: n, E_numeric, E_analytic, rel_error
inline void write_eigen_csv(const std::string& path, const EigenResult& res,
                            const PhysParams& p, const Sector& s) {
    const double wc = cyclotron_frequency(p, std::abs(s.kx));
    auto out = open_out(path);
    out << "n,E_numeric,E_analytic,rel_error\n";
    for (std::size_t n = 0; n < res.values.size(); ++n) {
        const double exact = p.hbar * wc * (n + 0.5);
        out << n << ',' << fmt17(res.values[n]) << ',' << fmt17(exact) << ','
            << fmt17(std::abs(res.values[n] - exact) / exact) << '\n';
    }
}

// columns: y, V
inline void write_potential_csv(const std::string& path, const Grid1D& grid,
                                const std::vector<double>& v) {
    auto out = open_out(path);
    out << "y,V\n";
    for (int i = 0; i < grid.n_points; ++i)
        out << fmt17(grid.point(i)) << ',' << fmt17(v[i]) << '\n';
}

// columns: t, survival_plus, survival_minus, width_plus, width_minus, norm_total
inline void write_evolution_csv(const std::string& path,
                                const EvolutionReport& rep) {
    auto out = open_out(path);
    out << "t,survival_plus,survival_minus,width_plus,width_minus,norm_total\n";
    for (std::size_t i = 0; i < rep.times.size(); ++i)
        out << fmt17(rep.times[i]) << ',' << fmt17(rep.survival_plus[i]) << ','
            << fmt17(rep.survival_minus[i]) << ',' << fmt17(rep.width_plus[i])
            << ',' << fmt17(rep.width_minus[i]) << ','
            << fmt17(rep.norm_total[i]) << '\n';
}

// columns: E_J, E_over_hbar_omega_ref, density (bin mass / bin width);
// omega_ref = omega_c at the thermal rms kx, recorded in the header comment.
inline void write_thermal_csv(const std::string& path, const SpectralDensity& d,
                              const PhysParams& p) {
    const double omega_ref = cyclotron_frequency(p, d.k_rms);
    auto out = open_out(path);
    out << "# omega_ref_per_s = " << fmt17(omega_ref)
        << " (cyclotron frequency at thermal rms kx = " << fmt17(d.k_rms)
        << " per m)\n";
    out << "E_J,E_over_hbar_omega_ref,density\n";
    const double scale = p.hbar * omega_ref;
    for (std::size_t b = 0; b < d.energy_bins.size(); ++b)
        out << fmt17(d.energy_bins[b]) << ',' << fmt17(d.energy_bins[b] / scale)
            << ',' << fmt17(d.weights[b] / d.bin_width) << '\n';
}

// columns: n_points, max_rel_error, ratio (ratio empty on the first row)
inline void write_convergence_csv(const std::string& path,
                                  const ConvergenceTable& t) {
    auto out = open_out(path);
    out << "# fitted_order = " << fmt17(t.fitted_order)
        << ", truncation_dominated = " << (t.truncation_dominated ? 1 : 0) << '\n';
    out << "n_points,max_rel_error,ratio\n";
    for (std::size_t i = 0; i < t.n_points.size(); ++i) {
        out << t.n_points[i] << ',' << fmt17(t.max_rel_error[i]) << ',';
        if (i > 0) out << fmt17(t.ratios[i - 1]);
        out << '\n';
    }
}

} // namespace qlandau
