#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "qlandau/constants.hpp"

namespace qlandau {

// SI-valued physical parameters; the single source of truth for units.
//   mass  [kg]
//   alpha [m^2 s^-1 V^-1]   moment-field coupling
//   gamma [V m^-3]          field curvature, E_y = gamma * y^2
struct PhysParams {
    double mass = 0.0;
    double alpha = 0.0;
    double gamma = 0.0;
    double hbar = HBAR;
    double kB = KB;
    double eV = EV;

    void validate() const {
        if (!(mass > 0.0)) throw std::domain_error("mass must be > 0");
        if (!(alpha >= 0.0)) throw std::domain_error("alpha must be >= 0");
        if (!(gamma >= 0.0)) throw std::domain_error("gamma must be >= 0");
        if (!(hbar > 0.0)) throw std::domain_error("hbar must be > 0");
        if (!(kB > 0.0)) throw std::domain_error("kB must be > 0");
        if (!(eV > 0.0)) throw std::domain_error("eV must be > 0");
    }
};

// Unit-valued parameters: every scale equals 1, so formulas read in
// dimensionless (oscillator) form. alpha*gamma is the only free knob.
inline PhysParams natural_params(double alpha_gamma = 0.5) {
    PhysParams p;
    p.mass = 1.0;
    p.alpha = 1.0;
    p.gamma = alpha_gamma;
    p.hbar = 1.0;
    p.kB = 1.0;
    p.eV = 1.0;
    return p;
}

// beta_soc = alpha * gamma * hbar  [kg m s^-2]; derived, never stored.
inline double derived_beta(const PhysParams& p) {
    p.validate();
    return p.alpha * p.gamma * p.hbar;
}

// omega_c(kx) = sqrt(2 alpha gamma hbar kx / m); real only for kx > 0.
inline double cyclotron_frequency(const PhysParams& p, double kx) {
    p.validate();
    if (!(kx > 0.0))
        throw std::domain_error(
            "unconfined sector has no real oscillator frequency (kx must be > 0)");
    return std::sqrt(2.0 * p.alpha * p.gamma * p.hbar * kx / p.mass);
}

struct UnitScale {
    double length;  // l = sqrt(hbar / (m omega_c))  [m]
    double energy;  // hbar omega_c                  [J]
    double time;    // 1 / omega_c                   [s]
    double omega_c; // [s^-1]
};

inline UnitScale to_natural_units(const PhysParams& p, double kx) {
    const double wc = cyclotron_frequency(p, kx);
    return UnitScale{std::sqrt(p.hbar / (p.mass * wc)), p.hbar * wc, 1.0 / wc, wc};
}

struct EstimateReport {
    double omega_c;       // s^-1
    double gap_J;         // hbar * omega_c
    double gap_eV;        // gap_J / eV
    double temperature_K; // gap_J / kB
    PhysParams params_echo;
    double vx;            // m / s
    std::optional<double> beta_override; // kg m s^-2 when set
};

// Level-spacing estimate at longitudinal speed vx. With beta_override set,
// omega_c = sqrt(2 beta vx / hbar); otherwise omega_c = sqrt(2 alpha gamma vx)
// (identical when beta = alpha*gamma*hbar, since kx = m vx / hbar).
inline EstimateReport estimate_gap(const PhysParams& p, double vx,
                                   std::optional<double> beta_override = std::nullopt) {
    p.validate();
    if (!(vx > 0.0)) throw std::domain_error("vx must be > 0");
    double wc;
    if (beta_override) {
        if (!(*beta_override >= 0.0))
            throw std::domain_error("beta_soc must be >= 0");
        wc = std::sqrt(2.0 * (*beta_override) * vx / p.hbar);
    } else {
        wc = std::sqrt(2.0 * p.alpha * p.gamma * vx);
    }
    EstimateReport r;
    r.omega_c = wc;
    r.gap_J = p.hbar * wc;
    r.gap_eV = r.gap_J / p.eV;
    r.temperature_K = r.gap_J / p.kB;
    r.params_echo = p;
    r.vx = vx;
    r.beta_override = beta_override;
    return r;
}

} // namespace qlandau
