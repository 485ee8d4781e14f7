#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "qlandau/constants.hpp"

namespace qlandau {

inline Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

inline Eigen::Matrix2cd pauli_y() {
    const std::complex<double> I(0, 1);
    Eigen::Matrix2cd m;
    m << 0, -I, I, 0;
    return m;
}

inline Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

// E(y) = gamma y^2 yhat. Realizable by the line-charge density
// rho(y) = 2 eps0 gamma y (recorded for documentation; no field solver here).
struct FieldConfig {
    double gamma = 0.0; // V m^-3
    double eps0 = EPS0; // F m^-1

    void validate() const {
        if (!(gamma >= 0.0)) throw std::domain_error("gamma must be >= 0");
        if (!(eps0 > 0.0)) throw std::domain_error("eps0 must be > 0");
    }

    double field_y(double y) const { return gamma * y * y; }
    double charge_density(double y) const { return 2.0 * eps0 * gamma * y; }
};

// E x sigma at height y: gamma y^2 (sigma_z xhat - sigma_x zhat), returned as
// the sigma-coefficient matrices of the xhat and zhat components. The two do
// not commute (SU(2)); in the 2D plane only A_x enters p . A.
struct GaugeComponents {
    Eigen::Matrix2cd A_x;
    Eigen::Matrix2cd A_z;
};

inline GaugeComponents effective_gauge(const FieldConfig& field, double y) {
    field.validate();
    const double e = field.field_y(y);
    return GaugeComponents{e * pauli_z(), -e * pauli_x()};
}

} // namespace qlandau
