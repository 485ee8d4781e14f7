#pragma once

#include <stdexcept>

namespace qlandau {

// A (kx, sigma_z) pair. sign(kx)*sigma_z = +1 sees the bound channel
// +1/2 m omega_c^2 y^2, the opposite sign the inverted one; kx = 0 is free.
struct Sector {
    double kx = 0.0; // m^-1
    int sigma_z = +1;

    void validate() const {
        if (sigma_z != +1 && sigma_z != -1)
            throw std::domain_error("sigma_z must be +1 or -1");
    }
};

enum class Confinement { Confined, Unconfined, Marginal };

inline Confinement classify_sector(const Sector& s) {
    s.validate();
    if (s.kx == 0.0) return Confinement::Marginal;
    const int sign_kx = s.kx > 0.0 ? +1 : -1;
    return sign_kx * s.sigma_z == +1 ? Confinement::Confined
                                     : Confinement::Unconfined;
}

inline const char* confinement_name(Confinement c) {
    switch (c) {
        case Confinement::Confined: return "Confined";
        case Confinement::Unconfined: return "Unconfined";
        default: return "Marginal";
    }
}

} // namespace qlandau
