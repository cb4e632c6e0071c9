#ifndef SBWAVE_WAVE_HPP
#define SBWAVE_WAVE_HPP

#include <Eigen/Core>

#include "sbwave/four_vector.hpp"

namespace sbwave {

/// One linearly polarized plane wave propagating along +z.
struct WaveConfig {
    double omega = 0.0;   ///< frequency (units of the electron mass)
    double eta = 0.0;     ///< dimensionless intensity parameter eta = eF/(m omega)
    Eigen::Vector2d pol = Eigen::Vector2d(1.0, 0.0);  ///< unit polarization in the xy-plane

    /// Photon four-momentum k = omega (1, 0, 0, 1).
    FourVector photon_k() const { return FourVector(omega, 0.0, 0.0, omega); }

    /// Polarization four-vector e = (0, e_x, e_y, 0).
    FourVector pol4() const { return FourVector(0.0, pol.x(), pol.y(), 0.0); }

    /// Throws ValidationError unless omega > 0, eta >= 0 and |pol| = 1
    /// within 1e-12.
    void validate(const char* name = "wave") const;
};

/// Angle between the two polarization vectors, in [0, pi].
double polarization_angle(const WaveConfig& w1, const WaveConfig& w2);

/// Dimensionless intensity parameter eta = e F / (m omega).
/// Throws DomainError for nonpositive omega or m.
double intensity_param(double field_strength, double omega, double m, double e_charge);

/// Field-dressed electron mass m sqrt(1 + eta1^2/2 + eta2^2/2).
double effective_mass(double m, double eta1, double eta2);

/// Laser-dressed quasimomentum
///   ptilde = p + m^2 (eta1^2 + eta2^2) / (4 k1·p) * k1,
/// which satisfies ptilde^2 = m_*^2 for lightlike k1.
/// Throws KinematicsError when k1·p = 0.
FourVector quasimomentum(const FourVector& p, const FourVector& k1,
                         double eta1, double eta2, double m);

}  // namespace sbwave

#endif
