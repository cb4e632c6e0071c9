#ifndef SBWAVE_KINEMATICS_HPP
#define SBWAVE_KINEMATICS_HPP

#include <Eigen/Core>

#include "sbwave/four_vector.hpp"
#include "sbwave/wave.hpp"

namespace sbwave {

/// Electron-nucleus scattering event with one spontaneous photon, plus
/// the laser-dressed quantities derived from the wave pair.
///
/// phi is the angle between the (p_i, p_f) plane and the wave-1
/// polarization direction, psi the same for the (p_i, k') plane; both
/// are folded into [0, pi/2].
struct ScatteringKinematics {
    FourVector p_i, p_f, k_prime;
    FourVector ptilde_i, ptilde_f;
    double m = 1.0;
    double m_star = 1.0;
    double phi = 0.0;
    double psi = 0.0;

    /// Validates and derives. Rejects (ValidationError) p_i/p_f that are
    /// off-shell relative to each other beyond 1e-8 relative, or a k'
    /// that is not lightlike; rejects (KinematicsError) parallel spatial
    /// momenta, for which the plane angles are undefined.
    static ScatteringKinematics make(const FourVector& p_i, const FourVector& p_f,
                                     const FourVector& k_prime,
                                     const WaveConfig& w1, const WaveConfig& w2);

    double v_i() const { return p_i.r.norm() / p_i.t; }
    double v_f() const { return p_f.r.norm() / p_f.t; }
};

struct PlaneAngles {
    double phi;  ///< angle between e_x and the (p_i, p_f) plane, in [0, pi/2]
    double psi;  ///< angle between e_x and the (p_i, k') plane, in [0, pi/2]
};

/// Angles between a polarization direction e_x (unit 2-vector in the
/// xy-plane) and the scattering / emission planes.  Computed as
/// arcsin |e_x · n| with n the unit plane normal, i.e. the folded
/// angle between e_x and the plane itself.
/// Throws KinematicsError when either plane is degenerate.
PlaneAngles geometry_angles(const ScatteringKinematics& kin, const Eigen::Vector2d& e_x);

enum class BookkeepingMode {
    general,                ///< quasimomenta with l k1 + s k2 sidebands
    moderate,               ///< bare momenta, no sidebands
    interference_integer,   ///< integer combination photons l1(k1+k2) + l2(k1-k2)
    interference_half,      ///< half-integer combination photons
};

struct TransferMomenta {
    FourVector q;    ///< momentum transferred to the nucleus
    FourVector q_i;  ///< intermediate electron, forward amplitude
    FourVector q_f;  ///< intermediate electron, exchange amplitude
};

/// Transferred and intermediate four-momenta for the photon-number cell
/// (l, s).  In the interference modes (l, s) are read as the
/// combination-photon numbers (l1, l2) and are also used for the
/// intermediate-state indices.
TransferMomenta momenta_bookkeeping(const ScatteringKinematics& kin,
                                    const WaveConfig& w1, const WaveConfig& w2,
                                    int l, int s, BookkeepingMode mode);

}  // namespace sbwave

#endif
