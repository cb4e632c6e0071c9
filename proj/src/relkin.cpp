#include <cmath>
#include <string>

#include "sbwave/errors.hpp"
#include "sbwave/kinematics.hpp"
#include "sbwave/wave.hpp"

namespace sbwave {

void WaveConfig::validate(const char* name) const {
    const std::string n = name;
    if (!(omega > 0.0)) throw ValidationError(n + ".omega must be positive");
    if (!(eta >= 0.0)) throw ValidationError(n + ".eta must be nonnegative");
    if (std::abs(pol.norm() - 1.0) > 1e-12)
        throw ValidationError(n + ".pol is not a unit 2-vector");
}

double polarization_angle(const WaveConfig& w1, const WaveConfig& w2) {
    const double c = std::clamp(w1.pol.dot(w2.pol), -1.0, 1.0);
    return std::acos(c);
}

double intensity_param(double field_strength, double omega, double m, double e_charge) {
    if (!(omega > 0.0) || !(m > 0.0))
        throw DomainError("intensity_param: omega and m must be positive");
    return e_charge * field_strength / (m * omega);
}

double effective_mass(double m, double eta1, double eta2) {
    return m * std::sqrt(1.0 + 0.5 * eta1 * eta1 + 0.5 * eta2 * eta2);
}

FourVector quasimomentum(const FourVector& p, const FourVector& k1,
                         double eta1, double eta2, double m) {
    const double kp = mdot(k1, p);
    if (std::abs(kp) < 1e-300)
        throw KinematicsError("quasimomentum: degenerate kinematics, k1·p = 0");
    return p + (m * m * (eta1 * eta1 + eta2 * eta2) / (4.0 * kp)) * k1;
}

ScatteringKinematics ScatteringKinematics::make(const FourVector& p_i, const FourVector& p_f,
                                                const FourVector& k_prime,
                                                const WaveConfig& w1, const WaveConfig& w2) {
    w1.validate("wave1");
    w2.validate("wave2");
    const double m2i = msq(p_i);
    const double m2f = msq(p_f);
    if (!(m2i > 0.0) || !(p_i.t > 0.0))
        throw ValidationError("p_i is not a forward timelike momentum");
    if (!(p_f.t > 0.0) || std::abs(m2f - m2i) > 1e-8 * m2i)
        throw ValidationError("p_f is off-shell relative to p_i beyond 1e-8");
    if (std::abs(msq(k_prime)) > 1e-12 * std::max(1.0, k_prime.t * k_prime.t) ||
        !(k_prime.t > 0.0))
        throw ValidationError("k' is not a forward lightlike momentum");

    ScatteringKinematics kin;
    kin.p_i = p_i;
    kin.p_f = p_f;
    kin.k_prime = k_prime;
    kin.m = std::sqrt(m2i);
    kin.m_star = effective_mass(kin.m, w1.eta, w2.eta);
    const FourVector k1 = w1.photon_k();
    kin.ptilde_i = quasimomentum(p_i, k1, w1.eta, w2.eta, kin.m);
    kin.ptilde_f = quasimomentum(p_f, k1, w1.eta, w2.eta, kin.m);
    const PlaneAngles angles = geometry_angles(kin, w1.pol);
    kin.phi = angles.phi;
    kin.psi = angles.psi;
    return kin;
}

PlaneAngles geometry_angles(const ScatteringKinematics& kin, const Eigen::Vector2d& e_x) {
    if (std::abs(e_x.norm() - 1.0) > 1e-12)
        throw DomainError("geometry_angles: e_x is not a unit 2-vector");
    const Eigen::Vector3d e3(e_x.x(), e_x.y(), 0.0);
    auto plane_angle = [&](const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                           const char* which) {
        const Eigen::Vector3d n = a.cross(b);
        const double nn = n.norm();
        if (nn <= 1e-12 * a.norm() * b.norm())
            throw KinematicsError(std::string("geometry_angles: plane for ") + which +
                                  " is undefined (parallel momenta)");
        const double c = std::min(std::abs(n.dot(e3)) / nn, 1.0);
        return std::asin(c);  // folded angle between e_x and the plane, in [0, pi/2]
    };
    return {plane_angle(kin.p_i.r, kin.p_f.r, "phi"),
            plane_angle(kin.p_i.r, kin.k_prime.r, "psi")};
}

TransferMomenta momenta_bookkeeping(const ScatteringKinematics& kin,
                                    const WaveConfig& w1, const WaveConfig& w2,
                                    int l, int s, BookkeepingMode mode) {
    const FourVector k1 = w1.photon_k();
    const FourVector k2 = w2.photon_k();
    const FourVector& kp = kin.k_prime;

    switch (mode) {
        case BookkeepingMode::moderate:
            return {kin.p_f - kin.p_i + kp, kin.p_i - kp, kin.p_f + kp};
        case BookkeepingMode::general: {
            const FourVector side = static_cast<double>(l) * k1 + static_cast<double>(s) * k2;
            return {kin.ptilde_f - kin.ptilde_i + kp + side,
                    kin.ptilde_i - kp - side,
                    kin.ptilde_f + kp + side};
        }
        case BookkeepingMode::interference_integer: {
            const FourVector kplus = k1 + k2, kminus = k1 - k2;
            const FourVector side =
                static_cast<double>(l) * kplus + static_cast<double>(s) * kminus;
            return {kin.ptilde_f - kin.ptilde_i - kp + side,
                    kin.ptilde_i - kp - side,
                    kin.ptilde_f + kp + side};
        }
        case BookkeepingMode::interference_half: {
            const FourVector kplus = k1 + k2, kminus = k1 - k2;
            const FourVector side = (l - 0.5) * kplus + (s - 0.5) * kminus;
            return {kin.ptilde_f - kin.ptilde_i - kp + side,
                    kin.ptilde_i - kp - side,
                    kin.ptilde_f + kp + side};
        }
    }
    throw DomainError("momenta_bookkeeping: unknown mode");
}

}  // namespace sbwave
