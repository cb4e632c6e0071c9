#include "sbwave/mp_params.hpp"

#include <algorithm>
#include <cmath>

#include "sbwave/errors.hpp"

namespace sbwave {

namespace {

constexpr double kHalfPi = 1.570796326794896619231321691639751442;

double checked_kdot(const FourVector& k, const FourVector& p, const char* who) {
    const double kp = mdot(k, p);
    if (std::abs(kp) < 1e-300)
        throw KinematicsError(std::string(who) + ": degenerate kinematics, k·p = 0");
    return kp;
}

}  // namespace

double bf_gamma(const FourVector& p1, const FourVector& p2, const WaveConfig& wave, double m) {
    const FourVector k = wave.photon_k();
    const double kp1 = checked_kdot(k, p1, "bf_gamma");
    const double kp2 = checked_kdot(k, p2, "bf_gamma");
    const FourVector g = (1.0 / kp2) * p2 - (1.0 / kp1) * p1;
    return m * wave.eta * mdot(wave.pol4(), g);
}

double beta_param(const FourVector& p1, const FourVector& p2, const WaveConfig& wave, double m) {
    const FourVector k = wave.photon_k();
    const double kp1 = checked_kdot(k, p1, "beta_param");
    const double kp2 = checked_kdot(k, p2, "beta_param");
    return 0.125 * wave.eta * wave.eta * m * m * (1.0 / kp2 - 1.0 / kp1);
}

double alpha_pm(CombSign sign, const FourVector& p1, const FourVector& p2,
                const WaveConfig& w1, const WaveConfig& w2, double m) {
    FourVector k;
    if (sign == CombSign::plus) {
        k = w1.photon_k() + w2.photon_k();
    } else {
        if (std::abs(w1.omega - w2.omega) < 1e-14 * w1.omega)
            throw KinematicsError(
                "alpha_pm: singular combination k1 - k2 = 0 for equal frequencies; "
                "this case collapses to a single effective wave");
        k = w1.photon_k() - w2.photon_k();
    }
    const double kp1 = checked_kdot(k, p1, "alpha_pm");
    const double kp2 = checked_kdot(k, p2, "alpha_pm");
    const double cosd = std::clamp(w1.pol.dot(w2.pol), -1.0, 1.0);
    return 0.5 * w1.eta * w2.eta * m * m * cosd * (1.0 / kp2 - 1.0 / kp1);
}

ClassicalParams classical_params(const ScatteringKinematics& kin,
                                 const WaveConfig& w1, const WaveConfig& w2, double m) {
    const double pi = kin.p_i.r.norm();
    const double pf = kin.p_f.r.norm();
    if (!(pi > 0.0) || !(pf > 0.0))
        throw DomainError("classical_params: zero spatial momentum");
    ClassicalParams cp;
    cp.xi1_i = w1.eta * m / pi;
    cp.xi2_i = w2.eta * m / pi;
    cp.xi1_f = w1.eta * m / pf;
    cp.xi2_f = w2.eta * m / pf;
    cp.zeta_i = cp.xi1_i * cp.xi2_i * pi / kin.p_i.t;
    cp.zeta_f = cp.xi1_f * cp.xi2_f * pf / kin.p_f.t;
    return cp;
}

MultiphotonParams multiphoton_params(const ScatteringKinematics& kin,
                                     const WaveConfig& w1, const WaveConfig& w2,
                                     MomentumChoice choice) {
    const FourVector& p1 = choice == MomentumChoice::quasi ? kin.ptilde_i : kin.p_i;
    const FourVector& p2 = choice == MomentumChoice::quasi ? kin.ptilde_f : kin.p_f;
    const double m = kin.m;

    MultiphotonParams out;
    out.gamma1 = bf_gamma(p1, p2, w1, m);
    out.gamma2 = bf_gamma(p1, p2, w2, m);
    out.beta1 = beta_param(p1, p2, w1, m);
    out.beta2 = beta_param(p1, p2, w2, m);
    out.alpha_plus = alpha_pm(CombSign::plus, p1, p2, w1, w2, m);
    out.alpha_minus = alpha_pm(CombSign::minus, p1, p2, w1, w2, m);
    const ClassicalParams cp = classical_params(kin, w1, w2, m);
    out.xi1 = cp.xi1_i;
    out.xi2 = cp.xi2_i;
    out.zeta_i = cp.zeta_i;
    out.zeta_f = cp.zeta_f;
    return out;
}

OrderEstimates estimate_orders(const MultiphotonParams& params,
                               const ScatteringKinematics& kin,
                               const WaveConfig& w1, const WaveConfig& w2) {
    OrderEstimates est;
    const double m = kin.m;
    const double v = kin.v_i();
    est.gamma_est1 = w1.eta * m * v / w1.omega;
    est.gamma_est2 = w2.eta * m * v / w2.omega;
    est.beta_est1 = est.gamma_est1 * params.xi1;
    est.beta_est2 = est.gamma_est2 * params.xi2;
    est.alpha_est = std::max(est.gamma_est1 * params.xi2, est.gamma_est2 * params.xi1);

    est.gamma1_exact = params.gamma1;
    est.gamma2_exact = params.gamma2;
    est.beta1_exact = params.beta1;
    est.beta2_exact = params.beta2;
    est.alpha_plus_exact = params.alpha_plus;
    est.alpha_minus_exact = params.alpha_minus;
    est.gamma_ratio1 = est.gamma_est1 > 0.0 ? std::abs(params.gamma1) / est.gamma_est1 : 0.0;
    est.gamma_ratio2 = est.gamma_est2 > 0.0 ? std::abs(params.gamma2) / est.gamma_est2 : 0.0;
    est.geometry_suppressed1 = est.gamma_est1 > 0.0 && est.gamma_ratio1 < 0.01;
    est.geometry_suppressed2 = est.gamma_est2 > 0.0 && est.gamma_ratio2 < 0.01;
    return est;
}

const char* to_string(KinematicRange v) {
    switch (v) {
        case KinematicRange::interference: return "interference";
        case KinematicRange::noninterference: return "noninterference";
        case KinematicRange::intermediate: return "intermediate";
    }
    return "?";
}

const char* to_string(FieldRegime v) {
    switch (v) {
        case FieldRegime::moderate_noninterference: return "moderate_noninterference";
        case FieldRegime::dipole_like: return "dipole_like";
        case FieldRegime::moderate_interference: return "moderate_interference";
        case FieldRegime::strong: return "strong";
        case FieldRegime::outside: return "outside";
    }
    return "?";
}

const char* to_string(FrequencyStatus v) {
    switch (v) {
        case FrequencyStatus::collapses_to_single_wave: return "collapses_to_single_wave";
        case FrequencyStatus::well_separated: return "well_separated";
    }
    return "?";
}

RegimeReport classify_regime(const ScatteringKinematics& kin,
                             const WaveConfig& w1, const WaveConfig& w2, double m) {
    RegimeReport rep;
    auto& d = rep.diagnostics;
    const double v_i = kin.v_i();

    // frequency separation, Eqs. (30)/(36)/(37)
    const double dw_ratio = std::abs(w2.omega - w1.omega) / w1.omega;
    d.push_back({"eq30 collapse: |dw|/w1 < 0.1", dw_ratio, 0.1, dw_ratio < 0.1});
    d.push_back({"eq36 separation: |dw|/w1 >= 1", dw_ratio, 1.0, dw_ratio >= 1.0});
    d.push_back({"eq37 ordering: w1 > w2", w1.omega, w2.omega, w1.omega > w2.omega});
    const double kinetic = kin.p_i.t - m;
    const double wbound = kinetic >= m ? m : 0.5 * m * v_i * v_i;
    d.push_back({"eq37 softness: w1 <= bound(E_i)", w1.omega, wbound, w1.omega <= wbound});
    d.push_back({"eq37 softness: w2 <= bound(E_i)", w2.omega, wbound, w2.omega <= wbound});
    rep.frequency_status = dw_ratio < 0.1 ? FrequencyStatus::collapses_to_single_wave
                                          : FrequencyStatus::well_separated;

    // kinematic range, Eqs. (39)/(40); the angular scale w/(m v eta) is
    // capped at 1 per the "<= 1" rider
    bool any_wave = false;
    bool all_interference = true;
    bool all_noninterference = true;
    const WaveConfig* waves[2] = {&w1, &w2};
    for (int j = 0; j < 2; ++j) {
        const WaveConfig& w = *waves[j];
        if (w.eta <= 0.0) continue;
        any_wave = true;
        const PlaneAngles ang = geometry_angles(kin, w.pol);
        const double dev_phi = std::abs(ang.phi - kHalfPi);
        const double dev_psi = std::abs(ang.psi - kHalfPi);
        const double scale = std::min(w.omega / (m * v_i * w.eta), 1.0);
        const std::string tag = "wave" + std::to_string(j + 1);
        d.push_back({"eq39 " + tag + ": |phi-pi/2| < 0.1 w/(m v eta)", dev_phi, 0.1 * scale,
                     dev_phi < 0.1 * scale});
        d.push_back({"eq39 " + tag + ": |psi-pi/2| < 0.1 w/(m v eta)", dev_psi, 0.1 * scale,
                     dev_psi < 0.1 * scale});
        d.push_back({"eq40 " + tag + ": |phi-pi/2| >= 10 w/(m v eta)", dev_phi, 10.0 * scale,
                     dev_phi >= 10.0 * scale});
        d.push_back({"eq40 " + tag + ": |psi-pi/2| >= 10 w/(m v eta)", dev_psi, 10.0 * scale,
                     dev_psi >= 10.0 * scale});
        all_interference = all_interference && dev_phi < 0.1 * scale && dev_psi < 0.1 * scale;
        all_noninterference =
            all_noninterference && dev_phi >= 10.0 * scale && dev_psi >= 10.0 * scale;
    }

    // interference needs a non-negligible alpha as well (quasimomentum values)
    double alpha_mag = 0.0;
    try {
        alpha_mag = std::abs(alpha_pm(CombSign::plus, kin.ptilde_i, kin.ptilde_f, w1, w2, m));
    } catch (const KinematicsError&) {
    }
    try {
        alpha_mag = std::max(
            alpha_mag,
            std::abs(alpha_pm(CombSign::minus, kin.ptilde_i, kin.ptilde_f, w1, w2, m)));
    } catch (const KinematicsError&) {
        // equal frequencies: alpha_minus singular, covered by the eq30 row
    }
    d.push_back({"interference capability: max|alpha| > 1e-3", alpha_mag, 1e-3,
                 alpha_mag > 1e-3});

    if (!any_wave)
        rep.kinematic = KinematicRange::intermediate;
    else if (all_interference && alpha_mag > 1e-3)
        rep.kinematic = KinematicRange::interference;
    else if (all_noninterference)
        rep.kinematic = KinematicRange::noninterference;
    else
        rep.kinematic = KinematicRange::intermediate;

    // field regimes, Eqs. (45)/(51)/(79)/(83)
    const ClassicalParams cp = classical_params(kin, w1, w2, m);
    d.push_back({"eq45: xi1(i) < 0.1", cp.xi1_i, 0.1, cp.xi1_i < 0.1});
    d.push_back({"eq45: xi2(i) < 0.1", cp.xi2_i, 0.1, cp.xi2_i < 0.1});
    d.push_back({"eq45: xi1(f) < 0.1", cp.xi1_f, 0.1, cp.xi1_f < 0.1});
    d.push_back({"eq45: xi2(f) < 0.1", cp.xi2_f, 0.1, cp.xi2_f < 0.1});
    const bool eq45 = cp.xi1_i < 0.1 && cp.xi2_i < 0.1 && cp.xi1_f < 0.1 && cp.xi2_f < 0.1;

    d.push_back({"eq79: zeta_i < 0.1", cp.zeta_i, 0.1, cp.zeta_i < 0.1});
    d.push_back({"eq79: zeta_f < 0.1", cp.zeta_f, 0.1, cp.zeta_f < 0.1});
    const bool eq79 = cp.zeta_i < 0.1 && cp.zeta_f < 0.1;

    const double gest1 = w1.eta * m * v_i / w1.omega;
    const double gest2 = w2.eta * m * v_i / w2.omega;
    const double best1 = gest1 * cp.xi1_i;
    const double best2 = gest2 * cp.xi2_i;
    const double aest = std::max(gest1 * cp.xi2_i, gest2 * cp.xi1_i);
    d.push_back({"eq51: beta1 estimate < 0.1", best1, 0.1, best1 < 0.1});
    d.push_back({"eq51: beta2 estimate < 0.1", best2, 0.1, best2 < 0.1});
    d.push_back({"eq51: alpha estimate < 0.1", aest, 0.1, aest < 0.1});
    const bool eq51 = best1 < 0.1 && best2 < 0.1 && aest < 0.1;

    auto near_one = [](double x) { return x >= 0.1 && x <= 10.0; };
    d.push_back({"eq83: beta1 estimate ~ 1", best1, 1.0, near_one(best1)});
    d.push_back({"eq83: beta2 estimate ~ 1", best2, 1.0, near_one(best2)});
    d.push_back({"eq83: alpha estimate ~ 1", aest, 1.0, near_one(aest)});
    const bool eq83 = near_one(best1) && near_one(best2) && near_one(aest);

    if (eq45 && eq51)
        rep.field_regime = FieldRegime::dipole_like;
    else if (eq45 && eq83)
        rep.field_regime = FieldRegime::strong;
    else if (eq45)
        rep.field_regime = FieldRegime::moderate_noninterference;
    else if (eq79)
        rep.field_regime = FieldRegime::moderate_interference;
    else
        rep.field_regime = FieldRegime::outside;

    return rep;
}

}  // namespace sbwave
