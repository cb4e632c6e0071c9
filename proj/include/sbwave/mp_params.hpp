#ifndef SBWAVE_MP_PARAMS_HPP
#define SBWAVE_MP_PARAMS_HPP

#include <string>
#include <vector>

#include "sbwave/kinematics.hpp"
#include "sbwave/mp_bessel.hpp"

namespace sbwave {

/// The six quantum multiphoton parameters (signed) plus the classical
/// field and interference parameters.
struct MultiphotonParams {
    double gamma1 = 0.0, gamma2 = 0.0;      ///< Bunkin-Fedorov parameters
    double beta1 = 0.0, beta2 = 0.0;        ///< quadratic parameters
    double alpha_plus = 0.0, alpha_minus = 0.0;  ///< interference parameters
    double xi1 = 0.0, xi2 = 0.0;            ///< classical parameters, initial state
    double zeta_i = 0.0, zeta_f = 0.0;      ///< classical interference parameters

    TwoWaveArgs args() const {
        return {gamma1, beta1, gamma2, beta2, alpha_plus, alpha_minus};
    }
    /// Interference-range argument set (gamma1 = gamma2 = 0).
    TwoWaveArgs interference_args() const {
        return {0.0, beta1, 0.0, beta2, alpha_plus, alpha_minus};
    }
};

/// Signed Bunkin-Fedorov parameter gamma_j = m eta_j (e_j · g_j) with
///   g_j = p2/(k_j·p2) - p1/(k_j·p1)
/// and e_j·g_j the Minkowski product.  Callers take the magnitude for
/// regime estimates.  Throws KinematicsError when k_j·p vanishes.
double bf_gamma(const FourVector& p1, const FourVector& p2, const WaveConfig& wave, double m);

/// Signed quadratic parameter
///   beta_j = (1/8) eta_j^2 m^2 [1/(k_j·p2) - 1/(k_j·p1)].
double beta_param(const FourVector& p1, const FourVector& p2, const WaveConfig& wave, double m);

enum class CombSign { plus, minus };

/// Signed interference parameter
///   alpha_± = (eta1 eta2 m^2 cos(Delta) / 2) [1/((k1 ± k2)·p2) - 1/((k1 ± k2)·p1)].
/// For the minus sign equal frequencies make the combination singular
/// (KinematicsError); that case collapses to a single effective wave.
double alpha_pm(CombSign sign, const FourVector& p1, const FourVector& p2,
                const WaveConfig& w1, const WaveConfig& w2, double m);

/// Classical parameters xi_j = eta_j m/|p| for both electron states and
/// the interference parameters zeta_{i,f} = xi1 xi2 |p|/E per state.
struct ClassicalParams {
    double xi1_i = 0.0, xi2_i = 0.0;
    double xi1_f = 0.0, xi2_f = 0.0;
    double zeta_i = 0.0, zeta_f = 0.0;
};

ClassicalParams classical_params(const ScatteringKinematics& kin,
                                 const WaveConfig& w1, const WaveConfig& w2, double m);

enum class MomentumChoice {
    quasi,  ///< parameters of (ptilde_f, ptilde_i)
    bare,   ///< parameters of (p_f, p_i)
};

/// All multiphoton parameters of a scattering event, with (p1, p2) =
/// (initial, final) quasi- or bare momenta.  Throws KinematicsError for
/// equal wave frequencies (alpha_minus singular).
MultiphotonParams multiphoton_params(const ScatteringKinematics& kin,
                                     const WaveConfig& w1, const WaveConfig& w2,
                                     MomentumChoice choice);

/// Order-of-magnitude estimates gamma_j ~ eta_j m v_i/omega_j,
/// beta_j ~ gamma_j xi_j, alpha ~ gamma_1 xi_2 ~ gamma_2 xi_1, next to
/// the exact values.  Diagnostic only.
struct OrderEstimates {
    double gamma_est1 = 0.0, gamma_est2 = 0.0;
    double beta_est1 = 0.0, beta_est2 = 0.0;
    double alpha_est = 0.0;
    double gamma1_exact = 0.0, gamma2_exact = 0.0;
    double beta1_exact = 0.0, beta2_exact = 0.0;
    double alpha_plus_exact = 0.0, alpha_minus_exact = 0.0;
    double gamma_ratio1 = 0.0, gamma_ratio2 = 0.0;  ///< |exact|/estimate, 0 when estimate = 0
    bool geometry_suppressed1 = false;  ///< exact far below the estimate
    bool geometry_suppressed2 = false;
};

OrderEstimates estimate_orders(const MultiphotonParams& params,
                               const ScatteringKinematics& kin,
                               const WaveConfig& w1, const WaveConfig& w2);

struct DiagnosticRow {
    std::string label;
    double left = 0.0;
    double right = 0.0;
    bool satisfied = false;
};

enum class KinematicRange { interference, noninterference, intermediate };
enum class FieldRegime {
    moderate_noninterference,
    dipole_like,
    moderate_interference,
    strong,
    outside,
};
enum class FrequencyStatus { collapses_to_single_wave, well_separated };

const char* to_string(KinematicRange v);
const char* to_string(FieldRegime v);
const char* to_string(FrequencyStatus v);

struct RegimeReport {
    KinematicRange kinematic = KinematicRange::intermediate;
    FieldRegime field_regime = FieldRegime::outside;
    FrequencyStatus frequency_status = FrequencyStatus::well_separated;
    std::vector<DiagnosticRow> diagnostics;
};

/// Evaluates every regime inequality with explicit numeric sides and
/// classifies the scenario.  "much less" carries a factor 0.1, "much
/// greater" a factor 10; the band in between is reported as
/// intermediate rather than silently assigned.
RegimeReport classify_regime(const ScatteringKinematics& kin,
                             const WaveConfig& w1, const WaveConfig& w2, double m);

}  // namespace sbwave

#endif
