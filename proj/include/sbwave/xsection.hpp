#ifndef SBWAVE_XSECTION_HPP
#define SBWAVE_XSECTION_HPP

#include <Eigen/Core>
#include <vector>

#include "sbwave/kinematics.hpp"
#include "sbwave/mp_params.hpp"

namespace sbwave {

enum class SpectrumMode {
    noninterference,   ///< weight = I_ls^2
    factorized,        ///< weight = J_l(g1)^2 J_s(g2)^2
    interference,      ///< weight = J_{l1 l2}^2 over combination cells
    single_wave_even,  ///< weight = J_{l1}(b1)^2, single index
};

const char* to_string(SpectrumMode m);

/// One photon-number cell.  idx1/idx2 are (l, s) in the noninterference
/// and factorized modes, the combination numbers (l1, l2) in the
/// interference mode, and (l1, 0) in single_wave_even mode.
struct SpectrumEntry {
    int idx1 = 0, idx2 = 0;
    double weight = 0.0;
    double cumulative = 0.0;
};

struct Spectrum {
    SpectrumMode mode = SpectrumMode::factorized;
    std::vector<SpectrumEntry> entries;
    double tail_bound = 0.0;       ///< certified bound on the omitted mass
    MultiphotonParams params;      ///< snapshot of the arguments used

    double sum() const { return entries.empty() ? 0.0 : entries.back().cumulative; }
};

/// |I_ls|^2 with the full six-argument set.
double weight_noninterference(int l, int s, const MultiphotonParams& params,
                              const Tolerance& tol = {});

/// J_l(gamma1)^2 J_s(gamma2)^2.
double weight_factorized(int l, int s, double gamma1, double gamma2);

/// |J_{l1 l2}|^2 over the interference arguments of params.
double weight_interference(int l1, int l2, const MultiphotonParams& params,
                           const Tolerance& tol = {});

enum class CombinationParity { even_combination, odd_combination };

struct IndexMap {
    CombinationParity parity;
    int l1 = 0, l2 = 0;
};

/// (l, s) -> combination-photon numbers: even when l+s and l-s are even,
/// with l1 = (l+s)/2, l2 = (l-s)/2; otherwise odd with
/// l1 = (l+s+1)/2, l2 = (l-s+1)/2.
IndexMap index_map(int l, int s);

/// Enumerates cells outward from (0,0) in expanding square shells until
/// the accumulated weight exceeds 1 - tail_tol and the omitted mass is
/// certified.  Entries are ordered by shell, lexicographic within a
/// shell.  threads > 1 evaluates cells of a shell concurrently; the
/// result is independent of the thread count.
/// Throws NormalizationError when the shell radius passes
/// 4 (max|argument| + 50) without accumulating unit mass.
Spectrum spectrum(SpectrumMode mode, const MultiphotonParams& params, double tail_tol,
                  const Tolerance& tol = {}, int threads = 1);

/// |I_ls|^2 / |J_{l1 l2}|^2 for the even-combination cell matching
/// (l, s).  Returns +infinity when the denominator underflows (deep
/// Bessel zeros are physical).  Throws NoMatchingCellError for
/// odd-combination (l, s).
double ratio_regimes(int l, int s, const MultiphotonParams& noninterference_params,
                     const MultiphotonParams& interference_params,
                     const Tolerance& tol = {});

struct CombinedWave {
    double field = 0.0;
    Eigen::Vector2d pol = Eigen::Vector2d(1.0, 0.0);
};

/// Equal-frequency collapse of two waves into one:
///   F = sqrt(F1^2 + F2^2 + 2 F1 F2 cos delta),  e = (F1 e1 + F2 e2)/F,
/// in the frame e1 = (1, 0), e2 = (cos delta, sin delta).
/// Throws DomainError when F vanishes (antiparallel equal strengths).
CombinedWave combined_wave(double f1, double f2, double delta);

enum class BaselineKind { unit, bethe_heitler };

/// Field-free electron-nucleus bremsstrahlung cross section.
/// unit: returns 1 (weight-spectrum mode).
/// bethe_heitler: Born-approximation cross section, triply differential
/// in photon energy and the photon/final-electron solid angles, in
/// natural units (m = 1) with the Z^2 alpha^3 prefactor included.
/// Requires omega' < E_i - m and E_f = E_i - omega' (throws Error /
/// ValidationError otherwise).
double baseline_dcs(BaselineKind kind, const ScatteringKinematics& kin, int z);

}  // namespace sbwave

#endif
