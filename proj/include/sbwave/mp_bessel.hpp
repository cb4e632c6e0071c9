#ifndef SBWAVE_MP_BESSEL_HPP
#define SBWAVE_MP_BESSEL_HPP

#include <Eigen/Core>
#include <variant>
#include <vector>

#include "sbwave/bessel.hpp"

namespace sbwave {

/// Requested accuracy of a series evaluation.
struct Tolerance {
    double eps = 1e-12;     ///< absolute accuracy of a function value
    int max_terms = 20000;  ///< hard cap on the terms of any one-dimensional sum

    void validate() const;  ///< eps > 0, max_terms >= 16
};

/// Signed argument tuple of the two-wave multiphoton functions I_rr'.
struct TwoWaveArgs {
    double gamma1 = 0.0, beta1 = 0.0;
    double gamma2 = 0.0, beta2 = 0.0;
    double alpha_plus = 0.0, alpha_minus = 0.0;

    double max_abs() const;
};

/// Truncation window for a 1-D sum against argument x: |n| <= |x| + 10 |x|^{1/3} + 12.
int series_window(double x);

/// Generalized (two-argument) Bessel function
///   J_r(gamma, beta) = sum_k J_{r-2k}(gamma) J_k(beta).
/// Throws AccuracyError if the tail cannot be certified below tol.eps.
double gen_bessel(int r, double gamma, double beta, const Tolerance& tol = {});

/// Two-wave multiphoton function
///   I_rr' = sum_{j,j'} J_j(a+) J_j'(a-) J_{r-j-j'}(g1,b1) J_{r'-j+j'}(g2,b2).
double two_wave_i(int r, int rp, const TwoWaveArgs& args, const Tolerance& tol = {});

/// Interference-range function J_{r1 r2}(b1, b2; a+, a-), evaluated
/// through its defining identity J_{r1 r2} = I_{r1+r2, r1-r2}(0,b1; 0,b2; a+, a-).
double interference_j(int r1, int r2, double beta1, double beta2,
                      double alpha_plus, double alpha_minus, const Tolerance& tol = {});

/// Reusable evaluator of J_r(gamma, beta) for |r| <= max_abs_order at
/// fixed arguments.  Immutable after construction, safe for concurrent
/// reads.
class GenBesselSeries {
public:
    GenBesselSeries(double gamma, double beta, int max_abs_order, const Tolerance& tol = {});

    double eval(int r) const;
    double tail_bound() const { return tail_; }

private:
    std::vector<double> jg_;  // J_n(|gamma|), n = 0..ng
    std::vector<double> jb_;  // J_k(|beta|),  k = 0..Wb+4
    int window_ = 0;          // summation window in k
    int max_order_ = 0;
    bool gamma_neg_ = false, beta_neg_ = false;
    double tail_ = 0.0;

    void build(double gamma, double beta, int window, const Tolerance& tol);
};

/// Reusable evaluator of I_rr' for |r| <= r_span, |r'| <= rp_span at
/// fixed arguments.  Immutable after construction, safe for concurrent
/// reads.
class TwoWaveSeries {
public:
    TwoWaveSeries(const TwoWaveArgs& args, int r_span, int rp_span, const Tolerance& tol = {});

    double eval(int r, int rp) const;
    double tail_bound() const { return tail_; }
    const TwoWaveArgs& args() const { return args_; }

private:
    TwoWaveArgs args_;
    std::vector<double> japlus_, jaminus_;  // J_j(|a+|), J_j'(|a-|)
    int wp_ = 0, wm_ = 0;
    bool ap_neg_ = false, am_neg_ = false;
    int r_span_ = 0, rp_span_ = 0;
    // generalized-Bessel tables over the full shifted order range
    std::vector<double> g1_, g2_;  // index 0 maps to order -(span + wp + wm)
    int g1_lo_ = 0, g2_lo_ = 0;
    double tail_ = 0.0;

    void build(int wp, int wm, const Tolerance& tol);
};

/// In-plane vector coefficient
///   D_rr' = e1 eta1 (I_{r+1,r'} + I_{r-1,r'}) + e2 eta2 (I_{r,r'+1} + I_{r,r'-1}).
Eigen::Vector2d coeff_d(int r, int rp, const TwoWaveArgs& args, double eta1, double eta2,
                        const Eigen::Vector2d& pol1, const Eigen::Vector2d& pol2,
                        const Tolerance& tol = {});

/// Scalar coefficient
///   B_rr' = eta1^2 [I_{r+2,r'} + I_{r-2,r'} + 2 I_{rr'}]
///         + eta2^2 [I_{r,r'+2} + I_{r,r'-2} + 2 I_{rr'}]
///         + 2 eta1 eta2 [I_{r-1,r'-1} + I_{r+1,r'+1} + I_{r-1,r'+1} + I_{r+1,r'-1}] cos(delta).
double coeff_b(int r, int rp, const TwoWaveArgs& args, double eta1, double eta2,
               double delta, const Tolerance& tol = {});

enum class InterferenceCoeff { b_prime, d_doubleprime, b_prime_single, d_doubleprime_single };

/// B'_{s1 s2} built from interference_j values.
double coeff_b_prime(int s1, int s2, double beta1, double beta2,
                     double alpha_plus, double alpha_minus,
                     double eta1, double eta2, const Tolerance& tol = {});

/// D''_{s1 s2}, directed along e_x.
Eigen::Vector2d coeff_d_doubleprime(int s1, int s2, double beta1, double beta2,
                                    double alpha_plus, double alpha_minus,
                                    double eta1, double eta2, const Tolerance& tol = {});

/// Single-wave B'_{s1} = eta1^2 [J_{s1+1}(b1) + J_{s1-1}(b1) + 2 J_{s1}(b1)].
double coeff_b_prime_single(int s1, double beta1, double eta1);

/// Single-wave D''_{s1} = e_x eta1 [J_{s1}(b1) + J_{s1-1}(b1)].
Eigen::Vector2d coeff_d_doubleprime_single(int s1, double beta1, double eta1);

/// Kind-dispatching wrapper over the four coefficient functions above.
/// Single-wave kinds require eta2 = 0 (DomainError otherwise).
std::variant<double, Eigen::Vector2d>
coeff_interference(InterferenceCoeff kind, int s1, int s2, double beta1, double beta2,
                   double alpha_plus, double alpha_minus, double eta1, double eta2,
                   const Tolerance& tol = {});

}  // namespace sbwave

#endif
