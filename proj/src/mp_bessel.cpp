#include "sbwave/mp_bessel.hpp"

#include <algorithm>
#include <cmath>

#include "sbwave/errors.hpp"

namespace sbwave {

namespace {

struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

// Bound on sum_{|k| > W} |J_k(x)| from the two values past the window
// edge: the terms decay superexponentially there, so a geometric
// majorant with the observed ratio is valid.  Returns a value >= eps
// (forcing escalation) when the edge has not entered the decay regime.
double tail_beyond(const std::vector<double>& table, int window, double eps) {
    const double e1 = std::abs(bessel_lookup(table, window + 1));
    const double e2 = std::abs(bessel_lookup(table, window + 2));
    if (e1 == 0.0) return 0.0;
    const double rho = e2 / e1;
    if (rho >= 0.9) return std::max(eps, e1);
    return 2.0 * e1 / (1.0 - rho);
}

}  // namespace

void Tolerance::validate() const {
    if (!(eps > 0.0)) throw DomainError("Tolerance: eps must be positive");
    if (max_terms < 16) throw DomainError("Tolerance: max_terms must be >= 16");
}

double TwoWaveArgs::max_abs() const {
    return std::max({std::abs(gamma1), std::abs(beta1), std::abs(gamma2),
                     std::abs(beta2), std::abs(alpha_plus), std::abs(alpha_minus)});
}

int series_window(double x) {
    const double a = std::abs(x);
    return static_cast<int>(std::ceil(a + 10.0 * std::cbrt(a) + 12.0));
}

// ---------------------------------------------------------------------------
// GenBesselSeries

GenBesselSeries::GenBesselSeries(double gamma, double beta, int max_abs_order,
                                 const Tolerance& tol) {
    tol.validate();
    max_order_ = std::abs(max_abs_order);
    gamma_neg_ = gamma < 0.0;
    beta_neg_ = beta < 0.0;

    int w = series_window(beta);
    build(std::abs(gamma), std::abs(beta), w, tol);
    if (tail_ >= tol.eps) {
        // one escalation before giving up
        w += std::max(8, w / 2);
        build(std::abs(gamma), std::abs(beta), w, tol);
        if (tail_ >= tol.eps)
            throw AccuracyError("gen_bessel: tail cannot be certified below eps", tail_);
    }
}

void GenBesselSeries::build(double gamma, double beta, int window, const Tolerance& tol) {
    if (2 * window + 1 > tol.max_terms)
        throw AccuracyError("gen_bessel: window exceeds max_terms", 1.0);
    window_ = window;
    jb_ = bessel_j_array(window + 4, beta);
    const int ng = max_order_ + 2 * window + 4;
    jg_ = bessel_j_array(ng, gamma);
    // |J_n(gamma)| <= 1 bounds the cofactor of every omitted term
    tail_ = tail_beyond(jb_, window, tol.eps);
}

double GenBesselSeries::eval(int r) const {
    if (std::abs(r) > max_order_)
        throw DomainError("GenBesselSeries: order outside the constructed span");
    Kahan acc;
    for (int k = -window_; k <= window_; ++k) {
        double t = bessel_lookup(jb_, k);
        if (t == 0.0) continue;
        if (beta_neg_ && (k & 1)) t = -t;
        acc.add(t * bessel_lookup(jg_, r - 2 * k));
    }
    double v = acc.sum;
    if (gamma_neg_ && (r & 1)) v = -v;
    return v;
}

double gen_bessel(int r, double gamma, double beta, const Tolerance& tol) {
    return GenBesselSeries(gamma, beta, std::abs(r), tol).eval(r);
}

// ---------------------------------------------------------------------------
// TwoWaveSeries

TwoWaveSeries::TwoWaveSeries(const TwoWaveArgs& args, int r_span, int rp_span,
                             const Tolerance& tol)
    : args_(args) {
    tol.validate();
    r_span_ = std::abs(r_span);
    rp_span_ = std::abs(rp_span);
    ap_neg_ = args.alpha_plus < 0.0;
    am_neg_ = args.alpha_minus < 0.0;

    int wp = series_window(args.alpha_plus);
    int wm = series_window(args.alpha_minus);
    build(wp, wm, tol);
    if (tail_ >= tol.eps) {
        wp += std::max(8, wp / 2);
        wm += std::max(8, wm / 2);
        build(wp, wm, tol);
        if (tail_ >= tol.eps)
            throw AccuracyError("two_wave_i: tail cannot be certified below eps", tail_);
    }
}

void TwoWaveSeries::build(int wp, int wm, const Tolerance& tol) {
    if (2 * wp + 1 > tol.max_terms || 2 * wm + 1 > tol.max_terms)
        throw AccuracyError("two_wave_i: window exceeds max_terms", 1.0);
    wp_ = wp;
    wm_ = wm;
    japlus_ = bessel_j_array(wp + 4, std::abs(args_.alpha_plus));
    jaminus_ = bessel_j_array(wm + 4, std::abs(args_.alpha_minus));
    double splus = 0.0, sminus = 0.0;
    for (int j = -wp; j <= wp; ++j) splus += std::abs(bessel_lookup(japlus_, j));
    for (int j = -wm; j <= wm; ++j) sminus += std::abs(bessel_lookup(jaminus_, j));

    // the inner-series error enters multiplied by sum|J_j| sum|J_j'|
    Tolerance inner = tol;
    inner.eps = 0.05 * tol.eps / std::max(1.0, splus * sminus);
    const int shift = wp + wm + 2;
    GenBesselSeries gs1(args_.gamma1, args_.beta1, r_span_ + shift, inner);
    GenBesselSeries gs2(args_.gamma2, args_.beta2, rp_span_ + shift, inner);
    g1_lo_ = -(r_span_ + shift);
    g2_lo_ = -(rp_span_ + shift);
    g1_.resize(static_cast<size_t>(2 * (r_span_ + shift)) + 1);
    g2_.resize(static_cast<size_t>(2 * (rp_span_ + shift)) + 1);
    for (int n = g1_lo_; n <= r_span_ + shift; ++n) g1_[static_cast<size_t>(n - g1_lo_)] = gs1.eval(n);
    for (int n = g2_lo_; n <= rp_span_ + shift; ++n) g2_[static_cast<size_t>(n - g2_lo_)] = gs2.eval(n);

    // tail certificate: |J_r(g,b)| <= 1, so terms outside the (j, j')
    // rectangle are bounded by the one-dimensional Bessel tails, and the
    // inner-series errors enter through sum |J_j| sum |J_j'|.
    const double tplus = tail_beyond(japlus_, wp, tol.eps);
    const double tminus = tail_beyond(jaminus_, wm, tol.eps);
    tail_ = tplus * (sminus + tminus) + splus * tminus +
            splus * sminus * (gs1.tail_bound() + gs2.tail_bound());
}

double TwoWaveSeries::eval(int r, int rp) const {
    if (std::abs(r) > r_span_ || std::abs(rp) > rp_span_)
        throw DomainError("TwoWaveSeries: indices outside the constructed span");
    Kahan acc;
    for (int j = -wp_; j <= wp_; ++j) {
        double aj = bessel_lookup(japlus_, j);
        if (aj == 0.0) continue;
        if (ap_neg_ && (j & 1)) aj = -aj;
        for (int jp = -wm_; jp <= wm_; ++jp) {
            double ajp = bessel_lookup(jaminus_, jp);
            if (ajp == 0.0) continue;
            if (am_neg_ && (jp & 1)) ajp = -ajp;
            const double g1 = g1_[static_cast<size_t>(r - j - jp - g1_lo_)];
            const double g2 = g2_[static_cast<size_t>(rp - j + jp - g2_lo_)];
            acc.add(aj * ajp * g1 * g2);
        }
    }
    return acc.sum;
}

double two_wave_i(int r, int rp, const TwoWaveArgs& args, const Tolerance& tol) {
    return TwoWaveSeries(args, std::abs(r), std::abs(rp), tol).eval(r, rp);
}

double interference_j(int r1, int r2, double beta1, double beta2,
                      double alpha_plus, double alpha_minus, const Tolerance& tol) {
    // defining identity: J_{r1 r2} = I_{r1+r2, r1-r2}(0, b1; 0, b2; a+, a-)
    const TwoWaveArgs args{0.0, beta1, 0.0, beta2, alpha_plus, alpha_minus};
    return two_wave_i(r1 + r2, r1 - r2, args, tol);
}

// ---------------------------------------------------------------------------
// coefficient functions

Eigen::Vector2d coeff_d(int r, int rp, const TwoWaveArgs& args, double eta1, double eta2,
                        const Eigen::Vector2d& pol1, const Eigen::Vector2d& pol2,
                        const Tolerance& tol) {
    const TwoWaveSeries s(args, std::abs(r) + 1, std::abs(rp) + 1, tol);
    const double w1 = s.eval(r + 1, rp) + s.eval(r - 1, rp);
    const double w2 = s.eval(r, rp + 1) + s.eval(r, rp - 1);
    return pol1 * (eta1 * w1) + pol2 * (eta2 * w2);
}

double coeff_b(int r, int rp, const TwoWaveArgs& args, double eta1, double eta2,
               double delta, const Tolerance& tol) {
    const TwoWaveSeries s(args, std::abs(r) + 2, std::abs(rp) + 2, tol);
    const double i00 = s.eval(r, rp);
    const double t1 = s.eval(r + 2, rp) + s.eval(r - 2, rp) + 2.0 * i00;
    const double t2 = s.eval(r, rp + 2) + s.eval(r, rp - 2) + 2.0 * i00;
    const double tx = s.eval(r - 1, rp - 1) + s.eval(r + 1, rp + 1) +
                      s.eval(r - 1, rp + 1) + s.eval(r + 1, rp - 1);
    return eta1 * eta1 * t1 + eta2 * eta2 * t2 + 2.0 * eta1 * eta2 * tx * std::cos(delta);
}

namespace {

// shared evaluator over interference cells (s1, s2) +- 1
TwoWaveSeries interference_series(int s1, int s2, double beta1, double beta2,
                                  double alpha_plus, double alpha_minus,
                                  const Tolerance& tol) {
    const TwoWaveArgs args{0.0, beta1, 0.0, beta2, alpha_plus, alpha_minus};
    const int span = std::abs(s1) + std::abs(s2) + 2;
    return TwoWaveSeries(args, span, span, tol);
}

double jcell(const TwoWaveSeries& s, int r1, int r2) { return s.eval(r1 + r2, r1 - r2); }

}  // namespace

double coeff_b_prime(int s1, int s2, double beta1, double beta2,
                     double alpha_plus, double alpha_minus,
                     double eta1, double eta2, const Tolerance& tol) {
    const TwoWaveSeries s = interference_series(s1, s2, beta1, beta2, alpha_plus, alpha_minus, tol);
    const double j00 = jcell(s, s1, s2);
    const double t1 = jcell(s, s1 + 1, s2 + 1) + jcell(s, s1 - 1, s2 - 1) + 2.0 * j00;
    const double t2 = jcell(s, s1 + 1, s2 - 1) + jcell(s, s1 - 1, s2 + 1) + 2.0 * j00;
    const double tx = jcell(s, s1 - 1, s2) + jcell(s, s1 + 1, s2) +
                      jcell(s, s1, s2 + 1) + jcell(s, s1, s2 - 1);
    return eta1 * eta1 * t1 + eta2 * eta2 * t2 + 2.0 * eta1 * eta2 * tx;
}

Eigen::Vector2d coeff_d_doubleprime(int s1, int s2, double beta1, double beta2,
                                    double alpha_plus, double alpha_minus,
                                    double eta1, double eta2, const Tolerance& tol) {
    const TwoWaveSeries s = interference_series(s1, s2, beta1, beta2, alpha_plus, alpha_minus, tol);
    const double v = eta1 * (jcell(s, s1, s2) + jcell(s, s1 - 1, s2 - 1)) +
                     eta2 * (jcell(s, s1, s2 - 1) + jcell(s, s1 - 1, s2));
    return Eigen::Vector2d(v, 0.0);  // along e_x
}

double coeff_b_prime_single(int s1, double beta1, double eta1) {
    return eta1 * eta1 *
           (bessel_j(s1 + 1, beta1) + bessel_j(s1 - 1, beta1) + 2.0 * bessel_j(s1, beta1));
}

Eigen::Vector2d coeff_d_doubleprime_single(int s1, double beta1, double eta1) {
    return Eigen::Vector2d(eta1 * (bessel_j(s1, beta1) + bessel_j(s1 - 1, beta1)), 0.0);
}

std::variant<double, Eigen::Vector2d>
coeff_interference(InterferenceCoeff kind, int s1, int s2, double beta1, double beta2,
                   double alpha_plus, double alpha_minus, double eta1, double eta2,
                   const Tolerance& tol) {
    switch (kind) {
        case InterferenceCoeff::b_prime:
            return coeff_b_prime(s1, s2, beta1, beta2, alpha_plus, alpha_minus, eta1, eta2, tol);
        case InterferenceCoeff::d_doubleprime:
            return coeff_d_doubleprime(s1, s2, beta1, beta2, alpha_plus, alpha_minus, eta1, eta2, tol);
        case InterferenceCoeff::b_prime_single:
            if (eta2 != 0.0) throw DomainError("coeff_interference: single-wave kind requires eta2 = 0");
            return coeff_b_prime_single(s1, beta1, eta1);
        case InterferenceCoeff::d_doubleprime_single:
            if (eta2 != 0.0) throw DomainError("coeff_interference: single-wave kind requires eta2 = 0");
            return coeff_d_doubleprime_single(s1, beta1, eta1);
    }
    throw DomainError("coeff_interference: unknown kind");
}

}  // namespace sbwave
