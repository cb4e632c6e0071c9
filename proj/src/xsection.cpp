#include "sbwave/xsection.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <thread>
#include <utility>
#include <vector>

#include "sbwave/bessel.hpp"
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

void parallel_for(int threads, size_t n, const std::function<void(size_t, size_t)>& body) {
    threads = std::max(1, threads);
    if (threads == 1 || n < 64) {
        body(0, n);
        return;
    }
    const size_t nt = std::min<size_t>(static_cast<size_t>(threads), n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    const size_t chunk = (n + nt - 1) / nt;
    for (size_t t = 0; t < nt; ++t) {
        const size_t lo = t * chunk;
        const size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

// mode-specific weight of one index cell; immutable after construction
class CellEvaluator {
public:
    CellEvaluator(SpectrumMode mode, const MultiphotonParams& p, int cap, const Tolerance& tol)
        : mode_(mode) {
        switch (mode) {
            case SpectrumMode::noninterference:
                series_ = std::make_unique<TwoWaveSeries>(p.args(), cap, cap, tol);
                break;
            case SpectrumMode::interference:
                series_ = std::make_unique<TwoWaveSeries>(p.interference_args(), 2 * cap + 1,
                                                          2 * cap + 1, tol);
                break;
            case SpectrumMode::factorized:
                jg1_ = bessel_j_array(cap + 2, std::abs(p.gamma1));
                jg2_ = bessel_j_array(cap + 2, std::abs(p.gamma2));
                break;
            case SpectrumMode::single_wave_even:
                jb1_ = bessel_j_array(cap + 2, std::abs(p.beta1));
                break;
        }
    }

    double weight(int i1, int i2) const {
        switch (mode_) {
            case SpectrumMode::noninterference: {
                const double v = series_->eval(i1, i2);
                return v * v;
            }
            case SpectrumMode::interference: {
                const double v = series_->eval(i1 + i2, i1 - i2);
                return v * v;
            }
            case SpectrumMode::factorized: {
                const double a = bessel_lookup(jg1_, i1);
                const double b = bessel_lookup(jg2_, i2);
                return a * a * b * b;
            }
            case SpectrumMode::single_wave_even: {
                const double a = bessel_lookup(jb1_, i1);
                return a * a;
            }
        }
        return 0.0;
    }

private:
    SpectrumMode mode_;
    std::unique_ptr<TwoWaveSeries> series_;
    std::vector<double> jg1_, jg2_, jb1_;
};

// perimeter of the square shell of radius R, lexicographic order
std::vector<std::pair<int, int>> shell_cells(SpectrumMode mode, int radius) {
    std::vector<std::pair<int, int>> cells;
    if (mode == SpectrumMode::single_wave_even) {
        if (radius == 0)
            cells.emplace_back(0, 0);
        else {
            cells.emplace_back(-radius, 0);
            cells.emplace_back(radius, 0);
        }
        return cells;
    }
    if (radius == 0) {
        cells.emplace_back(0, 0);
        return cells;
    }
    for (int i2 = -radius; i2 <= radius; ++i2) cells.emplace_back(-radius, i2);
    for (int i1 = -radius + 1; i1 <= radius - 1; ++i1) {
        cells.emplace_back(i1, -radius);
        cells.emplace_back(i1, radius);
    }
    for (int i2 = -radius; i2 <= radius; ++i2) cells.emplace_back(radius, i2);
    return cells;
}

double mode_max_arg(SpectrumMode mode, const MultiphotonParams& p) {
    switch (mode) {
        case SpectrumMode::noninterference:
            return p.args().max_abs();
        case SpectrumMode::interference:
            return p.interference_args().max_abs();
        case SpectrumMode::factorized:
            return std::max(std::abs(p.gamma1), std::abs(p.gamma2));
        case SpectrumMode::single_wave_even:
            return std::abs(p.beta1);
    }
    return 0.0;
}

}  // namespace

const char* to_string(SpectrumMode m) {
    switch (m) {
        case SpectrumMode::noninterference: return "noninterference";
        case SpectrumMode::factorized: return "factorized";
        case SpectrumMode::interference: return "interference";
        case SpectrumMode::single_wave_even: return "single_wave_even";
    }
    return "?";
}

double weight_noninterference(int l, int s, const MultiphotonParams& params,
                              const Tolerance& tol) {
    const double v = two_wave_i(l, s, params.args(), tol);
    return v * v;
}

double weight_factorized(int l, int s, double gamma1, double gamma2) {
    const double a = bessel_j(l, gamma1);
    const double b = bessel_j(s, gamma2);
    return a * a * b * b;
}

double weight_interference(int l1, int l2, const MultiphotonParams& params,
                           const Tolerance& tol) {
    const double v = interference_j(l1, l2, params.beta1, params.beta2, params.alpha_plus,
                                    params.alpha_minus, tol);
    return v * v;
}

IndexMap index_map(int l, int s) {
    const int sum = l + s;
    const int dif = l - s;
    if ((sum & 1) == 0) return {CombinationParity::even_combination, sum / 2, dif / 2};
    return {CombinationParity::odd_combination, (sum + 1) / 2, (dif + 1) / 2};
}

Spectrum spectrum(SpectrumMode mode, const MultiphotonParams& params, double tail_tol,
                  const Tolerance& tol, int threads) {
    if (!(tail_tol > 0.0 && tail_tol < 0.1))
        throw DomainError("spectrum: tail_tol must lie in (0, 0.1)");
    tol.validate();

    const int cap = static_cast<int>(4.0 * (std::ceil(mode_max_arg(mode, params)) + 50.0));
    const CellEvaluator ev(mode, params, cap, tol);

    Spectrum out;
    out.mode = mode;
    out.params = params;

    Kahan cum;
    double shell_prev2 = 0.0, shell_prev = 0.0;
    for (int radius = 0; radius <= cap; ++radius) {
        const auto cells = shell_cells(mode, radius);
        std::vector<double> w(cells.size(), 0.0);
        parallel_for(threads, cells.size(), [&](size_t lo, size_t hi) {
            for (size_t i = lo; i < hi; ++i) w[i] = ev.weight(cells[i].first, cells[i].second);
        });
        Kahan shell_acc;
        for (size_t i = 0; i < cells.size(); ++i) {
            shell_acc.add(w[i]);
            cum.add(w[i]);
            out.entries.push_back({cells[i].first, cells[i].second, w[i], cum.sum});
        }
        const double shell = shell_acc.sum;

        if (cum.sum >= 1.0 - tail_tol) {
            const double resid = 1.0 - cum.sum;
            if (resid <= 1e-12) {
                out.tail_bound = std::max(resid, 0.0);
                return out;
            }
            if (radius >= 2 && shell > 0.0 && shell < shell_prev && shell_prev < shell_prev2) {
                const double rho = std::max(shell / shell_prev, shell_prev / shell_prev2);
                if (rho <= 0.5) {
                    // shells decay at least geometrically from here on
                    out.tail_bound = std::min(10.0 * shell * rho / (1.0 - rho), 1.0);
                    return out;
                }
            }
            if (radius >= 2 && shell == 0.0 && shell_prev == 0.0) {
                out.tail_bound = std::max(resid, 0.0);
                return out;
            }
        }
        shell_prev2 = shell_prev;
        shell_prev = shell;
    }
    throw NormalizationError("spectrum: unit mass not accumulated within the shell cap",
                             cum.sum);
}

double ratio_regimes(int l, int s, const MultiphotonParams& noninterference_params,
                     const MultiphotonParams& interference_params, const Tolerance& tol) {
    const IndexMap im = index_map(l, s);
    if (im.parity == CombinationParity::odd_combination)
        throw NoMatchingCellError(
            "ratio_regimes: (l, s) is an odd combination, no matching interference cell");
    const double num = weight_noninterference(l, s, noninterference_params, tol);
    const double den = weight_interference(im.l1, im.l2, interference_params, tol);
    if (den < 1e-300) return std::numeric_limits<double>::infinity();
    return num / den;
}

CombinedWave combined_wave(double f1, double f2, double delta) {
    if (f1 < 0.0 || f2 < 0.0 || (f1 == 0.0 && f2 == 0.0))
        throw DomainError("combined_wave: strengths must be >= 0 and not both zero");
    const double f = std::sqrt(
        std::max(0.0, f1 * f1 + f2 * f2 + 2.0 * f1 * f2 * std::cos(delta)));
    if (f <= 1e-12 * (f1 + f2))
        throw DomainError("combined_wave: degenerate polarization, combined field vanishes");
    const Eigen::Vector2d e1(1.0, 0.0);
    const Eigen::Vector2d e2(std::cos(delta), std::sin(delta));
    CombinedWave out;
    out.field = f;
    out.pol = (f1 * e1 + f2 * e2) / f;
    return out;
}

double baseline_dcs(BaselineKind kind, const ScatteringKinematics& kin, int z) {
    if (kind == BaselineKind::unit) return 1.0;

    const double m = kin.m;
    const double e0 = kin.p_i.t;
    const double ef = kin.p_f.t;
    const double k = kin.k_prime.t;
    if (k >= e0 - m)
        throw KinematicsError("baseline_dcs: kinematically forbidden, omega' >= E_i - m");
    if (std::abs(e0 - ef - k) > 1e-9 * e0)
        throw ValidationError("baseline_dcs: kinematics violates E_f = E_i - omega'");

    const double p0 = kin.p_i.r.norm();
    const double p = kin.p_f.r.norm();
    const Eigen::Vector3d kh = kin.k_prime.r / k;
    const double pk0 = kin.p_i.r.dot(kh);
    const double pk = kin.p_f.r.dot(kh);
    const double st2_0 = std::max(0.0, p0 * p0 - pk0 * pk0);  // p0^2 sin^2(theta0)
    const double st2 = std::max(0.0, p * p - pk * pk);        // p^2 sin^2(theta)
    const double d0 = e0 - pk0;                                // E0 - p0 cos(theta0)
    const double d = ef - pk;                                  // E - p cos(theta)
    const Eigen::Vector3d qv = kin.p_i.r - kin.p_f.r - kin.k_prime.r;
    const double q2 = qv.squaredNorm();
    // p p0 sin(theta) sin(theta0) cos(phi)
    const double cross = kin.p_f.r.dot(kin.p_i.r) - pk * pk0;

    const double bracket = st2 / (d * d) * (4.0 * e0 * e0 - q2) +
                           st2_0 / (d0 * d0) * (4.0 * ef * ef - q2) +
                           2.0 * k * k * (st2 + st2_0) / (d * d0) -
                           2.0 * cross / (d * d0) * (4.0 * e0 * ef - q2 + 2.0 * k * k);

    constexpr double alpha = 1.0 / 137.035999084;
    const double zz = static_cast<double>(z) * static_cast<double>(z);
    return zz * alpha * alpha * alpha / (8.0 * M_PI) * (p / p0) / (k * q2 * q2) * bracket;
}

}  // namespace sbwave
