#include "sbwave/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

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

// Ascending power series, n >= 0, 0 < x <= 12.
double ascending_series(int n, double x) {
    const double h = 0.5 * x;
    const double lt = n * std::log(h) - std::lgamma(n + 1.0);
    if (lt < -708.0) return 0.0;  // below 1e-290 even after series growth
    double term = std::exp(lt);
    Kahan acc;
    acc.add(term);
    const double h2 = h * h;
    for (int k = 1; k <= 200; ++k) {
        term *= -h2 / (static_cast<double>(k) * (n + k));
        acc.add(term);
        if (std::abs(term) < 1e-17 * (std::abs(acc.sum) + 1e-280) && k > 2) break;
    }
    return acc.sum;
}

// Backward (Miller) recurrence for J_0..J_nmax at x > 0, normalized by
// J_0 + 2 sum_{k even > 0} J_k = 1.
std::vector<double> miller_sweep(int nmax, double x) {
    const int nt = std::max({nmax, static_cast<int>(std::ceil(x)), 8});
    int m = nt + 60 + static_cast<int>(std::ceil(6.0 * std::cbrt(static_cast<double>(nt))));
    if (m % 2) ++m;

    std::vector<double> f(static_cast<size_t>(m) + 2, 0.0);
    f[static_cast<size_t>(m) + 1] = 0.0;
    f[static_cast<size_t>(m)] = 1e-30;
    for (int k = m - 1; k >= 0; --k) {
        f[k] = (2.0 * (k + 1) / x) * f[k + 1] - f[k + 2];
        if (std::abs(f[k]) > 1e250) {
            for (int i = k; i <= m + 1; ++i) f[i] *= 1e-250;
        }
    }
    Kahan norm;
    norm.add(f[0]);
    for (int k = 2; k <= m; k += 2) norm.add(2.0 * f[k]);

    std::vector<double> out(static_cast<size_t>(nmax) + 1, 0.0);
    for (int n = 0; n <= nmax; ++n) out[n] = f[n] / norm.sum;
    return out;
}

}  // namespace

double bessel_j(int n, double x) {
    double sign = 1.0;
    if (x < 0.0) {
        x = -x;
        if (n & 1) sign = -sign;
    }
    if (n < 0) {
        n = -n;
        if (n & 1) sign = -sign;
    }
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (x <= 12.0) return sign * ascending_series(n, x);
    return sign * miller_sweep(n, x)[static_cast<size_t>(n)];
}

std::vector<double> bessel_j_array(int nmax, double x) {
    if (nmax < 0) std::abort();
    x = std::abs(x);  // caller applies parity for negative arguments
    if (x == 0.0) {
        std::vector<double> out(static_cast<size_t>(nmax) + 1, 0.0);
        out[0] = 1.0;
        return out;
    }
    return miller_sweep(nmax, x);
}

}  // namespace sbwave
