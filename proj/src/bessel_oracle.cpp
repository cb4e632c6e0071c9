#include "sbwave/bessel_oracle.hpp"

#include <cmath>
#include <vector>

#include "sbwave/errors.hpp"

namespace sbwave {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

int even_at_least(double x) {
    int n = static_cast<int>(std::ceil(x));
    if (n % 2) ++n;
    return n;
}

}  // namespace

double oracle_gen_bessel(int r, double gamma, double beta) {
    auto quad = [&](int n, double* imag) {
        Kahan re, im;
        const double h = 2.0 * kPi / n;
        for (int i = 0; i < n; ++i) {
            const double t = -kPi + (i + 0.5) * h;
            const double f = gamma * std::sin(t) + beta * std::sin(2.0 * t) - r * t;
            re.add(std::cos(f));
            im.add(std::sin(f));
        }
        *imag = im.sum / n;
        return re.sum / n;
    };

    int n = even_at_least(std::max(64.0 * (1.0 + std::abs(gamma) + std::abs(beta)),
                                   4.0 * (std::abs(r) + 8.0)));
    double imag = 0.0;
    double v = quad(n, &imag);
    bool converged = false;
    for (int pass = 0; pass < 4; ++pass) {
        double imag2 = 0.0;
        const double v2 = quad(2 * n, &imag2);
        const double diff = std::abs(v2 - v);
        v = v2;
        imag = imag2;
        n *= 2;
        if (diff < 5e-13) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw AccuracyError("oracle_gen_bessel: quadrature did not stabilize to 1e-12", 1e-12);
    if (std::abs(imag) > 1e-12)
        throw RepresentationMismatchError(
            "oracle_gen_bessel: imaginary residual above 1e-12 (sign-convention bug?)", imag);
    return v;
}

double oracle_two_wave_i(int r, int rp, const TwoWaveArgs& a) {
    const double magsum = std::abs(a.gamma1) + std::abs(a.beta1) + std::abs(a.gamma2) +
                          std::abs(a.beta2) + std::abs(a.alpha_plus) + std::abs(a.alpha_minus);
    const int n = even_at_least(64.0 * (1.0 + magsum) + 4.0 * (std::abs(r) + std::abs(rp)));

    // both axes share the same node set
    std::vector<double> s1(n), c1(n), a1(n), b2(n);
    const double h = 2.0 * kPi / n;
    for (int i = 0; i < n; ++i) {
        const double p = -kPi + (i + 0.5) * h;
        const double sp = std::sin(p), cp = std::cos(p);
        const double s2p = std::sin(2.0 * p);
        s1[i] = sp;
        c1[i] = cp;
        a1[i] = a.gamma1 * sp + a.beta1 * s2p - r * p;
        b2[i] = a.gamma2 * sp + a.beta2 * s2p - rp * p;
    }
    const double cs = a.alpha_plus + a.alpha_minus;   // coefficient of sin(p1) cos(p2)
    const double cc = a.alpha_plus - a.alpha_minus;   // coefficient of cos(p1) sin(p2)

    Kahan re, im;
    for (int i = 0; i < n; ++i) {
        Kahan rrow, irow;
        const double ai = a1[i];
        const double u = cs * s1[i];  // multiplies cos(p2)
        const double w = cc * c1[i];  // multiplies sin(p2)
        for (int k = 0; k < n; ++k) {
            const double f = ai + b2[k] + u * c1[k] + w * s1[k];
            rrow.add(std::cos(f));
            irow.add(std::sin(f));
        }
        re.add(rrow.sum);
        im.add(irow.sum);
    }
    const double scale = 1.0 / (static_cast<double>(n) * n);
    const double imag = im.sum * scale;
    if (std::abs(imag) > 1e-10)
        throw RepresentationMismatchError(
            "oracle_two_wave_i: imaginary residual above 1e-10 (sign-convention bug?)", imag);
    return re.sum * scale;
}

}  // namespace sbwave
