#ifndef SBWAVE_BESSEL_ORACLE_HPP
#define SBWAVE_BESSEL_ORACLE_HPP

#include "sbwave/mp_bessel.hpp"

namespace sbwave {

/// Quadrature oracle for the generalized Bessel function,
///   J_r(gamma, beta) = (1/2pi) int_{-pi}^{pi} exp(i [gamma sin t + beta sin 2t - r t]) dt,
/// evaluated by the periodic rectangle rule with node doubling until the
/// value is stable to 1e-12.  The imaginary part of the integral must
/// vanish; a residual above 1e-12 throws RepresentationMismatchError.
/// Independent of the series evaluation path.
double oracle_gen_bessel(int r, double gamma, double beta);

/// Quadrature oracle for the two-wave function I_rr', the double Fourier
/// coefficient of exp(i f(p1, p2)) with
///   f = g1 sin p1 + b1 sin 2p1 + g2 sin p2 + b2 sin 2p2
///     + a+ sin(p1 + p2) + a- sin(p1 - p2),
/// by tensor-product rectangle quadrature to 1e-10.  Imaginary residual
/// above 1e-10 throws RepresentationMismatchError.
double oracle_two_wave_i(int r, int rp, const TwoWaveArgs& args);

}  // namespace sbwave

#endif
