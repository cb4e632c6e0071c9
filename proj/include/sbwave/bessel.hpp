#ifndef SBWAVE_BESSEL_HPP
#define SBWAVE_BESSEL_HPP

#include <vector>

namespace sbwave {

/// Integer-order Bessel function of the first kind, J_n(x), accurate to
/// 1e-12 absolute for any n and real x.  Ascending series for |x| <= 12,
/// backward (Miller) recurrence normalized with J_0 + 2 sum J_2k = 1
/// for larger |x|.
double bessel_j(int n, double x);

/// J_0(x) .. J_nmax(x) in one backward-recurrence sweep.  Negative
/// orders follow from J_{-n} = (-1)^n J_n.
std::vector<double> bessel_j_array(int nmax, double x);

/// Lookup helper for arrays produced by bessel_j_array: J_n for signed
/// n with x >= 0, zero outside the tabulated range.
inline double bessel_lookup(const std::vector<double>& table, int n) {
    const int a = n < 0 ? -n : n;
    if (a >= static_cast<int>(table.size())) return 0.0;
    const double v = table[static_cast<size_t>(a)];
    return (n < 0 && (a & 1)) ? -v : v;
}

}  // namespace sbwave

#endif
