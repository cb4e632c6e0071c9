#ifndef SBWAVE_FOUR_VECTOR_HPP
#define SBWAVE_FOUR_VECTOR_HPP

#include <Eigen/Core>

namespace sbwave {

/// Minkowski four-vector with metric (+,-,-,-).  Relativistic units
/// (hbar = c = 1); the library works internally with the electron mass
/// as the energy unit, but nothing here depends on that choice.
struct FourVector {
    double t = 0.0;                                ///< energy-like component
    Eigen::Vector3d r = Eigen::Vector3d::Zero();   ///< momentum-like components

    FourVector() = default;
    FourVector(double t_, double x_, double y_, double z_) : t(t_), r(x_, y_, z_) {}
    FourVector(double t_, const Eigen::Vector3d& r_) : t(t_), r(r_) {}

    double x() const { return r.x(); }
    double y() const { return r.y(); }
    double z() const { return r.z(); }

    FourVector& operator+=(const FourVector& o) { t += o.t; r += o.r; return *this; }
    FourVector& operator-=(const FourVector& o) { t -= o.t; r -= o.r; return *this; }
    FourVector& operator*=(double c) { t *= c; r *= c; return *this; }
};

inline FourVector operator+(FourVector a, const FourVector& b) { a += b; return a; }
inline FourVector operator-(FourVector a, const FourVector& b) { a -= b; return a; }
inline FourVector operator*(double c, FourVector a) { a *= c; return a; }
inline FourVector operator*(FourVector a, double c) { a *= c; return a; }
inline FourVector operator-(const FourVector& a) { return FourVector(-a.t, -a.r); }

/// Minkowski product a·b = a.t b.t - a.r · b.r.
inline double mdot(const FourVector& a, const FourVector& b) {
    return a.t * b.t - a.r.dot(b.r);
}

/// Minkowski square a·a.
inline double msq(const FourVector& a) { return mdot(a, a); }

}  // namespace sbwave

#endif
