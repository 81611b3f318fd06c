#ifndef RAMF_VNPOLY_HPP
#define RAMF_VNPOLY_HPP

#include "ramf/numeric.hpp"

namespace ramf {
namespace cocycle {

struct Mat2 {
    long a, b, c, d;
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
};

inline Mat2 mat_S() { return {0, -1, 1, 0}; }
inline Mat2 mat_T() { return {1, 1, 0, 1}; }
inline Mat2 mat_id() { return {1, 0, 0, 1}; }

/// Moebius action on the upper half plane.
Cplx moebius(const Mat2& g, const Cplx& z);

/// Degree-n homogeneous polynomial in X, Y; coeffs[j] multiplies X^{n-j} Y^j.
struct VnPoly {
    int n = 0;
    std::vector<Cplx> c;

    VnPoly() = default;
    explicit VnPoly(int deg) : n(deg), c(static_cast<size_t>(deg + 1)) {}

    VnPoly& operator+=(const VnPoly& o);
    VnPoly& operator-=(const VnPoly& o);
    VnPoly& operator*=(const Real& s);
    Real sup_norm() const;
};

VnPoly operator+(VnPoly a, const VnPoly& b);
VnPoly operator-(VnPoly a, const VnPoly& b);
VnPoly operator*(const Cplx& s, VnPoly a);

/// Matrix of the right action P -> P|_g, (X,Y) -> (aX+bY, cX+dY), on the
/// monomial basis: column j holds the expansion of (aX+bY)^{n-j}(cX+dY)^j.
std::vector<std::vector<Rat>> vn_action_matrix(int n, const Mat2& g);

VnPoly vn_act(const VnPoly& P, const Mat2& g);
std::vector<Rat> vn_act(const std::vector<Rat>& P, int n, const Mat2& g);

/// Even/odd period polynomials of the weight-12 cusp form, as exact
/// coefficient vectors on X^{10-j} Y^j:
///   P+_S = 36/691 (Y^10 - X^10) + X^2 Y^2 (X^2 - Y^2)^3
///   P-_S = 4X^9Y - 25X^7Y^3 + 42X^5Y^5 - 25X^3Y^7 + 4XY^9
std::pair<std::vector<Rat>, std::vector<Rat>> period_polynomials_wt12();

VnPoly to_vnpoly(const std::vector<Rat>& coeffs);

} // namespace cocycle
} // namespace ramf

#endif
