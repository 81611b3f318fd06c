#ifndef RAMF_NUMERIC_HPP
#define RAMF_NUMERIC_HPP

#include "ramf/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <utility>
#include <vector>

namespace ramf {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                            boost::multiprecision::et_off>;

/// Working precision in decimal digits for all Reals constructed afterwards.
void set_precision(unsigned digits10);
unsigned precision();

Real pi_real();                 // at current precision
Real real_from(const Rat& q);
Real real_from(const Int& n);
Real real_parse(const std::string& s);
Real zeta_int(unsigned long s);  // zeta at integer s >= 2
Real real_pow_int(const Real& x, long k);

std::string real_str(const Real& x, unsigned digits10);

struct Cplx {
    Real re, im;
    Cplx() : re(0), im(0) {}
    Cplx(Real r) : re(std::move(r)), im(0) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cplx(long r) : re(r), im(0) {}

    Cplx operator-() const { return {-re, -im}; }
    Cplx conj() const { return {re, -im}; }
    Real norm2() const { return re * re + im * im; }
    Real abs() const { return sqrt(norm2()); }

    Cplx& operator+=(const Cplx& o) { re += o.re; im += o.im; return *this; }
    Cplx& operator-=(const Cplx& o) { re -= o.re; im -= o.im; return *this; }
    Cplx& operator*=(const Cplx& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Cplx& operator*=(const Real& c) { re *= c; im *= c; return *this; }
};

inline Cplx operator+(Cplx a, const Cplx& b) { return a += b; }
inline Cplx operator-(Cplx a, const Cplx& b) { return a -= b; }
inline Cplx operator*(Cplx a, const Cplx& b) { return a *= b; }
inline Cplx operator*(const Real& c, Cplx a) { return a *= c; }
inline Cplx operator/(const Cplx& a, const Cplx& b) {
    Real n = b.norm2();
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

Cplx cexp(const Cplx& z);
Cplx cpow(const Cplx& z, long k);   // integer powers, k may be negative
Cplx parse_complex(const std::string& s);   // "2i", "1.5", "0.5+2i", "-1+0.25i"
std::string complex_str(const Cplx& z, unsigned digits10);

/// Gauss-Legendre nodes/weights on [-1,1], computed and cached at the current
/// precision.
const std::vector<std::pair<Real, Real>>& gl_rule(int order);

struct LsqResult {
    std::vector<Cplx> x;
    Real residual;  // ||Ax-b|| / max(1, ||b||)
};

/// Least squares for an overdetermined complex system via normal equations.
LsqResult least_squares(const std::vector<std::vector<Cplx>>& A, const std::vector<Cplx>& b);

} // namespace ramf

#endif
