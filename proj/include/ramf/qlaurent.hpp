#ifndef RAMF_QLAURENT_HPP
#define RAMF_QLAURENT_HPP

#include "ramf/rational.hpp"

#include <vector>

namespace ramf {

/// Truncated Laurent series in q with exact rational coefficients.
///
/// Coefficients are stored for exponents valuation()..truncation(); every
/// exponent below the valuation is exactly zero, every exponent above the
/// truncation is unknown.  Binary operations propagate the provable common
/// truncation instead of failing, so long pipelines compose.  The weight is
/// declared metadata (the modular weight of the form the series expands).
class QLaurent {
public:
    QLaurent(int weight, long valuation, std::vector<Rat> coeffs, long truncation);

    static QLaurent zero(int weight, long truncation);
    static QLaurent constant(int weight, const Rat& c, long truncation);
    static QLaurent monomial(int weight, long exponent, const Rat& c, long truncation);

    int weight() const { return weight_; }
    long valuation() const { return val_; }
    long truncation() const { return trunc_; }

    /// Coefficient of q^e; zero below the valuation, error above the truncation.
    const Rat& at(long e) const;
    bool known(long e) const { return e <= trunc_; }

    bool is_zero() const { return c_.empty(); }
    long leading_exponent() const;   // first nonzero exponent; error if zero series
    long pole_order() const;         // max(0, -leading_exponent), 0 for the zero series

    QLaurent operator-() const;
    QLaurent shifted(long e) const;          // multiply by q^e
    QLaurent truncated(long t) const;        // lower the truncation
    QLaurent with_weight(int w) const;       // relabel the declared weight

    QLaurent inverse() const;                // leading coefficient must be nonzero
    QLaurent pow(long k) const;              // any integer k

    friend QLaurent operator+(const QLaurent& a, const QLaurent& b);
    friend QLaurent operator-(const QLaurent& a, const QLaurent& b);
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    friend QLaurent operator/(const QLaurent& a, const QLaurent& b);
    friend QLaurent operator*(const Rat& c, const QLaurent& a);

private:
    int weight_;
    long val_;
    long trunc_;
    std::vector<Rat> c_;  // c_[i] = coefficient of q^(val_ + i)

    void normalize();
};

/// Equality of all coefficients through q^order (error if either side does not
/// reach that order).
bool equal_through(const QLaurent& a, const QLaurent& b, long order);

} // namespace ramf

#endif
