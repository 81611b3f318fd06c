#include "ramf/qlaurent.hpp"

#include <algorithm>

namespace ramf {

static const Rat kZero = 0;

QLaurent::QLaurent(int weight, long valuation, std::vector<Rat> coeffs, long truncation)
    : weight_(weight), val_(valuation), trunc_(truncation), c_(std::move(coeffs)) {
    if (static_cast<long>(c_.size()) != trunc_ - val_ + 1)
        throw error("QLaurent: coefficient count does not match valuation..truncation");
    normalize();
}

void QLaurent::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        val_ = trunc_ + 1;
        return;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        val_ += static_cast<long>(lead);
    }
}

QLaurent QLaurent::zero(int weight, long truncation) {
    return QLaurent(weight, truncation + 1, {}, truncation);
}

QLaurent QLaurent::constant(int weight, const Rat& c, long truncation) {
    return monomial(weight, 0, c, truncation);
}

QLaurent QLaurent::monomial(int weight, long exponent, const Rat& c, long truncation) {
    if (exponent > truncation) throw error("QLaurent: monomial exponent beyond truncation");
    std::vector<Rat> v(static_cast<size_t>(truncation - exponent + 1), kZero);
    v[0] = c;
    return QLaurent(weight, exponent, std::move(v), truncation);
}

const Rat& QLaurent::at(long e) const {
    if (e > trunc_) throw error("QLaurent: coefficient beyond truncation");
    if (e < val_) return kZero;
    return c_[static_cast<size_t>(e - val_)];
}

long QLaurent::leading_exponent() const {
    if (c_.empty()) throw error("QLaurent: zero series has no leading exponent");
    return val_;  // normalize() keeps the first stored coefficient nonzero
}

long QLaurent::pole_order() const {
    if (c_.empty()) return 0;
    return std::max(0L, -val_);
}

QLaurent QLaurent::operator-() const {
    std::vector<Rat> v = c_;
    for (auto& x : v) x = -x;
    return QLaurent(weight_, val_, std::move(v), trunc_);
}

QLaurent QLaurent::shifted(long e) const {
    return QLaurent(weight_, val_ + e, c_, trunc_ + e);
}

QLaurent QLaurent::truncated(long t) const {
    if (t > trunc_) throw error("QLaurent: cannot extend truncation");
    if (c_.empty()) return QLaurent::zero(weight_, t);
    if (t < val_ - 1) throw error("QLaurent: truncation underflow");
    std::vector<Rat> v(c_.begin(), c_.begin() + (t - val_ + 1));
    return QLaurent(weight_, val_, std::move(v), t);
}

QLaurent QLaurent::with_weight(int w) const {
    return QLaurent(w, val_, c_, trunc_);
}

QLaurent operator+(const QLaurent& a, const QLaurent& b) {
    if (a.weight_ != b.weight_) throw error("QLaurent: adding series of different weights");
    long trunc = std::min(a.trunc_, b.trunc_);
    long val = std::min(a.val_, b.val_);
    if (trunc < val - 1) throw error("QLaurent: truncation underflow in addition");
    std::vector<Rat> v(static_cast<size_t>(trunc - val + 1), kZero);
    for (long e = val; e <= trunc; ++e) {
        Rat s = 0;
        if (e >= a.val_ && e <= a.trunc_) s += a.c_[static_cast<size_t>(e - a.val_)];
        if (e >= b.val_ && e <= b.trunc_) s += b.c_[static_cast<size_t>(e - b.val_)];
        v[static_cast<size_t>(e - val)] = s;
    }
    return QLaurent(a.weight_, val, std::move(v), trunc);
}

QLaurent operator-(const QLaurent& a, const QLaurent& b) { return a + (-b); }

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    int w = a.weight_ + b.weight_;
    if (a.is_zero() || b.is_zero()) {
        // relative length of a product is the smaller relative length
        long la = a.trunc_ - a.val_ + 1, lb = b.trunc_ - b.val_ + 1;
        long val = a.val_ + b.val_;
        return QLaurent::zero(w, val + std::min(la, lb) - 1);
    }
    long val = a.val_ + b.val_;
    long trunc = std::min(a.trunc_ + b.val_, b.trunc_ + a.val_);
    std::vector<Rat> v(static_cast<size_t>(trunc - val + 1), kZero);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        long ea = a.val_ + static_cast<long>(i);
        long room = trunc - ea - b.val_ + 1;
        if (room <= 0) continue;
        size_t jmax = std::min(b.c_.size(), static_cast<size_t>(room));
        for (size_t j = 0; j < jmax; ++j) {
            if (b.c_[j] == 0) continue;
            v[static_cast<size_t>(ea + b.val_ + static_cast<long>(j) - val)] += a.c_[i] * b.c_[j];
        }
    }
    return QLaurent(w, val, std::move(v), trunc);
}

QLaurent operator*(const Rat& c, const QLaurent& a) {
    std::vector<Rat> v = a.c_;
    for (auto& x : v) x *= c;
    return QLaurent(a.weight_, a.val_, std::move(v), a.trunc_);
}

QLaurent QLaurent::inverse() const {
    if (c_.empty()) throw error("QLaurent: division by zero series");
    // unit part u = sum_{i=0..L} c_[i] q^i with c_[0] != 0
    long L = trunc_ - val_;
    std::vector<Rat> d(static_cast<size_t>(L + 1), kZero);
    d[0] = rat(1) / c_[0];
    for (long j = 1; j <= L; ++j) {
        Rat s = 0;
        for (long i = 1; i <= j; ++i)
            if (c_[static_cast<size_t>(i)] != 0) s += c_[static_cast<size_t>(i)] * d[static_cast<size_t>(j - i)];
        d[static_cast<size_t>(j)] = -s / c_[0];
    }
    return QLaurent(-weight_, -val_, std::move(d), -val_ + L);
}

QLaurent operator/(const QLaurent& a, const QLaurent& b) { return a * b.inverse(); }

QLaurent QLaurent::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    if (c_.empty() && k > 0) return QLaurent::zero(weight_ * static_cast<int>(k), trunc_);
    long L = std::max(trunc_ - val_, 0L);
    QLaurent acc = QLaurent::constant(0, rat(1), L);
    QLaurent base = *this;
    long e = k;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool equal_through(const QLaurent& a, const QLaurent& b, long order) {
    if (!a.known(order) || !b.known(order))
        throw error("equal_through: order beyond a truncation");
    long lo = std::min(a.valuation(), b.valuation());
    for (long e = lo; e <= order; ++e)
        if (a.at(e) != b.at(e)) return false;
    return true;
}

} // namespace ramf
