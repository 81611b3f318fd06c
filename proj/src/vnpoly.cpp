#include "ramf/vnpoly.hpp"

namespace ramf {
namespace cocycle {

Cplx moebius(const Mat2& g, const Cplx& z) {
    Cplx num = Real(g.a) * z + Cplx(Real(g.b));
    Cplx den = Real(g.c) * z + Cplx(Real(g.d));
    return num / den;
}

VnPoly& VnPoly::operator+=(const VnPoly& o) {
    if (n != o.n) throw error("VnPoly: degree mismatch");
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

VnPoly& VnPoly::operator-=(const VnPoly& o) {
    if (n != o.n) throw error("VnPoly: degree mismatch");
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

VnPoly& VnPoly::operator*=(const Real& s) {
    for (auto& x : c) x *= s;
    return *this;
}

Real VnPoly::sup_norm() const {
    Real m = 0;
    for (const auto& x : c) {
        Real a = x.abs();
        if (a > m) m = a;
    }
    return m;
}

VnPoly operator+(VnPoly a, const VnPoly& b) { return a += b; }
VnPoly operator-(VnPoly a, const VnPoly& b) { return a -= b; }

VnPoly operator*(const Cplx& s, VnPoly a) {
    for (auto& x : a.c) x = s * x;
    return a;
}

std::vector<std::vector<Rat>> vn_action_matrix(int n, const Mat2& g) {
    // binomial expansions of (aX+bY)^k and (cX+dY)^k, then one convolution per column
    std::vector<std::vector<Rat>> M(static_cast<size_t>(n + 1),
                                    std::vector<Rat>(static_cast<size_t>(n + 1), Rat(0)));
    for (int j = 0; j <= n; ++j) {
        std::vector<Rat> p1(static_cast<size_t>(n - j + 1)), p2(static_cast<size_t>(j + 1));
        for (int t = 0; t <= n - j; ++t)
            p1[static_cast<size_t>(t)] = Rat(binomial(n - j, t)) *
                Rat(int_pow(g.a, n - j - t)) * Rat(int_pow(g.b, t));
        for (int t = 0; t <= j; ++t)
            p2[static_cast<size_t>(t)] = Rat(binomial(j, t)) *
                Rat(int_pow(g.c, j - t)) * Rat(int_pow(g.d, t));
        for (int u = 0; u <= n - j; ++u)
            for (int v = 0; v <= j; ++v)
                M[static_cast<size_t>(u + v)][static_cast<size_t>(j)] += p1[u] * p2[v];
    }
    return M;
}

VnPoly vn_act(const VnPoly& P, const Mat2& g) {
    auto M = vn_action_matrix(P.n, g);
    VnPoly out(P.n);
    for (int i = 0; i <= P.n; ++i) {
        Cplx s;
        for (int j = 0; j <= P.n; ++j) {
            if (M[i][j] == 0) continue;
            s += real_from(M[i][j]) * P.c[static_cast<size_t>(j)];
        }
        out.c[static_cast<size_t>(i)] = s;
    }
    return out;
}

std::vector<Rat> vn_act(const std::vector<Rat>& P, int n, const Mat2& g) {
    auto M = vn_action_matrix(n, g);
    std::vector<Rat> out(static_cast<size_t>(n + 1), Rat(0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            out[static_cast<size_t>(i)] += M[i][j] * P[static_cast<size_t>(j)];
    return out;
}

std::pair<std::vector<Rat>, std::vector<Rat>> period_polynomials_wt12() {
    std::vector<Rat> plus(11, Rat(0)), minus(11, Rat(0));
    // X^2 Y^2 (X^2 - Y^2)^3 = X^8Y^2 - 3X^6Y^4 + 3X^4Y^6 - X^2Y^8
    plus[0] = rat(-36, 691);
    plus[2] = rat(1);
    plus[4] = rat(-3);
    plus[6] = rat(3);
    plus[8] = rat(-1);
    plus[10] = rat(36, 691);
    minus[1] = rat(4);
    minus[3] = rat(-25);
    minus[5] = rat(42);
    minus[7] = rat(-25);
    minus[9] = rat(4);
    return {plus, minus};
}

VnPoly to_vnpoly(const std::vector<Rat>& coeffs) {
    VnPoly p(static_cast<int>(coeffs.size()) - 1);
    for (size_t i = 0; i < coeffs.size(); ++i) p.c[i] = Cplx(real_from(coeffs[i]));
    return p;
}

} // namespace cocycle
} // namespace ramf
