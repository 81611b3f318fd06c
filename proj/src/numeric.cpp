#include "ramf/numeric.hpp"

#include <cctype>
#include <map>
#include <mutex>

namespace ramf {

void set_precision(unsigned digits10) {
    if (digits10 < 10) throw error("set_precision: need at least 10 digits");
    Real::default_precision(digits10);
}

unsigned precision() { return Real::default_precision(); }

Real pi_real() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real real_from(const Rat& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real real_from(const Int& n) {
    Real r;
    mpfr_set_z(r.backend().data(), n.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real real_parse(const std::string& s) { return Real(s); }

Real zeta_int(unsigned long s) {
    if (s < 2) throw error("zeta_int: need s >= 2");
    Real r;
    mpfr_zeta_ui(r.backend().data(), s, MPFR_RNDN);
    return r;
}

Real real_pow_int(const Real& x, long k) {
    Real r;
    mpfr_pow_si(r.backend().data(), x.backend().data(), k, MPFR_RNDN);
    return r;
}

std::string real_str(const Real& x, unsigned digits10) {
    return x.str(digits10);
}

Cplx cexp(const Cplx& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

Cplx cpow(const Cplx& z, long k) {
    if (k < 0) return Cplx(Real(1)) / cpow(z, -k);
    Cplx acc{Real(1)}, base = z;
    long e = k;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Cplx parse_complex(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw error("parse_complex: empty string");
    if (t.back() != 'i' && t.back() != 'I') return {Real(t), Real(0)};
    // split off the imaginary term: find the last +/- not in position 0 and not
    // part of an exponent
    size_t split = std::string::npos;
    for (size_t i = t.size() - 1; i > 0; --i) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    std::string rp = (split == std::string::npos) ? "" : t.substr(0, split);
    std::string ip = (split == std::string::npos) ? t : t.substr(split);
    ip.pop_back();  // drop the trailing i
    if (ip.empty() || ip == "+") ip = "1";
    else if (ip == "-") ip = "-1";
    return {rp.empty() ? Real(0) : Real(rp), Real(ip)};
}

std::string complex_str(const Cplx& z, unsigned digits10) {
    std::string im = z.im.str(digits10);
    std::string sep = (!im.empty() && im[0] == '-') ? "" : "+";
    return z.re.str(digits10) + sep + im + "i";
}

const std::vector<std::pair<Real, Real>>& gl_rule(int order) {
    static std::mutex lock;
    static std::map<std::pair<int, unsigned>, std::vector<std::pair<Real, Real>>> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto key = std::make_pair(order, precision());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (order < 2) throw error("gl_rule: order must be >= 2");

    std::vector<std::pair<Real, Real>> rule(static_cast<size_t>(order));
    Real eps = pow(Real(10), -static_cast<long>(precision()) + 4);
    long n = order;
    for (long i = 1; i <= (n + 1) / 2; ++i) {
        // Newton on P_n from the standard cosine initial guess
        Real z = cos(pi_real() * (Real(i) - Real(1) / 4) / (Real(n) + Real(1) / 2));
        Real pp = 0;
        for (int iter = 0; iter < 60; ++iter) {
            Real p1 = 1, p2 = 0;
            for (long j = 1; j <= n; ++j) {
                Real p3 = p2;
                p2 = p1;
                p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1);
            Real dz = p1 / pp;
            z -= dz;
            if (abs(dz) < eps) break;
        }
        Real w = 2 / ((1 - z * z) * pp * pp);
        rule[static_cast<size_t>(i - 1)] = {-z, w};
        rule[static_cast<size_t>(n - i)] = {z, w};
    }
    auto [pos, ok] = cache.emplace(key, std::move(rule));
    return pos->second;
}

LsqResult least_squares(const std::vector<std::vector<Cplx>>& A, const std::vector<Cplx>& b) {
    size_t m = A.size();
    if (m == 0 || b.size() != m) throw error("least_squares: shape mismatch");
    size_t n = A[0].size();
    if (m < n) throw error("least_squares: underdetermined system");

    // normal equations N x = y with N = A^H A, y = A^H b
    std::vector<std::vector<Cplx>> N(n, std::vector<Cplx>(n));
    std::vector<Cplx> y(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            Cplx s;
            for (size_t r = 0; r < m; ++r) s += A[r][i].conj() * A[r][j];
            N[i][j] = s;
        }
        Cplx s;
        for (size_t r = 0; r < m; ++r) s += A[r][i].conj() * b[r];
        y[i] = s;
    }

    // Gaussian elimination with partial pivoting
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        Real best = N[col][col].norm2();
        for (size_t r = col + 1; r < n; ++r)
            if (N[r][col].norm2() > best) { best = N[r][col].norm2(); piv = r; }
        if (best == 0) throw error("least_squares: singular normal matrix");
        std::swap(N[piv], N[col]);
        std::swap(y[piv], y[col]);
        for (size_t r = col + 1; r < n; ++r) {
            Cplx f = N[r][col] / N[col][col];
            for (size_t c = col; c < n; ++c) N[r][c] -= f * N[col][c];
            y[r] -= f * y[col];
        }
    }
    std::vector<Cplx> x(n);
    for (size_t ri = n; ri-- > 0;) {
        Cplx s = y[ri];
        for (size_t c = ri + 1; c < n; ++c) s -= N[ri][c] * x[c];
        x[ri] = s / N[ri][ri];
    }

    Real rnorm = 0, bnorm = 0;
    for (size_t r = 0; r < m; ++r) {
        Cplx res = b[r];
        for (size_t c = 0; c < n; ++c) res -= A[r][c] * x[c];
        rnorm += res.norm2();
        bnorm += b[r].norm2();
    }
    Real scale = sqrt(bnorm);
    if (scale < 1) scale = 1;
    return {std::move(x), sqrt(rnorm) / scale};
}

} // namespace ramf
