#include "ramf/forms.hpp"

#include <algorithm>

namespace ramf {
namespace qexact {

QLaurent eisenstein(long k, long N) {
    if (k < 1) throw error("eisenstein: k must be >= 1");
    if (N < 0) throw error("eisenstein: truncation must be >= 0");
    std::vector<Rat> c(static_cast<size_t>(N + 1));
    c[0] = -bernoulli(2 * k) / rat(4 * k);
    for (long n = 1; n <= N; ++n) c[static_cast<size_t>(n)] = Rat(divisor_sigma(2 * k - 1, n));
    return QLaurent(static_cast<int>(2 * k), 0, std::move(c), N);
}

QLaurent e4(long N) { return rat(240) * eisenstein(2, N); }

QLaurent e6(long N) { return rat(-504) * eisenstein(3, N); }

// Euler function prod (1-q^n) via the pentagonal number theorem.
static QLaurent euler_product(long N) {
    std::vector<Rat> c(static_cast<size_t>(N + 1), Rat(0));
    for (long j = -N; ; ++j) {
        long g = j * (3 * j - 1) / 2;
        if (j > 0 && g > N) break;
        if (g >= 0 && g <= N) c[static_cast<size_t>(g)] += (j % 2 == 0) ? 1 : -1;
    }
    return QLaurent(0, 0, std::move(c), N);
}

QLaurent delta(long N) {
    if (N < 1) throw error("delta: truncation must be >= 1");
    QLaurent eta24 = euler_product(N - 1).pow(24);
    return eta24.shifted(1).with_weight(12);
}

QLaurent delta_from_e4e6(long N) {
    QLaurent d = e4(N).pow(3) - e6(N).pow(2).with_weight(12);
    return (rat(1, 1728) * d).truncated(N);
}

QLaurent j_invariant(long N) {
    if (N < -1) throw error("j_invariant: truncation must be >= -1");
    long M = N + 2;
    QLaurent q = e4(M).pow(3) / delta(M + 1);
    return q.truncated(N).with_weight(0);
}

QLaurent delta_prime(long N) {
    if (N < 2) throw error("delta_prime: truncation must be >= 2");
    QLaurent D = delta(N + 3);
    QLaurent j = j_invariant(N + 1);
    QLaurent A = D * j.pow(2);   // q^{-1} + ...
    QLaurent B = D * j;          // 1 + ...
    // kill a_0 and a_1 of A + c1 B + c0 Delta
    Rat det = B.at(0) * D.at(1) - D.at(0) * B.at(1);
    if (det == 0) throw error("delta_prime: singular coefficient system");
    Rat c1 = (-A.at(0) * D.at(1) + D.at(0) * A.at(1)) / det;
    Rat c0 = (-B.at(0) * A.at(1) + A.at(0) * B.at(1)) / det;
    QLaurent out = A + c1 * B + c0 * D.truncated(std::min(A.truncation(), B.truncation()));
    return out.truncated(N);
}

QLaurent iterated_primitive(const QLaurent& f, long k) {
    if (k < 0) throw error("iterated_primitive: order must be >= 0");
    long val = f.valuation(), trunc = f.truncation();
    if (f.is_zero()) return QLaurent::zero(f.weight(), trunc);
    std::vector<Rat> c(static_cast<size_t>(trunc - val + 1));
    for (long e = val; e <= trunc; ++e)
        c[static_cast<size_t>(e - val)] = (e == 0) ? Rat(0) : f.at(e) / rat_pow(rat(2 * e), k);
    return QLaurent(f.weight(), val, std::move(c), trunc);
}

QLaurent bol(const QLaurent& f, long n) {
    if (f.weight() != -n) throw error("bol: series not declared weight -n");
    long val = f.valuation(), trunc = f.truncation();
    if (f.is_zero()) return QLaurent::zero(static_cast<int>(n + 2), trunc);
    std::vector<Rat> c(static_cast<size_t>(trunc - val + 1));
    for (long e = val; e <= trunc; ++e)
        c[static_cast<size_t>(e - val)] = f.at(e) * rat_pow(rat(e), n + 1);
    return QLaurent(static_cast<int>(n + 2), val, std::move(c), trunc);
}

QLaurent bol_inverse(const QLaurent& g, long n) {
    if (g.known(0) && g.at(0) != 0)
        throw error("bol_inverse: nonzero constant term has no preimage");
    long val = g.valuation(), trunc = g.truncation();
    if (g.is_zero()) return QLaurent::zero(static_cast<int>(-n), trunc);
    std::vector<Rat> c(static_cast<size_t>(trunc - val + 1));
    for (long e = val; e <= trunc; ++e)
        c[static_cast<size_t>(e - val)] = (e == 0) ? Rat(0) : g.at(e) / rat_pow(rat(e), n + 1);
    return QLaurent(static_cast<int>(-n), val, std::move(c), trunc);
}

Rat pairing(const QLaurent& f, const QLaurent& g, long n) {
    if (f.weight() != n + 2 || g.weight() != n + 2)
        throw error("pairing: both series must have weight n+2");
    if (f.is_zero() || g.is_zero()) return Rat(0);
    // support of the sum: k in [val(f), -val(g)]
    long lo = f.valuation(), hi = -g.valuation();
    if (!f.known(hi) || !g.known(-lo))
        throw error("pairing: insufficient truncation to cover the support");
    Rat s = 0;
    for (long k = lo; k <= hi; ++k) {
        if (k == 0) {
            if (f.at(0) != 0 && g.at(0) != 0)
                throw error("pairing: undefined k = 0 term (both constant terms nonzero)");
            continue;
        }
        if (f.at(k) == 0) continue;
        s += f.at(k) * g.at(-k) / rat_pow(rat(k), n + 1);
    }
    return s;
}

} // namespace qexact
} // namespace ramf
