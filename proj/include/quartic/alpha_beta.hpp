#pragma once

// The centered-expansion polynomial family: alpha_l(m), beta_l(m), their
// shifted forms A_l(s) = alpha_l((s-1)/2), B_l(s) = beta_l((s-1)/2), the
// shared three-term recurrence, and exact certification that all roots lie
// on the vertical line Re m = -1/2.

#include <stdexcept>
#include <string>

#include "quartic/exact.hpp"
#include "quartic/poly.hpp"
#include "quartic/report.hpp"

namespace quartic {

struct AlphaBetaPair {
    long l = 0;
    Poly alpha;  // degree l, integer coefficients
    Poly beta;   // degree l-1 (zero polynomial for l = 0)
};

namespace detail {

// Product of (c*v + d) for v = lo..hi as a polynomial in m with v = m + i
// handled by the caller; here plain integer products for value evaluation.
inline Int prod_linear_values(long c, long d, long lo, long hi) {
    Int r(1);
    for (long v = lo; v <= hi; ++v) r *= Int(c) * v + d;
    return r;
}

}  // namespace detail

// alpha_l(m) = sum over t of C(l,2t) * prod_{v=m+1}^{m+t}(4v-1)
//            * prod_{v=m-l+2t+1}^{m}(2v+1) * prod_{v=1}^{t-1}(4v+1).
// Empty products are 1.
inline Int alpha_value(long l, const Int& m) {
    if (l < 0) throw std::domain_error("alpha_value: negative l");
    Int total(0);
    for (long t = 0; 2 * t <= l; ++t) {
        Int term = binomial(l, 2 * t);
        for (long i = 1; i <= t; ++i) term *= 4 * (m + i) - 1;
        for (long j = 0; j <= l - 2 * t - 1; ++j) term *= 2 * m + 1 - 2 * j;
        for (long v = 1; v <= t - 1; ++v) term *= 4 * v + 1;
        total += term;
    }
    return total;
}

// beta_l(m) = sum over t >= 1 of C(l,2t-1) * prod_{v=m+1}^{m+t-1}(4v+1)
//           * prod_{v=m-l+2t}^{m}(2v+1) * prod_{v=1}^{t-1}(4v-1).
inline Int beta_value(long l, const Int& m) {
    if (l < 0) throw std::domain_error("beta_value: negative l");
    Int total(0);
    for (long t = 1; 2 * t - 1 <= l; ++t) {
        Int term = binomial(l, 2 * t - 1);
        for (long i = 1; i <= t - 1; ++i) term *= 4 * (m + i) + 1;
        for (long j = 0; j <= l - 2 * t; ++j) term *= 2 * m + 1 - 2 * j;
        for (long v = 1; v <= t - 1; ++v) term *= 4 * v - 1;
        total += term;
    }
    return total;
}

// Symbolic versions: the same products expanded as polynomials in m.
inline Poly alpha_poly(long l) {
    if (l < 0) throw std::domain_error("alpha_poly: negative l");
    Poly total;
    Poly var = poly_x<Rat>();
    for (long t = 0; 2 * t <= l; ++t) {
        Poly term({Rat(binomial(l, 2 * t))});
        for (long i = 1; i <= t; ++i) term = term * Poly({Rat(4 * i - 1), Rat(4)});
        for (long j = 0; j <= l - 2 * t - 1; ++j) term = term * Poly({Rat(1 - 2 * j), Rat(2)});
        Int tail(1);
        for (long v = 1; v <= t - 1; ++v) tail *= 4 * v + 1;
        total = total + Rat(tail) * term;
    }
    return total;
}

inline Poly beta_poly(long l) {
    if (l < 0) throw std::domain_error("beta_poly: negative l");
    Poly total;
    for (long t = 1; 2 * t - 1 <= l; ++t) {
        Poly term({Rat(binomial(l, 2 * t - 1))});
        for (long i = 1; i <= t - 1; ++i) term = term * Poly({Rat(4 * i + 1), Rat(4)});
        for (long j = 0; j <= l - 2 * t; ++j) term = term * Poly({Rat(1 - 2 * j), Rat(2)});
        Int tail(1);
        for (long v = 1; v <= t - 1; ++v) tail *= 4 * v - 1;
        total = total + Rat(tail) * term;
    }
    return total;
}

inline AlphaBetaPair alpha_beta(long l) {
    if (l < 0) throw std::domain_error("alpha_beta: negative l");
    return AlphaBetaPair{l, alpha_poly(l), beta_poly(l)};
}

// A_l(s) = alpha_l((s-1)/2), B_l(s) = beta_l((s-1)/2).
inline Poly a_shifted(long l) { return compose_linear(alpha_poly(l), Rat(1, 2), Rat(-1, 2)); }
inline Poly b_shifted(long l) { return compose_linear(beta_poly(l), Rat(1, 2), Rat(-1, 2)); }

// Both shifted families satisfy x_{l+1} = 2s x_l - (s^2 - (2l-1)^2) x_{l-1}.
inline Report three_term_check(long l_max) {
    if (l_max < 2) throw std::domain_error("three_term_check: l_max must be >= 2");
    Report rep;
    rep.id = "three_term";
    rep.params = "l_max=" + std::to_string(l_max);
    rep.passed = true;
    Poly two_s({Rat(0), Rat(2)});
    Poly s_sq({Rat(0), Rat(0), Rat(1)});
    for (int fam = 0; fam < 2; ++fam) {
        Poly prev = fam == 0 ? a_shifted(0) : b_shifted(0);
        Poly cur = fam == 0 ? a_shifted(1) : b_shifted(1);
        for (long l = 1; l + 1 <= l_max; ++l) {
            Rat c((2 * l - 1) * (2 * l - 1));
            Poly predicted = two_s * cur - (s_sq - Poly({c})) * prev;
            Poly actual = fam == 0 ? a_shifted(l + 1) : b_shifted(l + 1);
            if (predicted != actual) {
                rep.passed = false;
                rep.note("family", fam == 0 ? "alpha" : "beta");
                rep.note("l", std::to_string(l + 1));
                return rep;
            }
            prev = cur;
            cur = actual;
        }
    }
    return rep;
}

enum class RootFamily { alpha_family, beta_family };

// All roots of alpha_l (l >= 1) resp. beta_l (l >= 2) lie on Re m = -1/2.
// Certified exactly: shift to s = 2m+1 (the line becomes the imaginary
// axis), check parity, drop a possible root at s = 0, substitute u = -s^2,
// then Sturm-certify the u-polynomial as real-rooted with no negative root.
inline bool critical_line_certify(long l, RootFamily family) {
    if (family == RootFamily::alpha_family && l < 1)
        throw std::domain_error("critical_line_certify: alpha needs l >= 1");
    if (family == RootFamily::beta_family && l < 2)
        throw std::domain_error("critical_line_certify: beta needs l >= 2");
    try {
        Poly p = family == RootFamily::alpha_family ? a_shifted(l) : b_shifted(l);
        if (p.is_zero()) return false;
        long deg = p.degree();
        for (long i = 0; i <= deg; ++i)
            if (p.at(i) != 0 && (deg - i) % 2 != 0) return false;  // parity: only every other power
        std::vector<Rat> evens;
        long low = deg % 2;  // odd-degree p has a factor s (root s = 0, i.e. m = -1/2)
        if (low == 1 && p.at(0) != 0) return false;
        for (long i = low; i <= deg; i += 2) evens.push_back(p.at(i));
        // g(x) with p(s) = s^low * g(s^2); roots on the imaginary axis iff
        // h(u) := g(-u) is real-rooted with all roots >= 0.
        std::vector<Rat> h(evens.size());
        for (size_t j = 0; j < evens.size(); ++j) h[j] = (j % 2 == 0) ? evens[j] : -evens[j];
        Poly hp(std::move(h));
        if (hp.is_zero()) return false;
        // u = 0 roots correspond to s = 0; allowed, strip them.
        size_t strip = 0;
        while (strip < hp.c.size() && hp.c[strip] == 0) ++strip;
        if (strip > 0) hp = Poly(std::vector<Rat>(hp.c.begin() + static_cast<long>(strip), hp.c.end()));
        if (hp.degree() <= 0) return true;
        Poly sf = squarefree_part(hp);
        if (!is_real_rooted(hp)) return false;
        auto chain = sturm_chain(sf);
        long neg_roots = variations_at_neg_inf(chain) - variations_at(chain, Rat(0));
        return neg_roots == 0;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace quartic
