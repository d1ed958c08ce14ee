#pragma once

// Floating-point cross-checks of the two closed forms: the quartic integral
// N(a;m) against pi P_m(a) / (2^{m+3/2} (a+1)^{m+1/2}), and the half-angle
// companion Q1 against (pi/2) P_m(a) / (2(a+1))^{m+1/2}. Both integrals are
// taken in the tangent substitution, which maps [0,inf) to [0,pi/2) and
// leaves a bounded smooth integrand for a > -1.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "quartic/dlm.hpp"
#include "quartic/exact.hpp"
#include "quartic/report.hpp"

namespace quartic {

struct IntegralResult {
    long double value = 0.0L;
    long double est_error = 0.0L;
    long panels = 0;
};

namespace detail {

// 20-point Gauss-Legendre rule on [-1,1]: positive abscissae and weights.
inline constexpr long double gl20_x[10] = {
    0.0765265211334973337546404L, 0.2277858511416450780804962L, 0.3737060887154195606725482L,
    0.5108670019508270980043641L, 0.6360536807265150254528367L, 0.7463319064601507926143051L,
    0.8391169718222188233945291L, 0.9122344282513259058677524L, 0.9639719272779137912676661L,
    0.9931285991850949247861224L,
};
inline constexpr long double gl20_w[10] = {
    0.1527533871307258506980843L, 0.1491729864726037467878287L, 0.1420961093183820513292983L,
    0.1316886384491766268984945L, 0.1181945319615184173123774L, 0.1019301198172404350367501L,
    0.0832767415767047487247581L, 0.0626720483341090635695065L, 0.0406014298003869413310400L,
    0.0176140071391521183118620L,
};

template <class F>
long double gl20_panel(F&& f, long double lo, long double hi) {
    long double mid = 0.5L * (lo + hi);
    long double half = 0.5L * (hi - lo);
    long double s = 0.0L;
    for (int i = 0; i < 10; ++i)
        s += gl20_w[i] * (f(mid + half * gl20_x[i]) + f(mid - half * gl20_x[i]));
    return s * half;
}

template <class F>
long double gl20_composite(F&& f, long double lo, long double hi, long panels) {
    long double h = (hi - lo) / static_cast<long double>(panels);
    long double s = 0.0L;
    for (long p = 0; p < panels; ++p)
        s += gl20_panel(f, lo + h * static_cast<long double>(p), lo + h * static_cast<long double>(p + 1));
    return s;
}

}  // namespace detail

inline void require_tol(long double tol) {
    // floor stated as a double literal: callers routinely hand us doubles,
    // and double(1e-12) lands a hair below the long double 1e-12L
    constexpr long double floor = 1e-12;
    if (!(tol >= floor)) throw std::domain_error("tolerance must be >= 1e-12");
}

// Composite Gauss-Legendre with panel doubling until two refinements agree
// to the requested relative tolerance.
template <class F>
IntegralResult integrate_adaptive(F&& f, long double lo, long double hi, long double tol) {
    require_tol(tol);
    long panels = 1;
    long double prev = detail::gl20_composite(f, lo, hi, panels);
    for (int round = 0; round < 16; ++round) {
        panels *= 2;
        long double cur = detail::gl20_composite(f, lo, hi, panels);
        long double diff = std::fabs(cur - prev);
        long double scale = std::max(std::fabs(cur), 1e-30L);
        if (diff <= 0.5L * tol * scale) return {cur, diff, panels};
        prev = cur;
    }
    throw std::runtime_error("integrate_adaptive: no convergence");
}

// N(a;m) = int_0^inf dx / (x^4 + 2 a x^2 + 1)^{m+1}; after x = tan(theta)
// the integrand is (cos^2)^{2m+1} / (1 + 2(a-1) sin^2 cos^2)^{m+1}.
inline IntegralResult n04_numeric(long double a, long m, long double tol = 1e-12L) {
    if (m < 0) throw std::domain_error("n04_numeric: negative m");
    if (!(a > -1.0L)) throw std::domain_error("n04_numeric: requires a > -1");
    auto f = [a, m](long double th) {
        long double c = std::cos(th), s = std::sin(th);
        long double c2 = c * c, s2 = s * s;
        long double den = 1.0L + 2.0L * (a - 1.0L) * s2 * c2;
        return std::pow(c2, static_cast<long double>(2 * m + 1)) / std::pow(den, static_cast<long double>(m + 1));
    };
    return integrate_adaptive(f, 0.0L, std::numbers::pi_v<long double> / 2.0L, tol);
}

// pi P_m(a) / (2^{m+3/2} (a+1)^{m+1/2}), with P_m(a) evaluated exactly first.
inline long double n04_closed(const Rat& a, long m) {
    if (m < 0) throw std::domain_error("n04_closed: negative m");
    Rat p = p_poly(m).eval(a);
    long double pv = static_cast<long double>(p.get_d());
    long double av = static_cast<long double>(a.get_d());
    long double pi = std::numbers::pi_v<long double>;
    return pi * pv / (std::pow(2.0L, static_cast<long double>(m) + 1.5L) *
                      std::pow(av + 1.0L, static_cast<long double>(m) + 0.5L));
}

// Q1 in the same substitution: T_m(2 sin) spread over the binomial terms,
// against the closed form (pi/2) P_m(a) / (2(a+1))^{m+1/2}.
inline IntegralResult q1_numeric(long double a, long m, long double tol = 1e-12L) {
    if (m < 0) throw std::domain_error("q1_numeric: negative m");
    if (!(a > -1.0L)) throw std::domain_error("q1_numeric: requires a > -1");
    std::vector<long double> binom(static_cast<size_t>(m) + 1);
    for (long k = 0; k <= m; ++k) binom[static_cast<size_t>(k)] = static_cast<long double>(binomial(m + k, m - k).get_d());
    auto f = [a, m, &binom](long double th) {
        long double c2 = std::cos(th) * std::cos(th);
        long double s2 = std::sin(th) * std::sin(th);
        long double num = 0.0L;
        for (long k = 0; k <= m; ++k)
            num += binom[static_cast<size_t>(k)] * std::pow(4.0L * s2, static_cast<long double>(k)) *
                   std::pow(c2, static_cast<long double>(m - k));
        long double den = (1.0L + a) * c2 + 2.0L * s2;
        return num / (std::pow(2.0L, static_cast<long double>(m)) * std::pow(den, static_cast<long double>(m + 1)));
    };
    return integrate_adaptive(f, 0.0L, std::numbers::pi_v<long double> / 2.0L, tol);
}

inline long double q1_closed(const Rat& a, long m) {
    if (m < 0) throw std::domain_error("q1_closed: negative m");
    Rat p = p_poly(m).eval(a);
    long double pv = static_cast<long double>(p.get_d());
    long double av = static_cast<long double>(a.get_d());
    long double pi = std::numbers::pi_v<long double>;
    return 0.5L * pi * pv / std::pow(2.0L * (av + 1.0L), static_cast<long double>(m) + 0.5L);
}

struct QuadCheck {
    long double numeric = 0.0L;
    long double reference = 0.0L;
    long double rel_err = 0.0L;
    bool ok = false;
};

inline QuadCheck quad_check(long double numeric, long double reference, long double bound) {
    QuadCheck q;
    q.numeric = numeric;
    q.reference = reference;
    long double scale = std::max(std::fabs(reference), 1e-30L);
    q.rel_err = std::fabs(numeric - reference) / scale;
    q.ok = q.rel_err <= bound;
    return q;
}

inline QuadCheck n04_check(const Rat& a, long m, long double tol = 1e-12L, long double bound = 1e-10L) {
    long double av = static_cast<long double>(a.get_d());
    return quad_check(n04_numeric(av, m, tol).value, n04_closed(a, m), bound);
}

inline QuadCheck q1_check(const Rat& a, long m, long double tol = 1e-12L, long double bound = 1e-10L) {
    long double av = static_cast<long double>(a.get_d());
    return quad_check(q1_numeric(av, m, tol).value, q1_closed(a, m), bound);
}

}  // namespace quartic
