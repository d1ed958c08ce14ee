#pragma once

// The coefficient family d_{l,m} of the quartic-integral polynomial P_m(a),
// computed by three independent routes (single sum, alternating triple sum,
// centered alpha/beta form), plus P_m itself in two printed forms, the even
// companion T_m(y), and the brute-force compass-path counter.

#include <stdexcept>
#include <string>
#include <vector>

#include "quartic/alpha_beta.hpp"
#include "quartic/exact.hpp"
#include "quartic/poly.hpp"

namespace quartic {

// Dense lookup of C(n,k) for 0 <= n <= n_max; out-of-range k yields 0.
struct PascalTable {
    std::vector<std::vector<Int>> rows;

    explicit PascalTable(long n_max) {
        rows.resize(static_cast<size_t>(n_max) + 1);
        for (long n = 0; n <= n_max; ++n) {
            auto& r = rows[static_cast<size_t>(n)];
            r.assign(static_cast<size_t>(n) + 1, Int(1));
            for (long k = 1; k < n; ++k)
                r[static_cast<size_t>(k)] =
                    rows[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] +
                    rows[static_cast<size_t>(n - 1)][static_cast<size_t>(k)];
        }
    }

    const Int& operator()(long n, long k) const {
        static const Int zero(0);
        if (n < 0 || k < 0 || k > n) return zero;
        return rows[static_cast<size_t>(n)][static_cast<size_t>(k)];
    }
};

enum class DMethod { single, triple, center };

namespace detail {

inline void require_lm(long l, long m) {
    if (l < 0 || m < 0) throw std::domain_error("d_coeff: negative argument");
    if (l > m) throw std::domain_error("d_coeff: l exceeds m");
}

// prod_{k=1}^{m} (4k-1) and (4k+1)
inline Int prod_4k_minus1(long m) {
    Int r(1);
    for (long k = 1; k <= m; ++k) r *= 4 * k - 1;
    return r;
}

inline Int prod_4k_plus1(long m) {
    Int r(1);
    for (long k = 1; k <= m; ++k) r *= 4 * k + 1;
    return r;
}

}  // namespace detail

// d_{l,m} = 2^{-2m} sum_{k=l}^{m} 2^k C(2m-2k,m-k) C(m+k,m) C(k,l)
inline Rat d_single(long l, long m) {
    detail::require_lm(l, m);
    Int num(0);
    for (long k = l; k <= m; ++k)
        num += pow2(k) * binomial(2 * m - 2 * k, m - k) * binomial(m + k, m) * binomial(k, l);
    return make_rat(num, pow2(2 * m));
}

// Whole row {d_{l,m}: 0 <= l <= m}; shares the k-weights across l.
inline std::vector<Rat> d_row_single(long m) {
    if (m < 0) throw std::domain_error("d_row_single: negative m");
    PascalTable pt(2 * m);
    std::vector<Int> w(static_cast<size_t>(m) + 1);
    for (long k = 0; k <= m; ++k) w[static_cast<size_t>(k)] = pow2(k) * pt(2 * m - 2 * k, m - k) * pt(m + k, m);
    Int den = pow2(2 * m);
    std::vector<Rat> row(static_cast<size_t>(m) + 1);
    for (long l = 0; l <= m; ++l) {
        Int num(0);
        for (long k = l; k <= m; ++k) num += w[static_cast<size_t>(k)] * pt(k, l);
        row[static_cast<size_t>(l)] = make_rat(num, den);
    }
    return row;
}

// d_{l,m} = sum_{j<=l} sum_{s<=m-l} sum_{k=s+l}^{m} (-1)^{k-l-s} 2^{-3k}
//           C(2k,k) C(2m+1,2s+2j) C(m-s-j,m-k) C(s+j,j) C(k-s-j,l-j)
inline Rat d_triple(long l, long m) {
    detail::require_lm(l, m);
    PascalTable pt(2 * m + 1);
    std::vector<Int> p2(static_cast<size_t>(3 * m) + 1);
    p2[0] = 1;
    for (size_t i = 1; i < p2.size(); ++i) p2[i] = p2[i - 1] * 2;
    Int num(0);  // common denominator 2^{3m}
    for (long j = 0; j <= l; ++j)
        for (long s = 0; s <= m - l; ++s)
            for (long k = s + l; k <= m; ++k) {
                Int t = p2[static_cast<size_t>(3 * (m - k))] * pt(2 * k, k) * pt(2 * m + 1, 2 * s + 2 * j);
                t *= pt(m - s - j, m - k);
                t *= pt(s + j, j);
                t *= pt(k - s - j, l - j);
                if ((k - l - s) % 2 != 0)
                    num -= t;
                else
                    num += t;
            }
    return make_rat(num, pow2(3 * m));
}

// d_{l,m} = (alpha_l(m) prod(4k-1) - beta_l(m) prod(4k+1)) / (l! m! 2^{m+l})
inline Rat d_center(long l, long m) {
    detail::require_lm(l, m);
    Int num = alpha_value(l, Int(m)) * detail::prod_4k_minus1(m) - beta_value(l, Int(m)) * detail::prod_4k_plus1(m);
    return make_rat(num, factorial(l) * factorial(m) * pow2(m + l));
}

inline Rat d_coeff(long l, long m, DMethod method = DMethod::single) {
    switch (method) {
        case DMethod::single: return d_single(l, m);
        case DMethod::triple: return d_triple(l, m);
        case DMethod::center: return d_center(l, m);
    }
    throw std::domain_error("d_coeff: unknown method");
}

// Vanishing extension used by the recurrence identities: 0 outside 0<=l<=m.
inline Rat d_ext(long l, long m, const std::vector<Rat>& row) {
    if (l < 0 || l > m) return Rat(0);
    return row[static_cast<size_t>(l)];
}

struct DTable {
    long m_max = 0;
    DMethod method = DMethod::single;
    std::vector<std::vector<Rat>> d;  // d[m][l], 0 <= l <= m
};

inline DTable d_table(long m_max, DMethod method = DMethod::single) {
    if (m_max < 0) throw std::domain_error("d_table: negative m_max");
    DTable t;
    t.m_max = m_max;
    t.method = method;
    t.d.resize(static_cast<size_t>(m_max) + 1);
    for (long m = 0; m <= m_max; ++m) {
        if (method == DMethod::single) {
            t.d[static_cast<size_t>(m)] = d_row_single(m);
        } else {
            auto& row = t.d[static_cast<size_t>(m)];
            row.resize(static_cast<size_t>(m) + 1);
            for (long l = 0; l <= m; ++l) row[static_cast<size_t>(l)] = d_coeff(l, m, method);
        }
    }
    return t;
}

// Coefficients of A(x) = 2^{-2m} sum_k 2^k C(2m-2k,m-k) C(m+k,m) x^k,
// the nondecreasing-coefficient polynomial with P_m(x) = A(x+1).
inline Poly a_poly(long m) {
    if (m < 0) throw std::domain_error("a_poly: negative m");
    PascalTable pt(2 * m);
    std::vector<Rat> c(static_cast<size_t>(m) + 1);
    Int den = pow2(2 * m);
    for (long k = 0; k <= m; ++k)
        c[static_cast<size_t>(k)] = make_rat(pow2(k) * pt(2 * m - 2 * k, m - k) * pt(m + k, m), den);
    return Poly(std::move(c));
}

// The same coefficients scaled by 2^{2m}; integers.
inline std::vector<Int> a_scaled_coeffs(long m) {
    if (m < 0) throw std::domain_error("a_scaled_coeffs: negative m");
    PascalTable pt(2 * m);
    std::vector<Int> c(static_cast<size_t>(m) + 1);
    for (long k = 0; k <= m; ++k)
        c[static_cast<size_t>(k)] = pow2(k) * pt(2 * m - 2 * k, m - k) * pt(m + k, m);
    return c;
}

enum class PMethod { expanded, shifted };

// expanded: P_m(a) = 2^{-m} sum_k 2^{-k} C(2k,k) C(2m-k,m) (a+1)^{m-k},
// evaluated by Horner in (a+1).
// shifted:  P_m(a) = sum_j C(2m+1,2j) (a+1)^j
//                    sum_k C(m-j,k) C(2(m-k),m-k) 2^{-3(m-k)} (a-1)^{m-k-j}.
inline Poly p_poly(long m, PMethod method = PMethod::expanded) {
    if (m < 0) throw std::domain_error("p_poly: negative m");
    if (method == PMethod::expanded) {
        PascalTable pt(2 * m);
        Poly lin({Rat(1), Rat(1)});
        Poly r;
        for (long j = m; j >= 0; --j) {
            long k = m - j;
            Rat c = make_rat(pt(2 * k, k) * pt(2 * m - k, m), pow2(m + k));
            r = r * lin + Poly({c});
        }
        return r;
    }
    PascalTable pt(2 * m + 1);
    std::vector<Poly> ap1(static_cast<size_t>(m) + 1);
    ap1[0] = Poly({Rat(1)});
    Poly lin_p({Rat(1), Rat(1)});
    for (long j = 1; j <= m; ++j) ap1[static_cast<size_t>(j)] = ap1[static_cast<size_t>(j - 1)] * lin_p;
    Poly total;
    for (long j = 0; j <= m; ++j) {
        // inner sum as a polynomial in (a-1), then rebased to a
        std::vector<Rat> inner(static_cast<size_t>(m - j) + 1, Rat(0));
        for (long k = 0; k <= m - j; ++k)
            inner[static_cast<size_t>(m - k - j)] = make_rat(pt(m - j, k) * pt(2 * (m - k), m - k), pow2(3 * (m - k)));
        Poly q = compose_linear(Poly(std::move(inner)), Rat(1), Rat(-1));
        total = total + Rat(pt(2 * m + 1, 2 * j)) * (ap1[static_cast<size_t>(j)] * q);
    }
    return total;
}

// T_m(y) = sum_{k=0}^{m} C(m+k,m-k) y^{2k}
inline Poly t_poly(long m) {
    if (m < 0) throw std::domain_error("t_poly: negative m");
    std::vector<Rat> c(static_cast<size_t>(2 * m) + 1, Rat(0));
    for (long k = 0; k <= m; ++k) c[static_cast<size_t>(2 * k)] = Rat(binomial(m + k, m - k));
    return Poly(std::move(c));
}

// Count 2m+1-step N/S/E/W paths from the origin that end on the y-axis,
// by exhaustive enumeration. The closed form is C(4m+2, 2m+1).
inline Int enumerate_paths(long m) {
    if (m < 0) throw std::domain_error("enumerate_paths: negative m");
    if (m > 4) throw std::domain_error("enumerate_paths: m must be <= 4 (4^(2m+1) blowup)");
    long steps = 2 * m + 1;
    unsigned long total = 1;
    for (long i = 0; i < steps; ++i) total *= 4;
    long count = 0;
    for (unsigned long code = 0; code < total; ++code) {
        unsigned long c = code;
        long x = 0;
        for (long i = 0; i < steps; ++i) {
            switch (c & 3ul) {
                case 0: ++x; break;  // E
                case 1: --x; break;  // W
                default: break;      // N, S
            }
            c >>= 2;
        }
        if (x == 0) ++count;
    }
    return Int(count);
}

}  // namespace quartic
