#pragma once

// Exact sweeps over the identity catalogue: finite-sum evaluations, moment
// identities, golden-ratio forms, and the coefficient recurrences. Every
// check is integer or rational arithmetic; a failing case lands in the
// report witness as (parameter, lhs, rhs).

#include <stdexcept>
#include <string>
#include <vector>

#include "quartic/dlm.hpp"
#include "quartic/exact.hpp"
#include "quartic/poly.hpp"
#include "quartic/report.hpp"

namespace quartic {

enum class IdentityId {
    sum1,
    recur2,
    rec22,
    newform2,
    wallis_moment,
    binom_product,
    pretty,
    s1_closed,
    closed_dmm,
    kp_rec1,
    kp_rec2,
    dj_rec,
    minexpr,
};

inline const std::vector<std::pair<IdentityId, const char*>>& identity_names() {
    static const std::vector<std::pair<IdentityId, const char*>> names = {
        {IdentityId::sum1, "sum1"},
        {IdentityId::recur2, "recur2"},
        {IdentityId::rec22, "rec22"},
        {IdentityId::newform2, "newform2"},
        {IdentityId::wallis_moment, "wallis_moment"},
        {IdentityId::binom_product, "binom_product"},
        {IdentityId::pretty, "pretty"},
        {IdentityId::s1_closed, "s1_closed"},
        {IdentityId::closed_dmm, "closed_dmm"},
        {IdentityId::kp_rec1, "kp_rec1"},
        {IdentityId::kp_rec2, "kp_rec2"},
        {IdentityId::dj_rec, "dj_rec"},
        {IdentityId::minexpr, "minexpr"},
    };
    return names;
}

inline std::string identity_name(IdentityId id) {
    for (const auto& [i, n] : identity_names())
        if (i == id) return n;
    throw std::domain_error("identity_name: unknown id");
}

inline IdentityId identity_from_name(const std::string& s) {
    for (const auto& [i, n] : identity_names())
        if (s == n) return i;
    throw std::domain_error("unknown identity: " + s);
}

namespace detail {

// S_m = sum_{i=0}^{floor(m/2)} 4^{floor(m/2)-i} C(m,2i) C(2i,i),
// the scaled form of f(m) = sum 2^{-2i} C(m,2i) C(2i,i) = 2^{-m} C(2m,m).
inline Int sum1_scaled(long m) {
    long M = m / 2;
    Int s(0);
    Int p4 = pow2(2 * M);
    Int c_m_2i(1);  // C(m, 2i)
    Int c_2i_i(1);  // C(2i, i)
    for (long i = 0;; ++i) {
        s += p4 * c_m_2i * c_2i_i;
        if (i == M) break;
        p4 = div_exact(p4, Int(4));
        c_m_2i = div_exact(c_m_2i * ((m - 2 * i) * (m - 2 * i - 1)), Int((2 * i + 1) * (2 * i + 2)));
        c_2i_i = div_exact(c_2i_i * (2 * (2 * i + 1)), Int(i + 1));
    }
    return s;
}

// 2^{2 floor(m/2) - m} C(2m,m): the claimed closed form of S_m. Exact for odd
// m because central binomial coefficients with m >= 1 are even.
inline Int sum1_rhs(long m, const Int& central) {
    if (m % 2 == 0) return central;
    return div_exact(central, Int(2));
}

inline void note_int(Report& r, const std::string& where, const Int& lhs, const Int& rhs) {
    r.note(where + ".lhs", lhs.get_str());
    r.note(where + ".rhs", rhs.get_str());
}

inline void note_rat(Report& r, const std::string& where, const Rat& lhs, const Rat& rhs) {
    r.note(where + ".lhs", lhs.get_str());
    r.note(where + ".rhs", rhs.get_str());
}

inline std::string lm_tag(long l, long m) { return "l=" + std::to_string(l) + ",m=" + std::to_string(m); }

}  // namespace detail

// f(m) = 2^{-m} C(2m,m), checked in the integer scaling.
inline Report check_sum1(long m_max) {
    Report r{"sum1", "m_max=" + std::to_string(m_max), true, {}};
    Int central(1);  // C(2m, m)
    for (long m = 0; m <= m_max; ++m) {
        if (m > 0) central = div_exact(central * (2 * (2 * m - 1)), Int(m));
        Int lhs = detail::sum1_scaled(m);
        Int rhs = detail::sum1_rhs(m, central);
        if (lhs != rhs) {
            r.passed = false;
            detail::note_int(r, "m=" + std::to_string(m), lhs, rhs);
            return r;
        }
    }
    return r;
}

// (m+1) f(m+1) = (2m+1) f(m), in the integer scaling of sum1.
inline Report check_recur2(long m_max) {
    Report r{"recur2", "m_max=" + std::to_string(m_max), true, {}};
    Int prev = detail::sum1_scaled(0);
    for (long m = 0; m < m_max; ++m) {
        Int next = detail::sum1_scaled(m + 1);
        // scale jump: floor((m+1)/2) - floor(m/2) is 1 for odd m, else 0
        Int rhs = prev * (2 * m + 1);
        if (m % 2 == 1) rhs *= 4;
        Int lhs = next * (m + 1);
        if (lhs != rhs) {
            r.passed = false;
            detail::note_int(r, "m=" + std::to_string(m), lhs, rhs);
            return r;
        }
        prev = std::move(next);
    }
    return r;
}

// sum_k 2^{-2k} C(2k,k) C(2m+1,2k) = sum_k 2^{-2k} C(2k,k) C(2m-k,m),
// scaled by 2^{2m}.
inline Report check_pretty(long m_max) {
    Report r{"pretty", "m_max=" + std::to_string(m_max), true, {}};
    for (long m = 0; m <= m_max; ++m) {
        Int lhs(0), rhs(0);
        Int p = pow2(2 * m);                  // 2^{2m-2k}
        Int c_2k_k(1);                        // C(2k,k)
        Int c_odd(1);                         // C(2m+1, 2k)
        Int c_half = binomial(2 * m, m);      // C(2m-k, m)
        for (long k = 0; k <= m; ++k) {
            if (k > 0) {
                p = div_exact(p, Int(4));
                c_2k_k = div_exact(c_2k_k * (2 * (2 * k - 1)), Int(k));
                c_odd = div_exact(c_odd * Int((2 * m + 2 - 2 * k) * (2 * m + 3 - 2 * k)), Int((2 * k - 1) * 2 * k));
                c_half = div_exact(c_half * (m - k + 1), Int(2 * m - k + 1));
            }
            lhs += p * c_2k_k * c_odd;
            rhs += p * c_2k_k * c_half;
        }
        if (lhs != rhs) {
            r.passed = false;
            detail::note_int(r, "m=" + std::to_string(m), lhs, rhs);
            return r;
        }
    }
    return r;
}

// S_1(m) = sum_j C(2m+1,2j) C(2j,j) 2^{2m+1-2j} = C(4m+2, 2m+1)
inline Report check_s1_closed(long m_max) {
    Report r{"s1_closed", "m_max=" + std::to_string(m_max), true, {}};
    for (long m = 0; m <= m_max; ++m) {
        Int lhs(0);
        Int p = pow2(2 * m + 1);
        Int c_jj(1), c_odd(1);
        for (long j = 0; j <= m; ++j) {
            if (j > 0) {
                p = div_exact(p, Int(4));
                c_jj = div_exact(c_jj * (2 * (2 * j - 1)), Int(j));
                c_odd = div_exact(c_odd * Int((2 * m + 2 - 2 * j) * (2 * m + 3 - 2 * j)), Int((2 * j - 1) * 2 * j));
            }
            lhs += p * c_jj * c_odd;
        }
        Int rhs = binomial(4 * m + 2, 2 * m + 1);
        if (lhs != rhs) {
            r.passed = false;
            detail::note_int(r, "m=" + std::to_string(m), lhs, rhs);
            return r;
        }
    }
    return r;
}

// C(m+k,m-k) C(2k,k) = C(m+k,m) C(m,k)
inline Report check_binom_product(long m_max) {
    Report r{"binom_product", "m_max=" + std::to_string(m_max), true, {}};
    for (long m = 0; m <= m_max; ++m) {
        PascalTable pt(2 * m);
        for (long k = 0; k <= m; ++k) {
            Int lhs = pt(m + k, m - k) * pt(2 * k, k);
            Int rhs = pt(m + k, m) * pt(m, k);
            if (lhs != rhs) {
                r.passed = false;
                detail::note_int(r, detail::lm_tag(k, m), lhs, rhs);
                return r;
            }
        }
    }
    return r;
}

// The even moment of (1+t^2)^{-(m+1)} has two evaluations: the beta-function
// route gives pi (2k)! (2m-2k)! / (2 4^m k! (m-k)! m!), the printed form is
// pi 2^{-(2m+1)} C(2k,k) C(2m-2k,m-k) / C(m,k). Their equality is the
// integer identity below.
inline Report check_wallis_moment(long m_max) {
    Report r{"wallis_moment", "m_max=" + std::to_string(m_max), true, {}};
    for (long m = 0; m <= m_max; ++m) {
        PascalTable pt(2 * m);
        for (long k = 0; k <= m; ++k) {
            Int lhs = factorial(2 * k) * factorial(2 * m - 2 * k) * pt(m, k);
            Int rhs = pt(2 * k, k) * pt(2 * m - 2 * k, m - k) * factorial(k) * factorial(m - k) * factorial(m);
            if (lhs != rhs) {
                r.passed = false;
                detail::note_int(r, detail::lm_tag(k, m), lhs, rhs);
                return r;
            }
        }
    }
    return r;
}

namespace detail {

// phi^{2m+1} + phi^{-(2m+1)} as a Laurent polynomial in phi
inline LaurentPoly phi_pair(long m) {
    LaurentPoly p = LaurentPoly::monomial(2 * m + 1, Rat(1));
    p.add_term(-(2 * m + 1), Rat(1));
    return p;
}

}  // namespace detail

// (phi^{2m+1} + phi^{-(2m+1)}) / (phi + phi^{-1}) = T_m(phi - phi^{-1})
inline Report check_newform2(long m_max) {
    Report r{"newform2", "m_max=" + std::to_string(m_max), true, {}};
    LaurentPoly den = LaurentPoly::monomial(1, Rat(1));
    den.add_term(-1, Rat(1));
    for (long m = 0; m <= m_max; ++m) {
        LaurentPoly lhs = laurent_div_exact(detail::phi_pair(m), den);
        LaurentPoly rhs = substitute_phi(t_poly(m));
        if (!(lhs == rhs)) {
            r.passed = false;
            r.note("m", std::to_string(m));
            return r;
        }
    }
    return r;
}

// c_{m+2} - (phi^2 + phi^{-2}) c_{m+1} + c_m = 0 for both sides of newform2.
inline Report check_rec22(long m_max) {
    Report r{"rec22", "m_max=" + std::to_string(m_max), true, {}};
    LaurentPoly den = LaurentPoly::monomial(1, Rat(1));
    den.add_term(-1, Rat(1));
    LaurentPoly mult = LaurentPoly::monomial(2, Rat(1));
    mult.add_term(-2, Rat(1));
    std::vector<LaurentPoly> lhs_fam, rhs_fam;
    for (long m = 0; m <= m_max; ++m) {
        lhs_fam.push_back(laurent_div_exact(detail::phi_pair(m), den));
        rhs_fam.push_back(substitute_phi(t_poly(m)));
    }
    for (long m = 0; m + 2 <= m_max; ++m) {
        for (const auto* fam : {&lhs_fam, &rhs_fam}) {
            LaurentPoly resid = (*fam)[static_cast<size_t>(m + 2)] - mult * (*fam)[static_cast<size_t>(m + 1)] +
                                (*fam)[static_cast<size_t>(m)];
            if (!resid.is_zero()) {
                r.passed = false;
                r.note("m", std::to_string(m));
                r.note("family", fam == &lhs_fam ? "quotient" : "substituted");
                return r;
            }
        }
    }
    return r;
}

// d_{m,m} = 2^{-m} C(2m,m) and d_{m-1,m} = (2m+1) 2^{-(m+1)} C(2m,m)
inline Report check_closed_dmm(long m_max) {
    Report r{"closed_dmm", "m_max=" + std::to_string(m_max), true, {}};
    for (long m = 0; m <= m_max; ++m) {
        Int central = binomial(2 * m, m);
        Rat lhs = d_coeff(m, m, DMethod::single);
        Rat rhs = make_rat(central, pow2(m));
        if (lhs != rhs) {
            r.passed = false;
            detail::note_rat(r, "diag m=" + std::to_string(m), lhs, rhs);
            return r;
        }
        if (m >= 1) {
            Rat lhs2 = d_coeff(m - 1, m, DMethod::single);
            Rat rhs2 = make_rat((2 * m + 1) * central, pow2(m + 1));
            if (lhs2 != rhs2) {
                r.passed = false;
                detail::note_rat(r, "subdiag m=" + std::to_string(m), lhs2, rhs2);
                return r;
            }
        }
    }
    return r;
}

// 2(m+1) d_{l,m+1} = 2(l+m) d_{l-1,m} + (2l+4m+3) d_{l,m}
inline Report check_kp_rec1(long m_max) {
    Report r{"kp_rec1", "m_max=" + std::to_string(m_max), true, {}};
    std::vector<Rat> row = d_row_single(0);
    for (long m = 0; m <= m_max; ++m) {
        std::vector<Rat> next = d_row_single(m + 1);
        for (long l = 0; l <= m; ++l) {
            Rat lhs = Rat(2 * (m + 1)) * next[static_cast<size_t>(l)];
            Rat rhs = Rat(2 * (l + m)) * d_ext(l - 1, m, row) + Rat(2 * l + 4 * m + 3) * row[static_cast<size_t>(l)];
            if (lhs != rhs) {
                r.passed = false;
                detail::note_rat(r, detail::lm_tag(l, m), lhs, rhs);
                return r;
            }
        }
        row = std::move(next);
    }
    return r;
}

// 4l(l+1) d_{l+1,m} = -2(2l-4m-3)(l+m+1) d_{l,m} + 4(l-m-1)(m+1) d_{l,m+1}
inline Report check_kp_rec2(long m_max) {
    Report r{"kp_rec2", "m_max=" + std::to_string(m_max), true, {}};
    std::vector<Rat> row = d_row_single(0);
    for (long m = 0; m <= m_max; ++m) {
        std::vector<Rat> next = d_row_single(m + 1);
        for (long l = 0; l <= m; ++l) {
            Rat lhs = Rat(4 * l * (l + 1)) * d_ext(l + 1, m, row);
            Rat rhs = Rat(-2 * (2 * l - 4 * m - 3) * (l + m + 1)) * row[static_cast<size_t>(l)] +
                      Rat(4 * (l - m - 1) * (m + 1)) * next[static_cast<size_t>(l)];
            if (lhs != rhs) {
                r.passed = false;
                detail::note_rat(r, detail::lm_tag(l, m), lhs, rhs);
                return r;
            }
        }
        row = std::move(next);
    }
    return r;
}

// d_{j+1} = (2m+1)/(j+1) d_j - (m+j)(m+1-j)/(j(j+1)) d_{j-1}, 1 <= j <= m-1
inline Report check_dj_rec(long m_max) {
    Report r{"dj_rec", "m_max=" + std::to_string(m_max), true, {}};
    for (long m = 0; m <= m_max; ++m) {
        std::vector<Rat> row = d_row_single(m);
        for (long j = 1; j <= m - 1; ++j) {
            Rat lhs = row[static_cast<size_t>(j + 1)];
            Rat rhs = make_rat(2 * m + 1, j + 1) * row[static_cast<size_t>(j)] -
                      make_rat((m + j) * (m + 1 - j), j * (j + 1)) * row[static_cast<size_t>(j - 1)];
            if (lhs != rhs) {
                r.passed = false;
                detail::note_rat(r, detail::lm_tag(j, m), lhs, rhs);
                return r;
            }
        }
    }
    return r;
}

// For E_j = (m+j)(m+1-j) d_{j-1}^2 + j(j+1) d_j^2 - j(2m+1) d_{j-1} d_j over
// 1 <= j <= m, the minimum is conjectured to sit at j = m. The probe asserts
// the location and records the exact minimum value.
inline Report check_minexpr(long m_max) {
    Report r{"minexpr", "m_max=" + std::to_string(m_max), true, {}};
    for (long m = 1; m <= m_max; ++m) {
        std::vector<Rat> row = d_row_single(m);
        Rat best;
        long best_j = -1;
        for (long j = 1; j <= m; ++j) {
            const Rat& a = row[static_cast<size_t>(j - 1)];
            const Rat& b = row[static_cast<size_t>(j)];
            Rat e = Rat((m + j) * (m + 1 - j)) * a * a + Rat(j * (j + 1)) * b * b - Rat(j * (2 * m + 1)) * a * b;
            if (best_j < 0 || e < best) {
                best = e;
                best_j = j;
            }
        }
        if (best_j != m) {
            r.passed = false;
            r.note("m", std::to_string(m));
            r.note("argmin", std::to_string(best_j));
            r.note("value", best.get_str());
            return r;
        }
        if (m == m_max) r.note("value_at_m_max", best.get_str());
    }
    return r;
}

inline Report check_identity(IdentityId id, long m_max) {
    switch (id) {
        case IdentityId::sum1: return check_sum1(m_max);
        case IdentityId::recur2: return check_recur2(m_max);
        case IdentityId::rec22: return check_rec22(m_max);
        case IdentityId::newform2: return check_newform2(m_max);
        case IdentityId::wallis_moment: return check_wallis_moment(m_max);
        case IdentityId::binom_product: return check_binom_product(m_max);
        case IdentityId::pretty: return check_pretty(m_max);
        case IdentityId::s1_closed: return check_s1_closed(m_max);
        case IdentityId::closed_dmm: return check_closed_dmm(m_max);
        case IdentityId::kp_rec1: return check_kp_rec1(m_max);
        case IdentityId::kp_rec2: return check_kp_rec2(m_max);
        case IdentityId::dj_rec: return check_dj_rec(m_max);
        case IdentityId::minexpr: return check_minexpr(m_max);
    }
    throw std::domain_error("check_identity: unknown id");
}

}  // namespace quartic
