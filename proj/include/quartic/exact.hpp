#pragma once

// Exact integer/rational kernel. All arithmetic in the library goes through
// these types; nothing downstream is allowed to round.

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace quartic {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize; always build rationals here.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Vanishing convention: C(n,k) = 0 for k < 0 or k > n. Negative n is a
// domain error, not a zero; callers that want the extended definition must
// say so explicitly.
inline Int binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_ui(r.get_mpz_t(), Int(n).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

// Rising factorial (a)_k = a (a+1) ... (a+k-1); empty product for k = 0.
inline Int pochhammer(const Int& a, long k) {
    if (k < 0) throw std::domain_error("pochhammer: negative k");
    Int r(1);
    Int t(a);
    for (long i = 0; i < k; ++i) {
        r *= t;
        t += 1;
    }
    return r;
}

inline Int pochhammer(long a, long k) { return pochhammer(Int(a), k); }

inline bool is_prime_small(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline void require_prime(long p) {
    if (!is_prime_small(p)) throw std::domain_error("require_prime: " + std::to_string(p) + " is not prime");
}

// p-adic valuation of a nonzero integer.
inline long nu_int(long p, const Int& n) {
    require_prime(p);
    if (n == 0) throw std::domain_error("nu_int: valuation of zero");
    Int q;
    mp_bitcnt_t v = mpz_remove(q.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t());
    return static_cast<long>(v);
}

inline long nu2_int(const Int& n) {
    if (n == 0) throw std::domain_error("nu2_int: valuation of zero");
    return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}

inline long nu2(long n) { return nu2_int(Int(n)); }

// Binary digit sum.
inline long s2(const Int& n) {
    if (n < 0) throw std::domain_error("s2: negative argument");
    return static_cast<long>(mpz_popcount(n.get_mpz_t()));
}

inline long s2(long n) {
    if (n < 0) throw std::domain_error("s2: negative argument");
    return std::popcount(static_cast<unsigned long>(n));
}

// nu_p(n!) by Legendre's formula: sum of floor(n / p^i). For p = 2 this is
// n - s2(n); the general digit-sum form is (n - digitsum_p(n)) / (p - 1).
inline Int nu_factorial(long p, const Int& n) {
    require_prime(p);
    if (n < 0) throw std::domain_error("nu_factorial: negative argument");
    Int total(0);
    Int m(n);
    Int P(p);
    while (m > 0) {
        m /= P;
        total += m;
    }
    return total;
}

inline long nu_factorial_l(long p, long n) { return static_cast<long>(nu_factorial(p, Int(n)).get_si()); }

inline Int pow2(long e) {
    if (e < 0) throw std::domain_error("pow2: negative exponent");
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

inline Int int_pow(const Int& base, long e) {
    if (e < 0) throw std::domain_error("int_pow: negative exponent");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// Exact division; throws if the divisor does not divide exactly. Used where
// an algorithm guarantees divisibility and we want that checked, not assumed.
inline Int div_exact(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("div_exact: zero divisor");
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error("div_exact: inexact division");
    return q;
}

// Odd part of a positive integer.
inline Int odd_part(const Int& n) {
    if (n <= 0) throw std::domain_error("odd_part: nonpositive argument");
    Int q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(nu2_int(n)));
    return q;
}

inline long odd_part_l(long n) { return static_cast<long>(odd_part(Int(n)).get_si()); }

}  // namespace quartic
