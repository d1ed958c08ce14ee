#pragma once

// Polynomial kernel: dense univariate polynomials over an exact coefficient
// ring, sparse Laurent polynomials, and Sturm-chain real-root counting.

#include <algorithm>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quartic/exact.hpp"

namespace quartic {

// Coefficients ascending: c[0] + c[1] x + ... The zero polynomial is the
// empty list and reports degree -1.
template <class C>
struct DensePoly {
    std::vector<C> c;

    DensePoly() = default;
    explicit DensePoly(std::vector<C> coeffs) : c(std::move(coeffs)) { trim(); }
    DensePoly(std::initializer_list<C> coeffs) : c(coeffs) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }

    C at(long i) const {
        if (i < 0 || i >= static_cast<long>(c.size())) return C(0);
        return c[static_cast<size_t>(i)];
    }

    const C& leading() const {
        if (c.empty()) throw std::domain_error("leading: zero polynomial");
        return c.back();
    }

    template <class T>
    T eval(const T& x) const {
        T r(0);
        for (size_t i = c.size(); i-- > 0;) r = r * x + T(c[i]);
        return r;
    }

    DensePoly derivative() const {
        if (c.size() <= 1) return DensePoly();
        std::vector<C> d(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * C(static_cast<long>(i));
        return DensePoly(std::move(d));
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c == b.c; }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        std::vector<C> r(std::max(a.c.size(), b.c.size()), C(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return DensePoly(std::move(r));
    }

    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
        std::vector<C> r(std::max(a.c.size(), b.c.size()), C(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return DensePoly(std::move(r));
    }

    DensePoly operator-() const {
        std::vector<C> r(c);
        for (auto& x : r) x = -x;
        return DensePoly(std::move(r));
    }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return DensePoly();
        std::vector<C> r(a.c.size() + b.c.size() - 1, C(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return DensePoly(std::move(r));
    }

    friend DensePoly operator*(const C& s, const DensePoly& p) {
        std::vector<C> r(p.c);
        for (auto& x : r) x *= s;
        return DensePoly(std::move(r));
    }
};

using Poly = DensePoly<Rat>;
using QPoly = DensePoly<Int>;

template <class C>
DensePoly<C> poly_x() {
    return DensePoly<C>({C(0), C(1)});
}

// P(a x + b) by Horner.
template <class C>
DensePoly<C> compose_linear(const DensePoly<C>& p, const C& a, const C& b) {
    DensePoly<C> lin({b, a});
    DensePoly<C> r;
    for (size_t i = p.c.size(); i-- > 0;) r = r * lin + DensePoly<C>({p.c[i]});
    return r;
}

template <class C>
DensePoly<C> taylor_shift(const DensePoly<C>& p, const C& b) {
    return compose_linear(p, C(1), b);
}

// Field division with remainder: a = q*b + r, deg r < deg b.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    Poly r = a;
    std::vector<Rat> q(a.degree() >= b.degree() ? static_cast<size_t>(a.degree() - b.degree() + 1) : 0, Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        long shift = r.degree() - b.degree();
        Rat f = r.leading() / b.leading();
        q[static_cast<size_t>(shift)] = f;
        std::vector<Rat> sub(static_cast<size_t>(shift), Rat(0));
        sub.insert(sub.end(), b.c.begin(), b.c.end());
        Poly s(std::move(sub));
        r = r - f * s;
    }
    return {Poly(std::move(q)), r};
}

inline Poly poly_div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("poly_div_exact: inexact division");
    return q;
}

inline Poly make_monic(const Poly& p) {
    if (p.is_zero()) return p;
    Rat inv = Rat(1) / p.leading();
    return inv * p;
}

inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = make_monic(r);
    }
    return make_monic(a);
}

inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero() || p.degree() == 0) return p;
    Poly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return poly_div_exact(p, g);
}

// Scale a rational polynomial by a positive rational so its coefficients
// become coprime integers. Signs, hence Sturm data, are unchanged.
inline QPoly make_primitive(const Poly& p) {
    if (p.is_zero()) return QPoly();
    Int lcm_den(1);
    for (const auto& x : p.c) {
        Int d = x.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
        lcm_den = lcm_den / g * d;
    }
    std::vector<Int> ic;
    ic.reserve(p.c.size());
    Int content(0);
    for (const auto& x : p.c) {
        Rat scaled = x * Rat(lcm_den);
        Int v = scaled.get_num();
        ic.push_back(v);
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        content = g;
    }
    if (content > 1)
        for (auto& v : ic) v = div_exact(v, content);
    return QPoly(std::move(ic));
}

// Sturm chain of the primitive integer images; each link scaled positive so
// sign sequences match the rational chain.
inline std::vector<QPoly> sturm_chain(const Poly& p) {
    std::vector<QPoly> chain;
    Poly a = p, b = p.derivative();
    chain.push_back(make_primitive(a));
    while (!b.is_zero()) {
        chain.push_back(make_primitive(b));
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = -r;
    }
    return chain;
}

inline int sgn_rat(const Rat& x) { return sgn(x); }

inline long sign_variations(const std::vector<int>& signs) {
    long v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

inline long variations_at(const std::vector<QPoly>& chain, const Rat& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) signs.push_back(p.is_zero() ? 0 : sgn(p.eval(x)));
    return sign_variations(signs);
}

inline long variations_at_neg_inf(const std::vector<QPoly>& chain) {
    std::vector<int> signs;
    for (const auto& p : chain) {
        if (p.is_zero()) {
            signs.push_back(0);
            continue;
        }
        int s = sgn(p.leading());
        if (p.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return sign_variations(signs);
}

inline long variations_at_pos_inf(const std::vector<QPoly>& chain) {
    std::vector<int> signs;
    for (const auto& p : chain) signs.push_back(p.is_zero() ? 0 : sgn(p.leading()));
    return sign_variations(signs);
}

// Distinct real roots of a squarefree polynomial.
inline long count_distinct_real_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("count_distinct_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    return variations_at_neg_inf(chain) - variations_at_pos_inf(chain);
}

// Distinct real roots in the half-open interval (a, b].
inline long count_roots_half_open(const Poly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw std::domain_error("count_roots_half_open: zero polynomial");
    auto chain = sturm_chain(p);
    return variations_at(chain, a) - variations_at(chain, b);
}

// All complex roots real (with multiplicity folded out first).
inline bool is_real_rooted(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("is_real_rooted: zero polynomial");
    if (p.degree() <= 0) return true;
    Poly s = squarefree_part(p);
    return count_distinct_real_roots(s) == s.degree();
}

// Sparse Laurent polynomials: exponent -> coefficient, zeros never stored.
template <class C>
struct SparseLaurent {
    std::map<long, C> t;

    SparseLaurent() = default;

    static SparseLaurent monomial(long e, const C& coeff) {
        SparseLaurent r;
        if (!(coeff == 0)) r.t[e] = coeff;
        return r;
    }

    static SparseLaurent from_dense(const DensePoly<C>& p, long offset = 0) {
        SparseLaurent r;
        for (size_t i = 0; i < p.c.size(); ++i)
            if (!(p.c[i] == 0)) r.t[static_cast<long>(i) + offset] = p.c[i];
        return r;
    }

    bool is_zero() const { return t.empty(); }

    C at(long e) const {
        auto it = t.find(e);
        return it == t.end() ? C(0) : it->second;
    }

    long lowest() const {
        if (t.empty()) throw std::domain_error("lowest: zero Laurent polynomial");
        return t.begin()->first;
    }

    long highest() const {
        if (t.empty()) throw std::domain_error("highest: zero Laurent polynomial");
        return t.rbegin()->first;
    }

    void add_term(long e, const C& coeff) {
        auto it = t.find(e);
        if (it == t.end()) {
            if (!(coeff == 0)) t[e] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) t.erase(it);
        }
    }

    friend SparseLaurent operator+(const SparseLaurent& a, const SparseLaurent& b) {
        SparseLaurent r = a;
        for (const auto& [e, c] : b.t) r.add_term(e, c);
        return r;
    }

    friend SparseLaurent operator-(const SparseLaurent& a, const SparseLaurent& b) {
        SparseLaurent r = a;
        for (const auto& [e, c] : b.t) r.add_term(e, C(0) - c);
        return r;
    }

    friend SparseLaurent operator*(const SparseLaurent& a, const SparseLaurent& b) {
        SparseLaurent r;
        for (const auto& [ea, ca] : a.t)
            for (const auto& [eb, cb] : b.t) r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend SparseLaurent operator*(const C& s, const SparseLaurent& p) {
        SparseLaurent r;
        for (const auto& [e, c] : p.t) r.add_term(e, s * c);
        return r;
    }

    friend bool operator==(const SparseLaurent& a, const SparseLaurent& b) { return a.t == b.t; }
    friend bool operator!=(const SparseLaurent& a, const SparseLaurent& b) { return !(a == b); }

    // q -> 1/q.
    SparseLaurent bar() const {
        SparseLaurent r;
        for (const auto& [e, c] : t) r.t[-e] = c;
        return r;
    }

    // q -> q^k, k > 0.
    SparseLaurent stretch(long k) const {
        if (k <= 0) throw std::domain_error("stretch: exponent factor must be positive");
        SparseLaurent r;
        for (const auto& [e, c] : t) r.t[e * k] = c;
        return r;
    }

    // Multiply by the monomial q^e.
    SparseLaurent shifted(long e) const {
        SparseLaurent r;
        for (const auto& [ex, c] : t) r.t[ex + e] = c;
        return r;
    }

    bool all_nonneg() const {
        for (const auto& [e, c] : t)
            if (c < 0) return false;
        return true;
    }
};

using LaurentPoly = SparseLaurent<Rat>;
using QLaurent = SparseLaurent<Int>;

// Exact Laurent division: shift both operands to ordinary polynomials,
// divide there, and shift back.
inline LaurentPoly laurent_div_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("laurent_div_exact: zero divisor");
    if (num.is_zero()) return LaurentPoly();
    long ln = num.lowest(), ld = den.lowest();
    auto to_dense = [](const LaurentPoly& p, long low) {
        std::vector<Rat> c(static_cast<size_t>(p.highest() - low + 1), Rat(0));
        for (const auto& [e, v] : p.t) c[static_cast<size_t>(e - low)] = v;
        return Poly(std::move(c));
    };
    Poly q = poly_div_exact(to_dense(num, ln), to_dense(den, ld));
    return LaurentPoly::from_dense(q, ln - ld);
}

// P(y) at y = phi - 1/phi, as a Laurent polynomial in phi.
inline LaurentPoly substitute_phi(const Poly& p) {
    LaurentPoly y;
    y.add_term(1, Rat(1));
    y.add_term(-1, Rat(-1));
    LaurentPoly r;
    for (size_t i = p.c.size(); i-- > 0;) {
        r = r * y;
        r.add_term(0, p.c[i]);
    }
    return r;
}

}  // namespace quartic
