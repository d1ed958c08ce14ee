#pragma once

// Real-sequence apparatus: unimodality and log-concavity classification, the
// L operator b_j = a_j^2 - a_{j-1} a_{j+1}, iterated log-concavity probes,
// the exact r-factor certificate in Q(sqrt5), the shift-unimodality theorem
// check, Newton's inequality harness, and the real-rootedness probe for L.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quartic/exact.hpp"
#include "quartic/poly.hpp"
#include "quartic/rand.hpp"
#include "quartic/report.hpp"

namespace quartic {

using Seq = std::vector<Rat>;

// b_j = a_j^2 - a_{j-1} a_{j+1} with zero neighbors outside the range.
inline Seq l_operator(const Seq& a) {
    Seq b(a.size());
    for (size_t j = 0; j < a.size(); ++j) {
        Rat v = a[j] * a[j];
        if (j > 0 && j + 1 < a.size()) v -= a[j - 1] * a[j + 1];
        b[j] = v;
    }
    return b;
}

inline bool is_unimodal(const Seq& a) {
    size_t i = 0;
    while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
    while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
    return a.empty() || i == a.size() - 1;
}

struct Classification {
    bool unimodal = false;
    std::optional<bool> log_concave;  // absent when a negative entry makes it undefined
    long witness_j = -1;              // first j with a_j^2 < a_{j-1} a_{j+1}
};

inline Classification classify(const Seq& a) {
    Classification c;
    c.unimodal = is_unimodal(a);
    for (const Rat& v : a)
        if (v < 0) return c;
    c.log_concave = true;
    for (size_t j = 1; j + 1 < a.size(); ++j)
        if (a[j] * a[j] < a[j - 1] * a[j + 1]) {
            c.log_concave = false;
            c.witness_j = static_cast<long>(j);
            break;
        }
    return c;
}

// Applies L up to depth times; passes iff every iterate stays coefficientwise
// nonnegative. Never a claim about the infinite statement.
inline Report inf_lc_probe(const Seq& a, long depth) {
    Report r{"inf_lc_probe", "depth=" + std::to_string(depth), true, {}};
    if (depth < 1) throw std::domain_error("inf_lc_probe: depth >= 1 required");
    for (const Rat& v : a)
        if (v < 0) throw std::domain_error("inf_lc_probe: nonnegative input required");
    Seq cur = a;
    for (long d = 1; d <= depth; ++d) {
        cur = l_operator(cur);
        for (size_t j = 0; j < cur.size(); ++j)
            if (cur[j] < 0) {
                r.passed = false;
                r.note("depth", std::to_string(d));
                r.note("index", std::to_string(j));
                r.note("value", cur[j].get_str());
                return r;
            }
    }
    return r;
}

// a_k^2 >= r a_{k-1} a_{k+1} with r = (3+sqrt5)/2, decided exactly:
// the claim is 2 a_k^2 - 3 a_{k-1} a_{k+1} >= sqrt5 a_{k-1} a_{k+1}, with a
// positive right factor, so compare signs and then squares. A true result is
// a certificate of infinite log-concavity.
inline bool r_factor_certify(const Seq& a) {
    for (const Rat& v : a)
        if (v <= 0) throw std::domain_error("r_factor_certify: positive entries required");
    for (size_t k = 1; k + 1 < a.size(); ++k) {
        Rat lhs = Rat(2) * a[k] * a[k] - Rat(3) * a[k - 1] * a[k + 1];
        Rat prod = a[k - 1] * a[k + 1];
        if (lhs < 0) return false;
        if (lhs * lhs < Rat(5) * prod * prod) return false;
    }
    return true;
}

// For nondecreasing positive coefficients s, A(x+1) is unimodal (theorem);
// returns the unimodality of the shifted coefficients.
inline bool shift_unimodal_check(const Seq& s) {
    if (s.empty()) throw std::domain_error("shift_unimodal_check: empty input");
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] <= 0) throw std::domain_error("shift_unimodal_check: positive entries required");
        if (i > 0 && s[i] < s[i - 1]) throw std::domain_error("shift_unimodal_check: nondecreasing input required");
    }
    Poly shifted = taylor_shift(Poly(s), Rat(1));
    return is_unimodal(shifted.c);
}

// L on the coefficients of a positive real-rooted polynomial; reports
// whether the image is again real-rooted (conjecture probe).
inline Report fisk_probe(const Poly& p) {
    Report r{"fisk_probe", "degree=" + std::to_string(p.degree()), true, {}};
    if (p.degree() < 1) throw std::domain_error("fisk_probe: degree >= 1 required");
    for (const Rat& v : p.c)
        if (v <= 0) throw std::domain_error("fisk_probe: positive coefficients required");
    if (!is_real_rooted(p)) throw std::domain_error("fisk_probe: real-rooted input required");
    Poly image(l_operator(p.c));
    r.passed = is_real_rooted(image);
    if (!r.passed) r.note("image_degree", std::to_string(image.degree()));
    return r;
}

// ---- randomized sweeps -----------------------------------------------------

// Product of (x + root) factors with roots drawn from {1..9}: positive
// coefficients, real roots by construction.
inline Poly random_real_rooted(Rng& rng, long degree) {
    Poly p({Rat(1)});
    for (long i = 0; i < degree; ++i) p = p * Poly({Rat(rng.uniform(1, 9)), Rat(1)});
    return p;
}

// Newton's theorem: positive real-rooted implies log-concave coefficients.
// This one is asserted, not merely reported.
inline Report newton_sweep(std::uint64_t seed, long samples, long max_degree) {
    Report r{"newton_sweep", "samples=" + std::to_string(samples) + ",seed=" + std::to_string(seed), true, {}};
    Rng rng(seed);
    for (long i = 0; i < samples; ++i) {
        long deg = rng.uniform(2, max_degree);
        Poly p = random_real_rooted(rng, deg);
        Classification c = classify(p.c);
        if (!c.log_concave || !*c.log_concave) {
            r.passed = false;
            r.note("sample", std::to_string(i));
            r.note("witness_j", std::to_string(c.witness_j));
            return r;
        }
    }
    return r;
}

inline Report shift_unimodal_sweep(std::uint64_t seed, long samples, long max_len) {
    Report r{"shift_unimodal_sweep", "samples=" + std::to_string(samples) + ",seed=" + std::to_string(seed), true, {}};
    Rng rng(seed);
    for (long i = 0; i < samples; ++i) {
        long n = rng.uniform(1, max_len);
        Seq s;
        Rat cur(0);
        for (long j = 0; j < n; ++j) {
            cur += make_rat(rng.uniform(1, 8), rng.uniform(1, 4));
            s.push_back(cur);
        }
        if (!shift_unimodal_check(s)) {
            r.passed = false;
            r.note("sample", std::to_string(i));
            return r;
        }
    }
    return r;
}

inline Report fisk_sweep(std::uint64_t seed, long samples, long max_degree) {
    Report r{"fisk_sweep", "samples=" + std::to_string(samples) + ",seed=" + std::to_string(seed), true, {}};
    Rng rng(seed);
    for (long i = 0; i < samples; ++i) {
        long deg = rng.uniform(2, max_degree);
        Report one = fisk_probe(random_real_rooted(rng, deg));
        if (!one.passed) {
            r.passed = false;
            r.note("sample", std::to_string(i));
            return r;
        }
    }
    return r;
}

// Certifies each binomial row infinitely log-concave: the r-factor condition
// survives L, so once an iterate certifies, all later iterates do. Raw rows
// fail the condition near the edges from n = 4 on, so L is applied (with each
// iterate checked positive) until the certificate lands.
inline Report pascal_r_sweep(long n_max) {
    Report r{"pascal_r_sweep", "n_max=" + std::to_string(n_max), true, {}};
    const long depth_cap = 8;
    long deepest = 0;
    for (long n = 2; n <= n_max; ++n) {
        Seq row(static_cast<size_t>(n) + 1);
        for (long k = 0; k <= n; ++k) row[static_cast<size_t>(k)] = Rat(binomial(n, k));
        long depth = 0;
        bool certified = false;
        while (depth <= depth_cap) {
            if (std::any_of(row.begin(), row.end(), [](const Rat& v) { return v <= 0; })) break;
            if (r_factor_certify(row)) {
                certified = true;
                break;
            }
            row = l_operator(row);
            ++depth;
        }
        if (!certified) {
            r.passed = false;
            r.note("n", std::to_string(n));
            r.note("depth_cap", std::to_string(depth_cap));
            return r;
        }
        deepest = std::max(deepest, depth);
    }
    r.note("max_depth", std::to_string(deepest));
    return r;
}

}  // namespace quartic
