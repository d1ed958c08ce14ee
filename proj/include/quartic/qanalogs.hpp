#pragma once

// Gaussian and quantum q-binomial coefficients, the q-flavored L operator,
// the depth-2 negativity witness for Gaussian rows, conjecture probes for
// quantum rows/columns/diagonals, and the lowest-degree computation for the
// u > v diagonal differences.
//
// Gaussian binomials are computed by the q-Pascal rule; quantum binomials by
// their own two-term rule in Laurent form. Keeping the two pipelines apart
// makes the exponent-shift relation between them a genuine cross-check.

#include <stdexcept>
#include <string>
#include <vector>

#include "quartic/exact.hpp"
#include "quartic/poly.hpp"
#include "quartic/report.hpp"

namespace quartic {

// [n k]_q via [i j] = [i-1 j] + q^{i-j} [i-1 j-1]; zero outside 0 <= k <= n.
inline QPoly gaussian_binomial(long n, long k) {
    if (n < 0) throw std::domain_error("gaussian_binomial: negative n");
    if (k < 0 || k > n) return QPoly();
    std::vector<QPoly> row{QPoly({Int(1)})};
    for (long i = 1; i <= n; ++i) {
        std::vector<QPoly> next(static_cast<size_t>(i) + 1);
        for (long j = 0; j <= i; ++j) {
            QPoly t = (j <= i - 1) ? row[static_cast<size_t>(j)] : QPoly();
            if (j >= 1) {
                const QPoly& prev = row[static_cast<size_t>(j - 1)];
                std::vector<Int> shifted(static_cast<size_t>(i - j), Int(0));
                shifted.insert(shifted.end(), prev.c.begin(), prev.c.end());
                t = t + QPoly(std::move(shifted));
            }
            next[static_cast<size_t>(j)] = std::move(t);
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

// <n k> via <i j> = q^{-j} <i-1 j> + q^{i-j} <i-1 j-1>; zero outside range.
inline QLaurent quantum_binomial(long n, long k) {
    if (n < 0) throw std::domain_error("quantum_binomial: negative n");
    if (k < 0 || k > n) return QLaurent();
    std::vector<QLaurent> row{QLaurent::monomial(0, Int(1))};
    for (long i = 1; i <= n; ++i) {
        std::vector<QLaurent> next(static_cast<size_t>(i) + 1);
        for (long j = 0; j <= i; ++j) {
            QLaurent t;
            if (j <= i - 1) t = row[static_cast<size_t>(j)].shifted(-j);
            if (j >= 1) t = t + row[static_cast<size_t>(j - 1)].shifted(i - j);
            next[static_cast<size_t>(j)] = std::move(t);
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

// The exponent-shift relation: <n k> = q^{-(nk-k^2)} [n k]_{q^2}.
inline bool quantum_gaussian_relation(long n, long k) {
    QLaurent lhs = quantum_binomial(n, k);
    QLaurent rhs = QLaurent::from_dense(gaussian_binomial(n, k)).stretch(2).shifted(-(n * k - k * k));
    return lhs == rhs;
}

// f_k^2 - f_{k-1} f_{k+1} with zero polynomials outside the range, plus a
// coefficientwise nonnegativity flag per entry.
struct QLSeq {
    std::vector<QLaurent> entries;
    std::vector<bool> nonneg;
};

inline QLSeq q_l_operator(const std::vector<QLaurent>& f) {
    QLSeq out;
    out.entries.resize(f.size());
    out.nonneg.resize(f.size());
    for (size_t j = 0; j < f.size(); ++j) {
        QLaurent v = f[j] * f[j];
        if (j > 0 && j + 1 < f.size()) v = v - f[j - 1] * f[j + 1];
        out.nonneg[j] = v.all_nonneg();
        out.entries[j] = std::move(v);
    }
    return out;
}

struct QWitness {
    bool found = false;
    long n = -1, k = -1, exponent = 0;
    Int coefficient;
};

// Smallest (n, then k, then exponent) negative coefficient after applying
// the q-L operator twice to a Gaussian row, scanning n <= n_max.
inline QWitness gaussian_depth2_scan(long n_max) {
    for (long n = 0; n <= n_max; ++n) {
        std::vector<QLaurent> row(static_cast<size_t>(n) + 1);
        for (long k = 0; k <= n; ++k) row[static_cast<size_t>(k)] = QLaurent::from_dense(gaussian_binomial(n, k));
        QLSeq once = q_l_operator(row);
        QLSeq twice = q_l_operator(once.entries);
        for (long k = 0; k <= n; ++k) {
            const QLaurent& e = twice.entries[static_cast<size_t>(k)];
            for (const auto& [exp, coef] : e.t)
                if (coef < 0) {
                    QWitness w;
                    w.found = true;
                    w.n = n;
                    w.k = k;
                    w.exponent = exp;
                    w.coefficient = coef;
                    return w;
                }
        }
    }
    return {};
}

inline Report gaussian_depth2_witness(long n_max) {
    Report r{"gaussian_depth2_witness", "n_max=" + std::to_string(n_max), false, {}};
    if (n_max < 4) throw std::domain_error("gaussian_depth2_witness: n_max >= 4 required");
    QWitness w = gaussian_depth2_scan(n_max);
    if (!w.found) {
        r.note("result", "no witness <= n_max");
        return r;
    }
    r.passed = true;
    r.note("n", std::to_string(w.n));
    r.note("k", std::to_string(w.k));
    r.note("exponent", std::to_string(w.exponent));
    r.note("coefficient", w.coefficient.get_str());
    return r;
}

// ---- conjecture probes -------------------------------------------------------

struct QuantumFamily {
    enum class Kind { row, column, diagonal } kind = Kind::row;
    long n = 0;  // row(n); diagonal base n
    long k = 0;  // column(k)
    long u = 0, v = 0;  // diagonal step <n+mu over mv>
};

inline QuantumFamily q_row(long n) { return {QuantumFamily::Kind::row, n, 0, 0, 0}; }
inline QuantumFamily q_column(long k) { return {QuantumFamily::Kind::column, 0, k, 0, 0}; }
inline QuantumFamily q_diagonal(long n, long u, long v) { return {QuantumFamily::Kind::diagonal, n, 0, u, v}; }

// Iterates the q-L operator up to depth. A row family is finite and its
// zero-padding is genuine; column and diagonal families are truncated at
// bound, so one right-edge entry loses validity per iteration and the
// nonnegativity window shrinks accordingly.
inline Report quantum_conjecture_probe(const QuantumFamily& fam, long depth, long bound) {
    std::string params;
    std::vector<QLaurent> f;
    bool truncated = false;
    switch (fam.kind) {
        case QuantumFamily::Kind::row: {
            params = "row n=" + std::to_string(fam.n);
            for (long k = 0; k <= fam.n; ++k) f.push_back(quantum_binomial(fam.n, k));
            break;
        }
        case QuantumFamily::Kind::column: {
            params = "column k=" + std::to_string(fam.k) + ",bound=" + std::to_string(bound);
            truncated = true;
            for (long n = fam.k; n <= bound; ++n) f.push_back(quantum_binomial(n, fam.k));
            break;
        }
        case QuantumFamily::Kind::diagonal: {
            if (!(0 <= fam.u && fam.u < fam.v))
                throw std::domain_error("quantum_conjecture_probe: diagonal needs 0 <= u < v (u > v belongs to diagonal_lowest_degree)");
            params = "diagonal n=" + std::to_string(fam.n) + ",u=" + std::to_string(fam.u) + ",v=" +
                     std::to_string(fam.v) + ",bound=" + std::to_string(bound);
            truncated = true;
            for (long m = 0; m <= bound; ++m) f.push_back(quantum_binomial(fam.n + m * fam.u, m * fam.v));
            break;
        }
    }
    params += ",depth=" + std::to_string(depth);
    Report r{"quantum_conjecture_probe", params, true, {}};
    if (depth < 1) throw std::domain_error("quantum_conjecture_probe: depth >= 1 required");
    size_t valid = f.size();
    for (long d = 1; d <= depth; ++d) {
        QLSeq step = q_l_operator(f);
        if (truncated && valid > 0) --valid;  // right edge used an out-of-window neighbor
        for (size_t j = 0; j < valid; ++j)
            if (!step.nonneg[j]) {
                r.passed = false;
                r.note("depth", std::to_string(d));
                r.note("index", std::to_string(j));
                return r;
            }
        f = std::move(step.entries);
    }
    return r;
}

// Depth-1 defect <n+u v>^2 - <n+2u 2v> for u > v >= 1. The subtracted term
// bottoms out at exponent -2v(n+2u-2v), strictly below the square's bottom
// -2v(n+u-v), so its unit coefficient survives negated: the defect's
// lowest-degree term is always -q^{-2v(n+2u-2v)}, which is the negativity
// witness killing q-log-concavity on these diagonals.
struct DiagonalDefect {
    long lowest_exponent;
    Int lowest_coefficient;
};

inline DiagonalDefect diagonal_defect(long n, long u, long v) {
    if (!(u > v && v >= 1)) throw std::domain_error("diagonal_defect: u > v >= 1 required");
    if (n + u < v || n + 2 * u < 2 * v) throw std::domain_error("diagonal_defect: indices out of range");
    QLaurent a = quantum_binomial(n + u, v);
    QLaurent diff = a * a - quantum_binomial(n + 2 * u, 2 * v);
    if (diff.is_zero()) throw std::logic_error("diagonal_defect: difference vanished");
    return {diff.lowest(), diff.t.begin()->second};
}

// Coefficient of the defect's lowest-degree term; -1 for every valid triple.
inline long diagonal_lowest_degree(long n, long u, long v) {
    DiagonalDefect d = diagonal_defect(n, u, v);
    return static_cast<long>(d.lowest_coefficient.get_si());
}

}  // namespace quartic
