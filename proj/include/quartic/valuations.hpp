#pragma once

// The integer family A_{l,m} = l! m! 2^{m+l} d_{l,m}, its 2-adic valuation
// theorem, the odd quotients B_{l,m}, block structure of the valuation
// sequences X(l), the F/T/c reduction algorithm with its binary-composition
// target, and p-adic valuation series for odd primes.

#include <stdexcept>
#include <string>
#include <vector>

#include "quartic/dlm.hpp"
#include "quartic/exact.hpp"
#include "quartic/report.hpp"

namespace quartic {

// Streams rows of A_{l,m} over increasing m for all l <= l_max at once,
// using the integer recurrence A_{l,m+1} = 4l(l+m) A_{l-1,m}
// + (2l+4m+3) A_{l,m} derived from the first Kauers-Paule recurrence.
// A_{l,m} = 0 for l > m; A_{0,0} = 1.
class ARowStream {
  public:
    explicit ARowStream(long l_max) : l_max_(l_max), m_(0), a_(static_cast<size_t>(l_max) + 1, Int(0)) {
        if (l_max < 0) throw std::domain_error("ARowStream: negative l_max");
        a_[0] = 1;
    }

    long m() const { return m_; }

    // Advance m by one; columns update in place, descending l so that the
    // l-1 operand is still the old row.
    void advance() {
        long mo = m_;
        long top = std::min(l_max_, mo + 1);
        for (long l = top; l >= 1; --l) {
            Int t = a_[static_cast<size_t>(l)] * (2 * l + 4 * mo + 3);
            t += a_[static_cast<size_t>(l - 1)] * (4 * l * (l + mo));
            a_[static_cast<size_t>(l)] = std::move(t);
        }
        a_[0] *= 4 * mo + 3;
        ++m_;
    }

    // A_{l, m()} for l <= l_max; zero when l > m().
    const Int& at(long l) const {
        if (l < 0 || l > l_max_) throw std::domain_error("ARowStream::at: l out of range");
        return a_[static_cast<size_t>(l)];
    }

  private:
    long l_max_;
    long m_;
    std::vector<Int> a_;
};

// A_{l,m} by both printed routes: the d-scaling and the scaled single sum.
// They must agree; a mismatch is a hard failure.
inline Int a_number(long l, long m) {
    if (l < 0 || m < 0 || l > m) throw std::domain_error("a_number: requires 0 <= l <= m");
    Rat scaled = Rat(factorial(l) * factorial(m) * pow2(m + l)) * d_coeff(l, m, DMethod::single);
    if (scaled.get_den() != 1) throw std::logic_error("a_number: d-route not an integer");
    Int via_d = scaled.get_num();
    Int s(0);
    for (long k = l; k <= m; ++k)
        s += pow2(k) * binomial(2 * m - 2 * k, m - k) * binomial(m + k, k) * binomial(k, l);
    Int via_sum = div_exact(factorial(l) * factorial(m) * s, pow2(m - l));
    if (via_d != via_sum) throw std::logic_error("a_number: routes disagree");
    return via_d;
}

// Full row {A_{l,m} : 0 <= l <= m} through the d-scaling route.
inline std::vector<Int> a_row(long m) {
    std::vector<Rat> d = d_row_single(m);
    std::vector<Int> out(static_cast<size_t>(m) + 1);
    Int factor = factorial(m) * pow2(m);  // l! 2^l folded in below
    for (long l = 0; l <= m; ++l) {
        if (l > 0) factor *= 2 * l;
        Rat s = Rat(factor) * d[static_cast<size_t>(l)];
        if (s.get_den() != 1) throw std::logic_error("a_row: non-integer entry");
        out[static_cast<size_t>(l)] = s.get_num();
    }
    return out;
}

enum class Nu2Method { direct, formula };

// nu2(A_{l,m}) = nu2((m+1-l)_{2l}) + l = 3l - s2(m+l) + s2(m-l), via
// Legendre digit sums. Valid for 0 <= l <= m.
inline long nu2_a_formula(long l, long m) {
    if (l < 0 || m < 0 || l > m) throw std::domain_error("nu2_a_formula: requires 0 <= l <= m");
    return 3 * l - s2(m + l) + s2(m - l);
}

inline long nu2_a(long l, long m, Nu2Method method = Nu2Method::formula) {
    if (method == Nu2Method::formula) return nu2_a_formula(l, m);
    return nu2_int(a_number(l, m));
}

// B_{l,m} = A_{l,m} / (2^l (m+1-l)_{2l}): an odd integer by the valuation
// theorem. Non-integer or even quotients are theorem violations.
inline Int b_number_of(const Int& a, long l, long m) {
    Int q = div_exact(a, pow2(l) * pochhammer(Int(m + 1 - l), 2 * l));
    if (mpz_even_p(q.get_mpz_t())) throw std::logic_error("b_number: even quotient");
    return q;
}

inline Int b_number(long l, long m) {
    if (l < 0 || m < 0 || l > m) throw std::domain_error("b_number: requires 0 <= l <= m");
    return b_number_of(a_number(l, m), l, m);
}

// B_{l-1,m} = (2m+1) B_{l,m} - (m-l)(m+l+1) B_{l+1,m} for 1 <= l <= m-1,
// checked per m on a full column computed from the streamed A values.
inline Report b_backward_check(long m_max) {
    Report r{"b_backward", "m_max=" + std::to_string(m_max), true, {}};
    ARowStream st(m_max);
    for (long m = 1; m <= m_max; ++m) {
        while (st.m() < m) st.advance();
        std::vector<Int> b(static_cast<size_t>(m) + 1);
        for (long l = 0; l <= m; ++l) b[static_cast<size_t>(l)] = b_number_of(st.at(l), l, m);
        for (long l = 1; l <= m - 1; ++l) {
            Int lhs = b[static_cast<size_t>(l - 1)];
            Int rhs = (2 * m + 1) * b[static_cast<size_t>(l)] - (m - l) * (m + l + 1) * b[static_cast<size_t>(l + 1)];
            if (lhs != rhs) {
                r.passed = false;
                r.note("l", std::to_string(l));
                r.note("m", std::to_string(m));
                r.note("lhs", lhs.get_str());
                r.note("rhs", rhs.get_str());
                return r;
            }
        }
    }
    return r;
}

// ---- valuation sequences -------------------------------------------------

struct ValuationSeries {
    long p = 2;
    long l = 0;
    long start_m = 1;
    std::vector<long> values;
};

// X(l) = {nu2(A_{l,l+i-1}) : i = 1..count}, by the valuation formula.
inline std::vector<long> x_series_formula(long l, long count) {
    if (l < 1) throw std::domain_error("x_series_formula: l >= 1 required");
    std::vector<long> x(static_cast<size_t>(count));
    for (long i = 1; i <= count; ++i) x[static_cast<size_t>(i - 1)] = 3 * l - s2(2 * l + i - 1) + s2(i - 1);
    return x;
}

// X(l) prefixes for every 1 <= l <= l_max from the raw integer stream.
inline std::vector<std::vector<long>> x_series_raw_all(long l_max, long count) {
    std::vector<std::vector<long>> xs(static_cast<size_t>(l_max) + 1);
    ARowStream st(l_max);
    long m_stop = l_max + count - 1;
    for (long m = 1; m <= m_stop; ++m) {
        st.advance();
        for (long l = 1; l <= std::min(m, l_max); ++l) {
            auto& v = xs[static_cast<size_t>(l)];
            if (static_cast<long>(v.size()) < count) v.push_back(nu2_int(st.at(l)));
        }
    }
    return xs;
}

struct BlockReport {
    long l = 0;
    long predicted_s = 0;
    long verified_window = 0;
    bool is_s_simple_on_window = false;
    bool refuted_larger_s = false;
};

namespace detail {

inline bool blocks_constant(const std::vector<long>& v, long bs) {
    long nb = static_cast<long>(v.size()) / bs;
    for (long b = 0; b < nb; ++b)
        for (long i = 1; i < bs; ++i)
            if (v[static_cast<size_t>(b * bs + i)] != v[static_cast<size_t>(b * bs)]) return false;
    return true;
}

inline bool all_equal(const std::vector<long>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] != v[0]) return false;
    return true;
}

}  // namespace detail

// Confirms X(l) is constant on aligned blocks of s = 2^{1+nu2(l)} over the
// window and that block length 2s fails.
inline BlockReport block_structure(long l, long window) {
    if (l < 1) throw std::domain_error("block_structure: l >= 1 required");
    long s = 1L << (1 + nu2(l));
    if (window < 4 * s) throw std::domain_error("block_structure: window < 4*predicted_s");
    std::vector<long> x = x_series_formula(l, window);
    BlockReport br;
    br.l = l;
    br.predicted_s = s;
    br.verified_window = window;
    br.is_s_simple_on_window = detail::blocks_constant(x, s);
    br.refuted_larger_s = !detail::blocks_constant(x, 2 * s);
    return br;
}

// Binary composition of l: digit counts from the right to each successive 1,
// i.e. {k1+1, k2-k1, ..., kn-k_{n-1}} for set-bit positions k1 < ... < kn.
inline std::vector<long> composition(long l) {
    if (l < 1) throw std::domain_error("composition: l >= 1 required");
    std::vector<long> parts;
    long prev = -1;
    for (long k = 0; (1L << k) <= l; ++k)
        if ((l >> k) & 1) {
            parts.push_back(k - prev);
            prev = k;
        }
    return parts;
}

struct ReductionTrace {
    long l = 0;
    std::vector<long> omega;
    std::vector<std::vector<long>> cycles;  // prefix snapshot per cycle
    bool constant_tail = false;
    bool window_exhausted = false;
};

namespace detail {

// T: keep odd positions (1-based).
inline std::vector<long> take_odd(const std::vector<long>& v) {
    std::vector<long> r;
    r.reserve((v.size() + 1) / 2);
    for (size_t i = 0; i < v.size(); i += 2) r.push_back(v[i]);
    return r;
}

// subtract c = {nu2(m) : m >= 1} elementwise.
inline std::vector<long> subtract_c(const std::vector<long>& v) {
    std::vector<long> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] - nu2(static_cast<long>(i) + 1);
    return r;
}

// F: duplicate the first entry, shifting the rest right (length preserved).
inline std::vector<long> apply_F(const std::vector<long>& v) {
    if (v.empty()) return v;
    std::vector<long> r;
    r.reserve(v.size());
    r.push_back(v[0]);
    for (size_t i = 0; i + 1 < v.size(); ++i) r.push_back(v[i]);
    return r;
}

// Largest n >= 1 with the sequence constant on aligned 2^n blocks, requiring
// at least 4 full blocks as evidence before promoting. exhausted means the
// window could not decide the next level.
struct SimpleScan {
    long n = 0;
    bool refuted = false;
    bool exhausted = false;
};

inline SimpleScan scan_simple(const std::vector<long>& v) {
    SimpleScan s;
    for (;;) {
        long bs = 1L << (s.n + 1);
        if (static_cast<long>(v.size()) / bs < 4) {
            s.exhausted = true;
            return s;
        }
        if (!blocks_constant(v, bs)) {
            s.refuted = true;
            return s;
        }
        ++s.n;
    }
}

}  // namespace detail

// One pass of the reduction algorithm on a concrete valuation window:
// repeatedly find the block exponent n, keep one representative per block
// (T applied n times), subtract c, apply F, and stop once the window is
// constant. The parts n form omega.
inline ReductionTrace reduce_core(long l, std::vector<long> cur) {
    ReductionTrace tr;
    tr.l = l;
    for (int cycle = 0; cycle < 40; ++cycle) {
        std::vector<long> snap(cur.begin(), cur.begin() + std::min<size_t>(cur.size(), 16));
        tr.cycles.push_back(std::move(snap));
        detail::SimpleScan sc = detail::scan_simple(cur);
        if (sc.n == 0) {
            tr.window_exhausted = sc.exhausted;
            if (!sc.exhausted) tr.omega.push_back(0);  // genuine refutation at stride 2
            return tr;
        }
        if (sc.exhausted) {
            // n established but the next level was undecidable: window too small
            tr.window_exhausted = true;
            return tr;
        }
        tr.omega.push_back(sc.n);
        for (long t = 0; t < sc.n; ++t) cur = detail::take_odd(cur);
        cur = detail::subtract_c(cur);
        cur = detail::apply_F(cur);
        if (static_cast<long>(cur.size()) < 16) {
            tr.window_exhausted = true;
            return tr;
        }
        if (detail::all_equal(cur)) {
            tr.constant_tail = true;
            return tr;
        }
    }
    tr.window_exhausted = true;
    return tr;
}

// Window generous enough for every cycle: the total shrink is
// 2^{floor(log2 l)+1}, and 32 entries must survive at the end.
inline long reduce_window_for(long l, long tail = 32) {
    long k = 0;
    while ((1L << (k + 1)) <= l) ++k;
    return tail << (k + 1);
}

// Reduction on formula-generated data, enlarging the window on exhaustion.
inline ReductionTrace reduce_sequence(long l, long window = 0) {
    if (l < 1) throw std::domain_error("reduce_sequence: l >= 1 required");
    if (window <= 0) window = reduce_window_for(l);
    for (int attempt = 0; attempt < 4; ++attempt) {
        ReductionTrace tr = reduce_core(l, x_series_formula(l, window));
        if (!tr.window_exhausted) return tr;
        window *= 2;
    }
    ReductionTrace tr = reduce_core(l, x_series_formula(l, window));
    return tr;  // window_exhausted stays set if still undecided
}

// Reduction on a caller-supplied raw window (e.g. from ARowStream).
inline ReductionTrace reduce_sequence_raw(long l, const std::vector<long>& x) {
    if (l < 1) throw std::domain_error("reduce_sequence_raw: l >= 1 required");
    return reduce_core(l, x);
}

// ---- p-adic series -------------------------------------------------------

struct NupSeries {
    ValuationSeries series;
    std::vector<Rat> error;  // nu_p(A_{l,m}) - m/(p-1), exact
};

// nu_p(A_{l,m}) for m = l..m_max with the error column against m/(p-1).
// p = 2 is served by the valuation formula; odd p factors the streamed
// integers directly.
inline NupSeries nup_series(long p, long l, long m_max) {
    if (l < 0) throw std::domain_error("nup_series: negative l");
    if (m_max < l) throw std::domain_error("nup_series: m_max < l");
    require_prime(p);
    NupSeries out;
    out.series.p = p;
    out.series.l = l;
    out.series.start_m = l;
    out.series.values.reserve(static_cast<size_t>(m_max - l + 1));
    if (p == 2) {
        for (long m = l; m <= m_max; ++m) out.series.values.push_back(nu2_a_formula(l, m));
    } else {
        ARowStream st(l);
        while (st.m() < l) st.advance();
        for (long m = l; m <= m_max; ++m) {
            out.series.values.push_back(nu_int(p, st.at(l)));
            if (m < m_max) st.advance();
        }
    }
    out.error.reserve(out.series.values.size());
    for (size_t i = 0; i < out.series.values.size(); ++i) {
        long m = l + static_cast<long>(i);
        out.error.push_back(make_rat(out.series.values[i] * (p - 1) - m, p - 1));
    }
    return out;
}

// Least-squares slope of the series values against m.
inline double nup_slope(const NupSeries& s) {
    double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < s.series.values.size(); ++i) {
        double x = static_cast<double>(s.series.start_m + static_cast<long>(i));
        double y = static_cast<double>(s.series.values[i]);
        n += 1;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace quartic
