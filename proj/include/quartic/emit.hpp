#pragma once

// Deterministic serialization: CSV with a header row and "\n" line ends,
// JSON with stable key order (ordered_json), DOT for decision trees.
// Rationals are always "num/den" strings so output round-trips exactly.

#include <json.hpp>
#include <sstream>
#include <string>

#include "quartic/concavity.hpp"
#include "quartic/dlm.hpp"
#include "quartic/poly.hpp"
#include "quartic/report.hpp"
#include "quartic/tree.hpp"
#include "quartic/valuations.hpp"

namespace quartic {

using ojson = nlohmann::ordered_json;

inline std::string rat_str(const Rat& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

inline std::string csv_d_table(const DTable& t) {
    std::string s = "m,l,d\n";
    for (long m = 0; m <= t.m_max; ++m)
        for (long l = 0; l <= m; ++l)
            s += std::to_string(m) + "," + std::to_string(l) + "," +
                 rat_str(t.d[static_cast<size_t>(m)][static_cast<size_t>(l)]) + "\n";
    return s;
}

inline ojson json_d_table(const DTable& t) {
    ojson rows = ojson::array();
    for (long m = 0; m <= t.m_max; ++m) {
        ojson row = ojson::array();
        for (long l = 0; l <= m; ++l) row.push_back(rat_str(t.d[static_cast<size_t>(m)][static_cast<size_t>(l)]));
        rows.push_back(row);
    }
    return ojson{{"m_max", t.m_max}, {"rows", rows}};
}

inline std::string csv_valuation_series(const ValuationSeries& v) {
    std::string s = "m,nu\n";
    for (size_t i = 0; i < v.values.size(); ++i)
        s += std::to_string(v.start_m + static_cast<long>(i)) + "," + std::to_string(v.values[i]) + "\n";
    return s;
}

inline std::string csv_nup_series(const NupSeries& v) {
    std::string s = "m,nu,err_num,err_den\n";
    for (size_t i = 0; i < v.series.values.size(); ++i)
        s += std::to_string(v.series.start_m + static_cast<long>(i)) + "," + std::to_string(v.series.values[i]) +
             "," + v.error[i].get_num().get_str() + "," + v.error[i].get_den().get_str() + "\n";
    return s;
}

inline ojson json_report(const Report& r) {
    ojson w = ojson::array();
    for (const auto& [k, v] : r.witness) w.push_back(ojson{{"key", k}, {"value", v}});
    return ojson{{"id", r.id}, {"passed", r.passed}, {"range", r.params}, {"witness", w}};
}

inline ojson json_block_report(const BlockReport& b) {
    return ojson{{"l", b.l},
                 {"predicted_s", b.predicted_s},
                 {"verified_window", b.verified_window},
                 {"is_s_simple_on_window", b.is_s_simple_on_window},
                 {"refuted_larger_s", b.refuted_larger_s}};
}

inline ojson json_reduction_trace(const ReductionTrace& t) {
    ojson cycles = ojson::array();
    for (const auto& snap : t.cycles) cycles.push_back(snap);
    return ojson{{"l", t.l},
                 {"omega", t.omega},
                 {"constant_tail", t.constant_tail},
                 {"window_exhausted", t.window_exhausted},
                 {"cycles", cycles}};
}

inline ojson json_piecewise(const PiecewiseFormula& pf) {
    ojson cases = ojson::array();
    for (const PiecewiseCase& c : pf.cases)
        cases.push_back(ojson{{"modulus", c.modulus}, {"residue", c.residue}, {"constant", c.constant}, {"shift", c.shift}});
    return ojson{{"l", pf.l}, {"cases", cases}};
}

inline std::string text_piecewise(const PiecewiseFormula& pf) {
    std::string s = "nu2(C_{" + std::to_string(pf.l) + ",m}) =\n";
    for (const PiecewiseCase& c : pf.cases) {
        s += "  " + std::to_string(c.constant) + " + nu2((m";
        if (c.shift > 0) s += "+" + std::to_string(c.shift);
        s += ")/" + std::to_string(c.modulus) + ")  if m = " + std::to_string(c.residue) + " (mod " +
             std::to_string(c.modulus) + ")\n";
    }
    return s;
}

inline std::string node_label(const TreeNode& n) {
    return "2^" + std::to_string(n.level) + "(m-1)+" + std::to_string(n.residue);
}

inline std::string dot_tree(const DecisionTree& t) {
    std::string s = "digraph tree_l" + std::to_string(t.l) + " {\n";
    for (size_t i = 0; i < t.nodes.size(); ++i) {
        const TreeNode& n = t.nodes[i];
        s += "  n" + std::to_string(i) + " [label=\"" + node_label(n) + "\"";
        if (n.terminal) s += ", gamma=\"" + std::to_string(*n.gamma) + "\", shape=box";
        s += "];\n";
    }
    for (size_t i = 0; i < t.nodes.size(); ++i) {
        const TreeNode& n = t.nodes[i];
        if (n.left >= 0) s += "  n" + std::to_string(i) + " -> n" + std::to_string(n.left) + ";\n";
        if (n.right >= 0) s += "  n" + std::to_string(i) + " -> n" + std::to_string(n.right) + ";\n";
    }
    return s + "}\n";
}

inline ojson json_tree(const DecisionTree& t) {
    ojson nodes = ojson::array();
    for (const TreeNode& n : t.nodes) {
        ojson jn{{"level", n.level}, {"residue", n.residue}, {"label", node_label(n)}, {"terminal", n.terminal}};
        if (n.gamma) jn["gamma"] = *n.gamma;
        if (n.left >= 0) {
            jn["left"] = n.left;
            jn["right"] = n.right;
        }
        nodes.push_back(jn);
    }
    return ojson{{"l", t.l}, {"probe_window", t.probe_window}, {"nodes", nodes}};
}

// Ascending-exponent term list, e.g. "q^-1 + 2 + q^2" or "1 + q + q^2".
template <class C>
inline std::string laurent_str(const SparseLaurent<C>& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [e, c] : p.t) {
        std::string coef = c.get_str();
        bool neg = !coef.empty() && coef[0] == '-';
        if (neg) coef = coef.substr(1);
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        bool unit = coef == "1";
        if (e == 0)
            s += coef;
        else {
            std::string qp = e == 1 ? "q" : "q^" + std::to_string(e);
            s += unit ? qp : coef + " " + qp;
        }
    }
    return s;
}

inline std::string qpoly_str(const QPoly& p) { return laurent_str(QLaurent::from_dense(p)); }

inline std::string poly_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (long e = 0; e <= p.degree(); ++e) {
        Rat c = p.at(e);
        if (c == 0) continue;
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        std::string coef = a.get_str();
        if (e == 0)
            s += coef;
        else {
            std::string xp = e == 1 ? "x" : "x^" + std::to_string(e);
            s += (coef == "1") ? xp : coef + " " + xp;
        }
    }
    return s;
}

}  // namespace quartic
