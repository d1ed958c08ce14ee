#pragma once

// Batch front-end: every capability behind one subcommand grammar with
// deterministic CSV/JSON/DOT output. Exit codes: 0 success or pass, 1
// verification failure (witness on stdout), 2 usage or validation error.
// Sweeps report progress on stderr only; stdout stays machine-clean.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "quartic/alpha_beta.hpp"
#include "quartic/concavity.hpp"
#include "quartic/dlm.hpp"
#include "quartic/emit.hpp"
#include "quartic/identities.hpp"
#include "quartic/parallel.hpp"
#include "quartic/qanalogs.hpp"
#include "quartic/quadrature.hpp"
#include "quartic/rand.hpp"
#include "quartic/tree.hpp"
#include "quartic/valuations.hpp"

namespace quartic {

namespace cli_detail {

inline Rat parse_rat_arg(const std::string& s) {
    mpq_class q;
    try {
        q = mpq_class(s, 10);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("bad rational '" + s + "': expected p or p/q");
    }
    if (q.get_den() == 0) throw std::domain_error("bad rational '" + s + "': zero denominator");
    q.canonicalize();
    return q;
}

// Payload goes to the --out path when given (relative paths resolve under
// $QUARTIC_OUT_DIR), otherwise to stdout.
inline int deliver(const std::string& payload, const std::string& out_path, std::ostream& out, std::ostream& err) {
    if (out_path.empty()) {
        out << payload;
        return 0;
    }
    std::filesystem::path p(out_path);
    if (p.is_relative()) {
        const char* base = std::getenv("QUARTIC_OUT_DIR");
        if (base && *base) p = std::filesystem::path(base) / p;
    }
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
        // an unusable parent falls through to the open failure below
    }
    std::ofstream f(p);
    if (!f) {
        err << "cannot open output file " << p.string() << "\n";
        return 2;
    }
    f << payload;
    return 0;
}

inline std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

// Worker threads share the progress stream; serialize whole lines.
inline void log_line(std::ostream& err, const std::string& line) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    err << line << "\n";
}

inline std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline DMethod parse_dmethod(const std::string& s) {
    if (s == "single") return DMethod::single;
    if (s == "triple") return DMethod::triple;
    if (s == "center") return DMethod::center;
    throw std::domain_error("unknown method " + s);
}

}  // namespace cli_detail

inline int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using cli_detail::deliver;
    using cli_detail::dump;

    CLI::App app{"exact calculator and verifier for the quartic-integral coefficient family d_{l,m}"};
    app.require_subcommand(1);
    int rc = 0;

    // ---- dlm ----
    auto* dlm = app.add_subcommand("dlm", "coefficients d_{l,m}, the polynomial P_m, compass paths");
    dlm->require_subcommand(1);

    auto* dlm_table = dlm->add_subcommand("table", "triangular table of d_{l,m}");
    long dt_mmax = 10;
    std::string dt_method = "single", dt_format = "csv", dt_out;
    dlm_table->add_option("--m-max", dt_mmax, "largest m")->required();
    dlm_table->add_option("--method", dt_method)->check(CLI::IsMember({"single", "triple", "center"}));
    dlm_table->add_option("--format", dt_format)->check(CLI::IsMember({"csv", "json"}));
    dlm_table->add_option("--out", dt_out, "output path");
    dlm_table->callback([&]() {
        DTable t = d_table(dt_mmax, cli_detail::parse_dmethod(dt_method));
        rc = deliver(dt_format == "csv" ? csv_d_table(t) : dump(json_d_table(t)), dt_out, out, err);
    });

    auto* dlm_value = dlm->add_subcommand("value", "single coefficient d_{l,m}");
    long dv_l = 0, dv_m = 0;
    std::string dv_method = "single", dv_format = "text";
    dlm_value->add_option("--l", dv_l)->required();
    dlm_value->add_option("--m", dv_m)->required();
    dlm_value->add_option("--method", dv_method)->check(CLI::IsMember({"single", "triple", "center"}));
    dlm_value->add_option("--format", dv_format)->check(CLI::IsMember({"text", "json"}));
    dlm_value->callback([&]() {
        Rat d = d_coeff(dv_l, dv_m, cli_detail::parse_dmethod(dv_method));
        if (dv_format == "text")
            out << rat_str(d) << "\n";
        else
            out << dump(ojson{{"l", dv_l}, {"m", dv_m}, {"d", rat_str(d)}});
    });

    auto* dlm_poly = dlm->add_subcommand("poly", "the polynomial P_m in both printed forms");
    long dp_m = 0;
    std::string dp_method = "expanded", dp_format = "text", dp_out;
    dlm_poly->add_option("--m", dp_m)->required();
    dlm_poly->add_option("--method", dp_method)->check(CLI::IsMember({"expanded", "shifted"}));
    dlm_poly->add_option("--format", dp_format)->check(CLI::IsMember({"text", "json", "csv"}));
    dlm_poly->add_option("--out", dp_out);
    dlm_poly->callback([&]() {
        Poly p = p_poly(dp_m, dp_method == "expanded" ? PMethod::expanded : PMethod::shifted);
        if (dp_format == "text") {
            rc = deliver(poly_str(p) + "\n", dp_out, out, err);
        } else if (dp_format == "csv") {
            std::string s = "k,coeff\n";
            for (long k = 0; k <= p.degree(); ++k) s += std::to_string(k) + "," + rat_str(p.at(k)) + "\n";
            rc = deliver(s, dp_out, out, err);
        } else {
            ojson coeffs = ojson::array();
            for (long k = 0; k <= p.degree(); ++k) coeffs.push_back(rat_str(p.at(k)));
            rc = deliver(dump(ojson{{"m", dp_m}, {"coefficients", coeffs}}), dp_out, out, err);
        }
    });

    auto* dlm_paths = dlm->add_subcommand("paths", "exhaustive compass-path count vs closed form (m <= 4)");
    long dpa_m = 0;
    dlm_paths->add_option("--m", dpa_m)->required();
    dlm_paths->callback([&]() {
        Int count = enumerate_paths(dpa_m);
        Int closed = binomial(4 * dpa_m + 2, 2 * dpa_m + 1);
        bool match = count == closed;
        out << dump(ojson{{"m", dpa_m}, {"count", count.get_str()}, {"closed_form", closed.get_str()}, {"match", match}});
        if (!match) rc = 1;
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "identity, valuation, and tree sweeps");
    verify->require_subcommand(1);

    auto* v_ids = verify->add_subcommand("identities", "finite-sum and recurrence identity suite");
    std::string vi_ids = "all";
    long vi_mmax = 50, vi_jobs = 1;
    v_ids->add_option("--ids", vi_ids, "comma-separated identity names, or 'all'");
    v_ids->add_option("--m-max", vi_mmax);
    v_ids->add_option("--jobs", vi_jobs);
    v_ids->callback([&]() {
        std::vector<IdentityId> ids;
        if (vi_ids == "all")
            for (const auto& [i, n] : identity_names()) ids.push_back(i);
        else
            for (const std::string& name : cli_detail::split_csv(vi_ids)) ids.push_back(identity_from_name(name));
        std::vector<Report> reports(ids.size());
        parallel_for(vi_jobs, static_cast<long>(ids.size()), [&](long i) {
            cli_detail::log_line(err, "identities: " + identity_name(ids[static_cast<size_t>(i)]));
            reports[static_cast<size_t>(i)] = check_identity(ids[static_cast<size_t>(i)], vi_mmax);
        });
        ojson arr = ojson::array();
        bool all = true;
        for (const Report& r : reports) {
            arr.push_back(json_report(r));
            all = all && r.passed;
        }
        out << dump(arr);
        rc = all ? 0 : 1;
    });

    auto* v_val = verify->add_subcommand("valuations", "2-adic valuation theorem and odd-quotient checks");
    long vv_mmax = 60, vv_bmax = 40, vv_jobs = 1;
    v_val->add_option("--m-max", vv_mmax, "direct-vs-formula grid bound");
    v_val->add_option("--b-max", vv_bmax, "odd-quotient grid and backward recurrence bound");
    v_val->add_option("--jobs", vv_jobs);
    v_val->callback([&]() {
        std::vector<std::string> bad(static_cast<size_t>(vv_mmax) + 1);
        parallel_for(vv_jobs, vv_mmax, [&](long i) {
            long m = i + 1;
            std::vector<Int> row = a_row(m);
            for (long l = 1; l <= m; ++l)
                if (nu2_int(row[static_cast<size_t>(l)]) != nu2_a_formula(l, m)) {
                    bad[static_cast<size_t>(m)] = "nu2 mismatch at l=" + std::to_string(l) + ",m=" + std::to_string(m);
                    return;
                }
            if (nu2_a_formula(1, m) != nu2(m) + nu2(m + 1) + 1)
                bad[static_cast<size_t>(m)] = "l=1 closed form mismatch at m=" + std::to_string(m);
        });
        std::string first;
        for (const std::string& s : bad)
            if (!s.empty() && first.empty()) first = s;
        err << "valuations: odd-quotient grid\n";
        if (first.empty()) {
            ARowStream st(vv_bmax);
            for (long m = 1; m <= vv_bmax && first.empty(); ++m) {
                while (st.m() < m) st.advance();
                for (long l = 1; l <= m; ++l) {
                    try {
                        b_number_of(st.at(l), l, m);
                    } catch (const std::exception& e) {
                        first = "odd quotient failed at l=" + std::to_string(l) + ",m=" + std::to_string(m) + ": " + e.what();
                        break;
                    }
                }
            }
        }
        Report back{"b_backward", "", true, {}};
        if (first.empty()) {
            back = b_backward_check(vv_bmax);
            if (!back.passed) first = "backward recurrence failed";
        }
        ojson j{{"m_max", vv_mmax}, {"b_max", vv_bmax}, {"passed", first.empty()}};
        if (!first.empty()) j["witness"] = first;
        out << dump(j);
        rc = first.empty() ? 0 : 1;
    });

    auto* v_tree = verify->add_subcommand("trees", "piecewise formulas vs data, tree shape counts");
    long vt_lmax = 20, vt_count = 128, vt_jobs = 1;
    v_tree->add_option("--l-max", vt_lmax);
    v_tree->add_option("--count", vt_count);
    v_tree->add_option("--jobs", vt_jobs);
    v_tree->callback([&]() {
        struct Row {
            bool piecewise = false, shape = false;
        };
        std::vector<Row> rows(static_cast<size_t>(vt_lmax) + 1);
        parallel_for(vt_jobs, vt_lmax, [&](long i) {
            long l = i + 1;
            rows[static_cast<size_t>(l)].piecewise = verify_piecewise(l, vt_count).passed;
            rows[static_cast<size_t>(l)].shape = tree_shape_ok(build_tree(l));
        });
        ojson arr = ojson::array();
        bool all = true;
        for (long l = 1; l <= vt_lmax; ++l) {
            const Row& r = rows[static_cast<size_t>(l)];
            arr.push_back(ojson{{"l", l}, {"piecewise", r.piecewise}, {"shape", r.shape}});
            all = all && r.piecewise && r.shape;
        }
        out << dump(arr);
        rc = all ? 0 : 1;
    });

    // ---- valuation ----
    auto* val = app.add_subcommand("valuation", "valuation series, block structure, reduction");
    val->require_subcommand(1);

    auto* val_series = val->add_subcommand("series", "nu_p(A_{l,m}) series with exact error column");
    long vs_p = 2, vs_l = 1, vs_mmax = 100;
    std::string vs_format = "csv", vs_out;
    val_series->add_option("--p", vs_p, "prime");
    val_series->add_option("--l", vs_l)->required();
    val_series->add_option("--m-max", vs_mmax)->required();
    val_series->add_option("--format", vs_format)->check(CLI::IsMember({"csv", "json"}));
    val_series->add_option("--out", vs_out);
    val_series->callback([&]() {
        NupSeries s = nup_series(vs_p, vs_l, vs_mmax);
        if (vs_format == "csv") {
            rc = deliver(csv_nup_series(s), vs_out, out, err);
        } else {
            ojson errs = ojson::array();
            for (const Rat& e : s.error) errs.push_back(rat_str(e));
            rc = deliver(dump(ojson{{"p", s.series.p},
                                    {"l", s.series.l},
                                    {"start_m", s.series.start_m},
                                    {"values", s.series.values},
                                    {"error", errs},
                                    {"slope", nup_slope(s)}}),
                         vs_out, out, err);
        }
    });

    auto* val_blocks = val->add_subcommand("blocks", "s-simplicity of X(l) on a window");
    long vb_l = 1, vb_window = 0;
    val_blocks->add_option("--l", vb_l)->required();
    val_blocks->add_option("--window", vb_window, "0 = 256 * predicted s");
    val_blocks->callback([&]() {
        long s = 1L << (1 + nu2(vb_l));
        BlockReport br = block_structure(vb_l, vb_window > 0 ? vb_window : 256 * s);
        out << dump(json_block_report(br));
        rc = (br.is_s_simple_on_window && br.refuted_larger_s) ? 0 : 1;
    });

    auto* val_reduce = val->add_subcommand("reduce", "F/T/c reduction of X(l) vs the binary composition");
    long vr_l = 1, vr_window = 0;
    bool vr_raw = false;
    val_reduce->add_option("--l", vr_l)->required();
    val_reduce->add_option("--window", vr_window, "0 = auto");
    val_reduce->add_flag("--raw", vr_raw, "use factored stream integers instead of the valuation formula");
    val_reduce->callback([&]() {
        long window = vr_window > 0 ? vr_window : reduce_window_for(vr_l);
        ReductionTrace tr;
        if (vr_raw) {
            err << "reduce: streaming A rows to m = " << vr_l + window - 1 << "\n";
            tr = reduce_sequence_raw(vr_l, x_series_raw_all(vr_l, window)[static_cast<size_t>(vr_l)]);
        } else {
            tr = reduce_sequence(vr_l, window);
        }
        std::vector<long> comp = composition(vr_l);
        bool match = !tr.window_exhausted && tr.constant_tail && tr.omega == comp;
        ojson j = json_reduction_trace(tr);
        j["composition"] = comp;
        j["match"] = match;
        out << dump(j);
        rc = match ? 0 : 1;
    });

    // ---- tree ----
    auto* tree = app.add_subcommand("tree", "decision trees and piecewise valuation formulas");
    tree->require_subcommand(1);

    auto* tree_build = tree->add_subcommand("build", "empirical decision tree");
    long tb_l = 1, tb_window = 64;
    std::string tb_format = "dot", tb_out;
    tree_build->add_option("--l", tb_l)->required();
    tree_build->add_option("--window", tb_window, "probe window in block indices");
    tree_build->add_option("--format", tb_format)->check(CLI::IsMember({"dot", "json"}));
    tree_build->add_option("--out", tb_out);
    tree_build->callback([&]() {
        DecisionTree t = build_tree(tb_l, tb_window);
        rc = deliver(tb_format == "dot" ? dot_tree(t) : dump(json_tree(t)), tb_out, out, err);
    });

    auto* tree_formula = tree->add_subcommand("formula", "piecewise closed form for nu2(C_{l,m})");
    long tf_l = 1;
    std::string tf_format = "text", tf_out;
    tree_formula->add_option("--l", tf_l)->required();
    tree_formula->add_option("--format", tf_format)->check(CLI::IsMember({"text", "json"}));
    tree_formula->add_option("--out", tf_out);
    tree_formula->callback([&]() {
        PiecewiseFormula pf = piecewise_formula(tf_l);
        rc = deliver(tf_format == "text" ? text_piecewise(pf) : dump(json_piecewise(pf)), tf_out, out, err);
    });

    auto* tree_verify = tree->add_subcommand("verify", "formula vs data on a window");
    long tv_l = 1, tv_count = 256;
    tree_verify->add_option("--l", tv_l)->required();
    tree_verify->add_option("--count", tv_count);
    tree_verify->callback([&]() {
        Report r = verify_piecewise(tv_l, tv_count);
        out << dump(json_report(r));
        rc = r.passed ? 0 : 1;
    });

    // ---- concavity ----
    auto* conc = app.add_subcommand("concavity", "unimodality, log-concavity, certificates, probes");
    conc->require_subcommand(1);

    auto seq_from_flags = [](const std::string& values, long d_row_m) {
        if (!values.empty()) {
            Seq s;
            for (const std::string& part : cli_detail::split_csv(values)) s.push_back(cli_detail::parse_rat_arg(part));
            return s;
        }
        if (d_row_m < 0) throw std::domain_error("need --values or --d-row");
        return d_row_single(d_row_m);
    };

    auto* c_classify = conc->add_subcommand("classify", "unimodal / log-concave classification");
    std::string cc_values;
    long cc_drow = -1;
    c_classify->add_option("--values", cc_values, "comma-separated rationals");
    c_classify->add_option("--d-row", cc_drow, "use the coefficient row at this m");
    c_classify->callback([&]() {
        Classification c = classify(seq_from_flags(cc_values, cc_drow));
        ojson j{{"unimodal", c.unimodal}};
        if (c.log_concave)
            j["log_concave"] = *c.log_concave;
        else
            j["log_concave"] = nullptr;
        j["witness_j"] = c.witness_j;
        out << dump(j);
    });

    auto* c_probe = conc->add_subcommand("probe", "iterated log-concavity probe");
    std::string cp_values;
    long cp_drow = -1, cp_depth = 5;
    c_probe->add_option("--values", cp_values);
    c_probe->add_option("--d-row", cp_drow);
    c_probe->add_option("--depth", cp_depth);
    c_probe->callback([&]() {
        Report r = inf_lc_probe(seq_from_flags(cp_values, cp_drow), cp_depth);
        out << dump(json_report(r));
        rc = r.passed ? 0 : 1;
    });

    auto* c_pascal = conc->add_subcommand("pascal", "exact r-factor certificates for binomial rows");
    long cpa_nmax = 100;
    c_pascal->add_option("--n-max", cpa_nmax);
    c_pascal->callback([&]() {
        Report r = pascal_r_sweep(cpa_nmax);
        out << dump(json_report(r));
        rc = r.passed ? 0 : 1;
    });

    auto* c_fisk = conc->add_subcommand("fisk", "real-rootedness after one L application (randomized)");
    long cf_samples = 500, cf_maxdeg = 8;
    std::uint64_t cf_seed = 12345;
    c_fisk->add_option("--samples", cf_samples);
    c_fisk->add_option("--max-degree", cf_maxdeg);
    c_fisk->add_option("--seed", cf_seed);
    c_fisk->callback([&]() {
        Report r = fisk_sweep(cf_seed, cf_samples, cf_maxdeg);
        out << dump(json_report(r));
        rc = r.passed ? 0 : 1;
    });

    auto* c_shift = conc->add_subcommand("shift", "unimodality of shifted nondecreasing polynomials (randomized)");
    long cs_samples = 500, cs_maxlen = 10;
    std::uint64_t cs_seed = 12345;
    c_shift->add_option("--samples", cs_samples);
    c_shift->add_option("--max-len", cs_maxlen);
    c_shift->add_option("--seed", cs_seed);
    c_shift->callback([&]() {
        Report r = shift_unimodal_sweep(cs_seed, cs_samples, cs_maxlen);
        out << dump(json_report(r));
        rc = r.passed ? 0 : 1;
    });

    // ---- q ----
    auto* q = app.add_subcommand("q", "Gaussian and quantum binomials and their probes");
    q->require_subcommand(1);

    auto* q_gauss = q->add_subcommand("gaussian", "Gaussian binomial [n k]_q");
    long qg_n = 0, qg_k = 0;
    std::string qg_format = "text";
    q_gauss->add_option("--n", qg_n)->required();
    q_gauss->add_option("--k", qg_k)->required();
    q_gauss->add_option("--format", qg_format)->check(CLI::IsMember({"text", "json"}));
    q_gauss->callback([&]() {
        QPoly p = gaussian_binomial(qg_n, qg_k);
        if (qg_format == "text")
            out << qpoly_str(p) << "\n";
        else
            out << dump(ojson{{"n", qg_n}, {"k", qg_k}, {"poly", qpoly_str(p)}});
    });

    auto* q_quant = q->add_subcommand("quantum", "quantum binomial <n k>");
    long qq_n = 0, qq_k = 0;
    std::string qq_format = "text";
    q_quant->add_option("--n", qq_n)->required();
    q_quant->add_option("--k", qq_k)->required();
    q_quant->add_option("--format", qq_format)->check(CLI::IsMember({"text", "json"}));
    q_quant->callback([&]() {
        QLaurent p = quantum_binomial(qq_n, qq_k);
        if (qq_format == "text")
            out << laurent_str(p) << "\n";
        else
            out << dump(ojson{{"n", qq_n}, {"k", qq_k}, {"laurent", laurent_str(p)}});
    });

    auto* q_probe = q->add_subcommand("probe", "iterated q-log-concavity probe for a family");
    std::string qp_family;
    long qp_n = 0, qp_k = 0, qp_u = 0, qp_v = 1, qp_depth = 3, qp_bound = 12;
    q_probe->add_option("--family", qp_family)->required()->check(CLI::IsMember({"row", "column", "diagonal"}));
    q_probe->add_option("--n", qp_n);
    q_probe->add_option("--k", qp_k);
    q_probe->add_option("--u", qp_u);
    q_probe->add_option("--v", qp_v);
    q_probe->add_option("--depth", qp_depth);
    q_probe->add_option("--bound", qp_bound);
    q_probe->callback([&]() {
        QuantumFamily fam = qp_family == "row" ? q_row(qp_n) : qp_family == "column" ? q_column(qp_k) : q_diagonal(qp_n, qp_u, qp_v);
        Report r = quantum_conjecture_probe(fam, qp_depth, qp_bound);
        out << dump(json_report(r));
        rc = r.passed ? 0 : 1;
    });

    auto* q_wit = q->add_subcommand("witness", "depth-2 negative coefficient in Gaussian rows");
    long qw_nmax = 12;
    q_wit->add_option("--n-max", qw_nmax);
    q_wit->callback([&]() {
        Report r = gaussian_depth2_witness(qw_nmax);
        out << dump(json_report(r));
        rc = r.passed ? 0 : 1;
    });

    auto* q_low = q->add_subcommand("lowdeg", "lowest degree of <n+u v>^2 - <n+2u 2v> for u > v");
    long ql_n = 0, ql_u = 2, ql_v = 1;
    q_low->add_option("--n", ql_n)->required();
    q_low->add_option("--u", ql_u)->required();
    q_low->add_option("--v", ql_v)->required();
    q_low->callback([&]() {
        DiagonalDefect d = diagonal_defect(ql_n, ql_u, ql_v);
        out << dump(ojson{{"n", ql_n},
                          {"u", ql_u},
                          {"v", ql_v},
                          {"lowest_degree", diagonal_lowest_degree(ql_n, ql_u, ql_v)},
                          {"lowest_exponent", d.lowest_exponent}});
    });

    // ---- integral ----
    auto* integral = app.add_subcommand("integral", "numeric quadrature against the closed forms");
    integral->require_subcommand(1);

    auto* i_check = integral->add_subcommand("check", "relative error of quadrature vs closed form");
    std::string ic_a;
    long ic_m = -1;
    double ic_tol = 1e-12, ic_bound = 1e-10;
    std::string ic_which = "both";
    i_check->add_option("--a", ic_a, "rational parameter, e.g. 5/2; omit for the default grid");
    i_check->add_option("--m", ic_m, "omit for the default grid");
    i_check->add_option("--tol", ic_tol, "quadrature tolerance (>= 1e-12)");
    i_check->add_option("--bound", ic_bound, "acceptable relative error");
    i_check->add_option("--which", ic_which)->check(CLI::IsMember({"n04", "q1", "both"}));
    i_check->callback([&]() {
        std::vector<std::pair<Rat, long>> grid;
        if (!ic_a.empty() && ic_m >= 0) {
            grid.emplace_back(cli_detail::parse_rat_arg(ic_a), ic_m);
        } else if (ic_a.empty() && ic_m < 0) {
            for (const char* a : {"-1/2", "0", "1", "5/2"})
                for (long m = 0; m <= 8; ++m) grid.emplace_back(cli_detail::parse_rat_arg(a), m);
        } else {
            throw std::domain_error("give both --a and --m, or neither");
        }
        ojson arr = ojson::array();
        bool all = true;
        for (const auto& [a, m] : grid) {
            if (ic_which != "q1") {
                QuadCheck c = n04_check(a, m, static_cast<long double>(ic_tol), static_cast<long double>(ic_bound));
                arr.push_back(ojson{{"which", "n04"},
                                    {"a", rat_str(a)},
                                    {"m", m},
                                    {"numeric", static_cast<double>(c.numeric)},
                                    {"reference", static_cast<double>(c.reference)},
                                    {"rel_err", static_cast<double>(c.rel_err)},
                                    {"ok", c.ok}});
                all = all && c.ok;
            }
            if (ic_which != "n04") {
                QuadCheck c = q1_check(a, m, static_cast<long double>(ic_tol), static_cast<long double>(ic_bound));
                arr.push_back(ojson{{"which", "q1"},
                                    {"a", rat_str(a)},
                                    {"m", m},
                                    {"numeric", static_cast<double>(c.numeric)},
                                    {"reference", static_cast<double>(c.reference)},
                                    {"rel_err", static_cast<double>(c.rel_err)},
                                    {"ok", c.ok}});
                all = all && c.ok;
            }
        }
        out << dump(arr);
        rc = all ? 0 : 1;
    });

    // ---- roots ----
    auto* roots = app.add_subcommand("roots", "critical-line certification for the alpha/beta families");
    roots->require_subcommand(1);

    auto* r_cert = roots->add_subcommand("certify", "Sturm certification that all roots sit on Re m = -1/2");
    long rc_lmax = 16, rc_ttmax = 20, rc_jobs = 1;
    r_cert->add_option("--l-max", rc_lmax);
    r_cert->add_option("--three-term-max", rc_ttmax);
    r_cert->add_option("--jobs", rc_jobs);
    r_cert->callback([&]() {
        std::vector<int> alpha_ok(static_cast<size_t>(rc_lmax) + 1, -1), beta_ok(static_cast<size_t>(rc_lmax) + 1, -1);
        parallel_for(rc_jobs, rc_lmax, [&](long i) {
            long l = i + 1;
            cli_detail::log_line(err, "roots: l = " + std::to_string(l));
            alpha_ok[static_cast<size_t>(l)] = critical_line_certify(l, RootFamily::alpha_family) ? 1 : 0;
            if (l >= 2) beta_ok[static_cast<size_t>(l)] = critical_line_certify(l, RootFamily::beta_family) ? 1 : 0;
        });
        Report tt = three_term_check(rc_ttmax);
        ojson ja = ojson::array(), jb = ojson::array();
        bool all = tt.passed;
        for (long l = 1; l <= rc_lmax; ++l) {
            ja.push_back(ojson{{"l", l}, {"certified", alpha_ok[static_cast<size_t>(l)] == 1}});
            all = all && alpha_ok[static_cast<size_t>(l)] == 1;
            if (l >= 2) {
                jb.push_back(ojson{{"l", l}, {"certified", beta_ok[static_cast<size_t>(l)] == 1}});
                all = all && beta_ok[static_cast<size_t>(l)] == 1;
            }
        }
        out << dump(ojson{{"alpha", ja}, {"beta", jb}, {"three_term", json_report(tt)}});
        rc = all ? 0 : 1;
    });

    // ---- parse and dispatch ----
    std::vector<std::string> full;
    full.push_back("quartic");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "invalid parameter: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace quartic
