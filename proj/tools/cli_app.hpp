#pragma once

// Command-line front end: matrix, colsums, bernoulli and verify subcommands.
// Exit codes: 0 success, 1 verification/agreement failure, 2 usage or domain error.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include <sonnenschein.hpp>
#include <sonnenschein/io.hpp>

namespace sonnenschein::cli {

using json = nlohmann::ordered_json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

inline constexpr std::size_t default_rows = 2000;
inline constexpr std::size_t default_cols = 64;
inline constexpr std::size_t default_display_rows = 32;
inline constexpr double default_tolerance = 1e-9;

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string kind;
    std::optional<std::string> alpha;
    std::optional<std::string> beta;
    std::optional<std::string> coeffs;
    std::size_t rows = default_rows;
    bool rows_given = false;
    std::size_t cols = default_cols;
    std::string method;
    std::string format = "json";
    bool as_float = false;
    double tolerance = default_tolerance;
    bool closed_form = false;
    unsigned n_max = 0;
};

namespace detail {

inline KaramataParams karamata_params(const Options& o) {
    if (!o.alpha || !o.beta) throw usage_error("karamata needs --alpha and --beta");
    return {ComplexRational::from_string(*o.alpha), ComplexRational::from_string(*o.beta)};
}

inline TruncatedSeries<ComplexRational> custom_series(const Options& o) {
    if (!o.coeffs) throw usage_error("custom needs --coeffs c0,c1,...");
    std::vector<ComplexRational> values;
    std::stringstream ss(*o.coeffs);
    for (std::string item; std::getline(ss, item, ',');) values.push_back(ComplexRational::from_string(item));
    return TruncatedSeries<ComplexRational>::from_coeffs(std::move(values), o.cols - 1);
}

inline GeneratorInfo custom_info(const Options& o) { return {"custom", {{"coeffs", o.coeffs.value_or("")}}}; }

template <typename F>
std::string json_value(const F& x, bool as_float) {
    return as_float ? io::tagged(to_complex(x)) : io::tagged(x);
}

template <typename F>
std::string csv_value(const F& x, bool as_float) {
    return as_float ? io::format_complex(to_complex(x)) : io::plain_text(x);
}

inline json metadata(const Options& o, const GeneratorInfo& source, std::size_t rows, std::size_t cols,
                     const std::string& method) {
    json params = json::object();
    for (const auto& [key, value] : source.parameters) params[key] = value;
    json meta;
    meta["generator"] = source.kind;
    meta["parameters"] = params;
    meta["rows"] = rows;
    meta["cols"] = cols;
    meta["order"] = cols - 1;
    meta["tolerance"] = o.tolerance;
    meta["exactness"] = o.as_float ? "float" : "exact";
    meta["method"] = method;
    return meta;
}

inline json document(std::string_view kind, json meta, json payload) {
    json doc;
    doc["kind"] = kind;
    doc["metadata"] = std::move(meta);
    doc["payload"] = std::move(payload);
    return doc;
}

template <typename F>
void emit_matrix(const SummabilityMatrix<F>& m, const Options& o, const std::string& method, std::ostream& out) {
    if (o.format == "csv") {
        for (std::size_t n = 0; n < m.rows(); ++n) {
            for (std::size_t k = 0; k < m.cols(); ++k) out << (k ? "," : "") << csv_value(m(n, k), o.as_float);
            out << '\n';
        }
        return;
    }
    json rows = json::array();
    for (std::size_t n = 0; n < m.rows(); ++n) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(json_value(m(n, k), o.as_float));
        rows.push_back(std::move(row));
    }
    out << document("matrix", metadata(o, m.source(), m.rows(), m.cols(), method), std::move(rows)).dump(2) << '\n';
}

/// Writes closed-form and/or series column sums; returns false if both are
/// present and disagree somewhere.
template <typename F>
bool emit_column_sums(const std::optional<std::vector<F>>& closed, const std::optional<std::vector<F>>& series,
                      const Options& o, const GeneratorInfo& source, const std::string& regime, std::ostream& out) {
    const std::size_t n = closed ? closed->size() : series->size();
    std::vector<bool> equal;
    if (closed && series)
        for (std::size_t k = 0; k < n; ++k) equal.push_back((*closed)[k] == (*series)[k]);
    const bool all_equal = std::find(equal.begin(), equal.end(), false) == equal.end();

    if (o.format == "csv") {
        out << "column" << (closed ? ",closed" : "") << (series ? ",series" : "") << (equal.empty() ? "" : ",equal")
            << '\n';
        for (std::size_t k = 0; k < n; ++k) {
            out << k;
            if (closed) out << ',' << csv_value((*closed)[k], o.as_float);
            if (series) out << ',' << csv_value((*series)[k], o.as_float);
            if (!equal.empty()) out << ',' << (equal[k] ? "true" : "false");
            out << '\n';
        }
        return all_equal;
    }
    json payload;
    auto list = [&](const std::vector<F>& values) {
        json arr = json::array();
        for (const auto& v : values) arr.push_back(json_value(v, o.as_float));
        return arr;
    };
    if (closed) payload["closed"] = list(*closed);
    if (series) payload["series"] = list(*series);
    if (!equal.empty()) {
        payload["equal"] = equal;
        payload["all_equal"] = all_equal;
    }
    json meta = metadata(o, source, 0, n, o.method);
    meta.erase("rows");
    meta["regime"] = regime;
    out << document("column_sums", std::move(meta), std::move(payload)).dump(2) << '\n';
    return all_equal;
}

inline void emit_report(const VerificationReport& r, const Options& o, const GeneratorInfo& source,
                        const std::string& regime, std::ostream& out) {
    if (o.format == "csv") {
        out << "column,predicted,partial_sum,deviation,converged\n";
        for (const auto& c : r.columns)
            out << c.column << ',' << io::format_complex(c.predicted) << ',' << io::format_complex(c.partial_sum) << ','
                << io::format_double(c.deviation) << ',' << (c.converged ? "true" : "false") << '\n';
        return;
    }
    json columns = json::array();
    for (const auto& c : r.columns) {
        json rec;
        rec["column"] = c.column;
        rec["predicted"] = io::tagged(c.predicted);
        rec["partial_sum"] = io::tagged(c.partial_sum);
        rec["deviation"] = io::tagged_float(c.deviation);
        rec["converged"] = c.converged;
        columns.push_back(std::move(rec));
    }
    json payload;
    payload["all_converged"] = r.all_converged();
    payload["max_deviation"] = io::tagged_float(r.max_deviation());
    payload["columns"] = std::move(columns);
    Options numeric = o;
    numeric.as_float = true;
    json meta = metadata(numeric, source, r.rows, r.cols, "partial-sums");
    meta["regime"] = regime;
    out << document("verification", std::move(meta), std::move(payload)).dump(2) << '\n';
}

inline std::string regime_label(bool analytic) { return analytic ? "analytic" : "formal"; }

inline int cmd_matrix(const Options& o, std::ostream& out) {
    const std::size_t rows = o.rows_given ? o.rows : default_display_rows;
    const std::string method = o.closed_form ? "closed-form" : "series";
    if (o.kind == "karamata") {
        const auto p = karamata_params(o);
        if (o.closed_form)
            emit_matrix(karamata_closed_form_matrix(p, rows, o.cols), o, method, out);
        else
            emit_matrix(build_matrix(karamata_series(p, o.cols - 1), rows, p.describe()), o, method, out);
    } else if (o.kind == "sin2") {
        if (o.closed_form)
            emit_matrix(sin2_closed_form_matrix(rows, o.cols), o, method, out);
        else
            emit_matrix(build_matrix(sin2_series(o.cols - 1), rows, sin2_info()), o, method, out);
    } else {
        if (o.closed_form) throw usage_error("--closed-form is available for karamata and sin2 only");
        emit_matrix(build_matrix(custom_series(o), rows, custom_info(o)), o, method, out);
    }
    return exit_ok;
}

inline int cmd_colsums(const Options& o, std::ostream& out) {
    std::string method = o.method;
    if (method.empty()) method = o.kind == "custom" ? "series" : "closed";
    Options resolved = o;
    resolved.method = method;
    const bool want_closed = method != "series";
    const bool want_series = method != "closed";
    bool agree = true;
    if (o.kind == "karamata") {
        const auto p = karamata_params(o);
        std::optional<std::vector<ComplexRational>> closed, series;
        if (want_closed) closed = karamata_column_sums(p, o.cols);
        if (want_series) {
            if (p.alpha() == ComplexRational{1}) throw pole_error("Karamata column sums have a pole at alpha = 1");
            series = column_sums_via_series(karamata_series(p, o.cols - 1));
        }
        agree = emit_column_sums(closed, series, resolved, p.describe(), regime_label(p.analytic_regime()), out);
    } else if (o.kind == "sin2") {
        std::optional<std::vector<PiGradedValue>> closed, series;
        if (want_closed) closed = sec2_column_sums_by_column(o.cols);
        if (want_series) series = column_sums_via_series(sin2_series(o.cols - 1));
        agree = emit_column_sums(closed, series, resolved, sin2_info(), regime_label(true), out);
    } else {
        if (want_closed) throw usage_error("custom generators have no closed form; use --method series");
        const auto f = custom_series(o);
        std::optional<std::vector<ComplexRational>> series = column_sums_via_series(f);
        agree = emit_column_sums(std::optional<std::vector<ComplexRational>>{}, series, resolved, custom_info(o),
                                 regime_label(constant_term_in_unit_disk(f)), out);
    }
    return agree ? exit_ok : exit_failed;
}

inline int cmd_bernoulli(const Options& o, std::ostream& out) {
    const std::string method = o.method.empty() ? "paper" : o.method;
    std::vector<Rational> paper, recurrence;
    if (method != "recurrence")
        for (unsigned n = 0; n <= o.n_max; ++n) paper.push_back(bernoulli(n));
    if (method != "paper") recurrence = bernoulli_table(o.n_max);
    std::vector<bool> agree;
    if (method == "both")
        for (unsigned n = 0; n <= o.n_max; ++n) agree.push_back(paper[n] == recurrence[n]);
    const bool all_agree = std::find(agree.begin(), agree.end(), false) == agree.end();

    if (o.format == "csv") {
        out << "n" << (paper.empty() ? "" : ",double_sum") << (recurrence.empty() ? "" : ",recurrence")
            << (agree.empty() ? "" : ",agree") << '\n';
        for (unsigned n = 0; n <= o.n_max; ++n) {
            out << n;
            if (!paper.empty()) out << ',' << csv_value(paper[n], o.as_float);
            if (!recurrence.empty()) out << ',' << csv_value(recurrence[n], o.as_float);
            if (!agree.empty()) out << ',' << (agree[n] ? "true" : "false");
            out << '\n';
        }
        return all_agree ? exit_ok : exit_failed;
    }
    auto list = [&](const std::vector<Rational>& values) {
        json arr = json::array();
        for (const auto& v : values) arr.push_back(json_value(v, o.as_float));
        return arr;
    };
    json payload;
    if (!paper.empty()) payload["double_sum"] = list(paper);
    if (!recurrence.empty()) payload["recurrence"] = list(recurrence);
    if (!agree.empty()) {
        payload["agree"] = agree;
        payload["all_agree"] = all_agree;
    }
    json meta;
    meta["generator"] = "bernoulli";
    meta["n_max"] = o.n_max;
    meta["convention"] = "B1=-1/2";
    meta["exactness"] = o.as_float ? "float" : "exact";
    meta["method"] = method;
    out << document("bernoulli", std::move(meta), std::move(payload)).dump(2) << '\n';
    return all_agree ? exit_ok : exit_failed;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    VerificationReport report;
    GeneratorInfo source;
    std::string regime;
    if (o.kind == "karamata") {
        const auto p = karamata_params(o);
        const auto predicted = karamata_column_sums(p, o.cols);
        report = verify_column_sums(build_matrix(to_numeric(karamata_series(p, o.cols - 1)), o.rows), predicted,
                                    o.tolerance);
        source = p.describe();
        regime = regime_label(p.analytic_regime());
    } else if (o.kind == "sin2") {
        const auto predicted = sec2_column_sums_by_column(o.cols);
        report = verify_column_sums(build_matrix(to_numeric(sin2_series(o.cols - 1)), o.rows), predicted, o.tolerance);
        source = sin2_info();
        regime = regime_label(true);
    } else {
        const auto f = custom_series(o);
        const auto predicted = column_sums_via_series(f);
        report = verify_column_sums(build_matrix(to_numeric(f), o.rows), predicted, o.tolerance);
        source = custom_info(o);
        regime = regime_label(constant_term_in_unit_disk(f));
    }
    emit_report(report, o, source, regime, out);
    return report.all_converged() ? exit_ok : exit_failed;
}

} // namespace detail

/// Parses argv and runs one subcommand. Never throws; returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sonnenschein summability matrices: construction, column sums and verification", "sonnenschein"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> kinds{"karamata", "sin2", "custom"};
    auto add_generator_options = [&](CLI::App* sub) {
        sub->add_option("kind", o.kind, "Generating function")->required()->check(CLI::IsMember(kinds));
        sub->add_option("--alpha", o.alpha, "Karamata alpha, e.g. 1/2 or 1/4+1/4i");
        sub->add_option("--beta", o.beta, "Karamata beta (beta != 1)");
        sub->add_option("--coeffs", o.coeffs, "Custom f coefficients c0,c1,... (exact rationals or re+im i)");
        sub->add_option("--cols", o.cols, "Columns K+1 (default 64)")->check(CLI::PositiveNumber);
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--float", o.as_float, "Emit decimal doubles instead of exact values");
    };

    auto* matrix = app.add_subcommand("matrix", "Emit the first rows of a Sonnenschein matrix");
    add_generator_options(matrix);
    matrix->add_option("--rows", o.rows, "Rows N (default: 32 for display)")->check(CLI::PositiveNumber);
    matrix->add_flag("--closed-form", o.closed_form, "Use closed-form entries (karamata, sin2)");

    auto* colsums = app.add_subcommand("colsums", "Column sums: closed form and/or coefficients of 1/(1-f)");
    add_generator_options(colsums);
    colsums->add_option("--method", o.method, "closed, series or both")
        ->check(CLI::IsMember({"closed", "series", "both"}));

    auto* bern = app.add_subcommand("bernoulli", "Exact Bernoulli numbers B_0..B_n (B_1 = -1/2)");
    bern->add_option("n_max", o.n_max, "Largest index")->required();
    bern->add_option("--method", o.method, "paper (double sum), recurrence or both")
        ->check(CLI::IsMember({"paper", "recurrence", "both"}));
    bern->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    bern->add_flag("--float", o.as_float, "Emit decimal doubles instead of exact values");

    auto* verify = app.add_subcommand("verify", "Compare partial column sums with predicted column sums");
    add_generator_options(verify);
    verify->add_option("--rows", o.rows, "Rows N summed (default 2000)")->check(CLI::PositiveNumber);
    verify->add_option("--tol", o.tolerance, "Absolute tolerance (default 1e-9)")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    o.rows_given = matrix->count("--rows") > 0;

    try {
        if (*matrix) return detail::cmd_matrix(o, out);
        if (*colsums) return detail::cmd_colsums(o, out);
        if (*bern) return detail::cmd_bernoulli(o, out);
        return detail::cmd_verify(o, out);
    } catch (const pole_error& e) {
        err << "domain error: " << e.what() << '\n';
    } catch (const parse_error& e) {
        err << "usage error: " << e.what() << '\n';
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_usage;
}

} // namespace sonnenschein::cli
