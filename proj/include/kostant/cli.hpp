#pragma once

/**
 * @file cli.hpp
 * @brief The `kostant` command-line front end, runnable in-process for tests.
 *
 * Exit codes: 0 success, 1 usage or domain error, 2 arithmetic overflow.
 */

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "g2/partition.hpp"
#include "g2/qkwmf.hpp"
#include "g2/rootsys.hpp"
#include "qpoly.hpp"
#include "report.hpp"
#include "sp4.hpp"

namespace kostant::cli {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "3,2" or "-1,5" -> {3, 2}; anything else is a usage error.
inline RootCoord parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw UsageError("malformed coordinates '" + text + "' (expected two comma-separated integers)");
    auto parse_int = [&](const std::string& s) -> std::int64_t {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw UsageError("malformed coordinates '" + text + "'");
        }
        if (used != s.size() || s.empty()) throw UsageError("malformed coordinates '" + text + "'");
        return v;
    };
    return {parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
}

struct Options {
    std::string algebra = "g2";
    std::string format;  // empty: text, except verify which defaults to JSON
    std::string basis;  // empty: the command's native basis
    std::string method;
    std::string weight;
    std::string lambda;
    std::string mu;
    std::optional<std::int64_t> at_q;
    std::int64_t max = 0;
    std::string output;
};

namespace detail {

inline FundCoord to_dominant(RootCoord fund) {
    if (fund.c1 < 0 || fund.c2 < 0)
        throw std::invalid_argument("weight " + to_string(fund) + " is not dominant (negative fundamental coordinate)");
    return {fund.c1, fund.c2};
}

/// Highest-weight style arguments: fundamental basis unless --basis root.
inline FundCoord dominant_arg(const Options& o, const std::string& text) {
    RootCoord v = parse_pair(text);
    if (o.basis == "root") v = (o.algebra == "g2") ? g2::root_to_fund(v) : sp4::cartan() * v;
    return to_dominant(v);
}

inline void print_poly(std::ostream& out, const Options& o, const QPoly& p) {
    if (o.at_q) {
        const auto v = p.eval(*o.at_q);
        if (o.format == "json")
            out << nlohmann::json{{"value", v}}.dump() << '\n';
        else
            out << v << '\n';
        return;
    }
    if (o.format == "json")
        out << nlohmann::json{{"coeffs", p}}.dump() << '\n';
    else if (o.format == "latex")
        out << to_latex(p) << '\n';
    else
        out << to_string(p) << '\n';
}

inline void print_value(std::ostream& out, const Options& o, std::int64_t v) {
    if (o.format == "json")
        out << nlohmann::json{{"value", v}}.dump() << '\n';
    else
        out << v << '\n';
}

inline std::string weight_text(const Options& o) {
    if (o.weight.empty()) throw UsageError("a weight is required, e.g. `3,2`");
    return o.weight;
}

// Partition-style argument in the root basis; c2 fundamental weights off the root lattice give nullopt.
inline std::optional<RootCoord> partition_arg(const Options& o) {
    const RootCoord v = parse_pair(weight_text(o));
    if (o.basis != "fundamental") return v;
    const FundCoord w = to_dominant(v);
    if (o.algebra == "g2") return g2::fund_to_root(w);
    const RootCoord twice = sp4::fund_to_doubled_root(w);
    if (twice.c1 % 2 != 0 || twice.c2 % 2 != 0) return std::nullopt;
    return RootCoord{twice.c1 / 2, twice.c2 / 2};
}

inline void run_qpartition(std::ostream& out, const Options& o) {
    const auto v = partition_arg(o);
    QPoly p;
    if (v) p = (o.algebra == "g2") ? g2::qpartition(*v) : sp4::qpartition_c2(*v);
    print_poly(out, o, p);
}

inline void run_partition(std::ostream& out, const Options& o) {
    const auto v = partition_arg(o);
    if (!v) return print_value(out, o, 0);
    std::int64_t value = 0;
    if (o.algebra == "g2") {
        if (o.method.empty() || o.method == "qpoly")
            value = g2::qpartition(*v).eval_at_one();
        else if (o.method == "tarski")
            value = g2::partition_tarski(*v);
        else if (o.method == "bruteforce")
            value = g2::qpartition_bruteforce(*v).eval_at_one();
        else
            throw UsageError("unknown g2 partition method '" + o.method + "' (qpoly, tarski, bruteforce)");
    } else {
        if (o.method.empty() || o.method == "qpoly")
            value = sp4::qpartition_c2(*v).eval_at_one();
        else if (o.method == "closed")
            value = v->nonnegative() ? sp4::partition_c2_closed(*v) : 0;
        else if (o.method == "bruteforce")
            value = sp4::qpartition_c2_bruteforce(*v).eval_at_one();
        else
            throw UsageError("unknown c2 partition method '" + o.method + "' (qpoly, closed, bruteforce)");
    }
    print_value(out, o, value);
}

inline void require_pair(const Options& o) {
    if (o.lambda.empty() || o.mu.empty()) throw UsageError("--lambda and --mu are required");
}

inline void run_qmult(std::ostream& out, const Options& o) {
    require_pair(o);
    const FundCoord lambda = dominant_arg(o, o.lambda), mu = dominant_arg(o, o.mu);
    if (o.algebra == "c2") {
        const QPoly p = sp4::multiplicity_c2_weyl_sum(lambda, mu);
        if (o.format == "json" && !o.at_q) {
            out << nlohmann::json{{"algebra", "c2"}, {"lambda", lambda}, {"mu", mu}, {"coeffs", p},
                                  {"m_at_1", p.eval_at_one()}}
                       .dump()
                << '\n';
            return;
        }
        return print_poly(out, o, p);
    }
    const auto res = g2::qmultiplicity_closed(lambda, mu);
    if (o.format == "json" && !o.at_q) {
        nlohmann::json terms = nlohmann::json::object();
        for (auto t : g2::all_terms)
            if (const auto& p = res.terms[static_cast<std::size_t>(t)]) terms[std::string(1, g2::term_name(t))] = *p;
        out << nlohmann::json{{"algebra", "g2"}, {"lambda", lambda},   {"mu", mu},
                              {"case_data", res.case_data}, {"terms", terms}, {"coeffs", res.mq},
                              {"m_at_1", res.m_at_one}}
                   .dump()
            << '\n';
        return;
    }
    print_poly(out, o, res.mq);
}

inline void run_mult(std::ostream& out, const Options& o) {
    require_pair(o);
    const FundCoord lambda = dominant_arg(o, o.lambda), mu = dominant_arg(o, o.mu);
    std::int64_t value = 0;
    if (o.algebra == "g2") {
        if (o.method.empty() || o.method == "qpoly")
            value = g2::multiplicity(lambda, mu, g2::Method::QPoly);
        else if (o.method == "tarski")
            value = g2::multiplicity(lambda, mu, g2::Method::Tarski);
        else
            throw UsageError("unknown g2 multiplicity method '" + o.method + "' (qpoly, tarski)");
    } else {
        if (o.method.empty() || o.method == "closed")
            value = sp4::multiplicity_c2_closed(lambda, mu).value;
        else if (o.method == "weyl")
            value = sp4::multiplicity_c2_weyl_sum(lambda, mu).eval_at_one();
        else
            throw UsageError("unknown c2 multiplicity method '" + o.method + "' (closed, weyl)");
    }
    print_value(out, o, value);
}

inline void run_case(std::ostream& out, const Options& o) {
    require_pair(o);
    const FundCoord lambda = dominant_arg(o, o.lambda), mu = dominant_arg(o, o.mu);
    if (o.algebra == "g2") {
        const auto cd = g2::compute_abcdef(lambda, mu);
        if (o.format == "json") {
            out << nlohmann::json(cd).dump() << '\n';
            return;
        }
        out << "a=" << cd.a << " b=" << cd.b << " c=" << cd.c << " d=" << cd.d << " e=" << cd.e << " f=" << cd.f
            << " case=" << g2::to_string(cd.label) << '\n';
    } else {
        const auto cd = sp4::compute_case(lambda, mu);
        if (o.format == "json") {
            out << nlohmann::json(cd).dump() << '\n';
            return;
        }
        out << "a=" << cd.a << " 2b=" << cd.two_b << " c=" << cd.c << " 2d=" << cd.two_d
            << " case=" << sp4::to_string(cd.label) << '\n';
    }
}

inline int run_verify(std::ostream& out, const Options& o) {
    const VerifyReport r = (o.algebra == "g2") ? verify_g2(o.max) : verify_c2(o.max);
    if (o.format == "text") {
        for (const auto& c : r.checks) out << c.name << ": " << c.cases << " cases, " << c.mismatches << " mismatches\n";
    } else {
        out << nlohmann::json(r).dump(2) << '\n';
    }
    return r.clean() ? 0 : 1;
}

inline void run_table(std::ostream& out, const Options& o) {
    if (o.algebra != "g2") throw UsageError("table is only available for g2");
    if (o.output.empty()) return write_case_table(out, o.max);
    std::ostringstream buf;
    write_case_table(buf, o.max);
    std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write '" + o.output + "'");
    file << buf.str();
    if (!file.flush()) throw UsageError("failed writing '" + o.output + "'");
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kostant partition functions and weight q-multiplicities for g2 and sp4", "kostant"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--algebra", o.algebra, "Lie algebra")->check(CLI::IsMember({"g2", "c2"}));
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    };
    std::int64_t at_q_value = 0;
    bool at_q_set = false;
    auto polynomial_opts = [&](CLI::App* sub) {
        sub->add_option_function<std::int64_t>(
            "--at-q",
            [&](const std::int64_t& v) {
                at_q_value = v;
                at_q_set = true;
            },
            "Evaluate the polynomial at this integer");
    };
    auto basis_opt = [&](CLI::App* sub) {
        sub->add_option("--basis", o.basis, "Coordinate basis override")->check(CLI::IsMember({"root", "fundamental"}));
    };

    auto* qpart = app.add_subcommand("qpartition", "q-analog of Kostant's partition function (root coordinates)");
    auto* part = app.add_subcommand("partition", "Kostant's partition function (root coordinates)");
    for (auto* sub : {qpart, part}) {
        common(sub);
        basis_opt(sub);
        sub->add_option("weight", o.weight, "Weight as c1,c2");
    }
    polynomial_opts(qpart);
    part->add_option("--method", o.method, "g2: qpoly|tarski|bruteforce, c2: qpoly|closed|bruteforce");

    auto* qmult = app.add_subcommand("qmult", "Weight q-multiplicity m_q(lambda, mu) (fundamental coordinates)");
    auto* mult = app.add_subcommand("mult", "Weight multiplicity m(lambda, mu)");
    auto* casecmd = app.add_subcommand("case", "Case data selecting the closed formula");
    for (auto* sub : {qmult, mult, casecmd}) {
        common(sub);
        basis_opt(sub);
        sub->add_option("--lambda", o.lambda, "Highest weight as m,n");
        sub->add_option("--mu", o.mu, "Weight as x,y");
    }
    polynomial_opts(qmult);
    mult->add_option("--method", o.method, "g2: qpoly|tarski, c2: closed|weyl");

    auto* verify = app.add_subcommand("verify", "Cross-check every formula against its oracle on a grid");
    common(verify);
    verify->add_option("--max", o.max, "Grid bound")->required()->check(CLI::NonNegativeNumber);

    auto* table = app.add_subcommand("table", "CSV of case data and q-multiplicities over [0,max]^4 (g2)");
    common(table);
    table->add_option("--max", o.max, "Grid bound")->required()->check(CLI::NonNegativeNumber);
    table->add_option("--output,-o", o.output, "Output file (default: stdout)");

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);

    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "kostant: " << e.what() << '\n';
        return 1;
    }

    if (at_q_set) o.at_q = at_q_value;

    try {
        if (qpart->parsed()) detail::run_qpartition(out, o);
        if (part->parsed()) detail::run_partition(out, o);
        if (qmult->parsed()) detail::run_qmult(out, o);
        if (mult->parsed()) detail::run_mult(out, o);
        if (casecmd->parsed()) detail::run_case(out, o);
        if (verify->parsed()) return detail::run_verify(out, o);
        if (table->parsed()) detail::run_table(out, o);
    } catch (const OverflowError& e) {
        err << "kostant: arithmetic overflow: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "kostant: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace kostant::cli
