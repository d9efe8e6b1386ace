#include "stieltjes/cli.hpp"

#include "stieltjes/catalog.hpp"
#include "stieltjes/special.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace stj {

namespace {

using nlohmann::ordered_json;

struct Config {
    int digits = 30;
    std::string format = "text";
    std::string out;
    bool include_slow = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Real parse_arg(const std::string& name, const std::string& text)
{
    try {
        return parse_real(text);
    } catch (const std::exception&) {
        throw UsageError("--" + name + ": not a number: " + text);
    }
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string show(const Real& x, int digits)
{
    if (isnan(x))
        return "nan";
    return to_decimal(x, digits);
}

struct ComputeArgs {
    std::string what;
    unsigned n = 0;
    unsigned order = 1;
    std::string u = "1", s = "2", t = "1";
    std::string method;
};

FunctionValue compute_value(const ComputeArgs& a, const PrecisionContext& ctx, std::string& label)
{
    const std::string& m = a.method;
    auto bad_method = [&]() { return UsageError("--method " + m + " does not apply to " + a.what); };
    if (a.what == "gamma_n") {
        Real u = parse_arg("u", a.u);
        StieltjesMethod method;
        try {
            method = m.empty() ? default_stieltjes_method(u, ctx) : parse_stieltjes_method(m);
        } catch (const DomainError&) {
            throw bad_method();
        }
        label = "gamma_" + std::to_string(a.n) + "(" + a.u + ")";
        return stieltjes(a.n, u, method, ctx);
    }
    if (a.what == "digamma") {
        DigammaRoute r = DigammaRoute::bose_integral;
        if (m == "laplace")
            r = DigammaRoute::laplace;
        else if (!m.empty() && m != "bose" && m != "bose_integral")
            throw bad_method();
        label = "psi(" + a.u + ")";
        return digamma(parse_arg("u", a.u), ctx, r);
    }
    if (a.what == "trigamma") {
        TrigammaRoute r = TrigammaRoute::bose_integral;
        if (m == "hurwitz_zeta" || m == "em")
            r = TrigammaRoute::hurwitz_zeta;
        else if (!m.empty() && m != "bose" && m != "bose_integral")
            throw bad_method();
        label = "psi'(" + a.u + ")";
        return trigamma(parse_arg("u", a.u), ctx, r);
    }
    if (a.what == "log_gamma") {
        LogGammaRoute r = LogGammaRoute::binet2;
        if (m == "binet1")
            r = LogGammaRoute::binet1;
        else if (m == "bourguet")
            r = LogGammaRoute::bourguet;
        else if (m == "binomial" || m == "binomial_series")
            r = LogGammaRoute::binomial_series;
        else if (!m.empty() && m != "binet2")
            throw bad_method();
        label = "log Gamma(" + a.u + ")";
        return log_gamma(parse_arg("u", a.u), r, ctx);
    }
    if (a.what == "hurwitz_zeta") {
        ZetaRoute r = ZetaRoute::hermite;
        if (m == "em" || m == "euler_maclaurin")
            r = ZetaRoute::euler_maclaurin;
        else if (!m.empty() && m != "hermite")
            throw bad_method();
        label = "zeta(" + a.s + ", " + a.u + ")";
        return hurwitz_zeta(parse_arg("s", a.s), parse_arg("u", a.u), ctx, r);
    }
    if (a.what == "zeta_sderiv") {
        ZetaDerivRoute r = ZetaDerivRoute::abel_plana;
        if (m == "em" || m == "euler_maclaurin")
            r = ZetaDerivRoute::euler_maclaurin;
        else if (!m.empty() && m != "abel_plana")
            throw bad_method();
        label = "zeta^(" + std::to_string(a.order) + ")(" + a.s + ", " + a.u + ")";
        return hurwitz_zeta_sderiv(a.order, parse_arg("s", a.s), parse_arg("u", a.u), ctx, r);
    }
    if (a.what == "barnes_g") {
        BarnesRoute r = BarnesRoute::weierstrass_6_5;
        if (m == "integral")
            r = BarnesRoute::integral_6_7;
        else if (m == "gosper_vardi")
            r = BarnesRoute::gosper_vardi_6_10;
        else if (!m.empty() && m != "weierstrass" && m != "weierstrass_product")
            throw bad_method();
        label = "log G(1 + " + a.t + ")";
        return barnes_g_log(parse_arg("t", a.t), r, ctx);
    }
    throw UsageError("unknown function: " + a.what);
}

int cmd_compute(const ComputeArgs& a, const Config& cfg, std::ostream& out)
{
    PrecisionContext ctx = PrecisionContext::for_target(cfg.digits);
    PrecisionScope scope(ctx);
    std::string label;
    FunctionValue v = compute_value(a, ctx, label);
    std::string value = to_decimal(v.value, cfg.digits);
    if (cfg.format == "json") {
        ordered_json j;
        j["context"] = {{"digits", cfg.digits}};
        j["function"] = a.what;
        j["argument"] = label;
        j["value"] = value;
        j["route"] = v.route;
        j["diagnostics"] = v.diagnostic_line();
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "function,argument,value,route\n"
            << a.what << "," << csv_quote(label) << "," << value << "," << v.route << "\n";
    } else {
        out << label << " = " << value << "\n" << v.diagnostic_line() << "\n";
    }
    return exit_ok;
}

int cmd_table(int first, const Config& cfg, std::ostream& out, std::ostream& err)
{
    if (first < 1 || first > 25)
        throw UsageError("--first must lie in 1..25");
    // Relative agreement on values as small as 1e-5 needs headroom.
    PrecisionContext ctx = PrecisionContext::for_target(cfg.digits + 8);
    struct Row {
        unsigned n;
        Real value;
        int agreed;
    };
    std::vector<Row> rows;
    bool short_row = false;
    for (unsigned n = 0; n < static_cast<unsigned>(first); ++n) {
        Real a = stieltjes(n, Real(1), StieltjesMethod::hasse_sum, ctx).value;
        Real b = stieltjes(n, Real(1), StieltjesMethod::coffey_integral, ctx).value;
        int agreed = agreed_digits(a, b, cfg.digits + 8);
        if (agreed < cfg.digits)
            short_row = true;
        rows.push_back({n, a, agreed});
    }
    if (cfg.format == "json") {
        ordered_json j;
        j["context"] = {{"digits", cfg.digits}};
        j["routes"] = {"hasse_sum", "coffey_integral"};
        j["rows"] = ordered_json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"n", r.n}, {"value", to_decimal(r.value, cfg.digits)},
                                 {"routes_agreeing_digits", r.agreed}});
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "n,value,routes_agreeing_digits\n";
        for (const auto& r : rows)
            out << r.n << "," << to_decimal(r.value, cfg.digits) << "," << r.agreed << "\n";
    } else {
        out << "Stieltjes constants gamma_n, hasse_sum against coffey_integral\n";
        for (const auto& r : rows)
            out << std::setw(3) << r.n << "  " << std::setw(cfg.digits + 8) << to_decimal(r.value, cfg.digits)
                << "  agreed " << r.agreed << "\n";
    }
    if (short_row) {
        err << "table: some rows agree to fewer than " << cfg.digits << " digits\n";
        return exit_precision;
    }
    return exit_ok;
}

void render_report(const IdentityReport& rep, const Config& cfg, std::ostream& out)
{
    const int d = std::max(cfg.digits, 20);
    if (cfg.format == "json") {
        ordered_json j;
        j["context"] = {{"digits", rep.digits}};
        j["entries"] = ordered_json::array();
        for (const auto& e : rep.entries) {
            ordered_json x;
            x["id"] = e.id;
            x["paper_anchor"] = e.paper_anchor;
            x["lhs"] = show(e.lhs, d);
            x["rhs"] = show(e.rhs, d);
            x["abs_error"] = show(e.abs_error, 6);
            x["tolerance"] = show(e.tolerance, 3);
            x["pass"] = e.pass;
            x["elapsed_ms"] = static_cast<long>(e.elapsed_ms);
            x["description"] = e.description;
            x["lhs_route"] = e.lhs_route;
            x["rhs_route"] = e.rhs_route;
            if (!e.error.empty())
                x["error"] = e.error;
            if (e.samples.size() > 1) {
                x["samples"] = ordered_json::array();
                for (const auto& s : e.samples)
                    x["samples"].push_back({{"label", s.label}, {"lhs", show(s.lhs, d)}, {"rhs", show(s.rhs, d)},
                                            {"abs_error", show(s.abs_error, 6)}});
            }
            j["entries"].push_back(x);
        }
        j["summary"] = {{"total", rep.summary.total},
                        {"passed", rep.summary.passed},
                        {"failed", rep.summary.failed},
                        {"skipped", rep.summary.skipped}};
        out << j.dump(2) << "\n";
        return;
    }
    if (cfg.format == "csv") {
        out << "id,pass,lhs,rhs,abs_error,tolerance,elapsed_ms\n";
        for (const auto& e : rep.entries)
            out << e.id << "," << (e.pass ? "true" : "false") << "," << show(e.lhs, d) << "," << show(e.rhs, d) << ","
                << show(e.abs_error, 6) << "," << show(e.tolerance, 3) << "," << static_cast<long>(e.elapsed_ms)
                << "\n";
        return;
    }
    for (const auto& e : rep.entries) {
        out << (e.pass ? "PASS " : "FAIL ") << std::left << std::setw(10) << e.id << std::right
            << " abs_error=" << show(e.abs_error, 3) << " tol=" << show(e.tolerance, 2) << "  "
            << static_cast<long>(e.elapsed_ms) << " ms  " << e.description << "\n";
        if (!e.pass) {
            out << "     lhs=" << show(e.lhs, d) << " [" << e.lhs_route << "]\n"
                << "     rhs=" << show(e.rhs, d) << " [" << e.rhs_route << "]\n";
            if (!e.error.empty())
                out << "     error: " << e.error << "\n";
        }
    }
    out << "total " << rep.summary.total << ", passed " << rep.summary.passed << ", failed " << rep.summary.failed
        << ", skipped " << rep.summary.skipped << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Stieltjes constants, Bose-kernel integrals and identity checks"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--digits", cfg.digits, "target digits")->check(CLI::Range(6, 200));
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", cfg.out, "write output to this file");
    app.add_flag("--include-slow", cfg.include_slow, "also run entries tagged slow");

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "evaluate one function value");
    compute->add_option("function", ca.what,
                        "gamma_n, digamma, trigamma, log_gamma, hurwitz_zeta, zeta_sderiv or barnes_g")
        ->required();
    compute->add_option("--n", ca.n, "Stieltjes index");
    compute->add_option("--u", ca.u, "argument u > 0");
    compute->add_option("--s", ca.s, "zeta argument s");
    compute->add_option("--t", ca.t, "Barnes G argument: log G(1+t)");
    compute->add_option("--order", ca.order, "derivative order in s");
    compute->add_option("--method", ca.method,
                        "route; gamma_n: hasse (default below 60 digits), coffey (default above at u != 1), "
                        "limit, altzeta");

    int first = 20;
    auto* table = app.add_subcommand("table", "tabulate gamma_0 .. gamma_{first-1} by two routes");
    table->add_option("--first", first, "number of rows (1..25)");

    std::vector<std::string> ids, tags;
    bool all = false;
    auto* verify = app.add_subcommand("verify", "run the identity catalog");
    verify->add_option("--id", ids, "entry id (repeatable)");
    verify->add_option("--tag", tags, "entry tag (repeatable)");
    verify->add_flag("--all", all, "every entry; slow ones need --include-slow");

    // Global options are accepted after the subcommand too.
    for (auto* sub : {compute, table, verify})
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_usage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) {
            err << "cannot open " << cfg.out << "\n";
            return exit_usage;
        }
        sink = &file;
    }

    try {
        if (compute->parsed())
            return cmd_compute(ca, cfg, *sink);
        if (table->parsed())
            return cmd_table(first, cfg, *sink, err);
        CatalogFilter f{ids, tags, cfg.include_slow};
        if (!all && ids.empty() && tags.empty()) {
            err << "verify: give --id, --tag or --all\n";
            return exit_usage;
        }
        PrecisionContext ctx = PrecisionContext::for_target(cfg.digits);
        IdentityReport rep = run_catalog(builtin_catalog(), f, ctx);
        render_report(rep, cfg, *sink);
        return rep.summary.failed == 0 ? exit_ok : exit_verify_failed;
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return exit_usage;
    } catch (const PrecisionExhausted& e) {
        err << "precision exhausted: " << e.what() << "\n";
        return exit_precision;
    } catch (const NonConvergence& e) {
        err << "no convergence: " << e.what() << "\n";
        return exit_precision;
    } catch (const RouteDisagreement& e) {
        err << "routes disagree: " << e.what() << "\n";
        return exit_precision;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace stj
