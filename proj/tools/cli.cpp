#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <wktau/amatrix.hpp>
#include <wktau/errors.hpp>
#include <wktau/tau.hpp>
#include <wktau/verify.hpp>

namespace wktau::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t text_residual_limit = 10;

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Number of monomials of degree <= d in p_1, p_2, ..., i.e. sum of p(w).
std::size_t monomial_count(int d) {
    constexpr std::size_t cap = std::numeric_limits<std::size_t>::max() / 2;
    std::vector<std::size_t> p(static_cast<std::size_t>(d) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= d; ++part) {
        for (int w = part; w <= d; ++w) {
            p[w] = std::min(cap, p[w] + p[w - part]);
        }
    }
    std::size_t total = 0;
    for (std::size_t v : p) {
        total = std::min(cap, total + v);
    }
    return total;
}

void require_budget(std::size_t estimate, const RunConfig& cfg, const std::string& what) {
    if (estimate > cfg.max_terms) {
        throw ResourceError(what + " needs up to " + std::to_string(estimate) + " terms, above --max-terms " +
                            std::to_string(cfg.max_terms));
    }
}

void warn_degree(const RunConfig& cfg, std::ostream& err) {
    if (cfg.degree % 3 != 0) {
        err << "warning: degree " << cfg.degree
            << " is not a multiple of 3; nonzero coefficients only occur in degrees divisible by 3\n";
    }
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string var_name(Family f, int index) { return std::string(family_name(f)) + std::to_string(index); }

ordered_json scalar_json(const ExactScalar& v, bool approx) {
    ordered_json j;
    j["re"] = v.re().to_string();
    j["im"] = v.im().to_string();
    if (approx) {
        j["approx"] = v.to_approx_string();
    }
    return j;
}

void emit_series(const FormalSeries& z, const RunConfig& cfg, std::ostream& out) {
    const auto terms = z.sorted_terms();
    switch (cfg.format) {
    case Format::json: {
        ordered_json j;
        j["family"] = family_name(z.family());
        j["degree_bound"] = z.degree_bound();
        j["terms"] = ordered_json::array();
        for (const auto& [mono, value] : terms) {
            ordered_json t;
            t["monomial"] = ordered_json::array();
            for (const auto& [index, exp] : mono.factors()) {
                t["monomial"].push_back(ordered_json::array({var_name(z.family(), index), exp}));
            }
            t.update(scalar_json(value, cfg.approx));
            j["terms"].push_back(std::move(t));
        }
        out << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "monomial,degree,re,im" << (cfg.approx ? ",approx" : "") << '\n';
        for (const auto& [mono, value] : terms) {
            out << mono.to_string(z.family()) << ',' << mono.degree(z.family()) << ',' << value.re().to_string() << ','
                << value.im().to_string();
            if (cfg.approx) {
                out << ',' << value.to_approx_string();
            }
            out << '\n';
        }
        break;
    case Format::text:
        for (const auto& [mono, value] : terms) {
            out << value.to_string() << "  " << mono.to_string(z.family());
            if (cfg.approx) {
                out << "  ~ " << value.to_approx_string();
            }
            out << '\n';
        }
        break;
    }
}

void emit_schur(const std::vector<SchurCoefficient>& table, const RunConfig& cfg, std::ostream& out) {
    switch (cfg.format) {
    case Format::json: {
        ordered_json j;
        j["basis"] = "schur";
        j["degree_bound"] = cfg.degree;
        j["terms"] = ordered_json::array();
        for (const auto& [mu, value] : table) {
            ordered_json t;
            t["partition"] = mu.parts();
            t.update(scalar_json(value, cfg.approx));
            j["terms"].push_back(std::move(t));
        }
        out << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "partition,weight,re,im" << (cfg.approx ? ",approx" : "") << '\n';
        for (const auto& [mu, value] : table) {
            out << csv_cell(mu.to_string()) << ',' << mu.weight() << ',' << value.re().to_string() << ','
                << value.im().to_string();
            if (cfg.approx) {
                out << ',' << value.to_approx_string();
            }
            out << '\n';
        }
        break;
    case Format::text:
        for (const auto& [mu, value] : table) {
            out << "s" << mu.to_string() << "  " << value.to_string();
            if (cfg.approx) {
                out << "  ~ " << value.to_approx_string();
            }
            out << '\n';
        }
        break;
    }
}

ordered_json report_json(const CheckReport& r, const std::string& suite) {
    ordered_json j;
    j["check"] = r.check;
    ordered_json params = ordered_json::object();
    params["suite"] = suite;
    for (const auto& [k, v] : r.params) {
        params[k] = v;
    }
    j["params"] = std::move(params);
    j["pass"] = r.pass;
    j["residuals"] = ordered_json::array();
    for (const auto& res : r.residuals) {
        ordered_json x;
        x["where"] = res.where;
        x["re"] = res.value.re().to_string();
        x["im"] = res.value.im().to_string();
        j["residuals"].push_back(std::move(x));
    }
    return j;
}

std::string params_text(const CheckReport& r) {
    std::string s;
    for (const auto& [k, v] : r.params) {
        s += ' ' + k + '=' + v;
    }
    return s;
}

Format parse_format(const std::string& s) {
    if (s == "json") {
        return Format::json;
    }
    if (s == "csv") {
        return Format::csv;
    }
    if (s == "text") {
        return Format::text;
    }
    throw UsageError("unknown format '" + s + "'");
}

}  // namespace

int cmd_amatrix(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    if (cfg.max_m < 0 || cfg.max_n < 0) {
        throw UsageError("--max-m and --max-n must be nonnegative");
    }
    require_budget(static_cast<std::size_t>(cfg.max_m + 1) * static_cast<std::size_t>(cfg.max_n + 1), cfg, "amatrix");
    const CoeffMatrix table = a_block(cfg.max_m, cfg.max_n);
    const auto provenance = [&](int m, int n) {
        return table.provenance(m, n) == Provenance::closed_form ? "closed_form" : "recursion";
    };
    switch (cfg.format) {
    case Format::json: {
        ordered_json j;
        j["max_m"] = cfg.max_m;
        j["max_n"] = cfg.max_n;
        j["entries"] = ordered_json::array();
        for (int m = 0; m <= cfg.max_m; ++m) {
            for (int n = 0; n <= cfg.max_n; ++n) {
                ordered_json e;
                e["m"] = m;
                e["n"] = n;
                e.update(scalar_json(table.at(m, n), cfg.approx));
                e["provenance"] = provenance(m, n);
                j["entries"].push_back(std::move(e));
            }
        }
        out << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "m,n,value,provenance" << (cfg.approx ? ",approx" : "") << '\n';
        for (int m = 0; m <= cfg.max_m; ++m) {
            for (int n = 0; n <= cfg.max_n; ++n) {
                out << m << ',' << n << ',' << table.at(m, n).to_string() << ',' << provenance(m, n);
                if (cfg.approx) {
                    out << ',' << table.at(m, n).to_approx_string();
                }
                out << '\n';
            }
        }
        break;
    case Format::text: {
        std::vector<std::vector<std::string>> cells(cfg.max_m + 1, std::vector<std::string>(cfg.max_n + 1));
        std::size_t width = 1;
        for (int m = 0; m <= cfg.max_m; ++m) {
            for (int n = 0; n <= cfg.max_n; ++n) {
                const ExactScalar& v = table.at(m, n);
                cells[m][n] = cfg.approx ? v.to_approx_string() : v.to_string();
                width = std::max(width, cells[m][n].size());
            }
        }
        std::ostringstream line;
        line << "m\\n";
        for (int n = 0; n <= cfg.max_n; ++n) {
            line << "  " << std::string(width - std::to_string(n).size(), ' ') << n;
        }
        out << line.str() << '\n';
        for (int m = 0; m <= cfg.max_m; ++m) {
            const std::string label = std::to_string(m);
            out << label << std::string(label.size() < 3 ? 3 - label.size() : 0, ' ');
            for (int n = 0; n <= cfg.max_n; ++n) {
                out << "  " << std::string(width - cells[m][n].size(), ' ') << cells[m][n];
            }
            out << '\n';
        }
        break;
    }
    }
    return exit_ok;
}

int cmd_expand(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.degree < 0) {
        throw UsageError("--degree must be nonnegative");
    }
    warn_degree(cfg, err);
    require_budget(monomial_count(cfg.degree), cfg, "expand to degree " + std::to_string(cfg.degree));
    if (cfg.basis == "schur") {
        emit_schur(z_schur(cfg.degree), cfg, out);
        return exit_ok;
    }
    Family family{};
    try {
        family = parse_family(cfg.basis);
    } catch (const std::exception&) {
        throw UsageError("unknown basis '" + cfg.basis + "' (expected schur, p, T, t or u)");
    }
    emit_series(z_series(family, cfg.degree), cfg, out);
    return exit_ok;
}

int cmd_intersect(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.indices.empty()) {
        throw UsageError("intersect needs at least one descendant index");
    }
    if (cfg.degree < 0) {
        throw UsageError("--degree must be nonnegative");
    }
    const CorrelatorKey key(cfg.indices);
    const auto genus = key.genus();
    if (!genus) {
        err << "error: " << key.to_string() << " violates selection rule: sum of indices minus count must be 3g - 3 for some g >= 0\n";
        return exit_usage;
    }
    if (key.degree() > cfg.degree) {
        err << "error: " << key.to_string() << " needs degree " << key.degree() << ", have " << cfg.degree
            << "; increase --degree\n";
        return exit_usage;
    }
    warn_degree(cfg, err);
    require_budget(monomial_count(cfg.degree), cfg, "intersect at degree " + std::to_string(cfg.degree));
    const FormalSeries f = free_energy(z_series(Family::t, cfg.degree));
    const Rational value = intersection(key, f);
    switch (cfg.format) {
    case Format::json: {
        ordered_json j;
        j["correlator"] = key.to_string();
        j["indices"] = key.indices();
        j["genus"] = *genus;
        j["value"] = value.to_string();
        if (cfg.approx) {
            j["approx"] = ExactScalar(value).to_approx_string();
        }
        out << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "correlator,genus,value\n" << key.to_string() << ',' << *genus << ',' << value.to_string() << '\n';
        break;
    case Format::text:
        out << key.to_string() << "_" << *genus << " = " << value.to_string() << '\n';
        out << "genus " << *genus << '\n';
        break;
    }
    return exit_ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.degree < 0 || cfg.max_weight < 0) {
        throw UsageError("--degree and --max-weight must be nonnegative");
    }
    std::vector<std::string> suites;
    for (const std::string& s : cfg.suites.empty() ? std::vector<std::string>{"all"} : cfg.suites) {
        if (s == "all") {
            suites.insert(suites.end(), suite_names().begin(), suite_names().end());
        } else if (std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end()) {
            suites.push_back(s);
        } else {
            throw UsageError("unknown suite '" + s + "'");
        }
    }
    std::vector<std::string> unique;
    for (const auto& s : suites) {
        if (std::find(unique.begin(), unique.end(), s) == unique.end()) {
            unique.push_back(s);
        }
    }
    warn_degree(cfg, err);
    require_budget(monomial_count(cfg.degree), cfg, "verify at degree " + std::to_string(cfg.degree));
    require_budget(static_cast<std::size_t>(cfg.max_weight + 1) * static_cast<std::size_t>(cfg.max_weight + 1), cfg,
                   "verify at max weight " + std::to_string(cfg.max_weight));

    bool all_pass = true;
    ordered_json checks = ordered_json::array();
    std::ostringstream text;
    std::ostringstream csv;
    csv << "suite,check,params,pass,residuals\n";
    for (const auto& suite : unique) {
        for (const CheckReport& r : run_suite(suite, cfg.degree, cfg.max_weight)) {
            all_pass = all_pass && r.pass;
            checks.push_back(report_json(r, suite));
            text << (r.pass ? "PASS " : "FAIL ") << suite << '/' << r.check << params_text(r) << '\n';
            for (std::size_t i = 0; i < r.residuals.size() && i < text_residual_limit; ++i) {
                text << "    " << r.residuals[i].where << ": " << r.residuals[i].value.to_string() << '\n';
            }
            if (r.residuals.size() > text_residual_limit) {
                text << "    ... " << r.residuals.size() - text_residual_limit << " more\n";
            }
            csv << suite << ',' << r.check << ',' << csv_cell(params_text(r).substr(r.params.empty() ? 0 : 1)) << ','
                << (r.pass ? "true" : "false") << ',' << r.residuals.size() << '\n';
        }
    }
    switch (cfg.format) {
    case Format::json: {
        ordered_json j;
        j["pass"] = all_pass;
        j["checks"] = std::move(checks);
        out << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << csv.str();
        break;
    case Format::text:
        out << text.str() << (all_pass ? "all checks passed" : "verification FAILED") << '\n';
        break;
    }
    return all_pass ? exit_ok : exit_verification;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact coefficients and checks for the Witten-Kontsevich tau-function"};
    app.name("wktau");
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format;
    app.add_option("--format", format, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("-o,--output", cfg.output, "Write output to this file instead of stdout");
    app.add_flag("--approx", cfg.approx, "Also print non-authoritative decimal approximations");
    app.add_option("--max-terms", cfg.max_terms, "Refuse computations estimated above this many terms");

    auto* amatrix = app.add_subcommand("amatrix", "Table of A_{m,n}");
    amatrix->add_option("--max-m", cfg.max_m, "Largest m")->check(CLI::NonNegativeNumber);
    amatrix->add_option("--max-n", cfg.max_n, "Largest n")->check(CLI::NonNegativeNumber);

    auto* expand = app.add_subcommand("expand", "Expansion of the tau-function");
    expand->add_option("--basis", cfg.basis, "schur, p, T, t or u")
        ->check(CLI::IsMember({"schur", "p", "T", "t", "u"}));
    expand->add_option("-d,--degree", cfg.degree, "Degree bound D")->check(CLI::NonNegativeNumber);

    auto* intersect = app.add_subcommand("intersect", "Intersection number <tau_a1 ... tau_an>");
    intersect->add_option("indices", cfg.indices, "Descendant indices")->required()->check(CLI::NonNegativeNumber);
    intersect->add_option("-d,--degree", cfg.degree, "Degree bound D")->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    std::vector<std::string> allowed = suite_names();
    allowed.emplace_back("all");
    verify->add_option("--suite", cfg.suites, "Suite(s) to run (repeatable)")->check(CLI::IsMember(allowed));
    verify->add_option("-d,--degree", cfg.degree, "Degree bound D")->check(CLI::NonNegativeNumber);
    verify->add_option("--max-weight", cfg.max_weight, "Bound on m + n for the recursion suite")
        ->check(CLI::NonNegativeNumber);

    for (auto* sub : {amatrix, expand, intersect, verify}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format.empty() ? (cfg.command == "verify" ? Format::json : Format::text) : parse_format(format);

    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            err << "error: cannot open output file " << cfg.output << '\n';
            return exit_usage;
        }
    }
    std::ostream& sink = cfg.output.empty() ? out : file;

    try {
        if (cfg.command == "amatrix") {
            return cmd_amatrix(cfg, sink, err);
        }
        if (cfg.command == "expand") {
            return cmd_expand(cfg, sink, err);
        }
        if (cfg.command == "intersect") {
            return cmd_intersect(cfg, sink, err);
        }
        return cmd_verify(cfg, sink, err);
    } catch (const ResourceError& e) {
        err << "error: resource limit: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::bad_alloc&) {
        err << "error: resource limit: out of memory\n";
        return exit_resource;
    } catch (const DegreeError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ConsistencyError& e) {
        err << "error: internal consistency: " << e.what() << '\n';
        return exit_verification;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"wktau"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace wktau::cli
