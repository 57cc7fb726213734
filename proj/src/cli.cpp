#include "tusi/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "tusi/error.hpp"
#include "tusi/report.hpp"
#include "tusi/solver.hpp"

namespace tusi {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct BatchStats {
    int total = 0;
    int parse_errors = 0;
    int oracle_agree = 0;
    int oracle_skipped = 0;
    std::map<std::string, int> by_case;
};

int run_single(const std::string& equation, const SolveOptions& opt,
               const std::string& format, std::ostream& out, std::ostream& err) {
    try {
        SolveReport rep = solve_text(equation, opt);
        out << (format == "json" ? render_json(rep) + "\n" : render_text(rep, opt.trace));
        return kExitOk;
    } catch (const ParseError& e) {
        err << "parse error at position " << e.position << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedFormError& e) {
        err << "unsupported equation: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int run_batch(const std::string& path, const SolveOptions& opt,
              const std::string& format, std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "cannot open batch file: " << path << "\n";
        return kExitUsage;
    }
    BatchStats stats;
    bool internal_failure = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r\n");
        std::string eq = line.substr(first, last - first + 1);

        ++stats.total;
        try {
            SolveReport rep = solve_text(eq, opt);
            stats.by_case[rep.case_label]++;
            if (rep.oracle_verdict == "agree") {
                ++stats.oracle_agree;
            } else if (rep.oracle_verdict == "skipped") {
                ++stats.oracle_skipped;
            }
            if (format == "json") {
                out << render_json(rep) << "\n";
            } else {
                out << "--- line " << lineno << " ---\n" << render_text(rep, opt.trace);
            }
        } catch (const InternalError& e) {
            internal_failure = true;
            err << "line " << lineno << ": internal error: " << e.what() << "\n";
        } catch (const Error& e) {
            ++stats.parse_errors;
            err << "line " << lineno << ": " << e.what() << "\n";
        }
    }

    if (format == "json") {
        std::ostringstream cases;
        out << "{\"summary\":{\"equations\":" << stats.total
            << ",\"parse_errors\":" << stats.parse_errors
            << ",\"oracle_agree\":" << stats.oracle_agree
            << ",\"oracle_skipped\":" << stats.oracle_skipped << "}}\n";
    } else {
        out << "== batch summary ==\n";
        out << "equations:     " << stats.total << "\n";
        out << "parse errors:  " << stats.parse_errors << "\n";
        for (const auto& [k, v] : stats.by_case) {
            out << "  " << k << ": " << v << "\n";
        }
        out << "oracle agree:  " << stats.oracle_agree << " of "
            << (stats.total - stats.parse_errors - stats.oracle_skipped) << "\n";
    }
    return internal_failure ? kExitInternal : kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact positive-root solver for cubic equations in the canonical-form "
                 "style of Sharaf al-Din al-Tusi, cross-checked by a Sturm oracle"};
    app.name("tusi");

    std::string equation;
    std::string batch_file;
    SolveOptions opt;
    std::string format = "text";
    bool no_oracle = false;
    unsigned digits = 12;
    unsigned base = 10;

    CLI::App* solve = app.add_subcommand("solve", "analyze one equation (or a batch file)");
    solve->add_option("equation", equation, "equation text, e.g. \"x^3 + 2 = 3x^2\"");
    solve->add_option("--digits", digits, "fraction digits per root (default 12)");
    solve->add_option("--base", base, "digit base, 10 or 60")
        ->check(CLI::IsMember({10u, 60u}));
    solve->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    solve->add_flag("--trace", opt.trace, "per-stage trace blocks");
    solve->add_flag("--no-oracle", no_oracle, "skip the independent verification");
    solve->add_option("--batch", batch_file, "file with one equation per line, # comments");
    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("tusi");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    opt.digits = digits;
    opt.base = base;
    opt.use_oracle = !no_oracle;

    if (!batch_file.empty()) {
        return run_batch(batch_file, opt, format, out, err);
    }
    if (equation.empty()) {
        err << "nothing to solve: pass an equation or --batch FILE\n";
        return kExitUsage;
    }
    return run_single(equation, opt, format, out, err);
}

} // namespace tusi
