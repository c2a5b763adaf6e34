#include "qudit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "qudit/serialize.hpp"

namespace qudit {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

enum class Format { text, json, csv, latex };

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "latex") return Format::latex;
    throw CLI::ValidationError("--format", "unknown format: " + name);
}

void emit(const std::string& payload, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    file << payload;
}

std::string render_table(Dimension d, Format format) {
    const std::vector<ConjugationEntry> entries = full_table(d);
    const PaperIndexMap map = paper_index_map(d);
    const PaperIndexMap* fixture = map.from_paper_fixture ? &map : nullptr;
    switch (format) {
        case Format::text:
            return table_text(d, entries, fixture);
        case Format::json:
            return table_json(entries, fixture).dump(2) + "\n";
        case Format::csv:
            return table_csv(entries, fixture);
        case Format::latex:
            return table_latex(d, entries, map);
    }
    return {};
}

std::string render_report(const SuiteReport& report, Format format, bool with_timing) {
    switch (format) {
        case Format::text:
            return report_text(report, with_timing);
        case Format::json:
            return report_json(report).dump(2) + "\n";
        case Format::csv:
            return report_csv(report);
        case Format::latex:
            return report_latex(report);
    }
    return {};
}

std::string render_matrix(const ExactMatrix& m, Format format) {
    switch (format) {
        case Format::text:
            return matrix_text(m);
        case Format::json:
            return matrix_json(m).dump(2) + "\n";
        case Format::csv:
            return matrix_csv(m);
        case Format::latex:
            return matrix_latex(m);
    }
    return {};
}

std::string render_primes(int max, Format format) {
    std::vector<int> primes;
    for (int p = 3; p <= max; ++p) {
        if (Dimension::is_valid(p)) primes.push_back(p);
    }
    std::ostringstream out;
    switch (format) {
        case Format::json: {
            nlohmann::ordered_json arr = primes;
            out << arr.dump() << "\n";
            break;
        }
        case Format::csv:
            out << "d\n";
            for (int p : primes) out << p << "\n";
            break;
        case Format::text:
        case Format::latex:
            for (size_t i = 0; i < primes.size(); ++i) {
                out << (i > 0 ? " " : "") << primes[i];
            }
            if (!primes.empty()) out << "\n";
            break;
    }
    return out.str();
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Chrestenson / Weyl / Kronecker-Pauli operator toolkit"};
    app.require_subcommand(1);

    int dim = 0;
    std::string format_name = "text";
    std::string out_path;
    std::string operator_kind;
    std::optional<int> opt_n;
    std::optional<int> opt_m;
    std::vector<std::string> suite_names;
    bool no_timing = false;
    int max_prime = 31;

    CLI::App* table = app.add_subcommand("table", "Emit the full conjugation table for one dimension");
    table->add_option("--dim", dim, "prime dimension > 2")->required();
    table->add_option("--format", format_name, "text|json|csv|latex");
    table->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--dim", dim, "prime dimension > 2")->required();
    verify->add_option("--format", format_name, "text|json|csv|latex");
    verify->add_option("--suite", suite_names, "check families (chrestenson,weyl,kpm,relation,trace)")
        ->delimiter(',');
    verify->add_flag("--no-timing", no_timing, "omit elapsed times from the text report");
    verify->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* exporter = app.add_subcommand("export", "Emit one operator matrix");
    exporter->add_option("--dim", dim, "prime dimension > 2")->required();
    exporter->add_option("--operator", operator_kind, "chrestenson|weyl|kpm")->required();
    exporter->add_option("--n", opt_n, "first operator index");
    exporter->add_option("--m", opt_m, "second operator index");
    exporter->add_option("--format", format_name, "text|json|csv|latex");
    exporter->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* primes = app.add_subcommand("primes", "List supported dimensions");
    primes->add_option("--max", max_prime, "upper bound (default 31)");
    primes->add_option("--format", format_name, "text|json|csv|latex");
    primes->add_option("--out", out_path, "write to file instead of stdout");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const Format format = parse_format(format_name);

        if (primes->parsed()) {
            emit(render_primes(max_prime, format), out_path, out);
            return kExitOk;
        }

        // Everything else validates the dimension before doing any work.
        std::optional<Dimension> maybe_d;
        try {
            maybe_d.emplace(dim);
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        const Dimension d = *maybe_d;

        if (table->parsed()) {
            emit(render_table(d, format), out_path, out);
            return kExitOk;
        }

        if (verify->parsed()) {
            std::set<std::string> selection(suite_names.begin(), suite_names.end());
            SuiteReport report;
            try {
                report = run_suite(d, selection);
            } catch (const std::invalid_argument& e) {
                err << "error: " << e.what() << "\n";
                return kExitUsage;
            }
            emit(render_report(report, format, !no_timing), out_path, out);
            return report.all_passed ? kExitOk : kExitVerificationFailed;
        }

        if (exporter->parsed()) {
            ExactMatrix m = [&]() -> ExactMatrix {
                if (operator_kind == "chrestenson") return chrestenson(d);
                if (operator_kind == "weyl" || operator_kind == "kpm") {
                    if (!opt_n || !opt_m) {
                        throw CLI::ValidationError("--n/--m",
                                                   "indices are required for " + operator_kind);
                    }
                    if (operator_kind == "weyl") return weyl(d, WeylIndex{*opt_n, *opt_m});
                    return kronecker_pauli(d, KpIndex{*opt_n, *opt_m});
                }
                throw CLI::ValidationError("--operator", "unknown operator: " + operator_kind);
            }();
            emit(render_matrix(m, format), out_path, out);
            return kExitOk;
        }

        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InternalConsistencyError& e) {
        err << "internal verification failure: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
}

}  // namespace qudit
