#include "qudit/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qudit {

namespace {

std::string power_string(const std::string& symbol, int e, bool braced_subscript) {
    if (e == 0) return "";
    if (e == 1) return symbol;
    if (e < 10 && !braced_subscript) return symbol + "^" + std::to_string(e);
    return symbol + "^{" + std::to_string(e) + "}";
}

std::string rational_latex(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    const mpz_class num = abs(r.get_num());
    const std::string sign = r < 0 ? "-" : "";
    return sign + "\\frac{" + num.get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string csv_quote(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string out = "\"";
    for (char ch : raw) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

}  // namespace

std::vector<std::string> coeff_strings(const CycScalar& s) {
    std::vector<std::string> out;
    out.reserve(s.coeffs().size());
    for (const Rational& c : s.coeffs()) out.push_back(c.get_str());
    return out;
}

std::string scalar_poly_string(const CycScalar& s) {
    if (s.is_zero()) return "0";
    std::string out;
    const auto& coeffs = s.coeffs();
    for (size_t i = 0; i < coeffs.size(); ++i) {
        const Rational& c = coeffs[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (i == 0) {
            out += magnitude.get_str();
        } else {
            if (magnitude != 1) out += magnitude.get_str() + "*";
            out += (i == 1) ? "w" : "w^" + std::to_string(i);
        }
    }
    return out;
}

std::string scalar_latex(const CycScalar& s, const std::string& root_symbol) {
    if (s.is_zero()) return "0";
    // Pure root powers print as w^e; the canonical coefficients of w^{d-1}
    // would otherwise surface as the sum -1 - w - ... - w^{d-2}.
    const Dimension d(s.dim());
    for (int e = 0; e < d.value(); ++e) {
        if (s == CycScalar::root_power(d, e)) {
            return e == 0 ? "1" : power_string(root_symbol, e, false);
        }
    }
    std::string out;
    const auto& coeffs = s.coeffs();
    for (size_t i = 0; i < coeffs.size(); ++i) {
        const Rational& c = coeffs[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        if (i == 0) {
            out += rational_latex(magnitude);
        } else {
            if (magnitude != 1) out += rational_latex(magnitude);
            out += power_string(root_symbol, static_cast<int>(i), false);
        }
    }
    return out;
}

std::string format_float(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", value);
    return buf;
}

namespace {

// Represented value of one entry, including the d^{-s/2} prefactor.
std::complex<double> represented_entry(const ExactMatrix& m, int r, int c) {
    const double scale = std::pow(static_cast<double>(m.dim().value()),
                                  -0.5 * static_cast<double>(m.sqrt_d_exp()));
    return m.at(r, c).to_complex() * scale;
}

}  // namespace

nlohmann::ordered_json matrix_json(const ExactMatrix& m) {
    nlohmann::ordered_json out;
    out["d"] = m.dim().value();
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["sqrt_d_exp"] = m.sqrt_d_exp();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    nlohmann::ordered_json floats = nlohmann::ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        nlohmann::ordered_json frow = nlohmann::ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) {
            row.push_back(coeff_strings(m.at(r, c)));
            const std::complex<double> z = represented_entry(m, r, c);
            frow.push_back({format_float(z.real()), format_float(z.imag())});
        }
        entries.push_back(std::move(row));
        floats.push_back(std::move(frow));
    }
    out["entries"] = std::move(entries);
    out["float_entries"] = std::move(floats);
    out["float_entries_authoritative"] = false;
    return out;
}

std::string matrix_text(const ExactMatrix& m) {
    std::ostringstream out;
    out << m.rows() << "x" << m.cols() << " over Q(w_" << m.dim().value() << ")";
    if (m.sqrt_d_exp() == 1) out << ", prefactor 1/sqrt(" << m.dim().value() << ")";
    out << "\n";
    for (int r = 0; r < m.rows(); ++r) {
        out << "[";
        for (int c = 0; c < m.cols(); ++c) {
            if (c > 0) out << ", ";
            out << scalar_poly_string(m.at(r, c));
        }
        out << "]\n";
    }
    return out.str();
}

std::string matrix_csv(const ExactMatrix& m) {
    std::ostringstream out;
    out << "# non-authoritative float rendering (15 significant digits); use the json format for "
           "exact coefficients\n";
    out << "# d=" << m.dim().value() << " rows=" << m.rows() << " cols=" << m.cols()
        << " sqrt_d_exp=" << m.sqrt_d_exp() << "\n";
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c > 0) out << ",";
            const std::complex<double> z = represented_entry(m, r, c);
            out << format_float(z.real()) << "," << format_float(z.imag());
        }
        out << "\n";
    }
    return out.str();
}

std::string matrix_latex(const ExactMatrix& m, const std::string& root_symbol) {
    std::ostringstream out;
    if (m.sqrt_d_exp() == 1) out << "\\frac{1}{\\sqrt{" << m.dim().value() << "}}\n";
    out << "\\begin{pmatrix}\n";
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c > 0) out << "&";
            out << scalar_latex(m.at(r, c), root_symbol);
        }
        out << (r + 1 < m.rows() ? "\\\\" : "") << "\n";
    }
    out << "\\end{pmatrix}\n";
    return out.str();
}

nlohmann::ordered_json table_json(const std::vector<ConjugationEntry>& entries,
                                  const PaperIndexMap* map) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const ConjugationEntry& e : entries) {
        nlohmann::ordered_json rec;
        rec["n"] = e.weyl.n;
        rec["m"] = e.weyl.m;
        rec["phase_exp"] = e.phase_exp;
        rec["kp_n"] = e.kp.n;
        rec["kp_m"] = e.kp.m;
        if (map != nullptr) rec["paper_ell"] = map->ell_of(e.kp);
        rec["verified"] = true;
        out.push_back(std::move(rec));
    }
    return out;
}

std::string table_text(Dimension d, const std::vector<ConjugationEntry>& entries,
                       const PaperIndexMap* map) {
    std::ostringstream out;
    out << "conjugation table for d=" << d.value() << ": C U(n,m) C = w^k Pi(kp_n,kp_m)\n";
    out << "  n   m   k  kp_n  kp_m";
    if (map != nullptr) out << "  ell";
    out << "\n";
    char buf[96];
    for (const ConjugationEntry& e : entries) {
        std::snprintf(buf, sizeof(buf), "%3d %3d %3d %5d %5d", e.weyl.n, e.weyl.m, e.phase_exp,
                      e.kp.n, e.kp.m);
        out << buf;
        if (map != nullptr) {
            std::snprintf(buf, sizeof(buf), " %4d", map->ell_of(e.kp));
            out << buf;
        }
        out << "\n";
    }
    return out.str();
}

std::string table_csv(const std::vector<ConjugationEntry>& entries, const PaperIndexMap* map) {
    std::ostringstream out;
    out << "n,m,phase_exp,kp_n,kp_m,paper_ell,verified\n";
    for (const ConjugationEntry& e : entries) {
        out << e.weyl.n << "," << e.weyl.m << "," << e.phase_exp << "," << e.kp.n << "," << e.kp.m
            << ",";
        if (map != nullptr) out << map->ell_of(e.kp);
        out << ",true\n";
    }
    return out.str();
}

namespace {

std::string latex_operator_cell(int d, int n, int m, int phase_exp, int ell) {
    const bool wide = d >= 10;
    const std::string dim = wide ? "{" + std::to_string(d) + "}" : std::to_string(d);
    std::string nm = wide ? std::to_string(n) + "," + std::to_string(m)
                          : std::to_string(n) + std::to_string(m);
    std::string phase_symbol;
    std::string kp_symbol;
    if (d == 3) {
        phase_symbol = "w";
        kp_symbol = "\\tau_" + std::to_string(ell);  // single digit, bare subscript as printed
    } else if (d == 5) {
        phase_symbol = "\\eta";
        kp_symbol = "\\chi_{" + std::to_string(ell) + "}";
    } else {
        phase_symbol = "w";
        kp_symbol = "\\Pi_{" + std::to_string(ell) + "}";
    }
    return "C_" + dim + "U_{" + nm + "}C_" + dim + "=" +
           power_string(phase_symbol, phase_exp, false) + kp_symbol;
}

}  // namespace

std::string table_latex(Dimension d, const std::vector<ConjugationEntry>& entries,
                        const PaperIndexMap& map) {
    const int p = d.value();
    std::ostringstream out;
    out << "\\begin{array}{" << std::string(static_cast<size_t>(p), 'l') << "}\n";
    for (int n = 0; n < p; ++n) {
        for (int m = 0; m < p; ++m) {
            const ConjugationEntry& e = entries[static_cast<size_t>(n * p + m)];
            if (m > 0) out << " & ";
            out << latex_operator_cell(p, e.weyl.n, e.weyl.m, e.phase_exp, map.ell_of(e.kp));
        }
        out << (n + 1 < p ? "\\\\" : "") << "\n";
    }
    out << "\\end{array}\n";
    return out.str();
}

nlohmann::ordered_json report_json(const SuiteReport& report) {
    nlohmann::ordered_json out;
    out["dimension"] = report.dimension;
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const CheckResult& r : report.results) {
        nlohmann::ordered_json rec;
        rec["check_id"] = r.check_id;
        rec["passed"] = r.passed;
        if (!r.passed) rec["detail"] = r.detail;
        results.push_back(std::move(rec));
    }
    out["results"] = std::move(results);
    out["all_passed"] = report.all_passed;
    return out;
}

std::string report_text(const SuiteReport& report, bool with_timing) {
    std::ostringstream out;
    out << "verification suite, d=" << report.dimension << "\n";
    size_t passed = 0;
    for (const CheckResult& r : report.results) {
        out << "  " << r.check_id;
        for (size_t i = r.check_id.size(); i < 26; ++i) out << ' ';
        out << (r.passed ? "pass" : "FAIL");
        if (with_timing) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "  %8.2f ms", r.elapsed_ms);
            out << buf;
        }
        out << "\n";
        if (!r.passed) out << "      " << r.detail << "\n";
        if (r.passed) ++passed;
    }
    out << passed << "/" << report.results.size() << " checks passed\n";
    return out.str();
}

std::string report_csv(const SuiteReport& report) {
    std::ostringstream out;
    out << "check_id,passed,detail\n";
    for (const CheckResult& r : report.results) {
        out << r.check_id << "," << (r.passed ? "true" : "false") << ","
            << csv_quote(r.passed ? "" : r.detail) << "\n";
    }
    return out.str();
}

std::string report_latex(const SuiteReport& report) {
    std::ostringstream out;
    out << "\\begin{tabular}{ll}\n";
    out << "check & result\\\\\n";
    for (const CheckResult& r : report.results) {
        std::string escaped;
        for (char ch : r.check_id) {
            if (ch == '_') escaped += "\\";
            escaped += ch;
        }
        out << escaped << " & " << (r.passed ? "pass" : "fail") << "\\\\\n";
    }
    out << "\\end{tabular}\n";
    return out.str();
}

}  // namespace qudit
