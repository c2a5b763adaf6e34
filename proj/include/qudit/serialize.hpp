#ifndef QUDIT_SERIALIZE_HPP
#define QUDIT_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "qudit/relation.hpp"
#include "qudit/suite.hpp"

namespace qudit {

// Canonical coefficient strings of the form "p/q" (the "/q" is omitted when
// q = 1), index i holding the coefficient of w^i.
std::vector<std::string> coeff_strings(const CycScalar& s);

// Human-readable polynomial in w, e.g. "-1 - w" or "1/3 + 2/3*w^2".
std::string scalar_poly_string(const CycScalar& s);

// LaTeX form; root_symbol is typically "w" or "\\eta".
std::string scalar_latex(const CycScalar& s, const std::string& root_symbol = "w");

// 15 significant digits, round-to-nearest-even, as a decimal string.
std::string format_float(double value);

// Matrix export. The json record is the authoritative one (exact
// coefficients plus the sqrt-d exponent); floats everywhere are a
// convenience rendering of the represented matrix entries * d^{-s/2}.
nlohmann::ordered_json matrix_json(const ExactMatrix& m);
std::string matrix_text(const ExactMatrix& m);
std::string matrix_csv(const ExactMatrix& m);
std::string matrix_latex(const ExactMatrix& m, const std::string& root_symbol = "w");

// Conjugation-table export. map may be null (no ell column).
nlohmann::ordered_json table_json(const std::vector<ConjugationEntry>& entries,
                                  const PaperIndexMap* map);
std::string table_text(Dimension d, const std::vector<ConjugationEntry>& entries,
                       const PaperIndexMap* map);
std::string table_csv(const std::vector<ConjugationEntry>& entries, const PaperIndexMap* map);

// The published identity-block layout, d rows of d cells,
// C_dU_{nm}C_d = w^k <symbol>_ell. Uses tau/w at d=3 and chi/eta at d=5;
// other dimensions fall back to Pi with the canonical ell.
std::string table_latex(Dimension d, const std::vector<ConjugationEntry>& entries,
                        const PaperIndexMap& map);

// Suite-report export. Machine formats carry no timing so that identical
// invocations stay byte-identical; the text form shows elapsed times unless
// with_timing is false.
nlohmann::ordered_json report_json(const SuiteReport& report);
std::string report_text(const SuiteReport& report, bool with_timing);
std::string report_csv(const SuiteReport& report);
std::string report_latex(const SuiteReport& report);

}  // namespace qudit

#endif
