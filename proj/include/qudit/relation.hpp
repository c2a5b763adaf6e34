#ifndef QUDIT_RELATION_HPP
#define QUDIT_RELATION_HPP

#include <optional>
#include <vector>

#include "qudit/operators.hpp"

namespace qudit {

// One row of the conjugation table: C_d U_nm C_d = w^phase_exp * Pi_kp.
struct ConjugationEntry {
    WeylIndex weyl;
    int phase_exp = 0;  // in 0..d-1
    KpIndex kp;
    friend bool operator==(const ConjugationEntry&, const ConjugationEntry&) = default;
};

struct PhaseKpm {
    int phase_exp = 0;
    KpIndex kp;
    friend bool operator==(const PhaseKpm&, const PhaseKpm&) = default;
};

// The exact normalized product C_d * U_idx * C_d. The raw product carries
// d^{-1}, which normalization folds into the entries, so the result always
// has sqrt_d_exp = 0 and is a monomial matrix of d-th roots of unity.
ExactMatrix conjugate_brute(Dimension d, WeylIndex idx);

// Closed-form index/phase map for the conjugation:
//   phase_exp = -n*m*inv2,  kp = (-n*inv2, -m)   (mod d, inv2 = (d+1)/2).
// Derived, not quoted: trustworthy only because conjugate_brute gates it in
// full_table and in the test suite.
ConjugationEntry closed_form(Dimension d, WeylIndex idx);

// If m = w^k * Pi_{n'm'}, recovers the unique (k, (n', m')). The support
// permutation must have the involutive form col = (-row + 2n') mod d; the
// phase parameters are read off two entries and then every entry is
// re-verified. Anything else raises NotPhaseKpmError (try_ returns nullopt).
PhaseKpm decompose_phase_kpm(const ExactMatrix& m);
std::optional<PhaseKpm> try_decompose_phase_kpm(const ExactMatrix& m);

// All d^2 conjugation entries in row-major (n, m) order. Every entry is
// produced by closed_form and checked against conjugate_brute plus
// decompose_phase_kpm; a mismatch raises InternalConsistencyError.
std::vector<ConjugationEntry> full_table(Dimension d);

// Mapping between the printed flat index ell (tau_ell at d=3, chi_ell at
// d=5) and the generative (n, m) pairs. The printed orderings come from
// external references and are stored as fixtures; every other prime gets the
// canonical ordering ell = n*d + m + 1, flagged as such.
struct PaperIndexMap {
    Dimension d;
    std::vector<KpIndex> entries;  // position ell-1 holds the (n, m) pair
    bool from_paper_fixture = false;

    KpIndex kp_of(int ell) const;   // ell in 1..d^2
    int ell_of(KpIndex kp) const;
};

PaperIndexMap paper_index_map(Dimension d);

}  // namespace qudit

#endif
