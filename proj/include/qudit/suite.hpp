#ifndef QUDIT_SUITE_HPP
#define QUDIT_SUITE_HPP

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qudit/relation.hpp"

namespace qudit {

// One verified claim. check_id values are a stable public contract:
//
//   chrestenson.unitary      C^dagger C = I = C C^dagger
//   weyl.orthonormality      Tr(U_nm^dagger U_pq) = d delta delta
//   weyl.traceless           Tr(U_nm) = 0 for (n,m) != (0,0), Tr(U_00) = d
//   kpm.axiom1.swap          (1/d) sum Pi x Pi = S
//   kpm.axiom2.hermitian     Pi^dagger = Pi
//   kpm.axiom3.involution    Pi^2 = I
//   kpm.axiom4.orthogonal    Tr(Pi^dagger Pi') = d delta
//   kpm.trace_one            Tr(Pi_nm) = 1
//   relation.proposition     C U_nm C = w^k Pi_kp, brute vs closed form
//   relation.bijection       (n,m) -> kp covers every index pair once
struct CheckResult {
    std::string check_id;
    int dimension = 0;
    bool passed = false;
    std::string detail;  // counterexample with exact entries; empty iff passed
    double elapsed_ms = 0.0;
};

struct SuiteReport {
    int dimension = 0;
    std::vector<CheckResult> results;  // sorted by check_id
    bool all_passed = false;
};

// Construction hooks. The default source calls the real constructors; tests
// substitute corrupted ones to prove the checks can fail.
struct OperatorSource {
    std::function<ExactMatrix(Dimension)> chrestenson;
    std::function<ExactMatrix(Dimension, WeylIndex)> weyl;
    std::function<ExactMatrix(Dimension, KpIndex)> kronecker_pauli;

    static OperatorSource standard();
};

// Valid selection names: chrestenson, weyl, kpm, relation, trace.
const std::vector<std::string>& check_families();

// Runs the selected check families (all of them when the selection is
// empty). Failures are data in the report, never exceptions; an unknown
// family name throws std::invalid_argument.
SuiteReport run_suite(Dimension d, const std::set<std::string>& selection = {});
SuiteReport run_suite(Dimension d, const std::set<std::string>& selection,
                      const OperatorSource& source);

}  // namespace qudit

#endif
