#include "qudit/suite.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include "qudit/serialize.hpp"

namespace qudit {

namespace {

std::string u_name(int n, int m) { return "U(" + std::to_string(n) + "," + std::to_string(m) + ")"; }
std::string pi_name(int n, int m) { return "Pi(" + std::to_string(n) + "," + std::to_string(m) + ")"; }
std::string pi_name(KpIndex kp) { return pi_name(kp.n, kp.m); }

std::string entry_mismatch(const std::string& what, int r, int c, const CycScalar& got,
                           const CycScalar& expected) {
    return what + " at entry (" + std::to_string(r) + "," + std::to_string(c) + "): got " +
           scalar_poly_string(got) + ", expected " + scalar_poly_string(expected);
}

// First differing entry of two same-shape, same-scale matrices.
std::pair<int, int> first_diff(const ExactMatrix& a, const ExactMatrix& b) {
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            if (a.at(r, c) != b.at(r, c)) return {r, c};
        }
    }
    return {-1, -1};
}

using CheckOutcome = std::pair<bool, std::string>;  // passed, detail

CheckOutcome check_chrestenson_unitary(Dimension d, const OperatorSource& src) {
    const ExactMatrix c = src.chrestenson(d);
    const ExactMatrix id = ExactMatrix::identity(d, d.value());
    const ExactMatrix left = matmul(adjoint(c), c);
    if (!eq(left, id)) {
        auto [r, col] = first_diff(left, id);
        return {false, entry_mismatch("C^dagger C != I", r, col, left.at(r, col), id.at(r, col))};
    }
    const ExactMatrix right = matmul(c, adjoint(c));
    if (!eq(right, id)) {
        auto [r, col] = first_diff(right, id);
        return {false, entry_mismatch("C C^dagger != I", r, col, right.at(r, col), id.at(r, col))};
    }
    return {true, ""};
}

CheckOutcome check_weyl_orthonormality(Dimension d, const OperatorSource& src) {
    const int p = d.value();
    std::vector<ExactMatrix> family;
    family.reserve(static_cast<size_t>(p) * static_cast<size_t>(p));
    for (int n = 0; n < p; ++n) {
        for (int m = 0; m < p; ++m) family.push_back(src.weyl(d, WeylIndex{n, m}));
    }
    const CycScalar norm(d, Rational(p));
    const CycScalar zero(d);
    for (int a = 0; a < p * p; ++a) {
        for (int b = 0; b < p * p; ++b) {
            const CycScalar inner = hs_inner(family[static_cast<size_t>(a)],
                                             family[static_cast<size_t>(b)]);
            const CycScalar& expected = (a == b) ? norm : zero;
            if (inner != expected) {
                return {false, "Tr(" + u_name(a / p, a % p) + "^dagger " + u_name(b / p, b % p) +
                                   ") = " + scalar_poly_string(inner) + ", expected " +
                                   scalar_poly_string(expected)};
            }
        }
    }
    return {true, ""};
}

CheckOutcome check_weyl_traceless(Dimension d, const OperatorSource& src) {
    const int p = d.value();
    for (int n = 0; n < p; ++n) {
        for (int m = 0; m < p; ++m) {
            const TraceResult tr = trace(src.weyl(d, WeylIndex{n, m}));
            const CycScalar expected =
                (n == 0 && m == 0) ? CycScalar(d, Rational(p)) : CycScalar(d);
            if (tr.sqrt_d_exp != 0 || tr.value != expected) {
                return {false, "Tr(" + u_name(n, m) + ") = " + scalar_poly_string(tr.value) +
                                   ", expected " + scalar_poly_string(expected)};
            }
        }
    }
    return {true, ""};
}

CheckOutcome check_kpm_swap(Dimension d, const OperatorSource& src) {
    const int p = d.value();
    ExactMatrix acc(d, p * p, p * p);
    for (int n = 0; n < p; ++n) {
        for (int m = 0; m < p; ++m) {
            const ExactMatrix t = tensor(src.kronecker_pauli(d, KpIndex{n, m}),
                                         src.kronecker_pauli(d, KpIndex{n, m}));
            for (int r = 0; r < p * p; ++r) {
                for (int c = 0; c < p * p; ++c) {
                    if (t.at(r, c).is_zero()) continue;
                    acc.set_entry(r, c, acc.at(r, c) + t.at(r, c));
                }
            }
        }
    }
    const ExactMatrix lhs = scalar_mul(CycScalar(d, Rational(1, p)), acc);
    const ExactMatrix swap = swap_direct(d);
    if (!eq(lhs, swap)) {
        auto [r, c] = first_diff(lhs, swap);
        return {false, entry_mismatch("(1/d) sum Pi x Pi != S", r, c, lhs.at(r, c), swap.at(r, c))};
    }
    return {true, ""};
}

CheckOutcome check_kpm_hermitian(Dimension d, const OperatorSource& src) {
    const int p = d.value();
    for (int n = 0; n < p; ++n) {
        for (int m = 0; m < p; ++m) {
            const ExactMatrix pi = src.kronecker_pauli(d, KpIndex{n, m});
            const ExactMatrix adj = adjoint(pi);
            if (!eq(adj, pi)) {
                auto [r, c] = first_diff(adj, pi);
                return {false, entry_mismatch(pi_name(n, m) + " is not hermitian", r, c,
                                              adj.at(r, c), pi.at(r, c))};
            }
        }
    }
    return {true, ""};
}

CheckOutcome check_kpm_involution(Dimension d, const OperatorSource& src) {
    const int p = d.value();
    const ExactMatrix id = ExactMatrix::identity(d, p);
    for (int n = 0; n < p; ++n) {
        for (int m = 0; m < p; ++m) {
            const ExactMatrix pi = src.kronecker_pauli(d, KpIndex{n, m});
            const ExactMatrix sq = matmul(pi, pi);
            if (!eq(sq, id)) {
                auto [r, c] = first_diff(sq, id);
                return {false, entry_mismatch(pi_name(n, m) + "^2 != I", r, c, sq.at(r, c),
                                              id.at(r, c))};
            }
        }
    }
    return {true, ""};
}

CheckOutcome check_kpm_orthogonal(Dimension d, const OperatorSource& src) {
    const int p = d.value();
    std::vector<ExactMatrix> family;
    family.reserve(static_cast<size_t>(p) * static_cast<size_t>(p));
    for (int n = 0; n < p; ++n) {
        for (int m = 0; m < p; ++m) family.push_back(src.kronecker_pauli(d, KpIndex{n, m}));
    }
    const CycScalar norm(d, Rational(p));
    const CycScalar zero(d);
    for (int a = 0; a < p * p; ++a) {
        for (int b = 0; b < p * p; ++b) {
            const CycScalar inner = hs_inner(family[static_cast<size_t>(a)],
                                             family[static_cast<size_t>(b)]);
            const CycScalar& expected = (a == b) ? norm : zero;
            if (inner != expected) {
                return {false, "Tr(" + pi_name(a / p, a % p) + "^dagger " + pi_name(b / p, b % p) +
                                   ") = " + scalar_poly_string(inner) + ", expected " +
                                   scalar_poly_string(expected)};
            }
        }
    }
    return {true, ""};
}

CheckOutcome check_kpm_trace_one(Dimension d, const OperatorSource& src) {
    const int p = d.value();
    const CycScalar one = CycScalar::one(d);
    for (int n = 0; n < p; ++n) {
        for (int m = 0; m < p; ++m) {
            const TraceResult tr = trace(src.kronecker_pauli(d, KpIndex{n, m}));
            if (tr.sqrt_d_exp != 0 || tr.value != one) {
                return {false, "Tr(" + pi_name(n, m) + ") = " + scalar_poly_string(tr.value) +
                                   ", expected 1"};
            }
        }
    }
    return {true, ""};
}

CheckOutcome check_relation_proposition(Dimension d, const OperatorSource& src) {
    const int p = d.value();
    const ExactMatrix c = src.chrestenson(d);
    for (int n = 0; n < p; ++n) {
        for (int m = 0; m < p; ++m) {
            const ExactMatrix brute = matmul(c, matmul(src.weyl(d, WeylIndex{n, m}), c));
            const ConjugationEntry cf = closed_form(d, WeylIndex{n, m});
            const ExactMatrix predicted = scalar_mul(CycScalar::root_power(d, cf.phase_exp),
                                                     src.kronecker_pauli(d, cf.kp));
            if (!eq(brute, predicted)) {
                auto [r, col] = first_diff(brute, predicted);
                return {false, entry_mismatch("C " + u_name(n, m) + " C != w^" +
                                                  std::to_string(cf.phase_exp) + " " +
                                                  pi_name(cf.kp),
                                              r, col, brute.at(r, col), predicted.at(r, col))};
            }
        }
    }
    return {true, ""};
}

CheckOutcome check_relation_bijection(Dimension d, const OperatorSource&) {
    const int p = d.value();
    std::vector<int> reached_by(static_cast<size_t>(p) * static_cast<size_t>(p), -1);
    for (int n = 0; n < p; ++n) {
        for (int m = 0; m < p; ++m) {
            const ConjugationEntry cf = closed_form(d, WeylIndex{n, m});
            const size_t flat = static_cast<size_t>(cf.kp.n) * static_cast<size_t>(p) +
                                static_cast<size_t>(cf.kp.m);
            if (reached_by[flat] != -1) {
                const int prev = reached_by[flat];
                return {false, pi_name(cf.kp) + " reached by both " + u_name(prev / p, prev % p) +
                                   " and " + u_name(n, m)};
            }
            reached_by[flat] = n * p + m;
        }
    }
    return {true, ""};
}

struct CheckSpec {
    const char* id;
    const char* family;
    CheckOutcome (*run)(Dimension, const OperatorSource&);
};

// Kept in check_id order so reports come out sorted without surprises.
constexpr CheckSpec kChecks[] = {
    {"chrestenson.unitary", "chrestenson", check_chrestenson_unitary},
    {"kpm.axiom1.swap", "kpm", check_kpm_swap},
    {"kpm.axiom2.hermitian", "kpm", check_kpm_hermitian},
    {"kpm.axiom3.involution", "kpm", check_kpm_involution},
    {"kpm.axiom4.orthogonal", "kpm", check_kpm_orthogonal},
    {"kpm.trace_one", "trace", check_kpm_trace_one},
    {"relation.bijection", "relation", check_relation_bijection},
    {"relation.proposition", "relation", check_relation_proposition},
    {"weyl.orthonormality", "weyl", check_weyl_orthonormality},
    {"weyl.traceless", "weyl", check_weyl_traceless},
};

}  // namespace

OperatorSource OperatorSource::standard() {
    OperatorSource src;
    src.chrestenson = [](Dimension d) { return qudit::chrestenson(d); };
    src.weyl = [](Dimension d, WeylIndex idx) { return qudit::weyl(d, idx); };
    src.kronecker_pauli = [](Dimension d, KpIndex idx) { return qudit::kronecker_pauli(d, idx); };
    return src;
}

const std::vector<std::string>& check_families() {
    static const std::vector<std::string> families = {"chrestenson", "weyl", "kpm", "relation",
                                                      "trace"};
    return families;
}

SuiteReport run_suite(Dimension d, const std::set<std::string>& selection) {
    return run_suite(d, selection, OperatorSource::standard());
}

SuiteReport run_suite(Dimension d, const std::set<std::string>& selection,
                      const OperatorSource& source) {
    const auto& known = check_families();
    for (const std::string& name : selection) {
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            throw std::invalid_argument("unknown check family: " + name);
        }
    }
    SuiteReport report;
    report.dimension = d.value();
    report.all_passed = true;
    for (const CheckSpec& spec : kChecks) {
        if (!selection.empty() && selection.count(spec.family) == 0) continue;
        const auto start = std::chrono::steady_clock::now();
        auto [passed, detail] = spec.run(d, source);
        const auto stop = std::chrono::steady_clock::now();
        CheckResult result;
        result.check_id = spec.id;
        result.dimension = d.value();
        result.passed = passed;
        result.detail = std::move(detail);
        result.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        report.all_passed = report.all_passed && passed;
        report.results.push_back(std::move(result));
    }
    std::sort(report.results.begin(), report.results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
    return report;
}

}  // namespace qudit
