#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>
#include <vector>

#include "qudit/relation.hpp"

using qudit::ConjugationEntry;
using qudit::CycScalar;
using qudit::Dimension;
using qudit::ExactMatrix;
using qudit::KpIndex;
using qudit::PhaseKpm;
using qudit::WeylIndex;

namespace {

const Dimension d3(3);
const Dimension d5(5);
const Dimension d7(7);

ExactMatrix from_exponents(Dimension d, const std::vector<std::vector<int>>& exps) {
    const int n = static_cast<int>(exps.size());
    ExactMatrix out(d, n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (exps[r][c] >= 0) out.set_entry(r, c, CycScalar::root_power(d, exps[r][c]));
        }
    }
    return out;
}

// The nine printed tau matrices, as root-of-unity exponents (-1 = zero).
const std::vector<std::vector<std::vector<int>>> kTau = {
    {{0, -1, -1}, {-1, -1, 0}, {-1, 0, -1}},  // tau_1
    {{0, -1, -1}, {-1, -1, 1}, {-1, 2, -1}},  // tau_2
    {{0, -1, -1}, {-1, -1, 2}, {-1, 1, -1}},  // tau_3
    {{-1, -1, 0}, {-1, 0, -1}, {0, -1, -1}},  // tau_4
    {{-1, -1, 1}, {-1, 0, -1}, {2, -1, -1}},  // tau_5
    {{-1, -1, 2}, {-1, 0, -1}, {1, -1, -1}},  // tau_6
    {{-1, 0, -1}, {0, -1, -1}, {-1, -1, 0}},  // tau_7
    {{-1, 1, -1}, {2, -1, -1}, {-1, -1, 0}},  // tau_8
    {{-1, 2, -1}, {1, -1, -1}, {-1, -1, 0}},  // tau_9
};

// The printed d=3 table: ell and phase exponent in row-major (n, m) order.
constexpr int kEll3[3][3] = {{1, 3, 2}, {4, 5, 6}, {7, 9, 8}};
constexpr int kPhase3[3][3] = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};

// The printed d=5 table.
constexpr int kEll5[5][5] = {{1, 2, 3, 4, 5},
                             {11, 12, 13, 14, 15},
                             {21, 22, 23, 24, 25},
                             {6, 7, 8, 9, 10},
                             {16, 17, 18, 19, 20}};
constexpr int kPhase5[5][5] = {{0, 0, 0, 0, 0},
                               {0, 2, 4, 1, 3},
                               {0, 4, 3, 2, 1},
                               {0, 1, 2, 3, 4},
                               {0, 3, 1, 4, 2}};

// Exhaustive oracle: scan every (k, n, m) candidate for an exact match.
std::optional<PhaseKpm> scan_all_candidates(const ExactMatrix& m) {
    const Dimension d = m.dim();
    std::optional<PhaseKpm> found;
    int matches = 0;
    for (int k = 0; k < d.value(); ++k) {
        for (int n = 0; n < d.value(); ++n) {
            for (int mm = 0; mm < d.value(); ++mm) {
                const ExactMatrix candidate = qudit::scalar_mul(
                    CycScalar::root_power(d, k), qudit::kronecker_pauli(d, {n, mm}));
                if (qudit::eq(m, candidate)) {
                    found = PhaseKpm{k, {n, mm}};
                    ++matches;
                }
            }
        }
    }
    REQUIRE(matches <= 1);  // distinct triples give distinct matrices
    return found;
}

}  // namespace

TEST_CASE("conjugate_brute reproduces the printed d=3 identities") {
    // C U_00 C is tau_1, the parity permutation, with no phase.
    CHECK(qudit::eq(qudit::conjugate_brute(d3, {0, 0}), from_exponents(d3, kTau[0])));

    // C U_11 C = w tau_5.
    const ExactMatrix expected = qudit::scalar_mul(CycScalar::root_power(d3, 1),
                                                   from_exponents(d3, kTau[4]));
    CHECK(qudit::eq(qudit::conjugate_brute(d3, {1, 1}), expected));

    CHECK(qudit::conjugate_brute(d3, {0, 0}).sqrt_d_exp() == 0);
}

TEST_CASE("closed_form frozen values") {
    const ConjugationEntry e3 = qudit::closed_form(d3, {1, 1});
    CHECK(e3.phase_exp == 1);
    CHECK(e3.kp == KpIndex{1, 2});

    for (int p : {3, 5, 7, 11}) {
        const ConjugationEntry e = qudit::closed_form(Dimension(p), {0, 0});
        CHECK(e.phase_exp == 0);
        CHECK(e.kp == KpIndex{0, 0});
    }

    const ConjugationEntry e5 = qudit::closed_form(d5, {1, 1});
    CHECK(e5.phase_exp == 2);
    CHECK(e5.kp == KpIndex{2, 4});

    // (d=5, (4,3)) belongs to the eta^4 chi_19 row of the printed table.
    const ConjugationEntry e43 = qudit::closed_form(d5, {4, 3});
    CHECK(e43.phase_exp == 4);
    const ExactMatrix brute = qudit::conjugate_brute(d5, {4, 3});
    CHECK(qudit::eq(brute, qudit::scalar_mul(CycScalar::root_power(d5, e43.phase_exp),
                                             qudit::kronecker_pauli(d5, e43.kp))));
}

TEST_CASE("decompose_phase_kpm") {
    const ExactMatrix w_tau5 = qudit::scalar_mul(CycScalar::root_power(d3, 1),
                                                 qudit::kronecker_pauli(d3, {1, 2}));
    const PhaseKpm got = qudit::decompose_phase_kpm(w_tau5);
    CHECK(got.phase_exp == 1);
    CHECK(got.kp == KpIndex{1, 2});
    const auto oracle = scan_all_candidates(w_tau5);
    REQUIRE(oracle.has_value());
    CHECK(*oracle == got);

    // tau_1 itself decomposes with no phase.
    const PhaseKpm tau1 = qudit::decompose_phase_kpm(from_exponents(d3, kTau[0]));
    CHECK(tau1.phase_exp == 0);
    CHECK(tau1.kp == KpIndex{0, 0});

    // The identity is outside the family: its permutation fixes every point.
    CHECK_THROWS_AS(qudit::decompose_phase_kpm(ExactMatrix::identity(d3, 3)),
                    qudit::NotPhaseKpmError);
    CHECK_FALSE(qudit::try_decompose_phase_kpm(ExactMatrix::identity(d3, 3)).has_value());
    CHECK_FALSE(qudit::try_decompose_phase_kpm(ExactMatrix::identity(d5, 5)).has_value());
}

TEST_CASE("decompose rejects weyl operators") {
    // No U_nm has the involutive support shape; U_10 is the invariant's
    // named non-hermitian witness.
    CHECK_THROWS_AS(qudit::decompose_phase_kpm(qudit::weyl(d3, {1, 0})),
                    qudit::NotPhaseKpmError);
    for (int n = 0; n < 3; ++n) {
        for (int m = 0; m < 3; ++m) {
            CHECK_FALSE(qudit::try_decompose_phase_kpm(qudit::weyl(d3, {n, m})).has_value());
        }
    }
}

TEST_CASE("decompose agrees with the exhaustive scan on random in-family inputs") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 20; ++trial) {
        const Dimension d = (trial % 2 == 0) ? d3 : d5;
        std::uniform_int_distribution<int> pick(0, d.value() - 1);
        const int k = pick(rng), n = pick(rng), m = pick(rng);
        const ExactMatrix input = qudit::scalar_mul(CycScalar::root_power(d, k),
                                                    qudit::kronecker_pauli(d, {n, m}));
        const PhaseKpm got = qudit::decompose_phase_kpm(input);
        CHECK(got.phase_exp == k);
        CHECK(got.kp == KpIndex{n, m});
        const auto oracle = scan_all_candidates(input);
        REQUIRE(oracle.has_value());
        CHECK(*oracle == got);
    }
}

TEST_CASE("decompose rejects near-miss monomials") {
    const ExactMatrix base = qudit::kronecker_pauli(d5, {2, 3});
    int col = -1;
    for (int c = 0; c < 5; ++c) {
        if (!base.at(4, c).is_zero()) col = c;
    }
    REQUIRE(col >= 0);

    // Right support shape, one entry phase off the (k - n)m pattern.
    const CycScalar wrong = base.at(4, col) * CycScalar::root_power(d5, 1);
    CHECK_FALSE(qudit::try_decompose_phase_kpm(base.with_entry(4, col, wrong)).has_value());

    // Non-monomial input: two nonzeros in one row.
    CHECK_FALSE(qudit::try_decompose_phase_kpm(
                    base.with_entry(0, (base.at(0, 0).is_zero() ? 0 : 1), CycScalar::one(d5)))
                    .has_value());

    // Entry that is not a root of unity.
    CHECK_FALSE(qudit::try_decompose_phase_kpm(
                    base.with_entry(4, col, CycScalar(d5, qudit::Rational(2))))
                    .has_value());
}

TEST_CASE("full_table matches the printed d=3 block") {
    const auto table = qudit::full_table(d3);
    const auto map = qudit::paper_index_map(d3);
    REQUIRE(table.size() == 9);
    for (int n = 0; n < 3; ++n) {
        for (int m = 0; m < 3; ++m) {
            const ConjugationEntry& e = table[static_cast<size_t>(n * 3 + m)];
            CHECK(e.weyl == WeylIndex{n, m});
            CHECK(e.phase_exp == kPhase3[n][m]);
            CHECK(map.ell_of(e.kp) == kEll3[n][m]);
        }
    }
}

TEST_CASE("full_table matches the printed d=5 block") {
    const auto table = qudit::full_table(d5);
    const auto map = qudit::paper_index_map(d5);
    REQUIRE(table.size() == 25);
    for (int n = 0; n < 5; ++n) {
        for (int m = 0; m < 5; ++m) {
            const ConjugationEntry& e = table[static_cast<size_t>(n * 5 + m)];
            CHECK(e.phase_exp == kPhase5[n][m]);
            CHECK(map.ell_of(e.kp) == kEll5[n][m]);
        }
    }
}

TEST_CASE("full_table self-verifies at d=7") {
    const auto table = qudit::full_table(d7);
    CHECK(table.size() == 49);
}

TEST_CASE("roundtrip: decompose(conjugate_brute) equals closed_form") {
    for (int p : {3, 5, 7}) {
        const Dimension d(p);
        for (int n = 0; n < p; ++n) {
            for (int m = 0; m < p; ++m) {
                const PhaseKpm got = qudit::decompose_phase_kpm(qudit::conjugate_brute(d, {n, m}));
                const ConjugationEntry cf = qudit::closed_form(d, {n, m});
                CHECK(got.phase_exp == cf.phase_exp);
                CHECK(got.kp == cf.kp);
            }
        }
    }
}

TEST_CASE("kp coverage is a bijection") {
    for (int p : {3, 5, 7, 11}) {
        const Dimension d(p);
        const auto table = qudit::full_table(d);
        std::vector<bool> seen(static_cast<size_t>(p) * static_cast<size_t>(p), false);
        for (const ConjugationEntry& e : table) {
            const size_t flat = static_cast<size_t>(e.kp.n) * static_cast<size_t>(p) +
                                static_cast<size_t>(e.kp.m);
            CHECK_FALSE(seen[flat]);
            seen[flat] = true;
        }
    }
}

TEST_CASE("phase structure of the table") {
    for (int p : {3, 5, 7, 11}) {
        const Dimension d(p);
        const auto table = qudit::full_table(d);
        auto phase = [&](int n, int m) {
            return table[static_cast<size_t>(n * p + m)].phase_exp;
        };
        for (int n = 0; n < p; ++n) {
            CHECK(phase(n, 0) == 0);
            CHECK(phase(0, n) == 0);
            for (int m = 1; m < p; ++m) {
                CHECK((phase(n, m) + phase(n, p - m)) % p == 0);
            }
        }
    }
}

TEST_CASE("paper index map: tau ordering recovered from the printed matrices") {
    const auto map = qudit::paper_index_map(d3);
    CHECK(map.from_paper_fixture);
    REQUIRE(map.entries.size() == 9);
    CHECK(map.kp_of(5) == KpIndex{1, 2});
    CHECK(map.kp_of(1) == KpIndex{0, 0});

    // Every printed tau matrix must equal the constructed operator at the
    // fixture's index pair, and the brute-force scan must agree that the
    // match is unique.
    for (int ell = 1; ell <= 9; ++ell) {
        const ExactMatrix printed = from_exponents(d3, kTau[static_cast<size_t>(ell - 1)]);
        int matches = 0;
        KpIndex found{-1, -1};
        for (int n = 0; n < 3; ++n) {
            for (int m = 0; m < 3; ++m) {
                if (qudit::eq(qudit::kronecker_pauli(d3, {n, m}), printed)) {
                    found = KpIndex{n, m};
                    ++matches;
                }
            }
        }
        REQUIRE(matches == 1);
        CHECK(found == map.kp_of(ell));
        CHECK(map.ell_of(found) == ell);
    }
}

TEST_CASE("paper index map: chi ordering consistent with the printed table") {
    const auto map = qudit::paper_index_map(d5);
    CHECK(map.from_paper_fixture);
    REQUIRE(map.entries.size() == 25);
    CHECK(map.kp_of(12) == KpIndex{2, 4});
    // The reconstruction is pinned by the closed form: the pair reached by
    // U_nm must sit at the printed table's ell slot.
    for (int n = 0; n < 5; ++n) {
        for (int m = 0; m < 5; ++m) {
            const ConjugationEntry e = qudit::closed_form(d5, {n, m});
            CHECK(map.kp_of(kEll5[n][m]) == e.kp);
        }
    }
}

TEST_CASE("paper index map: canonical fallback") {
    const auto map = qudit::paper_index_map(d7);
    CHECK_FALSE(map.from_paper_fixture);
    REQUIRE(map.entries.size() == 49);
    for (int n = 0; n < 7; ++n) {
        for (int m = 0; m < 7; ++m) {
            CHECK(map.kp_of(n * 7 + m + 1) == KpIndex{n, m});
        }
    }
    CHECK_THROWS_AS(map.kp_of(0), std::out_of_range);
    CHECK_THROWS_AS(map.kp_of(50), std::out_of_range);
}
