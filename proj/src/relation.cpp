#include "qudit/relation.hpp"

#include <map>
#include <string>

namespace qudit {

namespace {

int mod(int value, int d) {
    int r = value % d;
    return r < 0 ? r + d : r;
}

// One Chrestenson matrix per dimension; table-scale callers conjugate d^2
// operators against the same C_d.
const ExactMatrix& cached_chrestenson(Dimension d) {
    thread_local std::map<int, ExactMatrix> cache;
    auto it = cache.find(d.value());
    if (it == cache.end()) it = cache.emplace(d.value(), chrestenson(d)).first;
    return it->second;
}

// Exponent e with scalar == w^e, if the scalar is a plain root of unity.
std::optional<int> root_exponent(const CycScalar& s) {
    const Dimension d(s.dim());
    for (int e = 0; e < d.value(); ++e) {
        if (s == CycScalar::root_power(d, e)) return e;
    }
    return std::nullopt;
}

}  // namespace

ExactMatrix conjugate_brute(Dimension d, WeylIndex idx) {
    const ExactMatrix& c = cached_chrestenson(d);
    return matmul(c, matmul(weyl(d, idx), c));
}

ConjugationEntry closed_form(Dimension d, WeylIndex idx) {
    const int p = d.value();
    const int n = mod(idx.n, p);
    const int m = mod(idx.m, p);
    const int inv2 = (p + 1) / 2;  // 2 * (d+1)/2 = d + 1 = 1 mod d
    ConjugationEntry out;
    out.weyl = WeylIndex{n, m};
    out.phase_exp = mod(-((n * m) % p) * inv2, p);
    out.kp = KpIndex{mod(-n * inv2, p), mod(-m, p)};
    return out;
}

std::optional<PhaseKpm> try_decompose_phase_kpm(const ExactMatrix& m) {
    if (m.rows() != m.cols() || m.sqrt_d_exp() != 0) return std::nullopt;
    const Dimension dim = m.dim();
    const int d = dim.value();
    if (m.rows() != d) return std::nullopt;

    // Support must be a permutation with exactly one nonzero per row.
    std::vector<int> col_of(static_cast<size_t>(d), -1);
    std::vector<bool> col_used(static_cast<size_t>(d), false);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            if (m.at(r, c).is_zero()) continue;
            if (col_of[static_cast<size_t>(r)] != -1) return std::nullopt;
            col_of[static_cast<size_t>(r)] = c;
        }
        const int c = col_of[static_cast<size_t>(r)];
        if (c == -1 || col_used[static_cast<size_t>(c)]) return std::nullopt;
        col_used[static_cast<size_t>(c)] = true;
    }

    // col = (-row + 2n') mod d must hold with one n' for every row.
    const int inv2 = (d + 1) / 2;
    const int n = mod(inv2 * col_of[0], d);
    for (int r = 0; r < d; ++r) {
        if (col_of[static_cast<size_t>(r)] != mod(-r + 2 * n, d)) return std::nullopt;
    }

    // Entry at the fixed point row n is w^k; row n+1 then yields m'.
    const auto k = root_exponent(m.at(n, n));
    if (!k) return std::nullopt;
    const int r1 = mod(n + 1, d);
    const auto e1 = root_exponent(m.at(r1, col_of[static_cast<size_t>(r1)]));
    if (!e1) return std::nullopt;
    const int mm = mod(*e1 - *k, d);  // (r1 - n) = 1, so m' = e1 - k

    // Re-verify every entry against w^{k + (r - n) m'}.
    for (int r = 0; r < d; ++r) {
        const CycScalar expected = CycScalar::root_power(dim, *k + static_cast<long>(r - n) * mm);
        if (m.at(r, col_of[static_cast<size_t>(r)]) != expected) return std::nullopt;
    }
    return PhaseKpm{*k, KpIndex{n, mm}};
}

PhaseKpm decompose_phase_kpm(const ExactMatrix& m) {
    auto result = try_decompose_phase_kpm(m);
    if (!result) {
        throw NotPhaseKpmError("matrix is not a root-of-unity multiple of any Kronecker-Pauli operator");
    }
    return *result;
}

std::vector<ConjugationEntry> full_table(Dimension d) {
    const int p = d.value();
    std::vector<ConjugationEntry> out;
    out.reserve(static_cast<size_t>(p) * static_cast<size_t>(p));
    std::vector<bool> kp_seen(static_cast<size_t>(p) * static_cast<size_t>(p), false);
    for (int n = 0; n < p; ++n) {
        for (int m = 0; m < p; ++m) {
            const ConjugationEntry entry = closed_form(d, WeylIndex{n, m});
            const ExactMatrix brute = conjugate_brute(d, WeylIndex{n, m});
            const ExactMatrix predicted = scalar_mul(CycScalar::root_power(d, entry.phase_exp),
                                                     kronecker_pauli(d, entry.kp));
            if (!eq(brute, predicted)) {
                throw InternalConsistencyError(
                    "closed form disagrees with brute-force conjugation at (n,m) = (" +
                    std::to_string(n) + "," + std::to_string(m) + ")");
            }
            const PhaseKpm decomposed = decompose_phase_kpm(brute);
            if (decomposed.phase_exp != entry.phase_exp || !(decomposed.kp == entry.kp)) {
                throw InternalConsistencyError(
                    "decomposition disagrees with closed form at (n,m) = (" + std::to_string(n) +
                    "," + std::to_string(m) + ")");
            }
            const size_t flat = static_cast<size_t>(entry.kp.n) * static_cast<size_t>(p) +
                                static_cast<size_t>(entry.kp.m);
            if (kp_seen[flat]) {
                throw InternalConsistencyError("conjugation table revisits Pi(" +
                                               std::to_string(entry.kp.n) + "," +
                                               std::to_string(entry.kp.m) + ")");
            }
            kp_seen[flat] = true;
            out.push_back(entry);
        }
    }
    return out;
}

KpIndex PaperIndexMap::kp_of(int ell) const {
    if (ell < 1 || ell > static_cast<int>(entries.size())) {
        throw std::out_of_range("ell must lie in 1..d^2");
    }
    return entries[static_cast<size_t>(ell - 1)];
}

int PaperIndexMap::ell_of(KpIndex kp) const {
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] == kp) return static_cast<int>(i) + 1;
    }
    throw std::out_of_range("index pair not present in the map");
}

namespace {

// tau_ell -> (n, m), recovered once by matching kronecker_pauli output
// against the nine printed 3x3 matrices (the unit test redoes the match).
constexpr KpIndex kTauOrder[9] = {
    {0, 0}, {0, 1}, {0, 2},
    {1, 0}, {1, 2}, {1, 1},
    {2, 0}, {2, 1}, {2, 2},
};

// chi_ell -> (n, m) for d=5. The chi matrices live in an external
// reference; this ordering is reconstructed from the printed d=5 phase
// table combined with the closed-form map, so it is a reconstruction, not
// a transcription.
constexpr KpIndex kChiOrder[25] = {
    {0, 0}, {0, 4}, {0, 3}, {0, 2}, {0, 1},
    {1, 0}, {1, 4}, {1, 3}, {1, 2}, {1, 1},
    {2, 0}, {2, 4}, {2, 3}, {2, 2}, {2, 1},
    {3, 0}, {3, 4}, {3, 3}, {3, 2}, {3, 1},
    {4, 0}, {4, 4}, {4, 3}, {4, 2}, {4, 1},
};

}  // namespace

PaperIndexMap paper_index_map(Dimension d) {
    PaperIndexMap out{d, {}, false};
    const int p = d.value();
    if (p == 3) {
        out.entries.assign(std::begin(kTauOrder), std::end(kTauOrder));
        out.from_paper_fixture = true;
    } else if (p == 5) {
        out.entries.assign(std::begin(kChiOrder), std::end(kChiOrder));
        out.from_paper_fixture = true;
    } else {
        out.entries.reserve(static_cast<size_t>(p) * static_cast<size_t>(p));
        for (int n = 0; n < p; ++n) {
            for (int m = 0; m < p; ++m) out.entries.push_back(KpIndex{n, m});
        }
    }
    return out;
}

}  // namespace qudit
