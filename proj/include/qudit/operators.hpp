#ifndef QUDIT_OPERATORS_HPP
#define QUDIT_OPERATORS_HPP

#include <vector>

#include "qudit/cyclotomic.hpp"

namespace qudit {

// Index pair (n, m) of a Weyl operator U_nm. Reduced mod d at construction
// sites; the pair itself does not carry d.
struct WeylIndex {
    int n = 0;
    int m = 0;
    friend bool operator==(const WeylIndex&, const WeylIndex&) = default;
};

// Index pair (n, m) of a Kronecker-Pauli operator Pi_nm.
struct KpIndex {
    int n = 0;
    int m = 0;
    friend bool operator==(const KpIndex&, const KpIndex&) = default;
};

// Exact trace together with the matrix's sqrt-d exponent. The scalar is the
// trace of the stored entries; the represented trace is value * d^{-s/2}.
struct TraceResult {
    CycScalar value;
    int sqrt_d_exp;
};

// Dense matrix over Q(w_d) with an explicit d^{-s/2} prefactor, so the
// represented matrix is entries * d^{-s/2}. The exponent s is normalized
// into {0, 1}: each even power of 1/sqrt(d) is folded into the entries as a
// rational factor 1/d. sqrt(d) itself never needs to live in the field.
class ExactMatrix {
public:
    ExactMatrix(Dimension d, int rows, int cols, int sqrt_d_exp = 0);  // zero-filled

    static ExactMatrix identity(Dimension d, int size);

    Dimension dim() const { return d_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int sqrt_d_exp() const { return sqrt_d_exp_; }

    const CycScalar& at(int r, int c) const;
    void set_entry(int r, int c, CycScalar value);

    // Copy with one entry replaced; keeps call sites pure.
    ExactMatrix with_entry(int r, int c, CycScalar value) const;

private:
    struct Raw {};
    ExactMatrix(Raw, Dimension d, int rows, int cols, int sqrt_d_exp,
                std::vector<CycScalar> entries);

    void normalize_scale();

    Dimension d_;
    int rows_;
    int cols_;
    int sqrt_d_exp_;
    std::vector<CycScalar> entries_;  // row-major

    friend ExactMatrix matmul(const ExactMatrix&, const ExactMatrix&);
    friend ExactMatrix scalar_mul(const CycScalar&, const ExactMatrix&);
};

// The three operator families.
//
// chrestenson:     C(y, x) = w^{xy}, carrying one power of 1/sqrt(d).
// weyl:            U_nm    = sum_k w^{kn} |k><(k+m) mod d|.
// kronecker_pauli: Pi_nm   = sum_k w^{(k-n)m} |k><(-k+2n) mod d|.
ExactMatrix chrestenson(Dimension d);
ExactMatrix weyl(Dimension d, WeylIndex idx);
ExactMatrix kronecker_pauli(Dimension d, KpIndex idx);

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix adjoint(const ExactMatrix& a);
TraceResult trace(const ExactMatrix& a);

// Kronecker product, row-major blocks: the first factor is the high-order
// digit, entry ((i1*d + i2), (j1*d + j2)) = a(i1, j1) * b(i2, j2).
ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b);

// Tr(a^dagger b). Both operands must have sqrt_d_exp = 0.
CycScalar hs_inner(const ExactMatrix& a, const ExactMatrix& b);

// The d^2 x d^2 operator sum_{i,j} |i,j><j,i| under the tensor convention
// above.
ExactMatrix swap_direct(Dimension d);

ExactMatrix scalar_mul(const CycScalar& c, const ExactMatrix& a);
ExactMatrix add(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix sub(const ExactMatrix& a, const ExactMatrix& b);

// Entrywise equality of canonical forms. Matrices whose sqrt-d exponents
// differ after normalization are incomparable and raise
// IncomparableScaleError instead of returning false.
bool eq(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace qudit

#endif
