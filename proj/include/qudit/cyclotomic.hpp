#ifndef QUDIT_CYCLOTOMIC_HPP
#define QUDIT_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <complex>
#include <vector>

#include "qudit/errors.hpp"

namespace qudit {

using Rational = mpq_class;

namespace detail {
struct ScalarAccess;  // matrix kernels accumulate into coefficients in place
}

// Hilbert-space dimension. Only odd primes are representable; everything
// downstream relies on d being an odd prime (2 has an inverse mod d, the
// minimal polynomial of w_d is 1 + w + ... + w^{d-1}, ...).
class Dimension {
public:
    explicit Dimension(int d);

    int value() const { return d_; }

    // Deterministic trial division; no probabilistic primality here.
    static bool is_valid(int d);

    friend bool operator==(const Dimension&, const Dimension&) = default;

private:
    int d_;
};

// An element of the cyclotomic field Q(w_d), w_d = exp(2*pi*i/d), stored as
// rational coefficients of 1, w, ..., w^{d-1}. The representation is
// redundant (1 + w + ... + w^{d-1} = 0); canonical form pins the last
// coefficient to zero by subtracting it from all of them, after which
// equality is a plain coefficient comparison.
class CycScalar {
public:
    explicit CycScalar(Dimension d);                       // zero
    CycScalar(Dimension d, const Rational& constant);
    CycScalar(Dimension d, std::vector<Rational> coeffs);  // canonicalizes

    // w^(e mod d); e may be any integer.
    static CycScalar root_power(Dimension d, long exponent);
    static CycScalar one(Dimension d);

    int dim() const { return d_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Complex conjugate: the index permutation w^i -> w^{(d-i) mod d}.
    CycScalar conj() const;

    bool is_zero() const;

    // Double-precision evaluation at w = exp(2*pi*i/d). Cross-check only,
    // never part of an exactness argument.
    std::complex<double> to_complex() const;

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& rhs);
    CycScalar& operator-=(const CycScalar& rhs);
    CycScalar& operator*=(const CycScalar& rhs);
    friend CycScalar operator+(CycScalar lhs, const CycScalar& rhs) { return lhs += rhs; }
    friend CycScalar operator-(CycScalar lhs, const CycScalar& rhs) { return lhs -= rhs; }
    friend CycScalar operator*(const CycScalar& lhs, const CycScalar& rhs);

    // Throws DimensionMismatchError when the fields differ; values from
    // different Q(w_d) never silently compare unequal.
    friend bool operator==(const CycScalar& lhs, const CycScalar& rhs);
    friend bool operator!=(const CycScalar& lhs, const CycScalar& rhs) { return !(lhs == rhs); }

private:
    void canonicalize();
    void require_same_dim(const CycScalar& other) const;

    friend struct detail::ScalarAccess;

    int d_;
    std::vector<Rational> coeffs_;
};

}  // namespace qudit

#endif
