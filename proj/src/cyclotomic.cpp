#include "qudit/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace qudit {

bool Dimension::is_valid(int d) {
    if (d <= 2 || d % 2 == 0) return false;
    for (int f = 3; f * f <= d; f += 2) {
        if (d % f == 0) return false;
    }
    return true;
}

Dimension::Dimension(int d) : d_(d) {
    if (!is_valid(d)) {
        throw std::invalid_argument("dimension must be a prime integer greater than 2, got " +
                                    std::to_string(d));
    }
}

CycScalar::CycScalar(Dimension d) : d_(d.value()), coeffs_(static_cast<size_t>(d.value()), Rational(0)) {}

CycScalar::CycScalar(Dimension d, const Rational& constant) : CycScalar(d) {
    coeffs_[0] = constant;
}

CycScalar::CycScalar(Dimension d, std::vector<Rational> coeffs) : d_(d.value()), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<size_t>(d_)) {
        throw std::invalid_argument("coefficient vector must have length d");
    }
    canonicalize();
}

CycScalar CycScalar::root_power(Dimension d, long exponent) {
    CycScalar out(d);
    long r = exponent % d.value();
    if (r < 0) r += d.value();
    out.coeffs_[static_cast<size_t>(r)] = 1;
    out.canonicalize();
    return out;
}

CycScalar CycScalar::one(Dimension d) {
    return CycScalar(d, Rational(1));
}

void CycScalar::canonicalize() {
    Rational& last = coeffs_[static_cast<size_t>(d_ - 1)];
    if (last != 0) {
        const Rational shift = last;
        for (Rational& c : coeffs_) c -= shift;
    }
}

void CycScalar::require_same_dim(const CycScalar& other) const {
    if (d_ != other.d_) {
        throw DimensionMismatchError("cyclotomic scalars of dimension " + std::to_string(d_) +
                                     " and " + std::to_string(other.d_) + " do not interoperate");
    }
}

CycScalar CycScalar::conj() const {
    CycScalar out{Dimension(d_)};
    out.coeffs_[0] = coeffs_[0];
    for (int i = 1; i < d_; ++i) {
        out.coeffs_[static_cast<size_t>(d_ - i)] = coeffs_[static_cast<size_t>(i)];
    }
    out.canonicalize();
    return out;
}

bool CycScalar::is_zero() const {
    for (const Rational& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

std::complex<double> CycScalar::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    for (int i = 0; i < d_; ++i) {
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(d_);
        acc += c.get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

CycScalar CycScalar::operator-() const {
    CycScalar out = *this;
    for (Rational& c : out.coeffs_) c = -c;
    return out;
}

CycScalar& CycScalar::operator+=(const CycScalar& rhs) {
    require_same_dim(rhs);
    for (int i = 0; i < d_; ++i) coeffs_[static_cast<size_t>(i)] += rhs.coeffs_[static_cast<size_t>(i)];
    canonicalize();
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& rhs) {
    require_same_dim(rhs);
    for (int i = 0; i < d_; ++i) coeffs_[static_cast<size_t>(i)] -= rhs.coeffs_[static_cast<size_t>(i)];
    canonicalize();
    return *this;
}

CycScalar operator*(const CycScalar& lhs, const CycScalar& rhs) {
    lhs.require_same_dim(rhs);
    const int d = lhs.d_;
    std::vector<Rational> acc(static_cast<size_t>(d), Rational(0));
    for (int i = 0; i < d; ++i) {
        const Rational& a = lhs.coeffs_[static_cast<size_t>(i)];
        if (a == 0) continue;
        for (int j = 0; j < d; ++j) {
            const Rational& b = rhs.coeffs_[static_cast<size_t>(j)];
            if (b == 0) continue;
            acc[static_cast<size_t>((i + j) % d)] += a * b;
        }
    }
    return CycScalar(Dimension(d), std::move(acc));
}

CycScalar& CycScalar::operator*=(const CycScalar& rhs) {
    *this = *this * rhs;
    return *this;
}

bool operator==(const CycScalar& lhs, const CycScalar& rhs) {
    lhs.require_same_dim(rhs);
    return lhs.coeffs_ == rhs.coeffs_;
}

}  // namespace qudit
