#include "qudit/operators.hpp"

#include <string>
#include <utility>

namespace qudit {

namespace detail {

// The matrix kernels below accumulate straight into entry coefficients and
// restore the canonical form afterwards; nothing else touches scalars this
// way.
struct ScalarAccess {
    static std::vector<Rational>& coeffs(CycScalar& s) { return s.coeffs_; }
    static void canonicalize(CycScalar& s) { s.canonicalize(); }
};

}  // namespace detail

namespace {

int mod(int value, int d) {
    int r = value % d;
    return r < 0 ? r + d : r;
}

void require_same_dim(const ExactMatrix& a, const ExactMatrix& b) {
    if (!(a.dim() == b.dim())) {
        throw DimensionMismatchError("matrices of dimension " + std::to_string(a.dim().value()) +
                                     " and " + std::to_string(b.dim().value()) +
                                     " do not interoperate");
    }
}

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_dim(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeMismatchError("matrix shapes " + std::to_string(a.rows()) + "x" +
                                 std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                 "x" + std::to_string(b.cols()) + " differ");
    }
}

size_t checked_entry_count(int rows, int cols) {
    if (rows <= 0 || cols <= 0) throw ShapeMismatchError("matrix shape must be positive");
    return static_cast<size_t>(rows) * static_cast<size_t>(cols);
}

}  // namespace

ExactMatrix::ExactMatrix(Dimension d, int rows, int cols, int sqrt_d_exp)
    : d_(d),
      rows_(rows),
      cols_(cols),
      sqrt_d_exp_(sqrt_d_exp),
      entries_(checked_entry_count(rows, cols), CycScalar(d)) {
    if (sqrt_d_exp < 0) throw std::invalid_argument("sqrt_d_exp must be non-negative");
    normalize_scale();
}

ExactMatrix::ExactMatrix(Raw, Dimension d, int rows, int cols, int sqrt_d_exp,
                         std::vector<CycScalar> entries)
    : d_(d), rows_(rows), cols_(cols), sqrt_d_exp_(sqrt_d_exp), entries_(std::move(entries)) {
    normalize_scale();
}

ExactMatrix ExactMatrix::identity(Dimension d, int size) {
    ExactMatrix out(d, size, size);
    for (int i = 0; i < size; ++i) out.set_entry(i, i, CycScalar::one(d));
    return out;
}

const CycScalar& ExactMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw std::out_of_range("matrix index out of range");
    }
    return entries_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
}

void ExactMatrix::set_entry(int r, int c, CycScalar value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw std::out_of_range("matrix index out of range");
    }
    if (value.dim() != d_.value()) {
        throw DimensionMismatchError("entry dimension does not match matrix dimension");
    }
    entries_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)] =
        std::move(value);
}

ExactMatrix ExactMatrix::with_entry(int r, int c, CycScalar value) const {
    ExactMatrix out = *this;
    out.set_entry(r, c, std::move(value));
    return out;
}

void ExactMatrix::normalize_scale() {
    while (sqrt_d_exp_ >= 2) {
        const CycScalar inv_d(d_, Rational(1, d_.value()));
        for (CycScalar& e : entries_) e *= inv_d;
        sqrt_d_exp_ -= 2;
    }
}

ExactMatrix chrestenson(Dimension d) {
    const int n = d.value();
    ExactMatrix out(d, n, n, 1);
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            out.set_entry(y, x, CycScalar::root_power(d, static_cast<long>(x) * y));
        }
    }
    return out;
}

ExactMatrix weyl(Dimension d, WeylIndex idx) {
    const int n = d.value();
    const int wn = mod(idx.n, n);
    const int wm = mod(idx.m, n);
    ExactMatrix out(d, n, n);
    for (int k = 0; k < n; ++k) {
        out.set_entry(k, mod(k + wm, n), CycScalar::root_power(d, static_cast<long>(k) * wn));
    }
    return out;
}

ExactMatrix kronecker_pauli(Dimension d, KpIndex idx) {
    const int n = d.value();
    const int pn = mod(idx.n, n);
    const int pm = mod(idx.m, n);
    ExactMatrix out(d, n, n);
    for (int k = 0; k < n; ++k) {
        out.set_entry(k, mod(-k + 2 * pn, n),
                      CycScalar::root_power(d, static_cast<long>(k - pn) * pm));
    }
    return out;
}

namespace {

// Indices of the nonzero coefficients of every entry; most operator entries
// are single monomials, so walking these lists instead of full coefficient
// vectors is what keeps d=31 products fast.
std::vector<std::vector<int>> nonzero_terms(const ExactMatrix& m) {
    const int d = m.dim().value();
    std::vector<std::vector<int>> terms(static_cast<size_t>(m.rows()) *
                                        static_cast<size_t>(m.cols()));
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            auto& list = terms[static_cast<size_t>(r) * static_cast<size_t>(m.cols()) +
                               static_cast<size_t>(c)];
            const auto& coeffs = m.at(r, c).coeffs();
            for (int i = 0; i < d; ++i) {
                if (coeffs[static_cast<size_t>(i)] != 0) list.push_back(i);
            }
        }
    }
    return terms;
}

}  // namespace

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_dim(a, b);
    if (a.cols() != b.rows()) {
        throw ShapeMismatchError("inner dimensions " + std::to_string(a.cols()) + " and " +
                                 std::to_string(b.rows()) + " differ");
    }
    const int d = a.dim().value();
    const auto terms_a = nonzero_terms(a);
    const auto terms_b = nonzero_terms(b);
    ExactMatrix out(a.dim(), a.rows(), b.cols(), 0);
    mpq_t prod;
    mpq_init(prod);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < b.cols(); ++c) {
            CycScalar& entry =
                out.entries_[static_cast<size_t>(r) * static_cast<size_t>(b.cols()) +
                             static_cast<size_t>(c)];
            auto& acc = detail::ScalarAccess::coeffs(entry);
            for (int k = 0; k < a.cols(); ++k) {
                const auto& ta = terms_a[static_cast<size_t>(r) * static_cast<size_t>(a.cols()) +
                                         static_cast<size_t>(k)];
                if (ta.empty()) continue;
                const auto& tb = terms_b[static_cast<size_t>(k) * static_cast<size_t>(b.cols()) +
                                         static_cast<size_t>(c)];
                if (tb.empty()) continue;
                const auto& x = a.at(r, k).coeffs();
                const auto& y = b.at(k, c).coeffs();
                for (int i : ta) {
                    const Rational& xi = x[static_cast<size_t>(i)];
                    const bool xi_one = (xi == 1);
                    const bool xi_minus_one = !xi_one && (xi == -1);
                    for (int j : tb) {
                        const Rational& yj = y[static_cast<size_t>(j)];
                        Rational& dst = acc[static_cast<size_t>((i + j) % d)];
                        if (xi_one) {
                            dst += yj;
                        } else if (xi_minus_one) {
                            dst -= yj;
                        } else {
                            mpq_mul(prod, xi.get_mpq_t(), yj.get_mpq_t());
                            mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), prod);
                        }
                    }
                }
            }
            detail::ScalarAccess::canonicalize(entry);
        }
    }
    mpq_clear(prod);
    out.sqrt_d_exp_ = a.sqrt_d_exp() + b.sqrt_d_exp();
    out.normalize_scale();
    return out;
}

ExactMatrix adjoint(const ExactMatrix& a) {
    ExactMatrix out(a.dim(), a.cols(), a.rows(), a.sqrt_d_exp());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            out.set_entry(c, r, a.at(r, c).conj());
        }
    }
    return out;
}

TraceResult trace(const ExactMatrix& a) {
    if (a.rows() != a.cols()) throw ShapeMismatchError("trace requires a square matrix");
    CycScalar sum(a.dim());
    for (int i = 0; i < a.rows(); ++i) sum += a.at(i, i);
    return TraceResult{std::move(sum), a.sqrt_d_exp()};
}

ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_dim(a, b);
    ExactMatrix out(a.dim(), a.rows() * b.rows(), a.cols() * b.cols(),
                    a.sqrt_d_exp() + b.sqrt_d_exp());
    for (int i1 = 0; i1 < a.rows(); ++i1) {
        for (int j1 = 0; j1 < a.cols(); ++j1) {
            const CycScalar& left = a.at(i1, j1);
            if (left.is_zero()) continue;
            for (int i2 = 0; i2 < b.rows(); ++i2) {
                for (int j2 = 0; j2 < b.cols(); ++j2) {
                    const CycScalar& right = b.at(i2, j2);
                    if (right.is_zero()) continue;
                    out.set_entry(i1 * b.rows() + i2, j1 * b.cols() + j2, left * right);
                }
            }
        }
    }
    return out;
}

CycScalar hs_inner(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_shape(a, b);
    if (a.sqrt_d_exp() != 0 || b.sqrt_d_exp() != 0) {
        throw IncomparableScaleError("hs_inner requires sqrt_d_exp = 0 on both operands");
    }
    // Tr(a^dagger b) = sum_{j,i} conj(a(j,i)) * b(j,i); no product matrix needed.
    CycScalar sum(a.dim());
    for (int j = 0; j < a.rows(); ++j) {
        for (int i = 0; i < a.cols(); ++i) {
            const CycScalar& x = a.at(j, i);
            if (x.is_zero()) continue;
            const CycScalar& y = b.at(j, i);
            if (y.is_zero()) continue;
            sum += x.conj() * y;
        }
    }
    return sum;
}

ExactMatrix swap_direct(Dimension d) {
    const int n = d.value();
    ExactMatrix out(d, n * n, n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out.set_entry(i * n + j, j * n + i, CycScalar::one(d));
        }
    }
    return out;
}

ExactMatrix scalar_mul(const CycScalar& c, const ExactMatrix& a) {
    if (c.dim() != a.dim().value()) {
        throw DimensionMismatchError("scalar dimension does not match matrix dimension");
    }
    std::vector<CycScalar> entries;
    entries.reserve(static_cast<size_t>(a.rows()) * static_cast<size_t>(a.cols()));
    for (int r = 0; r < a.rows(); ++r) {
        for (int col = 0; col < a.cols(); ++col) {
            entries.push_back(c * a.at(r, col));
        }
    }
    return ExactMatrix(ExactMatrix::Raw{}, a.dim(), a.rows(), a.cols(), a.sqrt_d_exp(),
                       std::move(entries));
}

ExactMatrix add(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_shape(a, b);
    if (a.sqrt_d_exp() != b.sqrt_d_exp()) {
        throw IncomparableScaleError("cannot add matrices with different sqrt_d_exp");
    }
    ExactMatrix out = a;
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            out.set_entry(r, c, a.at(r, c) + b.at(r, c));
        }
    }
    return out;
}

ExactMatrix sub(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_shape(a, b);
    if (a.sqrt_d_exp() != b.sqrt_d_exp()) {
        throw IncomparableScaleError("cannot subtract matrices with different sqrt_d_exp");
    }
    ExactMatrix out = a;
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            out.set_entry(r, c, a.at(r, c) - b.at(r, c));
        }
    }
    return out;
}

bool eq(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_shape(a, b);
    if (a.sqrt_d_exp() != b.sqrt_d_exp()) {
        throw IncomparableScaleError(
            "matrices with sqrt_d_exp " + std::to_string(a.sqrt_d_exp()) + " and " +
            std::to_string(b.sqrt_d_exp()) + " are incomparable after normalization");
    }
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            if (a.at(r, c) != b.at(r, c)) return false;
        }
    }
    return true;
}

}  // namespace qudit
