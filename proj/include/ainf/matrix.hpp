#ifndef AINF_MATRIX_HPP
#define AINF_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ainf/fp.hpp"

namespace ainf {

namespace detail {
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer addition overflow");
    return r;
}
inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer multiplication overflow");
    return r;
}
}  // namespace detail

// Dense integer matrix with exact, overflow-checked arithmetic. All integral
// computations in this project keep entries small (bounded by modest powers
// of p), so 64-bit machine integers suffice; overflow still aborts loudly.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    long long& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    long long at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (long long v : a_)
            if (v != 0) return false;
        return true;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        require_same_shape(o);
        IntMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = detail::checked_add(a_[i], o.a_[i]);
        return r;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        require_same_shape(o);
        IntMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = detail::checked_add(a_[i], -o.a_[i]);
        return r;
    }

    IntMatrix scaled(long long c) const {
        IntMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = detail::checked_mul(a_[i], c);
        return r;
    }

  private:
    void require_same_shape(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("IntMatrix: shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<long long> a_;
};

inline IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    IntMatrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            long long aik = A.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                C.at(i, j) = detail::checked_add(C.at(i, j), detail::checked_mul(aik, B.at(k, j)));
        }
    return C;
}

// Dense matrix over F_p, entries canonical in [0, p-1].
class FpMatrix {
  public:
    FpMatrix(PrimeField F, std::size_t rows, std::size_t cols)
        : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FpMatrix identity(PrimeField F, std::size_t n) {
        FpMatrix m(F, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    const PrimeField& field() const { return F_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    long long at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, long long v) { a_[i * cols_ + j] = F_.reduce(v); }

    bool operator==(const FpMatrix& o) const {
        return F_.p == o.F_.p && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const FpMatrix& o) const { return !(*this == o); }

    std::vector<long long> row(std::size_t i) const {
        return std::vector<long long>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    std::vector<long long> col(std::size_t j) const {
        std::vector<long long> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

  private:
    PrimeField F_;
    std::size_t rows_, cols_;
    std::vector<long long> a_;
};

inline FpMatrix reduce_mod_p(const IntMatrix& A, PrimeField F) {
    FpMatrix R(F, A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) R.set(i, j, F.reduce(A.at(i, j)));
    return R;
}

inline FpMatrix mat_mul(const FpMatrix& A, const FpMatrix& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    if (A.field().p != B.field().p) throw std::invalid_argument("mat_mul: field mismatch");
    const PrimeField& F = A.field();
    FpMatrix C(F, A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) {
            long long s = 0;
            for (std::size_t k = 0; k < A.cols(); ++k) s += A.at(i, k) * B.at(k, j);
            C.set(i, j, F.reduce(s));
        }
    return C;
}

namespace detail {

// Row echelon working form used by rank / kernel computations.
struct Echelon {
    std::vector<std::vector<long long>> rows;   // reduced rows, pivot normalized to 1
    std::vector<std::size_t> pivot_col;         // pivot column of each row
};

inline Echelon echelonize(const FpMatrix& A) {
    const PrimeField& F = A.field();
    Echelon e;
    std::vector<std::vector<long long>> work;
    work.reserve(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) work.push_back(A.row(i));
    std::size_t lead = 0;
    for (std::size_t c = 0; c < A.cols() && lead < work.size(); ++c) {
        std::size_t piv = lead;
        while (piv < work.size() && work[piv][c] == 0) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[lead], work[piv]);
        long long inv = F.inv(work[lead][c]);
        for (std::size_t j = c; j < A.cols(); ++j) work[lead][j] = F.mul(work[lead][j], inv);
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == lead || work[i][c] == 0) continue;
            long long f = work[i][c];
            for (std::size_t j = c; j < A.cols(); ++j)
                work[i][j] = F.sub(work[i][j], F.mul(f, work[lead][j]));
        }
        e.pivot_col.push_back(c);
        ++lead;
    }
    work.resize(e.pivot_col.size());
    e.rows = std::move(work);
    return e;
}

}  // namespace detail

inline std::size_t rank(const FpMatrix& A) { return detail::echelonize(A).pivot_col.size(); }

// Basis of the column kernel {v : A v = 0}.
inline std::vector<std::vector<long long>> kernel_basis(const FpMatrix& A) {
    const PrimeField& F = A.field();
    detail::Echelon e = detail::echelonize(A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (std::size_t c : e.pivot_col) is_pivot[c] = true;
    std::vector<std::vector<long long>> basis;
    for (std::size_t free = 0; free < A.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<long long> v(A.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r)
            v[e.pivot_col[r]] = F.neg(e.rows[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Incrementally maintained row span over F_p; extracts independent subsets
// cheaply (the vectors fed in here are very sparse).
class EchelonSpan {
  public:
    EchelonSpan(PrimeField F, std::size_t dim) : F_(F), dim_(dim) {}

    // Reduces v against the current span; returns the residual.
    std::vector<long long> residual(std::vector<long long> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            long long c = v[pivot_[r]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (rows_[r][j] != 0) v[j] = F_.sub(v[j], F_.mul(c, rows_[r][j]));
        }
        return v;
    }

    bool contains(const std::vector<long long>& v) const {
        std::vector<long long> r = residual(v);
        for (long long x : r)
            if (x != 0) return false;
        return true;
    }

    // Returns true iff v enlarged the span.
    bool insert(const std::vector<long long>& v) {
        std::vector<long long> r = residual(v);
        std::size_t piv = dim_;
        for (std::size_t j = 0; j < dim_; ++j)
            if (r[j] != 0) { piv = j; break; }
        if (piv == dim_) return false;
        long long inv = F_.inv(r[piv]);
        for (std::size_t j = 0; j < dim_; ++j) r[j] = F_.mul(r[j], inv);
        rows_.push_back(std::move(r));
        pivot_.push_back(piv);
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

  private:
    PrimeField F_;
    std::size_t dim_;
    std::vector<std::vector<long long>> rows_;
    std::vector<std::size_t> pivot_;
};

// Expresses vectors in terms of a fixed independent list of columns.
// Keeps, next to each echelonized column, its expression in the original
// basis, so solving is one reduction pass.
class CoordSolver {
  public:
    CoordSolver(PrimeField F, std::size_t dim) : F_(F), dim_(dim) {}

    void add_basis_vector(const std::vector<long long>& b) {
        std::vector<long long> r = b;
        std::vector<long long> expr(cols_.size() + 1, 0);
        expr.back() = 1;
        reduce(r, expr);
        std::size_t piv = find_pivot(r);
        if (piv == dim_)
            throw std::invalid_argument("CoordSolver: dependent basis vector");
        long long inv = F_.inv(r[piv]);
        for (auto& x : r) x = F_.mul(x, inv);
        for (auto& x : expr) x = F_.mul(x, inv);
        cols_.push_back(std::move(r));
        exprs_.push_back(std::move(expr));
        pivot_.push_back(piv);
    }

    // Solves sum_i c_i b_i = v; throws if v is outside the span.
    std::vector<long long> solve(const std::vector<long long>& v) const {
        std::vector<long long> r = v;
        std::vector<long long> coeffs(cols_.size(), 0);
        for (std::size_t k = 0; k < cols_.size(); ++k) {
            long long c = r[pivot_[k]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (cols_[k][j] != 0) r[j] = F_.sub(r[j], F_.mul(c, cols_[k][j]));
            for (std::size_t j = 0; j <= k; ++j)
                coeffs[j] = F_.add(coeffs[j], F_.mul(c, exprs_[k][j]));
        }
        for (long long x : r)
            if (x != 0) throw std::domain_error("CoordSolver: vector outside span");
        return coeffs;
    }

    std::size_t size() const { return cols_.size(); }

  private:
    void reduce(std::vector<long long>& r, std::vector<long long>& expr) const {
        for (std::size_t k = 0; k < cols_.size(); ++k) {
            long long c = r[pivot_[k]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (cols_[k][j] != 0) r[j] = F_.sub(r[j], F_.mul(c, cols_[k][j]));
            for (std::size_t j = 0; j < expr.size(); ++j)
                if (j < exprs_[k].size())
                    expr[j] = F_.sub(expr[j], F_.mul(c, exprs_[k][j]));
        }
    }

    std::size_t find_pivot(const std::vector<long long>& r) const {
        for (std::size_t j = 0; j < dim_; ++j)
            if (r[j] != 0) return j;
        return dim_;
    }

    PrimeField F_;
    std::size_t dim_;
    std::vector<std::vector<long long>> cols_;
    std::vector<std::vector<long long>> exprs_;
    std::vector<std::size_t> pivot_;
};

}  // namespace ainf

#endif  // AINF_MATRIX_HPP
