#include "dualrep/matrix.hpp"

#include <cstdint>

namespace dualrep {

namespace {
// Work threshold below which the parallel kernels fall back to serial code;
// the representation-theory layer lives almost entirely below it.
constexpr std::size_t kParallelCutoff = 64 * 64;
}  // namespace

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::from_ints(Field f, std::size_t rows, std::size_t cols,
                         std::initializer_list<std::int64_t> entries) {
    Matrix m(f, rows, cols);
    std::size_t k = 0;
    for (std::int64_t v : entries) {
        if (k >= rows * cols) throw Error("BadShape", "too many entries");
        m.a_[k++] = f.from_int(v);
    }
    if (k != rows * cols) throw Error("BadShape", "too few entries");
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!field_.is_zero(x)) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(field_, rows_);
}

Matrix Matrix::mul_serial(const Matrix& o) const {
    if (field_ != o.field_ || cols_ != o.rows_)
        throw Error("BadShape", "matrix product shape/field mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (field_.is_zero(aik)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = field_.add(r.at(i, j), field_.mul(aik, o.at(k, j)));
        }
    return r;
}

Matrix Matrix::mul(const Matrix& o) const {
    if (field_ != o.field_ || cols_ != o.rows_)
        throw Error("BadShape", "matrix product shape/field mismatch");
    if (rows_ * cols_ * o.cols_ < kParallelCutoff * 8) return mul_serial(o);
    Matrix r(field_, rows_, o.cols_);
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < static_cast<long long>(rows_); ++ii) {
        auto i = static_cast<std::size_t>(ii);
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (field_.is_zero(aik)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = field_.add(r.at(i, j), field_.mul(aik, o.at(k, j)));
        }
    }
    return r;
}

Matrix Matrix::add(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("BadShape", "matrix sum shape/field mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.add(a_[k], o.a_[k]);
    return r;
}

Matrix Matrix::sub(const Matrix& o) const { return add(o.neg()); }

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.mul(a_[k], c);
    return r;
}

Matrix Matrix::neg() const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.neg(a_[k]);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_) throw Error("BadShape", "hstack mismatch");
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (field_ != o.field_ || cols_ != o.cols_) throw Error("BadShape", "vstack mismatch");
    Matrix r(field_, rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw Error("BadShape", "block_diag of nothing");
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) { rows += b.rows(); cols += b.cols(); }
    Matrix r(blocks.front().field(), rows, cols);
    std::size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) r.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows(); co += b.cols();
    }
    return r;
}

Matrix Matrix::sub_cols(const std::vector<std::size_t>& idx) const {
    Matrix r(field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r.at(i, j) = at(i, idx[j]);
    return r;
}

Matrix Matrix::sub_rows(const std::vector<std::size_t>& idx) const {
    Matrix r(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(idx[i], j);
    return r;
}

Echelon Matrix::rref_impl(bool parallel) const {
    Matrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && field_.is_zero(m.at(piv, c))) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols_; ++j) std::swap(m.at(r, j), m.at(piv, j));
        Scalar inv = field_.inv(m.at(r, c));
        for (std::size_t j = c; j < cols_; ++j) m.at(r, j) = field_.mul(m.at(r, j), inv);
        auto eliminate = [&](std::size_t i) {
            if (i == r) return;
            const Scalar f = m.at(i, c);
            if (field_.is_zero(f)) return;
            for (std::size_t j = c; j < cols_; ++j)
                m.at(i, j) = field_.sub(m.at(i, j), field_.mul(f, m.at(r, j)));
        };
        if (parallel) {
#pragma omp parallel for schedule(static)
            for (long long i = 0; i < static_cast<long long>(rows_); ++i)
                eliminate(static_cast<std::size_t>(i));
        } else {
            for (std::size_t i = 0; i < rows_; ++i) eliminate(i);
        }
        pivots.push_back(c);
        ++r;
    }
    return Echelon{std::move(m), std::move(pivots)};
}

Echelon Matrix::rref_serial() const { return rref_impl(false); }

Echelon Matrix::rref() const {
    return rref_impl(rows_ * cols_ >= kParallelCutoff);
}

std::size_t Matrix::rank() const { return rref().pivots.size(); }

Matrix Matrix::kernel_raw() const {
    Echelon e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(field_, cols_, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t f = free_cols[j];
        k.at(f, j) = field_.one();
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            k.at(e.pivots[i], j) = field_.neg(e.mat.at(i, f));
    }
    return k;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    if (b.rows_ != rows_ || b.field_ != field_) throw Error("BadShape", "solve shape mismatch");
    Echelon e = hstack(b).rref();
    // inconsistent iff some pivot lands in the appended block
    for (std::size_t c : e.pivots)
        if (c >= cols_) return std::nullopt;
    Matrix x(field_, cols_, b.cols_);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) x.at(e.pivots[i], j) = e.mat.at(i, cols_ + j);
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto x = solve(identity(field_, rows_));
    if (!x) return std::nullopt;
    if (!mul(*x).is_identity()) return std::nullopt;  // rank-deficient square system
    return x;
}

std::vector<Scalar> Matrix::char_poly() const {
    if (rows_ != cols_) throw Error("BadShape", "char_poly of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return {field_.one()};
    // similarity reduction to upper Hessenberg form with exact pivoting
    Matrix h = *this;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && field_.is_zero(h.at(piv, k - 1))) ++piv;
        if (piv == n) continue;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h.at(k, j), h.at(piv, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, k), h.at(i, piv));
        }
        Scalar inv = field_.inv(h.at(k, k - 1));
        for (std::size_t i = k + 1; i < n; ++i) {
            Scalar f = field_.mul(h.at(i, k - 1), inv);
            if (field_.is_zero(f)) continue;
            for (std::size_t j = 0; j < n; ++j)
                h.at(i, j) = field_.sub(h.at(i, j), field_.mul(f, h.at(k, j)));
            for (std::size_t i2 = 0; i2 < n; ++i2)
                h.at(i2, k) = field_.add(h.at(i2, k), field_.mul(f, h.at(i2, i)));
        }
    }
    // leading-principal-minor recurrence for Hessenberg characteristic polynomials
    std::vector<std::vector<Scalar>> p(n + 1);
    p[0] = {field_.one()};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<Scalar> pm(m + 1, field_.zero());
        // (x - h[m-1][m-1]) * p[m-1]
        for (std::size_t d = 0; d < p[m - 1].size(); ++d) {
            pm[d + 1] = field_.add(pm[d + 1], p[m - 1][d]);
            pm[d] = field_.sub(pm[d], field_.mul(h.at(m - 1, m - 1), p[m - 1][d]));
        }
        Scalar run = field_.one();
        for (std::size_t k = 1; k < m; ++k) {
            run = field_.mul(run, h.at(m - k, m - k - 1));
            if (field_.is_zero(run)) break;
            Scalar coef = field_.mul(run, h.at(m - 1 - k, m - 1));
            for (std::size_t d = 0; d < p[m - 1 - k].size(); ++d)
                pm[d] = field_.sub(pm[d], field_.mul(coef, p[m - 1 - k][d]));
        }
        p[m] = std::move(pm);
    }
    return p[n];
}

std::string Matrix::to_string() const {
    if (rows_ == 0 || cols_ == 0) return "[]";
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += ",";
            s += field_.to_string(at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace dualrep
