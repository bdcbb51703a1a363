#pragma once
#include <cstddef>
#include <optional>
#include <vector>

#include "dualrep/field.hpp"

namespace dualrep {

/* Dense matrix over an exact field.  Degenerate shapes (0 rows and/or 0
 * columns) are first-class citizens: maps to and from zero spaces occur all
 * over the representation layer. */
struct Echelon;

class Matrix {
public:
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

    static Matrix identity(Field f, std::size_t n);
    static Matrix from_ints(Field f, std::size_t rows, std::size_t cols,
                            std::initializer_list<std::int64_t> entries);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_identity() const;

    Matrix mul(const Matrix& o) const;         // dispatches to OpenMP kernel on large inputs
    Matrix mul_serial(const Matrix& o) const;  // reference kernel, kept for testing
    Matrix add(const Matrix& o) const;
    Matrix sub(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix neg() const;
    Matrix transpose() const;

    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;
    static Matrix block_diag(const std::vector<Matrix>& blocks);
    Matrix sub_cols(const std::vector<std::size_t>& idx) const;
    Matrix sub_rows(const std::vector<std::size_t>& idx) const;

    Echelon rref() const;         // dispatches to OpenMP elimination on large inputs
    Echelon rref_serial() const;  // reference kernel, kept for testing

    std::size_t rank() const;

    /* Raw kernel basis (one column per free variable, not canonicalized;
     * Subspace::from_columns turns it into the canonical form). */
    Matrix kernel_raw() const;

    /* One solution x of (*this) x = b with free variables set to zero, the
     * echelon-minimal choice; nullopt if inconsistent.  b may have several
     * columns (solved simultaneously). */
    std::optional<Matrix> solve(const Matrix& b) const;

    std::optional<Matrix> inverse() const;

    /* det(xI - A) as coefficient list, index = degree; exact Hessenberg method. */
    std::vector<Scalar> char_poly() const;

    std::string to_string() const;  // "[[a,b],[c,d]]", "[]" for degenerate shapes

private:
    Echelon rref_impl(bool parallel) const;
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

struct Echelon {
    Matrix mat;                       // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};

}  // namespace dualrep
