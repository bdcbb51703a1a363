#pragma once
#include "dualrep/matrix.hpp"

namespace dualrep {

/* A subspace of k^n stored via its unique reduced-column-echelon basis
 * (transpose of the RREF of the transposed spanning set, zero columns
 * dropped).  Canonicity means subspace equality is plain matrix equality. */
class Subspace {
public:
    static Subspace from_columns(const Matrix& span);
    static Subspace zero(Field f, std::size_t ambient) {
        return Subspace(ambient, Matrix(f, ambient, 0), {});
    }
    static Subspace full(Field f, std::size_t ambient) {
        return from_columns(Matrix::identity(f, ambient));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivot_rows() const { return pivot_rows_; }

    bool contains(const Matrix& vectors) const;  // column vectors
    bool contains(const Subspace& o) const { return contains(o.basis_); }

    /* Coordinates of columns of v in this basis; throws if not contained. */
    Matrix coordinates(const Matrix& v) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> piv)
        : ambient_(ambient), basis_(std::move(basis)), pivot_rows_(std::move(piv)) {}
    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivot_rows_;
};

Subspace kernel(const Matrix& m);  // null space of m
Subspace image(const Matrix& m);   // column space of m

/* Canonical model of k^ambient / sub: projection (kills sub exactly) and a
 * section with projection * section = id.  The section hits the standard
 * basis vectors at the non-pivot rows of sub's canonical basis. */
struct Quotient {
    Matrix projection;  // (ambient - dim sub) x ambient
    Matrix section;     // ambient x (ambient - dim sub)
};
Quotient quotient_basis(std::size_t ambient_dim, const Subspace& sub);

}  // namespace dualrep
