#include "dualrep/subspace.hpp"

namespace dualrep {

Subspace Subspace::from_columns(const Matrix& span) {
    Echelon e = span.transpose().rref();
    std::size_t d = e.pivots.size();
    Matrix basis(span.field(), span.rows(), d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < span.rows(); ++j) basis.at(j, i) = e.mat.at(i, j);
    return Subspace(span.rows(), std::move(basis), e.pivots);
}

bool Subspace::contains(const Matrix& vectors) const {
    if (vectors.rows() != ambient_) throw Error("BadShape", "ambient dimension mismatch");
    return basis_.solve(vectors).has_value();
}

Matrix Subspace::coordinates(const Matrix& v) const {
    auto x = basis_.solve(v);
    if (!x) throw Error("NotContained", "vector outside subspace");
    return *x;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw Error("BadShape", "ambient dimension mismatch");
    return from_columns(basis_.hstack(o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw Error("BadShape", "ambient dimension mismatch");
    // null space of [B1 | -B2]: the B1-part of each kernel vector spans the intersection
    Matrix stacked = basis_.hstack(o.basis_.neg());
    Matrix k = stacked.kernel_raw();
    std::vector<std::size_t> top(dim());
    for (std::size_t i = 0; i < dim(); ++i) top[i] = i;
    return from_columns(basis_.mul(k.sub_rows(top)));
}

Subspace kernel(const Matrix& m) { return Subspace::from_columns(m.kernel_raw()); }

Subspace image(const Matrix& m) { return Subspace::from_columns(m); }

Quotient quotient_basis(std::size_t ambient_dim, const Subspace& sub) {
    if (sub.ambient_dim() != ambient_dim) throw Error("BadShape", "ambient dimension mismatch");
    const Field f = sub.basis().field();
    std::vector<bool> is_pivot(ambient_dim, false);
    for (std::size_t r : sub.pivot_rows()) is_pivot[r] = true;
    std::vector<std::size_t> complement;
    for (std::size_t r = 0; r < ambient_dim; ++r)
        if (!is_pivot[r]) complement.push_back(r);
    Matrix section(f, ambient_dim, complement.size());
    for (std::size_t j = 0; j < complement.size(); ++j) section.at(complement[j], j) = f.one();
    // projection = trailing rows of [basis | section]^{-1}; kills sub, inverts section
    Matrix change = sub.basis().hstack(section);
    auto inv = change.inverse();
    if (!inv) throw Error("Internal", "echelon basis failed to extend to a basis");
    std::vector<std::size_t> tail(complement.size());
    for (std::size_t j = 0; j < complement.size(); ++j) tail[j] = sub.dim() + j;
    return Quotient{inv->sub_rows(tail), std::move(section)};
}

}  // namespace dualrep
