#include "dualrep/linsys.hpp"

#include "dualrep/error.hpp"

namespace dualrep {

BlockLinearSystem::BlockLinearSystem(Field field,
                                     std::vector<std::pair<std::size_t, std::size_t>> shapes)
    : field_(field), shapes_(std::move(shapes)) {
    offsets_.reserve(shapes_.size());
    for (const auto& [r, c] : shapes_) {
        offsets_.push_back(total_);
        total_ += r * c;
    }
}

void BlockLinearSystem::add_equation(const std::vector<Term>& terms, const Matrix& rhs) {
    const std::size_t out_rows = rhs.rows();
    const std::size_t out_cols = rhs.cols();
    for (const auto& t : terms) {
        if (t.block >= shapes_.size()) throw Error("BadBlock", "equation names unknown block");
        if (t.left.cols() != shapes_[t.block].first || t.right.rows() != shapes_[t.block].second ||
            t.left.rows() != out_rows || t.right.cols() != out_cols)
            throw Error("BadShape", "equation term shapes do not line up");
    }
    for (std::size_t r = 0; r < out_rows; ++r) {
        for (std::size_t c = 0; c < out_cols; ++c) {
            std::vector<Scalar> row(total_, field_.zero());
            for (const auto& t : terms) {
                const auto [br, bc] = shapes_[t.block];
                const std::size_t off = offsets_[t.block];
                for (std::size_t s = 0; s < br; ++s) {
                    if (field_.is_zero(t.left.at(r, s))) continue;
                    for (std::size_t u = 0; u < bc; ++u) {
                        const Scalar w = field_.mul(t.left.at(r, s), t.right.at(u, c));
                        if (field_.is_zero(w)) continue;
                        row[off + s * bc + u] = field_.add(row[off + s * bc + u], w);
                    }
                }
            }
            rows_.push_back(std::move(row));
            rhs_.push_back(rhs.at(r, c));
        }
    }
}

Matrix BlockLinearSystem::flatten(const std::vector<Matrix>& blocks) const {
    if (blocks.size() != shapes_.size()) throw Error("BadShape", "flatten: wrong block count");
    Matrix col(field_, total_, 1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto [br, bc] = shapes_[b];
        if (blocks[b].rows() != br || blocks[b].cols() != bc)
            throw Error("BadShape", "flatten: block shape mismatch");
        for (std::size_t r = 0; r < br; ++r)
            for (std::size_t c = 0; c < bc; ++c)
                col.at(offsets_[b] + r * bc + c, 0) = blocks[b].at(r, c);
    }
    return col;
}

std::vector<Matrix> BlockLinearSystem::unflatten(const Matrix& column) const {
    if (column.rows() != total_ || column.cols() != 1)
        throw Error("BadShape", "unflatten: wrong coordinate length");
    std::vector<Matrix> blocks;
    blocks.reserve(shapes_.size());
    for (std::size_t b = 0; b < shapes_.size(); ++b) {
        const auto [br, bc] = shapes_[b];
        Matrix m(field_, br, bc);
        for (std::size_t r = 0; r < br; ++r)
            for (std::size_t c = 0; c < bc; ++c)
                m.at(r, c) = column.at(offsets_[b] + r * bc + c, 0);
        blocks.push_back(std::move(m));
    }
    return blocks;
}

BlockLinearSystem::Solution BlockLinearSystem::solve() const {
    Matrix m(field_, rows_.size(), total_);
    Matrix b(field_, rows_.size(), 1);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < total_; ++c) m.at(r, c) = rows_[r][c];
        b.at(r, 0) = rhs_[r];
    }

    Solution sol;
    auto x = m.solve(b);
    if (!x) {
        sol.consistent = false;
        return sol;
    }
    sol.consistent = true;
    sol.particular = unflatten(*x);
    const Matrix null = m.kernel_raw();
    for (std::size_t c = 0; c < null.cols(); ++c) {
        Matrix col(field_, total_, 1);
        for (std::size_t r = 0; r < total_; ++r) col.at(r, 0) = null.at(r, c);
        sol.kernel.push_back(unflatten(col));
    }
    return sol;
}

} // namespace dualrep
