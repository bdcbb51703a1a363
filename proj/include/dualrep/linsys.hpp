#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dualrep/matrix.hpp"

namespace dualrep {

/* Linear system whose unknowns are matrices X_0, ..., X_{m-1} of fixed shapes
   and whose equations read  sum_k  L_k * X_{b_k} * R_k = rhs.  Coordinates
   flatten the blocks in declaration order, each block row-major. */
class BlockLinearSystem {
public:
    struct Term {
        std::size_t block;
        Matrix left;
        Matrix right;
    };

    struct Solution {
        bool consistent = false;
        std::vector<Matrix> particular;
        std::vector<std::vector<Matrix>> kernel; /* kernel[i] = one block tuple */
    };

    BlockLinearSystem(Field field, std::vector<std::pair<std::size_t, std::size_t>> shapes);

    void add_equation(const std::vector<Term>& terms, const Matrix& rhs);

    Solution solve() const;

    std::size_t unknowns() const { return total_; }
    Matrix flatten(const std::vector<Matrix>& blocks) const; /* column vector */
    std::vector<Matrix> unflatten(const Matrix& column) const;

private:
    Field field_;
    std::vector<std::pair<std::size_t, std::size_t>> shapes_;
    std::vector<std::size_t> offsets_;
    std::size_t total_ = 0;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<Scalar> rhs_;
};

} // namespace dualrep
