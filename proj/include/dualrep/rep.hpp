#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "dualrep/field.hpp"
#include "dualrep/matrix.hpp"
#include "dualrep/quiver.hpp"
#include "dualrep/rng.hpp"

namespace dualrep {

/* A path through the quiver; arrows in traversal order, empty = lazy path. */
struct Path {
    std::size_t src = 0;
    std::size_t tgt = 0;
    std::vector<std::size_t> arrows;

    std::size_t length() const { return arrows.size(); }
    bool operator==(const Path& o) const {
        return src == o.src && tgt == o.tgt && arrows == o.arrows;
    }
};

/* All paths leaving src / entering tgt, ordered by (length, arrow sequence);
 * the lazy path comes first.  Finite because quivers are acyclic. */
std::vector<Path> paths_from(const Quiver& q, std::size_t src);
std::vector<Path> paths_into(const Quiver& q, std::size_t tgt);

/* Representation: a space per vertex, a matrix per arrow a: i -> j acting
 * as column-vector map  M_i -> M_j  (matrix shape dims[j] x dims[i]). */
class Rep {
public:
    Rep(Field field, std::shared_ptr<const Quiver> quiver);
    Rep(Field field, std::shared_ptr<const Quiver> quiver, DimVector dims,
        std::vector<Matrix> maps);

    const Field& field() const { return field_; }
    const Quiver& quiver() const { return *quiver_; }
    const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
    const DimVector& dims() const { return dims_; }
    std::int64_t dim_at(std::size_t v) const { return dims_[v]; }
    std::int64_t total_dim() const;

    const Matrix& map(std::size_t a) const { return maps_[a]; }
    Matrix& map(std::size_t a) { return maps_[a]; }
    Matrix path_map(const Path& p) const; /* product of arrow maps along p */

    bool is_zero_rep() const { return total_dim() == 0; }
    void validate() const; /* throws BadShape on dimension mismatches */
    bool operator==(const Rep& o) const;
    bool operator!=(const Rep& o) const { return !(*this == o); }

private:
    Field field_;
    std::shared_ptr<const Quiver> quiver_;
    DimVector dims_;
    std::vector<Matrix> maps_;
};

/* Morphism of representations: a block per vertex commuting with the arrow
 * maps.  blocks[v] has shape to.dims[v] x from.dims[v]. */
struct RepMap {
    Rep from;
    Rep to;
    std::vector<Matrix> blocks;

    void validate() const; /* checks shapes and the intertwining relations */
    bool is_zero() const;
    bool is_iso() const; /* every block invertible */
};

RepMap zero_map(const Rep& from, const Rep& to);
RepMap identity_map(const Rep& m);
RepMap compose(const RepMap& g, const RepMap& f); /* g after f */
RepMap map_add(const RepMap& a, const RepMap& b);
RepMap map_sub(const RepMap& a, const RepMap& b);
RepMap map_scaled(const RepMap& a, const Scalar& c);

Rep zero_rep(Field f, std::shared_ptr<const Quiver> q);
Rep simple_rep(Field f, std::shared_ptr<const Quiver> q, std::size_t y);

/* Indecomposable projective at y: basis = paths leaving y, arrows act by
 * post-composition.  Basis order matches paths_from restricted per vertex. */
Rep projective_rep(Field f, std::shared_ptr<const Quiver> q, std::size_t y);
/* Indecomposable injective at y: basis = paths entering y, an arrow strips
 * itself off the front of a path (or kills it). */
Rep injective_rep(Field f, std::shared_ptr<const Quiver> q, std::size_t y);
/* rad P(y): the nontrivial paths leaving y, same relative basis order. */
Rep radical_of_projective(Field f, std::shared_ptr<const Quiver> q, std::size_t y);

/* Per-vertex path bases backing the three constructions above. */
std::vector<std::vector<Path>> projective_basis(const Quiver& q, std::size_t y);
std::vector<std::vector<Path>> injective_basis(const Quiver& q, std::size_t y);

struct SumDecomp {
    Rep total;
    std::vector<RepMap> into; /* inclusions  part -> total */
    std::vector<RepMap> onto; /* projections total -> part */
};
SumDecomp direct_sum(const std::vector<Rep>& parts);

Rep random_rep(Field f, std::shared_ptr<const Quiver> q, std::int64_t max_dim, Rng& rng);

} // namespace dualrep
