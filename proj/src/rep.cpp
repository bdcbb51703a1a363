#include "dualrep/rep.hpp"

#include <algorithm>

#include "dualrep/error.hpp"

namespace dualrep {

namespace {

/* grow paths breadth-first so the (length, lex-by-arrow-sequence) order falls
   out of the construction */
std::vector<Path> grow_paths(const Quiver& q, std::size_t start, bool forward) {
    std::vector<Path> out;
    std::vector<Path> layer;
    Path lazy;
    lazy.src = start;
    lazy.tgt = start;
    layer.push_back(lazy);
    while (!layer.empty()) {
        out.insert(out.end(), layer.begin(), layer.end());
        std::vector<Path> next;
        for (const Path& p : layer) {
            for (std::size_t a = 0; a < q.num_arrows(); ++a) {
                const auto& ar = q.arrows[a];
                if (forward) {
                    if (ar.src != p.tgt) continue;
                    Path e = p;
                    e.arrows.push_back(a);
                    e.tgt = ar.tgt;
                    next.push_back(std::move(e));
                } else {
                    if (ar.tgt != p.src) continue;
                    Path e = p;
                    e.arrows.insert(e.arrows.begin(), a);
                    e.src = ar.src;
                    next.push_back(std::move(e));
                }
            }
        }
        std::sort(next.begin(), next.end(), [](const Path& x, const Path& y) {
            return x.arrows < y.arrows;
        });
        layer = std::move(next);
    }
    return out;
}

} // namespace

std::vector<Path> paths_from(const Quiver& q, std::size_t src) {
    return grow_paths(q, src, true);
}

std::vector<Path> paths_into(const Quiver& q, std::size_t tgt) {
    return grow_paths(q, tgt, false);
}

Rep::Rep(Field field, std::shared_ptr<const Quiver> quiver)
    : field_(field), quiver_(std::move(quiver)), dims_(quiver_->num_vertices(), 0) {
    for (std::size_t a = 0; a < quiver_->num_arrows(); ++a) maps_.emplace_back(field_, 0, 0);
}

Rep::Rep(Field field, std::shared_ptr<const Quiver> quiver, DimVector dims,
         std::vector<Matrix> maps)
    : field_(field), quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
    validate();
}

std::int64_t Rep::total_dim() const {
    std::int64_t t = 0;
    for (auto d : dims_) t += d;
    return t;
}

Matrix Rep::path_map(const Path& p) const {
    Matrix m = Matrix::identity(field_, static_cast<std::size_t>(dims_[p.src]));
    for (std::size_t a : p.arrows) m = maps_[a].mul(m);
    return m;
}

void Rep::validate() const {
    if (dims_.size() != quiver_->num_vertices())
        throw Error("BadShape", "dimension vector length does not match vertex count");
    for (auto d : dims_)
        if (d < 0) throw Error("BadShape", "negative dimension");
    if (maps_.size() != quiver_->num_arrows())
        throw Error("BadShape", "arrow map count does not match arrow count");
    for (std::size_t a = 0; a < maps_.size(); ++a) {
        const auto& ar = quiver_->arrows[a];
        if (maps_[a].rows() != static_cast<std::size_t>(dims_[ar.tgt]) ||
            maps_[a].cols() != static_cast<std::size_t>(dims_[ar.src]))
            throw Error("BadShape", "map for arrow " + ar.id + " has wrong shape");
        if (maps_[a].field() != field_)
            throw Error("BadShape", "map for arrow " + ar.id + " lives over the wrong field");
    }
}

bool Rep::operator==(const Rep& o) const {
    return field_ == o.field_ && quiver_->same_shape(*o.quiver_) && dims_ == o.dims_ &&
           maps_ == o.maps_;
}

void RepMap::validate() const {
    if (from.field() != to.field()) throw Error("BadShape", "morphism endpoints over different fields");
    if (!from.quiver().same_shape(to.quiver()))
        throw Error("BadShape", "morphism endpoints over different quivers");
    const Quiver& q = from.quiver();
    if (blocks.size() != q.num_vertices())
        throw Error("BadShape", "morphism block count does not match vertex count");
    for (std::size_t v = 0; v < blocks.size(); ++v)
        if (blocks[v].rows() != static_cast<std::size_t>(to.dims()[v]) ||
            blocks[v].cols() != static_cast<std::size_t>(from.dims()[v]))
            throw Error("BadShape", "morphism block at vertex " + q.vertices[v] + " has wrong shape");
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& ar = q.arrows[a];
        if (to.map(a).mul(blocks[ar.src]) != blocks[ar.tgt].mul(from.map(a)))
            throw Error("NotAMorphism", "blocks do not commute with arrow " + ar.id);
    }
}

bool RepMap::is_zero() const {
    for (const auto& b : blocks)
        if (!b.is_zero()) return false;
    return true;
}

bool RepMap::is_iso() const {
    for (std::size_t v = 0; v < blocks.size(); ++v) {
        if (blocks[v].rows() != blocks[v].cols()) return false;
        if (blocks[v].rank() != blocks[v].rows()) return false;
    }
    return true;
}

RepMap zero_map(const Rep& from, const Rep& to) {
    RepMap f{from, to, {}};
    for (std::size_t v = 0; v < from.quiver().num_vertices(); ++v)
        f.blocks.emplace_back(from.field(), static_cast<std::size_t>(to.dims()[v]),
                              static_cast<std::size_t>(from.dims()[v]));
    return f;
}

RepMap identity_map(const Rep& m) {
    RepMap f{m, m, {}};
    for (std::size_t v = 0; v < m.quiver().num_vertices(); ++v)
        f.blocks.push_back(Matrix::identity(m.field(), static_cast<std::size_t>(m.dims()[v])));
    return f;
}

RepMap compose(const RepMap& g, const RepMap& f) {
    RepMap h{f.from, g.to, {}};
    for (std::size_t v = 0; v < f.blocks.size(); ++v)
        h.blocks.push_back(g.blocks[v].mul(f.blocks[v]));
    return h;
}

RepMap map_add(const RepMap& a, const RepMap& b) {
    RepMap h{a.from, a.to, {}};
    for (std::size_t v = 0; v < a.blocks.size(); ++v) h.blocks.push_back(a.blocks[v].add(b.blocks[v]));
    return h;
}

RepMap map_sub(const RepMap& a, const RepMap& b) {
    RepMap h{a.from, a.to, {}};
    for (std::size_t v = 0; v < a.blocks.size(); ++v) h.blocks.push_back(a.blocks[v].sub(b.blocks[v]));
    return h;
}

RepMap map_scaled(const RepMap& a, const Scalar& c) {
    RepMap h{a.from, a.to, {}};
    for (const auto& b : a.blocks) h.blocks.push_back(b.scaled(c));
    return h;
}

Rep zero_rep(Field f, std::shared_ptr<const Quiver> q) { return Rep(f, std::move(q)); }

Rep simple_rep(Field f, std::shared_ptr<const Quiver> q, std::size_t y) {
    DimVector dims(q->num_vertices(), 0);
    dims[y] = 1;
    std::vector<Matrix> maps;
    for (const auto& ar : q->arrows)
        maps.emplace_back(f, static_cast<std::size_t>(dims[ar.tgt]),
                          static_cast<std::size_t>(dims[ar.src]));
    return Rep(f, std::move(q), std::move(dims), std::move(maps));
}

std::vector<std::vector<Path>> projective_basis(const Quiver& q, std::size_t y) {
    std::vector<std::vector<Path>> per_vertex(q.num_vertices());
    for (const Path& p : paths_from(q, y)) per_vertex[p.tgt].push_back(p);
    return per_vertex;
}

std::vector<std::vector<Path>> injective_basis(const Quiver& q, std::size_t y) {
    std::vector<std::vector<Path>> per_vertex(q.num_vertices());
    for (const Path& p : paths_into(q, y)) per_vertex[p.src].push_back(p);
    return per_vertex;
}

namespace {

Rep rep_from_path_basis(Field f, std::shared_ptr<const Quiver> qp,
                        const std::vector<std::vector<Path>>& basis, bool forward) {
    const Quiver& q = *qp;
    DimVector dims(q.num_vertices(), 0);
    for (std::size_t v = 0; v < basis.size(); ++v)
        dims[v] = static_cast<std::int64_t>(basis[v].size());
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& ar = q.arrows[a];
        Matrix m(f, basis[ar.tgt].size(), basis[ar.src].size());
        for (std::size_t c = 0; c < basis[ar.src].size(); ++c) {
            Path img = basis[ar.src][c];
            if (forward) {
                /* post-compose the path with the arrow */
                img.arrows.push_back(a);
                img.tgt = ar.tgt;
            } else {
                /* strip the arrow off the front, or annihilate */
                if (img.arrows.empty() || img.arrows.front() != a) continue;
                img.arrows.erase(img.arrows.begin());
                img.src = ar.tgt;
            }
            auto it = std::find(basis[ar.tgt].begin(), basis[ar.tgt].end(), img);
            if (it == basis[ar.tgt].end())
                throw Error("Internal", "path basis not closed under arrow action");
            m.at(static_cast<std::size_t>(it - basis[ar.tgt].begin()), c) = f.one();
        }
        maps.push_back(std::move(m));
    }
    return Rep(f, std::move(qp), std::move(dims), std::move(maps));
}

} // namespace

Rep projective_rep(Field f, std::shared_ptr<const Quiver> q, std::size_t y) {
    auto basis = projective_basis(*q, y);
    return rep_from_path_basis(f, std::move(q), basis, true);
}

Rep injective_rep(Field f, std::shared_ptr<const Quiver> q, std::size_t y) {
    auto basis = injective_basis(*q, y);
    return rep_from_path_basis(f, std::move(q), basis, false);
}

Rep radical_of_projective(Field f, std::shared_ptr<const Quiver> q, std::size_t y) {
    auto basis = projective_basis(*q, y);
    for (auto& per : basis)
        per.erase(std::remove_if(per.begin(), per.end(),
                                 [](const Path& p) { return p.arrows.empty(); }),
                  per.end());
    return rep_from_path_basis(f, std::move(q), basis, true);
}

SumDecomp direct_sum(const std::vector<Rep>& parts) {
    if (parts.empty()) throw Error("BadShape", "direct sum of no parts needs a quiver");
    const Field f = parts.front().field();
    auto qp = parts.front().quiver_ptr();
    const Quiver& q = parts.front().quiver();
    DimVector dims(q.num_vertices(), 0);
    std::vector<std::int64_t> offset_at(parts.size() * q.num_vertices(), 0);
    for (std::size_t s = 0; s < parts.size(); ++s)
        for (std::size_t v = 0; v < q.num_vertices(); ++v) {
            offset_at[s * q.num_vertices() + v] = dims[v];
            dims[v] += parts[s].dims()[v];
        }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        std::vector<Matrix> blocks;
        for (const Rep& p : parts) blocks.push_back(p.map(a));
        maps.push_back(Matrix::block_diag(blocks));
    }
    SumDecomp out{Rep(f, qp, dims, std::move(maps)), {}, {}};
    for (std::size_t s = 0; s < parts.size(); ++s) {
        RepMap in{parts[s], out.total, {}};
        RepMap pr{out.total, parts[s], {}};
        for (std::size_t v = 0; v < q.num_vertices(); ++v) {
            const auto rows = static_cast<std::size_t>(dims[v]);
            const auto cols = static_cast<std::size_t>(parts[s].dims()[v]);
            const auto off = static_cast<std::size_t>(offset_at[s * q.num_vertices() + v]);
            Matrix inc(f, rows, cols);
            for (std::size_t c = 0; c < cols; ++c) inc.at(off + c, c) = f.one();
            in.blocks.push_back(inc);
            pr.blocks.push_back(inc.transpose());
        }
        out.into.push_back(std::move(in));
        out.onto.push_back(std::move(pr));
    }
    return out;
}

Rep random_rep(Field f, std::shared_ptr<const Quiver> q, std::int64_t max_dim, Rng& rng) {
    DimVector dims(q->num_vertices(), 0);
    for (auto& d : dims) d = rng.below(max_dim + 1);
    std::vector<Matrix> maps;
    for (const auto& ar : q->arrows) {
        Matrix m(f, static_cast<std::size_t>(dims[ar.tgt]), static_cast<std::size_t>(dims[ar.src]));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rng.field_scalar(f);
        maps.push_back(std::move(m));
    }
    return Rep(f, std::move(q), std::move(dims), std::move(maps));
}

} // namespace dualrep
