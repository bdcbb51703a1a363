#include "dualrep/rep_ops.hpp"

#include "dualrep/error.hpp"

namespace dualrep {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> hom_shapes(const Rep& from, const Rep& to) {
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    for (std::size_t v = 0; v < from.quiver().num_vertices(); ++v)
        shapes.emplace_back(static_cast<std::size_t>(to.dims()[v]),
                            static_cast<std::size_t>(from.dims()[v]));
    return shapes;
}

} // namespace

Matrix HomSpace::flatten(const RepMap& f) const {
    BlockLinearSystem sys(from.field(), hom_shapes(from, to));
    return sys.flatten(f.blocks);
}

Matrix HomSpace::coordinates(const RepMap& f) const {
    Matrix b(from.field(), flatten(f).rows(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        Matrix col = flatten(basis[c]);
        for (std::size_t r = 0; r < col.rows(); ++r) b.at(r, c) = col.at(r, 0);
    }
    auto x = b.solve(flatten(f));
    if (!x) throw Error("NotContained", "morphism lies outside the hom space");
    return *x;
}

RepMap HomSpace::combine(const Matrix& coeffs) const {
    if (coeffs.rows() != basis.size() || coeffs.cols() != 1)
        throw Error("BadShape", "coefficient column has wrong length");
    RepMap f = zero_map(from, to);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (from.field().is_zero(coeffs.at(i, 0))) continue;
        f = map_add(f, map_scaled(basis[i], coeffs.at(i, 0)));
    }
    return f;
}

HomSpace hom_space(const Rep& from, const Rep& to) {
    const Field f = from.field();
    const Quiver& q = from.quiver();
    BlockLinearSystem sys(f, hom_shapes(from, to));
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& ar = q.arrows[a];
        const auto ti = static_cast<std::size_t>(to.dims()[ar.src]);
        const auto tj = static_cast<std::size_t>(to.dims()[ar.tgt]);
        const auto fi = static_cast<std::size_t>(from.dims()[ar.src]);
        /* to_a . phi_src - phi_tgt . from_a = 0 */
        sys.add_equation({{ar.src, to.map(a), Matrix::identity(f, fi)},
                          {ar.tgt, Matrix::identity(f, tj).neg(), from.map(a)}},
                         Matrix(f, tj, fi));
    }
    auto sol = sys.solve();
    HomSpace hs{from, to, {}};
    for (auto& blocks : sol.kernel) hs.basis.push_back(RepMap{from, to, std::move(blocks)});
    return hs;
}

SubRep sub_rep(const Rep& m, const std::vector<Subspace>& spaces) {
    const Field f = m.field();
    const Quiver& q = m.quiver();
    DimVector dims(q.num_vertices(), 0);
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        if (spaces[v].ambient_dim() != static_cast<std::size_t>(m.dims()[v]))
            throw Error("BadShape", "subspace ambient dimension mismatch");
        dims[v] = static_cast<std::int64_t>(spaces[v].dim());
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& ar = q.arrows[a];
        Matrix img = m.map(a).mul(spaces[ar.src].basis());
        if (!spaces[ar.tgt].contains(img))
            throw Error("NotStable", "arrow " + ar.id + " leaves the chosen subspaces");
        maps.push_back(spaces[ar.tgt].coordinates(img));
    }
    Rep sub(f, m.quiver_ptr(), std::move(dims), std::move(maps));
    RepMap incl{sub, m, {}};
    for (std::size_t v = 0; v < q.num_vertices(); ++v) incl.blocks.push_back(spaces[v].basis());
    return SubRep{std::move(sub), std::move(incl)};
}

QuotRep quotient_by(const Rep& m, const std::vector<Subspace>& spaces) {
    const Field f = m.field();
    const Quiver& q = m.quiver();
    std::vector<Quotient> qdata;
    DimVector dims(q.num_vertices(), 0);
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        if (spaces[v].ambient_dim() != static_cast<std::size_t>(m.dims()[v]))
            throw Error("BadShape", "subspace ambient dimension mismatch");
        qdata.push_back(quotient_basis(spaces[v].ambient_dim(), spaces[v]));
        dims[v] = static_cast<std::int64_t>(qdata[v].projection.rows());
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& ar = q.arrows[a];
        Matrix img = m.map(a).mul(spaces[ar.src].basis());
        if (!spaces[ar.tgt].contains(img))
            throw Error("NotStable", "arrow " + ar.id + " leaves the chosen subspaces");
        maps.push_back(qdata[ar.tgt].projection.mul(m.map(a)).mul(qdata[ar.src].section));
    }
    Rep quot(f, m.quiver_ptr(), std::move(dims), std::move(maps));
    RepMap proj{m, quot, {}};
    for (std::size_t v = 0; v < q.num_vertices(); ++v) proj.blocks.push_back(qdata[v].projection);
    proj.validate();
    return QuotRep{std::move(quot), std::move(proj)};
}

SubRep kernel_rep(const RepMap& f) {
    std::vector<Subspace> spaces;
    for (const auto& b : f.blocks) spaces.push_back(kernel(b));
    return sub_rep(f.from, spaces);
}

SubRep image_rep(const RepMap& f) {
    std::vector<Subspace> spaces;
    for (const auto& b : f.blocks) spaces.push_back(image(b));
    return sub_rep(f.to, spaces);
}

QuotRep cokernel_rep(const RepMap& f) {
    std::vector<Subspace> spaces;
    for (const auto& b : f.blocks) spaces.push_back(image(b));
    return quotient_by(f.to, spaces);
}

std::vector<Subspace> radical_spaces(const Rep& m) {
    const Quiver& q = m.quiver();
    std::vector<Subspace> rad;
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        rad.push_back(Subspace::zero(m.field(), static_cast<std::size_t>(m.dims()[v])));
    for (std::size_t a = 0; a < q.num_arrows(); ++a)
        rad[q.arrows[a].tgt] = rad[q.arrows[a].tgt].sum(image(m.map(a)));
    return rad;
}

SubRep radical_rep(const Rep& m) { return sub_rep(m, radical_spaces(m)); }

QuotRep top_rep(const Rep& m) { return quotient_by(m, radical_spaces(m)); }

ProjCover projective_cover(const Rep& m) {
    const Field f = m.field();
    const Quiver& q = m.quiver();
    QuotRep top = top_rep(m);

    std::vector<Rep> parts;
    std::vector<std::size_t> summands;
    std::vector<Matrix> generators; /* one column vector in m at the summand vertex */
    for (std::size_t y = 0; y < q.num_vertices(); ++y) {
        const auto ty = static_cast<std::size_t>(top.quot.dims()[y]);
        if (ty == 0) continue;
        /* lift the top basis through the projection */
        auto lift = top.proj.blocks[y].solve(Matrix::identity(f, ty));
        if (!lift) throw Error("Internal", "top projection is not surjective");
        for (std::size_t r = 0; r < ty; ++r) {
            parts.push_back(projective_rep(f, m.quiver_ptr(), y));
            summands.push_back(y);
            generators.push_back(lift->sub_cols({r}));
        }
    }

    ProjCover out{Rep(f, m.quiver_ptr()), zero_map(Rep(f, m.quiver_ptr()), m), summands,
                  SumDecomp{Rep(f, m.quiver_ptr()), {}, {}}};
    if (parts.empty()) {
        if (m.total_dim() != 0) throw Error("Internal", "nonzero module with zero top");
        return out;
    }
    out.sum = direct_sum(parts);
    out.proj = out.sum.total;

    std::vector<std::vector<std::vector<Path>>> bases;
    for (std::size_t s = 0; s < parts.size(); ++s) bases.push_back(projective_basis(q, summands[s]));

    RepMap pi{out.proj, m, {}};
    for (std::size_t w = 0; w < q.num_vertices(); ++w) {
        Matrix block(f, static_cast<std::size_t>(m.dims()[w]), 0);
        for (std::size_t s = 0; s < parts.size(); ++s) {
            for (const Path& p : bases[s][w]) {
                Matrix col = generators[s];
                for (std::size_t a : p.arrows) col = m.map(a).mul(col);
                block = block.hstack(col);
            }
        }
        pi.blocks.push_back(std::move(block));
    }
    pi.validate();
    out.pi = std::move(pi);
    return out;
}

SubRep syzygy(const Rep& m) { return kernel_rep(projective_cover(m).pi); }

bool is_projective_rep(const Rep& m) { return syzygy(m).sub.total_dim() == 0; }

} // namespace dualrep
