#include "dualrep/diffrep.hpp"

#include "dualrep/error.hpp"
#include "dualrep/rng.hpp"

namespace dualrep {

void DiffRep::validate() const {
    base.validate();
    const Quiver& q = quiver();
    if (eps.size() != q.num_vertices())
        throw Error("BadShape", "differential count does not match vertex count");
    for (std::size_t v = 0; v < eps.size(); ++v) {
        const auto d = static_cast<std::size_t>(dims()[v]);
        if (eps[v].rows() != d || eps[v].cols() != d)
            throw Error("BadShape", "differential at vertex " + q.vertices[v] + " is not square");
        if (!eps[v].mul(eps[v]).is_zero())
            throw Error("EpsNotSquareZero", "differential at vertex " + q.vertices[v] + " fails eps^2 = 0");
    }
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& ar = q.arrows[a];
        if (base.map(a).mul(eps[ar.src]) != eps[ar.tgt].mul(base.map(a)))
            throw Error("EpsNotCommuting", "differential does not commute with arrow " + ar.id);
    }
}

DiffRep make_diffrep(Rep base, std::vector<Matrix> eps) {
    DiffRep m{std::move(base), std::move(eps)};
    m.validate();
    return m;
}

void DiffRepMap::validate() const {
    on_base().validate();
    for (std::size_t v = 0; v < blocks.size(); ++v)
        if (blocks[v].mul(from.eps[v]) != to.eps[v].mul(blocks[v]))
            throw Error("NotAMorphism", "blocks do not commute with the differential");
}

bool DiffRepMap::is_zero() const {
    for (const auto& b : blocks)
        if (!b.is_zero()) return false;
    return true;
}

bool DiffRepMap::is_iso() const { return on_base().is_iso(); }

DiffRepMap zero_diff_map(const DiffRep& from, const DiffRep& to) {
    return DiffRepMap{from, to, zero_map(from.base, to.base).blocks};
}

DiffRepMap identity_diff_map(const DiffRep& m) {
    return DiffRepMap{m, m, identity_map(m.base).blocks};
}

DiffRepMap compose(const DiffRepMap& g, const DiffRepMap& f) {
    DiffRepMap h{f.from, g.to, {}};
    for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(g.blocks[v].mul(f.blocks[v]));
    return h;
}

DiffRepMap map_add(const DiffRepMap& a, const DiffRepMap& b) {
    DiffRepMap h{a.from, a.to, {}};
    for (std::size_t v = 0; v < a.blocks.size(); ++v) h.blocks.push_back(a.blocks[v].add(b.blocks[v]));
    return h;
}

DiffRepMap map_sub(const DiffRepMap& a, const DiffRepMap& b) {
    DiffRepMap h{a.from, a.to, {}};
    for (std::size_t v = 0; v < a.blocks.size(); ++v) h.blocks.push_back(a.blocks[v].sub(b.blocks[v]));
    return h;
}

DiffRepMap map_scaled(const DiffRepMap& a, const Scalar& c) {
    DiffRepMap h{a.from, a.to, {}};
    for (const auto& b : a.blocks) h.blocks.push_back(b.scaled(c));
    return h;
}

DiffRep with_zero_eps(Rep base) {
    std::vector<Matrix> eps;
    for (std::size_t v = 0; v < base.quiver().num_vertices(); ++v)
        eps.emplace_back(base.field(), static_cast<std::size_t>(base.dims()[v]),
                         static_cast<std::size_t>(base.dims()[v]));
    return DiffRep{std::move(base), std::move(eps)};
}

DiffRep suspend(const Rep& m) {
    const Field f = m.field();
    const Quiver& q = m.quiver();
    DimVector dims(q.num_vertices(), 0);
    for (std::size_t v = 0; v < q.num_vertices(); ++v) dims[v] = 2 * m.dims()[v];
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a)
        maps.push_back(Matrix::block_diag({m.map(a), m.map(a)}));
    std::vector<Matrix> eps;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        const auto d = static_cast<std::size_t>(m.dims()[v]);
        Matrix e(f, 2 * d, 2 * d);
        for (std::size_t i = 0; i < d; ++i) e.at(i, d + i) = f.one();
        eps.push_back(std::move(e));
    }
    return DiffRep{Rep(f, m.quiver_ptr(), std::move(dims), std::move(maps)), std::move(eps)};
}

DiffRepMap suspend_map(const RepMap& f) {
    DiffRepMap h{suspend(f.from), suspend(f.to), {}};
    for (const auto& b : f.blocks) h.blocks.push_back(Matrix::block_diag({b, b}));
    return h;
}

DiffRepMap copy1_embedding(const Rep& m) {
    const Field f = m.field();
    DiffRepMap h{with_zero_eps(m), suspend(m), {}};
    for (std::size_t v = 0; v < m.quiver().num_vertices(); ++v) {
        const auto d = static_cast<std::size_t>(m.dims()[v]);
        Matrix b(f, 2 * d, d);
        for (std::size_t i = 0; i < d; ++i) b.at(i, i) = f.one();
        h.blocks.push_back(std::move(b));
    }
    return h;
}

RepMap copy2_projection_base(const Rep& m) {
    const Field f = m.field();
    RepMap h{suspend(m).base, m, {}};
    for (std::size_t v = 0; v < m.quiver().num_vertices(); ++v) {
        const auto d = static_cast<std::size_t>(m.dims()[v]);
        Matrix b(f, d, 2 * d);
        for (std::size_t i = 0; i < d; ++i) b.at(i, d + i) = f.one();
        h.blocks.push_back(std::move(b));
    }
    return h;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> diff_shapes(const DiffRep& from,
                                                             const DiffRep& to) {
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    for (std::size_t v = 0; v < from.quiver().num_vertices(); ++v)
        shapes.emplace_back(static_cast<std::size_t>(to.dims()[v]),
                            static_cast<std::size_t>(from.dims()[v]));
    return shapes;
}

} // namespace

Matrix DiffHomSpace::flatten(const DiffRepMap& f) const {
    BlockLinearSystem sys(from.field(), diff_shapes(from, to));
    return sys.flatten(f.blocks);
}

Matrix DiffHomSpace::coordinates(const DiffRepMap& f) const {
    Matrix b(from.field(), flatten(f).rows(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        Matrix col = flatten(basis[c]);
        for (std::size_t r = 0; r < col.rows(); ++r) b.at(r, c) = col.at(r, 0);
    }
    auto x = b.solve(flatten(f));
    if (!x) throw Error("NotContained", "morphism lies outside the hom space");
    return *x;
}

DiffRepMap DiffHomSpace::combine(const Matrix& coeffs) const {
    if (coeffs.rows() != basis.size() || coeffs.cols() != 1)
        throw Error("BadShape", "coefficient column has wrong length");
    DiffRepMap f = zero_diff_map(from, to);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (from.field().is_zero(coeffs.at(i, 0))) continue;
        f = map_add(f, map_scaled(basis[i], coeffs.at(i, 0)));
    }
    return f;
}

DiffHomSpace diff_hom_space(const DiffRep& from, const DiffRep& to) {
    const Field f = from.field();
    const Quiver& q = from.quiver();
    BlockLinearSystem sys(f, diff_shapes(from, to));
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& ar = q.arrows[a];
        const auto tj = static_cast<std::size_t>(to.dims()[ar.tgt]);
        const auto fi = static_cast<std::size_t>(from.dims()[ar.src]);
        sys.add_equation({{ar.src, to.base.map(a), Matrix::identity(f, fi)},
                          {ar.tgt, Matrix::identity(f, tj).neg(), from.base.map(a)}},
                         Matrix(f, tj, fi));
    }
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        const auto tv = static_cast<std::size_t>(to.dims()[v]);
        const auto fv = static_cast<std::size_t>(from.dims()[v]);
        /* phi eps - eps phi = 0 */
        sys.add_equation({{v, Matrix::identity(f, tv), from.eps[v]},
                          {v, to.eps[v].neg(), Matrix::identity(f, fv)}},
                         Matrix(f, tv, fv));
    }
    auto sol = sys.solve();
    DiffHomSpace hs{from, to, {}};
    for (auto& blocks : sol.kernel) hs.basis.push_back(DiffRepMap{from, to, std::move(blocks)});
    return hs;
}

SubDiff sub_diffrep(const DiffRep& m, const std::vector<Subspace>& spaces) {
    SubRep base = sub_rep(m.base, spaces);
    std::vector<Matrix> eps;
    for (std::size_t v = 0; v < spaces.size(); ++v) {
        Matrix img = m.eps[v].mul(spaces[v].basis());
        if (!spaces[v].contains(img))
            throw Error("NotStable", "differential leaves the chosen subspaces");
        eps.push_back(spaces[v].coordinates(img));
    }
    DiffRep sub{std::move(base.sub), std::move(eps)};
    return SubDiff{sub, DiffRepMap{sub, m, base.incl.blocks}};
}

QuotDiff quotient_diffrep(const DiffRep& m, const std::vector<Subspace>& spaces) {
    QuotRep base = quotient_by(m.base, spaces);
    std::vector<Matrix> eps;
    for (std::size_t v = 0; v < spaces.size(); ++v) {
        Matrix img = m.eps[v].mul(spaces[v].basis());
        if (!spaces[v].contains(img))
            throw Error("NotStable", "differential leaves the chosen subspaces");
        Quotient qd = quotient_basis(spaces[v].ambient_dim(), spaces[v]);
        eps.push_back(qd.projection.mul(m.eps[v]).mul(qd.section));
    }
    DiffRep quot{std::move(base.quot), std::move(eps)};
    return QuotDiff{quot, DiffRepMap{m, quot, base.proj.blocks}};
}

SubDiff kernel_diff(const DiffRepMap& f) {
    std::vector<Subspace> spaces;
    for (const auto& b : f.blocks) spaces.push_back(kernel(b));
    return sub_diffrep(f.from, spaces);
}

SubDiff image_diff(const DiffRepMap& f) {
    std::vector<Subspace> spaces;
    for (const auto& b : f.blocks) spaces.push_back(image(b));
    return sub_diffrep(f.to, spaces);
}

QuotDiff cokernel_diff(const DiffRepMap& f) {
    std::vector<Subspace> spaces;
    for (const auto& b : f.blocks) spaces.push_back(image(b));
    return quotient_diffrep(f.to, spaces);
}

SumDecompDiff direct_sum_diff(const std::vector<DiffRep>& parts) {
    std::vector<Rep> bases;
    for (const auto& p : parts) bases.push_back(p.base);
    SumDecomp base = direct_sum(bases);
    std::vector<Matrix> eps;
    for (std::size_t v = 0; v < base.total.quiver().num_vertices(); ++v) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts) blocks.push_back(p.eps[v]);
        eps.push_back(Matrix::block_diag(blocks));
    }
    SumDecompDiff out{DiffRep{base.total, std::move(eps)}, {}, {}};
    for (std::size_t s = 0; s < parts.size(); ++s) {
        out.into.push_back(DiffRepMap{parts[s], out.total, base.into[s].blocks});
        out.onto.push_back(DiffRepMap{out.total, parts[s], base.onto[s].blocks});
    }
    return out;
}

Matrix Homology::representative(std::size_t v) const {
    return ker[v].basis().mul(section_in_ker[v]);
}

Matrix Homology::class_coords(std::size_t v, const Matrix& cols) const {
    return proj_in_ker[v].mul(ker[v].coordinates(cols));
}

Homology homology(const DiffRep& m) {
    const Field f = m.field();
    const Quiver& q = m.quiver();
    Homology out{Rep(f, m.quiver_ptr()), {}, {}, {}};
    DimVector dims(q.num_vertices(), 0);
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        Subspace k = kernel(m.eps[v]);
        /* im eps sits inside ker eps because eps^2 = 0 */
        Subspace im_in_k = Subspace::from_columns(k.coordinates(image(m.eps[v]).basis()));
        Quotient qd = quotient_basis(k.dim(), im_in_k);
        dims[v] = static_cast<std::int64_t>(qd.projection.rows());
        out.ker.push_back(std::move(k));
        out.proj_in_ker.push_back(qd.projection);
        out.section_in_ker.push_back(qd.section);
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& ar = q.arrows[a];
        maps.push_back(out.class_coords(ar.tgt, m.base.map(a).mul(out.representative(ar.src))));
    }
    out.h = Rep(f, m.quiver_ptr(), std::move(dims), std::move(maps));
    return out;
}

RepMap homology_map(const DiffRepMap& f, const Homology& hf, const Homology& ht) {
    RepMap out{hf.h, ht.h, {}};
    for (std::size_t v = 0; v < f.blocks.size(); ++v)
        out.blocks.push_back(ht.class_coords(v, f.blocks[v].mul(hf.representative(v))));
    return out;
}

DiffIsoResult diff_iso_test(const DiffRep& m1, const DiffRep& m2, std::uint64_t seed, int trials) {
    if (m1.dims() != m2.dims()) return {false, true, std::nullopt};
    if (m1.total_dim() == 0) return {true, true, zero_diff_map(m1, m2)};

    const Field f = m1.field();
    DiffHomSpace h12 = diff_hom_space(m1, m2);
    DiffHomSpace e1 = diff_hom_space(m1, m1);
    DiffHomSpace e2 = diff_hom_space(m2, m2);
    if (h12.dim() != e1.dim() || e1.dim() != e2.dim()) return {false, true, std::nullopt};
    if (h12.dim() == 0) return {false, true, std::nullopt};

    for (const auto& b : h12.basis)
        if (b.is_iso()) return {true, true, b};

    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        Matrix coeffs(f, h12.dim(), 1);
        for (std::size_t i = 0; i < h12.dim(); ++i) coeffs.at(i, 0) = rng.field_scalar(f);
        DiffRepMap g = h12.combine(coeffs);
        if (g.is_iso()) return {true, true, g};
    }
    if (h12.dim() <= 8) {
        std::vector<int> c(h12.dim(), 0);
        for (;;) {
            std::size_t k = 0;
            while (k < c.size() && c[k] == 2) c[k++] = 0;
            if (k == c.size()) break;
            ++c[k];
            Matrix coeffs(f, h12.dim(), 1);
            for (std::size_t i = 0; i < h12.dim(); ++i) coeffs.at(i, 0) = f.from_int(c[i]);
            DiffRepMap g = h12.combine(coeffs);
            if (g.is_iso()) return {true, true, g};
        }
    }
    return {false, false, std::nullopt};
}

} // namespace dualrep
