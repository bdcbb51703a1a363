#include "dualrep/ghost.hpp"

#include <string>
#include <utility>

#include "dualrep/error.hpp"

namespace dualrep {

bool is_ghost(const DiffRepMap& f) {
    Homology hf = homology(f.from);
    Homology ht = homology(f.to);
    return homology_map(f, hf, ht).is_zero();
}

namespace {

/* view a representation map as a map of zero-eps modules */
DiffRepMap as_zero_eps(const RepMap& f) {
    return DiffRepMap{with_zero_eps(f.from), with_zero_eps(f.to), f.blocks};
}

/* invert the cover map of a projective representation (vertexwise) */
RepMap invert_cover(const ProjCover& cov) {
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < cov.pi.blocks.size(); ++v) {
        auto inv = cov.pi.blocks[v].inverse();
        if (!inv) throw Error("Internal", "cover of a projective module is not invertible");
        blocks.push_back(std::move(*inv));
    }
    return RepMap{cov.pi.to, cov.proj, std::move(blocks)};
}

} // namespace

GhostDecomposition ghost_decompose(const DiffRepMap& f) {
    f.validate();
    if (!is_perfect(f.from) || !is_perfect(f.to))
        throw Error("NotPerfect", "ghost decomposition needs perfect source and target");
    if (!is_ghost(f)) throw Error("NotGhost", "the map does not vanish on homology");

    const Field& k = f.from.field();
    std::size_t nv = f.from.quiver().num_vertices();

    ProjSplit spx = split_projective_part(f.from);
    ProjSplit spy = split_projective_part(f.to);

    DiffRep middle = suspend(spy.m2.sub);
    DiffRepMap out = compose(spy.u.incl, spy.p_iso);

    /* columns of the chosen eps-section inside the source: the composite
     * iso suspend(Im eps) -> U lists the copy1 images first */
    DiffRepMap cx = compose(spx.u.incl, spx.p_iso);

    std::vector<Matrix> hb;
    for (std::size_t v = 0; v < nv; ++v) {
        std::size_t sx = static_cast<std::size_t>(spx.m2.sub.dims()[v]);
        std::size_t sy = static_cast<std::size_t>(spy.m2.sub.dims()[v]);
        Matrix kerb = spx.h.ker[v].basis();
        std::vector<std::size_t> idx2;
        for (std::size_t c = 0; c < sx; ++c) idx2.push_back(sx + c);
        Matrix basis = kerb.hstack(cx.blocks[v].sub_cols(idx2));
        auto binv = basis.inverse();
        if (!binv) throw Error("Internal", "kernel plus section do not span the source");
        /* on Ker eps the lift reads f in copy1; on the section it reads the
         * restriction to Im eps in copy2 */
        auto fk = spy.m2.incl.blocks[v].solve(f.blocks[v].mul(kerb));
        auto fs = spy.m2.incl.blocks[v].solve(f.blocks[v].mul(spx.m2.incl.blocks[v]));
        if (!fk || !fs) throw Error("Internal", "ghost image escaped the eps-image of the target");
        Matrix img = fk->vstack(Matrix(k, sy, fk->cols()))
                         .hstack(Matrix(k, sy, fs->cols()).vstack(*fs));
        hb.push_back(img.mul(*binv));
    }
    DiffRepMap through{f.from, middle, std::move(hb)};
    through.validate();

    DiffRepMap f0 = compose(out, through);
    DiffRepMap f1 = map_sub(f, f0);
    for (std::size_t v = 0; v < nv; ++v)
        if (!f1.blocks[v].mul(spx.h.ker[v].basis()).is_zero())
            throw Error("Internal", "remainder does not vanish on Ker eps");
    return {std::move(f0), std::move(f1), std::move(middle), std::move(through), std::move(out)};
}

ArrowGenerator ghost_generator_arrow(const Field& k, std::shared_ptr<const Quiver> qp,
                                     std::size_t alpha) {
    const Quiver& q = *qp;
    if (alpha >= q.arrows.size()) throw Error("BadShape", "no such arrow");
    std::size_t i = q.arrows[alpha].src;
    std::size_t j = q.arrows[alpha].tgt;
    Rep inj = injective_rep(k, qp, i);
    Rep proj = projective_rep(k, qp, j);

    /* couple the injective at i with the projective at j: direct sum as
     * spaces, and alpha additionally carries the trivial-path line of the
     * injective onto the trivial-path line of the projective */
    std::size_t nv = q.num_vertices();
    DimVector dims(nv);
    for (std::size_t v = 0; v < nv; ++v) dims[v] = proj.dims()[v] + inj.dims()[v];
    std::vector<Matrix> maps;
    for (std::size_t b = 0; b < q.arrows.size(); ++b) {
        Matrix m = Matrix::block_diag({proj.map(b), inj.map(b)});
        if (b == alpha) m.at(0, static_cast<std::size_t>(proj.dims()[i])) = k.one();
        maps.push_back(std::move(m));
    }
    Rep coupled(k, qp, dims, maps);
    coupled.validate();

    std::vector<Matrix> ontob;
    for (std::size_t v = 0; v < nv; ++v) {
        std::size_t pv = static_cast<std::size_t>(proj.dims()[v]);
        std::size_t iv = static_cast<std::size_t>(inj.dims()[v]);
        ontob.push_back(Matrix(k, iv, pv).hstack(Matrix::identity(k, iv)));
    }
    RepMap onto{coupled, inj, std::move(ontob)};
    onto.validate();

    EtaResult e = eta(inj);
    auto lifted = lift_through(onto, e.cover.pi);
    if (!lifted) throw Error("Internal", "cover failed to lift through the coupling");

    /* the syzygy lands in the kernel of the readout, i.e. in the projective
     * part; the induced map is the comparison map and is onto */
    std::vector<Matrix> cb;
    for (std::size_t v = 0; v < nv; ++v) {
        Matrix w = lifted->blocks[v].mul(e.omega.incl.blocks[v]);
        std::size_t pv = static_cast<std::size_t>(proj.dims()[v]);
        std::vector<std::size_t> top, bottom;
        for (std::size_t r = 0; r < pv; ++r) top.push_back(r);
        for (std::size_t r = pv; r < w.rows(); ++r) bottom.push_back(r);
        if (!w.sub_rows(bottom).is_zero())
            throw Error("Internal", "syzygy lift escaped the projective part");
        cb.push_back(w.sub_rows(top));
    }
    RepMap comparison{e.omega.sub, proj, std::move(cb)};
    comparison.validate();
    for (std::size_t v = 0; v < nv; ++v)
        if (comparison.blocks[v].rank() != static_cast<std::size_t>(proj.dims()[v]))
            throw Error("Internal", "comparison map is not surjective");

    DiffRep target = with_zero_eps(proj);
    std::vector<Matrix> cblocks;
    for (std::size_t v = 0; v < nv; ++v)
        cblocks.push_back(comparison.blocks[v].mul(e.rho.blocks[v]));
    DiffRepMap c{e.m, target, std::move(cblocks)};
    c.validate();
    return {std::move(e), std::move(target), std::move(comparison), std::move(c)};
}

VertexGenerators ghost_generator_vertex(const Field& k, std::shared_ptr<const Quiver> qp,
                                        std::size_t y) {
    const Quiver& q = *qp;
    if (y >= q.num_vertices()) throw Error("BadShape", "no such vertex");
    Rep inj = injective_rep(k, qp, y);
    Rep proj = projective_rep(k, qp, y);
    SubRep rad = radical_rep(proj);
    std::size_t nv = q.num_vertices();

    /* glue the injective and the projective at the shared line over y: the
     * paths through y, with the trivial paths identified */
    auto pdim = [&](std::size_t v) { return static_cast<std::size_t>(proj.dims()[v]); };
    auto idim = [&](std::size_t v) { return static_cast<std::size_t>(inj.dims()[v]); };
    DimVector dims(nv);
    for (std::size_t v = 0; v < nv; ++v)
        dims[v] = (v == y) ? 1 : static_cast<std::int64_t>(pdim(v) + idim(v));
    auto islot = [&](std::size_t v, std::size_t r) { return v == y ? r : pdim(v) + r; };

    std::vector<Matrix> maps;
    for (std::size_t b = 0; b < q.arrows.size(); ++b) {
        std::size_t vs = q.arrows[b].src, vt = q.arrows[b].tgt;
        Matrix m(k, static_cast<std::size_t>(dims[vt]), static_cast<std::size_t>(dims[vs]));
        const Matrix& pm = proj.map(b);
        for (std::size_t c = 0; c < pm.cols(); ++c)
            for (std::size_t r = 0; r < pm.rows(); ++r) m.at(r, c) = pm.at(r, c);
        const Matrix& im = inj.map(b);
        for (std::size_t c = 0; c < im.cols(); ++c)
            for (std::size_t r = 0; r < im.rows(); ++r)
                m.at(islot(vt, r), islot(vs, c)) = im.at(r, c);
        maps.push_back(std::move(m));
    }
    Rep glued(k, qp, dims, maps);
    glued.validate();

    /* readout onto I(y)/S(y): kill the projective part and the shared line */
    std::vector<Subspace> socle;
    for (std::size_t v = 0; v < nv; ++v)
        socle.push_back(v == y ? Subspace::full(k, 1) : Subspace::zero(k, idim(v)));
    QuotRep qa = quotient_by(inj, socle);

    std::vector<Matrix> bb;
    for (std::size_t v = 0; v < nv; ++v) {
        if (v == y)
            bb.push_back(Matrix(k, static_cast<std::size_t>(qa.quot.dims()[v]), 1));
        else
            bb.push_back(Matrix(k, static_cast<std::size_t>(qa.quot.dims()[v]), pdim(v))
                             .hstack(qa.proj.blocks[v]));
    }
    RepMap onto_quot{glued, qa.quot, std::move(bb)};
    onto_quot.validate();

    /* readout onto I(y): kill the radical of the projective part, send the
     * shared line to the trivial path of the injective */
    std::vector<Matrix> bp;
    for (std::size_t v = 0; v < nv; ++v) {
        if (v == y)
            bp.push_back(Matrix::identity(k, 1));
        else
            bp.push_back(Matrix(k, idim(v), pdim(v)).hstack(Matrix::identity(k, idim(v))));
    }
    RepMap onto_inj{glued, inj, std::move(bp)};
    onto_inj.validate();

    /* comparison maps: lift each cover through the glueing and restrict to
     * the syzygy, which lands in the kernel of the readout */
    EtaResult eta_c = eta(qa.quot);
    EtaResult eta_d = eta(inj);

    auto restrict_to_kernel = [&](const RepMap& readout, const EtaResult& e,
                                  const RepMap& kernel_incl) {
        auto lifted = lift_through(readout, e.cover.pi);
        if (!lifted) throw Error("Internal", "cover failed to lift through the glueing");
        std::vector<Matrix> blocks;
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix w = lifted->blocks[v].mul(e.omega.incl.blocks[v]);
            auto coords = kernel_incl.blocks[v].solve(w);
            if (!coords) throw Error("Internal", "syzygy lift escaped the kernel of the readout");
            blocks.push_back(std::move(*coords));
        }
        RepMap r{e.omega.sub, kernel_incl.from, std::move(blocks)};
        r.validate();
        return r;
    };

    /* kernel of onto_quot = the projective part (shared line included) */
    std::vector<Matrix> pincl;
    for (std::size_t v = 0; v < nv; ++v) {
        if (v == y)
            pincl.push_back(Matrix::identity(k, 1));
        else
            pincl.push_back(Matrix::identity(k, pdim(v)).vstack(Matrix(k, idim(v), pdim(v))));
    }
    RepMap proj_into_glued{proj, glued, std::move(pincl)};
    proj_into_glued.validate();

    /* kernel of onto_inj = the radical of the projective part */
    RepMap rad_into_glued = compose(proj_into_glued, rad.incl);

    RepMap cprime = restrict_to_kernel(onto_quot, eta_c, proj_into_glued);
    RepMap dprime = restrict_to_kernel(onto_inj, eta_d, rad_into_glued);

    DiffRep p0 = with_zero_eps(proj);
    std::vector<Matrix> cblocks, dblocks;
    for (std::size_t v = 0; v < nv; ++v) {
        cblocks.push_back(cprime.blocks[v].mul(eta_c.rho.blocks[v]));
        dblocks.push_back(dprime.blocks[v].mul(eta_d.rho.blocks[v]));
    }
    DiffRepMap c{eta_c.m, p0, std::move(cblocks)};
    c.validate();
    DiffRepMap d{eta_d.m, with_zero_eps(rad.sub), std::move(dblocks)};
    d.validate();

    return {std::move(eta_c), std::move(eta_d), std::move(p0), std::move(rad), std::move(c),
            std::move(d)};
}

namespace {

struct FactorCtx {
    Field k;
    std::shared_ptr<const Quiver> qp;
    std::vector<std::optional<VertexGenerators>> vg;
    std::vector<std::optional<EtaResult>> inj;
    bool used_full = false;

    FactorCtx(Field f, std::shared_ptr<const Quiver> q)
        : k(f), qp(std::move(q)), vg(qp->num_vertices()), inj(qp->num_vertices()) {}

    const VertexGenerators& vertex(std::size_t y) {
        if (!vg[y]) vg[y] = ghost_generator_vertex(k, qp, y);
        return *vg[y];
    }
    const EtaResult& injective_eta(std::size_t x) {
        if (!inj[x]) inj[x] = eta(injective_rep(k, qp, x));
        return *inj[x];
    }
};

/* factor a map into the zero-eps projective at y through the almost-split
 * middle ending there; radical components recurse into strictly later
 * vertices, so the depth is bounded by the longest path */
void factor_to_projective(FactorCtx& ctx, const DiffRepMap& g, std::size_t y,
                          const DiffRepMap& post, std::vector<GhostSummand>& out) {
    const Quiver& q = *ctx.qp;
    Rep pj = projective_rep(ctx.k, ctx.qp, y);
    DiffRep p0 = with_zero_eps(pj);
    SubRep rad = radical_rep(pj);
    bool has_rad = rad.sub.total_dim() > 0;
    DiffRepMap u{with_zero_eps(rad.sub), p0, rad.incl.blocks};
    bool src = q.is_source(y);

    struct Meta {
        GhostSummand::Kind kind;
        std::size_t aux;
        DiffRepMap gen;
        std::optional<DiffRepMap> local_post; /* between gen and p0; none = identity */
        bool radical;
    };
    std::vector<DiffRep> mids;
    std::vector<DiffRepMap> comps;
    std::vector<Meta> meta;

    auto add_generators = [&](bool full) {
        mids.clear();
        comps.clear();
        meta.clear();
        if (src) {
            DiffRep sp = suspend(pj);
            DiffRepMap readout{sp, p0, copy2_projection_base(pj).blocks};
            mids.push_back(sp);
            comps.push_back(readout);
            meta.push_back({GhostSummand::Kind::projective_identity, 0, identity_diff_map(sp),
                            readout, false});
        } else if (!full) {
            const VertexGenerators& gens = ctx.vertex(y);
            mids.push_back(gens.eta_c.m);
            comps.push_back(gens.c);
            meta.push_back({GhostSummand::Kind::vertex_c, 0, gens.c, std::nullopt, false});
        } else {
            for (std::size_t x = 0; x < q.num_vertices(); ++x) {
                const EtaResult& e = ctx.injective_eta(x);
                DiffHomSpace hs = diff_hom_space(e.m, p0);
                for (const auto& b : hs.basis) {
                    mids.push_back(e.m);
                    comps.push_back(b);
                    meta.push_back({GhostSummand::Kind::hom_basis, x, b, std::nullopt, false});
                }
            }
        }
        if (has_rad) {
            mids.push_back(with_zero_eps(rad.sub));
            comps.push_back(u);
            meta.push_back({GhostSummand::Kind::vertex_c, 0, u, std::nullopt, true});
        }
    };

    add_generators(false);
    SumDecompDiff sum = direct_sum_diff(mids);
    DiffRepMap total = zero_diff_map(sum.total, p0);
    for (std::size_t t = 0; t < comps.size(); ++t)
        total = map_add(total, compose(comps[t], sum.onto[t]));
    auto h = lift_through(total, g);
    if (!h && !src) {
        add_generators(true);
        sum = direct_sum_diff(mids);
        total = zero_diff_map(sum.total, p0);
        for (std::size_t t = 0; t < comps.size(); ++t)
            total = map_add(total, compose(comps[t], sum.onto[t]));
        h = lift_through(total, g);
        if (h) ctx.used_full = true;
    }
    if (!h)
        throw Error("FactorizationFailed", "no factorization through the almost-split middle at vertex " +
                                               std::to_string(y + 1));

    for (std::size_t t = 0; t < comps.size(); ++t) {
        DiffRepMap ht = compose(sum.onto[t], *h);
        if (!meta[t].radical) {
            DiffRepMap p = meta[t].local_post ? compose(post, *meta[t].local_post) : post;
            out.push_back({meta[t].kind, y, meta[t].aux, meta[t].gen, std::move(ht), std::move(p)});
            continue;
        }
        /* radical component: split rad P(y) into indecomposable projectives
         * at later vertices and recurse */
        ProjCover rc = projective_cover(rad.sub);
        RepMap rinv = invert_cover(rc);
        for (std::size_t s = 0; s < rc.summands.size(); ++s) {
            RepMap pick = compose(rc.sum.onto[s], rinv);
            std::vector<Matrix> gb;
            for (std::size_t v = 0; v < ht.blocks.size(); ++v)
                gb.push_back(pick.blocks[v].mul(ht.blocks[v]));
            DiffRepMap g2{g.from, with_zero_eps(rc.sum.into[s].from), std::move(gb)};
            RepMap back = compose(rad.incl, compose(rc.pi, rc.sum.into[s]));
            DiffRepMap post2 = compose(post, as_zero_eps(back));
            factor_to_projective(ctx, g2, rc.summands[s], post2, out);
        }
    }
}

} // namespace

GhostFactorization factor_through_ghost_generators(const DiffRepMap& f) {
    GhostDecomposition gd = ghost_decompose(f);
    const Field& k = f.from.field();
    std::size_t nv = f.from.quiver().num_vertices();
    FactorCtx ctx(k, f.from.quiver_ptr());
    std::vector<GhostSummand> out;

    /* the projective-bound part: split the suspension of the eps-image of
     * the target into indecomposable projective summands */
    if (gd.middle.total_dim() > 0) {
        SubRep m2 = eps_image(f.to);
        ProjCover cov = projective_cover(m2.sub);
        RepMap cinv = invert_cover(cov);
        for (std::size_t s = 0; s < cov.summands.size(); ++s) {
            DiffRepMap pre =
                compose(suspend_map(compose(cov.sum.onto[s], cinv)), gd.through);
            DiffRepMap postm = compose(gd.out, suspend_map(compose(cov.pi, cov.sum.into[s])));
            DiffRep part = suspend(cov.sum.into[s].from);
            out.push_back({GhostSummand::Kind::projective_identity, cov.summands[s], 0,
                           identity_diff_map(part), std::move(pre), std::move(postm)});
        }
    }

    /* the remainder kills Ker eps, so it descends to the zero-eps quotient,
     * a projective representation; factor the descent vertexwise */
    if (!gd.f1.is_zero()) {
        std::vector<Subspace> kerspaces;
        for (std::size_t v = 0; v < nv; ++v) kerspaces.push_back(kernel(f.from.eps[v]));
        QuotDiff qx = quotient_diffrep(f.from, kerspaces);
        for (std::size_t v = 0; v < nv; ++v)
            if (!qx.quot.eps[v].is_zero())
                throw Error("Internal", "the quotient by Ker eps kept a differential");
        auto fb = factor_past(qx.proj, gd.f1);
        if (!fb) throw Error("Internal", "remainder failed to descend to the quotient");

        ProjCover cov = projective_cover(qx.quot.base);
        RepMap cinv = invert_cover(cov);
        for (std::size_t s = 0; s < cov.summands.size(); ++s) {
            RepMap pick = compose(cov.sum.onto[s], cinv);
            std::vector<Matrix> gb;
            for (std::size_t v = 0; v < nv; ++v)
                gb.push_back(pick.blocks[v].mul(qx.proj.blocks[v]));
            DiffRepMap g{f.from, with_zero_eps(cov.sum.into[s].from), std::move(gb)};
            RepMap back = compose(cov.pi, cov.sum.into[s]);
            DiffRepMap post = compose(*fb, as_zero_eps(back));
            factor_to_projective(ctx, g, cov.summands[s], post, out);
        }
    }

    /* recompose and verify */
    DiffRepMap sum = zero_diff_map(f.from, f.to);
    for (const auto& s : out) sum = map_add(sum, compose(s.post, compose(s.gen, s.pre)));
    for (std::size_t v = 0; v < nv; ++v)
        if (sum.blocks[v] != f.blocks[v])
            throw Error("Internal", "certificate does not recompose the map");
    return {std::move(out), ctx.used_full, std::move(sum)};
}

} // namespace dualrep
