#include "dualrep/lambda_ops.hpp"

#include <utility>

#include "dualrep/error.hpp"
#include "dualrep/linsys.hpp"

namespace dualrep {

RepMap eps_endo(const DiffRep& m) {
    RepMap f{m.base, m.base, m.eps};
    f.validate();
    return f;
}

DiffRepMap mult_eps(const DiffRep& m) {
    DiffRepMap f{m, m, m.eps};
    f.validate();
    return f;
}

SubRep eps_kernel(const DiffRep& m) { return kernel_rep(eps_endo(m)); }

SubRep eps_image(const DiffRep& m) { return image_rep(eps_endo(m)); }

/* ---- hom-space solvers ------------------------------------------------- */

namespace {

Matrix flatten_blocks(const Field& f, const std::vector<Matrix>& blocks) {
    std::size_t total = 0;
    for (const Matrix& b : blocks) total += b.rows() * b.cols();
    Matrix col(f, total, 1);
    std::size_t off = 0;
    for (const Matrix& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) col.at(off++, 0) = b.at(i, j);
    }
    return col;
}

/* Express f in the coordinates of candidate maps and solve; shared by the
 * four lift/factor variants. */
template <typename MapT, typename SpaceT, typename ComposeFn>
std::optional<MapT> solve_in_hom(const SpaceT& candidates, const MapT& target,
                                 ComposeFn&& composed) {
    const Field f = target.from.field();
    Matrix rhs = flatten_blocks(f, target.blocks);
    Matrix lhs(f, rhs.rows(), 0);
    for (std::size_t i = 0; i < candidates.dim(); ++i)
        lhs = lhs.hstack(flatten_blocks(f, composed(candidates.basis[i]).blocks));
    auto coeffs = lhs.solve(rhs);
    if (!coeffs) return std::nullopt;
    return candidates.combine(*coeffs);
}

} // namespace

std::optional<DiffRepMap> lift_through(const DiffRepMap& g, const DiffRepMap& f) {
    if (f.to != g.to) throw Error("BadShape", "lift target mismatch");
    auto hs = diff_hom_space(f.from, g.from);
    return solve_in_hom(hs, f, [&](const DiffRepMap& h) { return compose(g, h); });
}

std::optional<RepMap> lift_through(const RepMap& g, const RepMap& f) {
    if (f.to != g.to) throw Error("BadShape", "lift target mismatch");
    auto hs = hom_space(f.from, g.from);
    return solve_in_hom(hs, f, [&](const RepMap& h) { return compose(g, h); });
}

std::optional<DiffRepMap> factor_past(const DiffRepMap& p, const DiffRepMap& f) {
    if (f.from != p.from) throw Error("BadShape", "factor source mismatch");
    auto hs = diff_hom_space(p.to, f.to);
    return solve_in_hom(hs, f, [&](const DiffRepMap& h) { return compose(h, p); });
}

std::optional<RepMap> factor_past(const RepMap& p, const RepMap& f) {
    if (f.from != p.from) throw Error("BadShape", "factor source mismatch");
    auto hs = hom_space(p.to, f.to);
    return solve_in_hom(hs, f, [&](const RepMap& h) { return compose(h, p); });
}

/* ---- perfect / torsionless tests --------------------------------------- */

bool is_perfect(const DiffRep& m) { return is_projective_rep(m.base); }

bool is_torsionless(const DiffRep& m) {
    const Quiver& q = m.quiver();
    std::vector<Subspace> joint;
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        joint.push_back(Subspace::full(m.field(), static_cast<std::size_t>(m.dims()[v])));

    for (std::size_t y = 0; y < q.num_vertices(); ++y) {
        DiffRep py = suspend(projective_rep(m.field(), m.quiver_ptr(), y));
        for (const DiffRepMap& f : diff_hom_space(m, py).basis)
            for (std::size_t v = 0; v < q.num_vertices(); ++v)
                joint[v] = joint[v].intersect(kernel(f.blocks[v]));
    }
    for (const Subspace& s : joint)
        if (s.dim() != 0) return false;
    return true;
}

bool is_lambda_projective(const DiffRep& m) {
    return is_perfect(m) && homology(m).h.total_dim() == 0;
}

/* ---- normal form ------------------------------------------------------- */

namespace {

/* Representation-level section S of eps onto its image: eps.S = inclusion.
 * Exists exactly when the image is projective (the base being perfect is
 * enough).  Returned blocks map the image subrepresentation into the base. */
std::vector<Matrix> eps_section(const DiffRep& m, const SubRep& m2) {
    const Field f = m.field();
    const Quiver& q = m.quiver();
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        shapes.emplace_back(static_cast<std::size_t>(m.dims()[v]),
                            static_cast<std::size_t>(m2.sub.dims()[v]));
    BlockLinearSystem sys(f, shapes);
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        std::size_t cols = shapes[v].second;
        sys.add_equation({{v, m.eps[v], Matrix::identity(f, cols)}}, m2.incl.blocks[v]);
    }
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        std::size_t i = q.arrows[a].src, j = q.arrows[a].tgt;
        Matrix zero(f, static_cast<std::size_t>(m.dims()[j]), shapes[i].second);
        sys.add_equation({{i, m.base.map(a), Matrix::identity(f, shapes[i].second)},
                          {j, Matrix::identity(f, shapes[j].first).neg(), m2.sub.map(a)}},
                         zero);
    }
    auto sol = sys.solve();
    if (!sol.consistent)
        throw Error("Internal", "no equivariant section of eps onto its image");
    return sol.particular;
}

} // namespace

NormalForm perfect_normal_form(const DiffRep& m) {
    if (!is_perfect(m)) throw Error("NotPerfect", "module has non-projective base");
    const Field f = m.field();
    const Quiver& q = m.quiver();
    SubRep m1 = eps_kernel(m);
    SubRep m2 = eps_image(m);
    std::vector<Matrix> section = eps_section(m, m2);

    SumDecomp parts = direct_sum({m1.sub, m2.sub});
    std::vector<Matrix> eps_form, iso_blocks;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        std::size_t d1 = static_cast<std::size_t>(m1.sub.dims()[v]);
        std::size_t d2 = static_cast<std::size_t>(m2.sub.dims()[v]);
        auto uprime = m1.incl.blocks[v].solve(m2.incl.blocks[v]); /* image inside the kernel */
        if (!uprime) throw Error("Internal", "eps image not inside its kernel");
        Matrix e(f, d1 + d2, d1 + d2);
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d2; ++j) e.at(i, d1 + j) = uprime->at(i, j);
        eps_form.push_back(std::move(e));
        iso_blocks.push_back(m1.incl.blocks[v].hstack(section[v]));
    }
    DiffRep form{parts.total, eps_form};
    form.validate();
    DiffRepMap iso{form, m, iso_blocks};
    iso.validate();
    if (!iso.is_iso()) throw Error("Internal", "normal-form comparison map is singular");
    return NormalForm{std::move(form), std::move(iso)};
}

/* ---- projective cover and ext^1 ---------------------------------------- */

std::vector<Subspace> lambda_radical_spaces(const DiffRep& m) {
    std::vector<Subspace> rad = radical_spaces(m.base);
    for (std::size_t v = 0; v < rad.size(); ++v) rad[v] = rad[v].sum(image(m.eps[v]));
    return rad;
}

LambdaCover lambda_projective_cover(const DiffRep& m) {
    const Field f = m.field();
    const Quiver& q = m.quiver();
    std::vector<Subspace> rad = lambda_radical_spaces(m);

    std::vector<DiffRep> parts;
    std::vector<std::size_t> summands;
    std::vector<Matrix> generators;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        Quotient top = quotient_basis(static_cast<std::size_t>(m.dims()[v]), rad[v]);
        for (std::size_t r = 0; r < top.section.cols(); ++r) {
            parts.push_back(suspend(projective_rep(f, m.quiver_ptr(), v)));
            summands.push_back(v);
            generators.push_back(top.section.sub_cols({r}));
        }
    }
    if (parts.empty()) {
        if (m.total_dim() != 0) throw Error("Internal", "nonzero module with zero top");
        DiffRep zero = with_zero_eps(Rep(f, m.quiver_ptr()));
        return LambdaCover{zero, zero_diff_map(zero, m), {}, SumDecompDiff{zero, {}, {}}};
    }

    SumDecompDiff sum = direct_sum_diff(parts);
    std::vector<std::vector<std::vector<Path>>> bases;
    for (std::size_t s = 0; s < parts.size(); ++s) bases.push_back(projective_basis(q, summands[s]));

    DiffRepMap pi{sum.total, m, {}};
    for (std::size_t w = 0; w < q.num_vertices(); ++w) {
        Matrix block(f, static_cast<std::size_t>(m.dims()[w]), 0);
        for (std::size_t s = 0; s < parts.size(); ++s) {
            Matrix plain(f, block.rows(), 0); /* generator translated along paths */
            for (const Path& p : bases[s][w])
                plain = plain.hstack(m.base.path_map(p).mul(generators[s]));
            block = block.hstack(m.eps[w].mul(plain)).hstack(plain);
        }
        if (block.rank() != block.rows())
            throw Error("Internal", "cover map fails to be surjective");
        pi.blocks.push_back(std::move(block));
    }
    pi.validate();
    return LambdaCover{sum.total, std::move(pi), std::move(summands), std::move(sum)};
}

std::size_t ext1_lambda(const DiffRep& m) {
    LambdaCover cover = lambda_projective_cover(m);
    SubDiff k = kernel_diff(cover.pi);
    const Quiver& q = m.quiver();
    std::int64_t total = 0;
    for (std::size_t y = 0; y < q.num_vertices(); ++y) {
        DiffRep py = suspend(projective_rep(m.field(), m.quiver_ptr(), y));
        std::int64_t d = static_cast<std::int64_t>(diff_hom_space(k.sub, py).dim());
        d -= static_cast<std::int64_t>(diff_hom_space(cover.proj, py).dim());
        d += static_cast<std::int64_t>(diff_hom_space(m, py).dim());
        if (d < 0) throw Error("Internal", "negative ext summand");
        total += d;
    }
    return static_cast<std::size_t>(total);
}

/* ---- the approximation ------------------------------------------------- */

EtaResult eta(const Rep& n) {
    const Field f = n.field();
    const Quiver& q = n.quiver();
    ProjCover cover = projective_cover(n);
    SubRep omega = kernel_rep(cover.pi);

    DiffRep part0 = with_zero_eps(cover.proj);
    DiffRep part1 = suspend(omega.sub);
    SumDecompDiff ambient = direct_sum_diff({part0, part1});

    /* glue the syzygy inside the cover to the eps-part of its suspension */
    std::vector<Subspace> relations;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        std::size_t w = static_cast<std::size_t>(omega.sub.dims()[v]);
        std::vector<std::size_t> copy1(w);
        for (std::size_t k = 0; k < w; ++k) copy1[k] = k;
        Matrix cols = ambient.into[0].blocks[v].mul(omega.incl.blocks[v]).sub(
            ambient.into[1].blocks[v].sub_cols(copy1));
        relations.push_back(Subspace::from_columns(cols));
    }
    QuotDiff quot = quotient_diffrep(ambient.total, relations);
    DiffRep m = quot.quot;

    /* right inverse of the quotient projection; any choice works because the
     * maps below kill the relation subspace */
    std::vector<Matrix> section;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        auto s = quot.proj.blocks[v].solve(
            Matrix::identity(f, static_cast<std::size_t>(m.dims()[v])));
        if (!s) throw Error("Internal", "quotient projection is not surjective");
        section.push_back(std::move(*s));
    }

    DiffRepMap approx{m, with_zero_eps(n), {}};
    DiffRepMap rho{m, with_zero_eps(omega.sub), {}};
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        std::size_t p0 = static_cast<std::size_t>(cover.proj.dims()[v]);
        std::size_t w = static_cast<std::size_t>(omega.sub.dims()[v]);
        Matrix ga = cover.pi.blocks[v].hstack(Matrix(f, static_cast<std::size_t>(n.dims()[v]), 2 * w));
        approx.blocks.push_back(ga.mul(section[v]));
        Matrix gr = Matrix(f, w, p0 + w).hstack(Matrix::identity(f, w));
        rho.blocks.push_back(gr.mul(section[v]));
    }
    approx.validate();
    rho.validate();

    DiffRepMap mu_prime = compose(quot.proj, ambient.into[0]);
    DiffRepMap u_prime = compose(quot.proj, ambient.into[1]);
    return EtaResult{n,     m,        std::move(approx),  std::move(rho), std::move(cover),
                     omega, mu_prime, std::move(u_prime), std::move(quot), std::move(ambient)};
}

/* ---- splitting off the projective part --------------------------------- */

ProjSplit split_projective_part(const DiffRep& m) {
    if (!is_perfect(m)) throw Error("NotPerfect", "module has non-projective base");
    const Field f = m.field();
    const Quiver& q = m.quiver();
    SubRep m2 = eps_image(m);
    std::vector<Matrix> section = eps_section(m, m2);

    std::vector<Subspace> u_spaces;
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        u_spaces.push_back(Subspace::from_columns(m2.incl.blocks[v].hstack(section[v])));
    SubDiff u = sub_diffrep(m, u_spaces);

    DiffRepMap p_iso{suspend(m2.sub), u.sub, {}};
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        p_iso.blocks.push_back(u_spaces[v].coordinates(m2.incl.blocks[v].hstack(section[v])));
    p_iso.validate();
    if (!p_iso.is_iso()) throw Error("Internal", "suspension comparison map is singular");

    QuotDiff quotient = quotient_diffrep(m, u_spaces);
    Homology h = homology(m);
    RepMap quot_to_h{quotient.quot.base, h.h, {}};
    DiffRepMap onto_h{m, with_zero_eps(h.h), {}};
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        Matrix psi = quotient.proj.blocks[v].mul(h.representative(v));
        auto inv = psi.inverse();
        if (!inv) throw Error("Internal", "homology does not complement the projective part");
        quot_to_h.blocks.push_back(*inv);
        onto_h.blocks.push_back(inv->mul(quotient.proj.blocks[v]));
    }
    quot_to_h.validate();
    onto_h.validate();
    return ProjSplit{std::move(u),        std::move(p_iso), std::move(quotient), std::move(h),
                     std::move(quot_to_h), std::move(onto_h), std::move(m2)};
}

/* ---- complete-resolution witness --------------------------------------- */

namespace {

SgpWitness trivial_witness(const DiffRep& m) {
    SumDecompDiff p = direct_sum_diff({m, m});
    DiffRepMap f = compose(p.into[0], p.onto[1]);
    return SgpWitness{p.total, std::move(f), p.into[0]};
}

DiffRepMap copy2_readout(const Rep& base) {
    DiffRepMap r{suspend(base), with_zero_eps(base), copy2_projection_base(base).blocks};
    r.validate();
    return r;
}

std::optional<DiffRepMap> invert(const DiffRepMap& f) {
    DiffRepMap inv{f.to, f.from, {}};
    for (const Matrix& b : f.blocks) {
        auto i = b.inverse();
        if (!i) return std::nullopt;
        inv.blocks.push_back(std::move(*i));
    }
    inv.validate();
    return inv;
}

} // namespace

SgpWitness sgp_witness(const DiffRep& m) {
    if (!is_perfect(m)) throw Error("NotPerfect", "module has non-projective base");
    ProjSplit sp = split_projective_part(m);
    if (sp.h.h.total_dim() == 0) return trivial_witness(m);

    EtaResult e = eta(sp.h.h);
    DiffRep part0 = suspend(e.omega.sub);
    DiffRep part1 = suspend(e.cover.proj);
    SumDecompDiff p = direct_sum_diff({part0, part1});

    /* the square-zero endomorphism [[-eps, 0], [incl-suspended, eps]] */
    DiffRepMap f = map_add(
        map_add(map_scaled(compose(p.into[0], compose(mult_eps(part0), p.onto[0])),
                           m.field().from_int(-1)),
                compose(p.into[1], compose(suspend_map(e.omega.incl), p.onto[0]))),
        compose(p.into[1], compose(mult_eps(part1), p.onto[1])));

    /* surjection p -> eta with kernel = Ker f */
    DiffRepMap g = map_add(compose(e.u_prime, p.onto[0]),
                           compose(compose(e.mu_prime, copy2_readout(e.cover.proj)), p.onto[1]));

    DiffRepMap embed_eta{e.m, p.total, {}};
    for (std::size_t v = 0; v < e.m.quiver().num_vertices(); ++v) {
        auto s = g.blocks[v].solve(
            Matrix::identity(m.field(), static_cast<std::size_t>(e.m.dims()[v])));
        if (!s) throw Error("Internal", "witness comparison map is not surjective");
        embed_eta.blocks.push_back(f.blocks[v].mul(*s));
    }
    embed_eta.validate();

    /* carry the witness from eta(H m) over to m */
    auto phi = lift_through(sp.onto_h, e.approx);
    if (!phi) throw Error("Internal", "approximation does not lift through the homology projection");
    if (auto phi_inv = invert(*phi)) {
        DiffRepMap embed = compose(embed_eta, *phi_inv);
        return SgpWitness{p.total, std::move(f), std::move(embed)};
    }

    /* m has projective summands: split them off and add a trivial block */
    auto r = factor_past(*phi, identity_diff_map(e.m));
    if (!r) throw Error("Internal", "approximation embedding does not split");
    QuotDiff coker = cokernel_diff(*phi);
    if (!is_lambda_projective(coker.quot))
        throw Error("Internal", "complement of the approximation image is not projective");
    SumDecompDiff pq = direct_sum_diff({coker.quot, coker.quot});
    DiffRepMap fq = compose(pq.into[0], pq.onto[1]);
    SumDecompDiff total = direct_sum_diff({p.total, pq.total});
    DiffRepMap f_total = map_add(compose(total.into[0], compose(f, total.onto[0])),
                                 compose(total.into[1], compose(fq, total.onto[1])));
    DiffRepMap embed = map_add(compose(total.into[0], compose(embed_eta, *r)),
                               compose(total.into[1], compose(pq.into[0], coker.proj)));
    return SgpWitness{total.total, std::move(f_total), std::move(embed)};
}

/* ---- stable hom -------------------------------------------------------- */

StableHom stable_hom(const DiffRep& m1, const DiffRep& m2) {
    if (!is_perfect(m1) || !is_perfect(m2))
        throw Error("NotPerfect", "stable hom needs perfect endpoints");
    const Field f = m1.field();
    DiffHomSpace hom = diff_hom_space(m1, m2);

    Matrix proj_cols(f, hom.dim(), 0);
    LambdaCover cover = lambda_projective_cover(m2);
    for (const DiffRepMap& b : diff_hom_space(m1, cover.proj).basis)
        proj_cols = proj_cols.hstack(hom.coordinates(compose(cover.pi, b)));
    Subspace through = Subspace::from_columns(proj_cols);

    Matrix homo_cols(f, hom.dim(), 0);
    for (const RepMap& h : hom_space(m1.base, m2.base).basis) {
        DiffRepMap g{m1, m2, {}};
        for (std::size_t v = 0; v < h.blocks.size(); ++v)
            g.blocks.push_back(m2.eps[v].mul(h.blocks[v]).add(h.blocks[v].mul(m1.eps[v])));
        g.validate();
        homo_cols = homo_cols.hstack(hom.coordinates(g));
    }
    Subspace homotopies = Subspace::from_columns(homo_cols);
    if (!(through == homotopies))
        throw Error("Invariant", "homotopy subspace differs from the projective factorizations");

    Quotient quot = quotient_basis(hom.dim(), through);
    std::vector<DiffRepMap> basis_mod;
    for (std::size_t c = 0; c < quot.section.cols(); ++c)
        basis_mod.push_back(hom.combine(quot.section.sub_cols({c})));
    return StableHom{std::move(hom), std::move(through), std::move(homotopies),
                     std::move(basis_mod)};
}

} // namespace dualrep
