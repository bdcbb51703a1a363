#include "dualrep/rep_ar.hpp"

#include <algorithm>

#include "dualrep/error.hpp"
#include "dualrep/poly.hpp"

namespace dualrep {

Rep dual_rep(const Rep& m, std::shared_ptr<const Quiver> target) {
    const Quiver& q = m.quiver();
    if (target->num_vertices() != q.num_vertices() || target->num_arrows() != q.num_arrows())
        throw Error("BadShape", "dual target quiver does not mirror the source");
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        if (target->arrows[a].src != q.arrows[a].tgt || target->arrows[a].tgt != q.arrows[a].src)
            throw Error("BadShape", "dual target quiver does not mirror the source");
        maps.push_back(m.map(a).transpose());
    }
    return Rep(m.field(), std::move(target), m.dims(), std::move(maps));
}

namespace {

/* rep morphism P(j) -> P(i) prepending the arrow a: i -> j to every path */
RepMap prepend_arrow(const Field& f, const std::shared_ptr<const Quiver>& qp, std::size_t a) {
    const Quiver& q = *qp;
    const std::size_t i = q.arrows[a].src;
    const std::size_t j = q.arrows[a].tgt;
    Rep pj = projective_rep(f, qp, j);
    Rep pi = projective_rep(f, qp, i);
    auto bj = projective_basis(q, j);
    auto bi = projective_basis(q, i);
    RepMap rho{pj, pi, {}};
    for (std::size_t w = 0; w < q.num_vertices(); ++w) {
        Matrix block(f, bi[w].size(), bj[w].size());
        for (std::size_t c = 0; c < bj[w].size(); ++c) {
            Path img = bj[w][c];
            img.arrows.insert(img.arrows.begin(), a);
            img.src = i;
            auto it = std::find(bi[w].begin(), bi[w].end(), img);
            if (it == bi[w].end()) throw Error("Internal", "prepended path missing from basis");
            block.at(static_cast<std::size_t>(it - bi[w].begin()), c) = f.one();
        }
        rho.blocks.push_back(std::move(block));
    }
    rho.validate();
    return rho;
}

} // namespace

Rep transpose_rep(const Rep& m, std::shared_ptr<const Quiver> target) {
    const Field f = m.field();
    const Quiver& q = m.quiver();

    auto cover0 = projective_cover(m);
    auto omega = kernel_rep(cover0.pi);
    auto cover1 = projective_cover(omega.sub);
    RepMap d = compose(omega.incl, cover1.pi); /* P1 -> P0 */

    if (cover1.proj.total_dim() == 0) return zero_rep(f, std::move(target));

    /* vertex spaces: cokernel of Hom(P0, P(w)) -> Hom(P1, P(w)) */
    std::vector<HomSpace> h1;
    std::vector<Quotient> qd;
    DimVector dims(q.num_vertices(), 0);
    for (std::size_t w = 0; w < q.num_vertices(); ++w) {
        Rep pw = projective_rep(f, m.quiver_ptr(), w);
        HomSpace h0w = hom_space(cover0.proj, pw);
        HomSpace h1w = hom_space(cover1.proj, pw);
        Matrix dmat(f, h1w.dim(), h0w.dim());
        for (std::size_t c = 0; c < h0w.dim(); ++c) {
            Matrix coords = h1w.coordinates(compose(h0w.basis[c], d));
            for (std::size_t r = 0; r < h1w.dim(); ++r) dmat.at(r, c) = coords.at(r, 0);
        }
        qd.push_back(quotient_basis(h1w.dim(), image(dmat)));
        dims[w] = static_cast<std::int64_t>(qd[w].projection.rows());
        h1.push_back(std::move(h1w));
    }

    /* arrow a: i -> j acts on the transpose from vertex j to vertex i */
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const std::size_t i = q.arrows[a].src;
        const std::size_t j = q.arrows[a].tgt;
        RepMap rho = prepend_arrow(f, m.quiver_ptr(), a);
        Matrix action(f, h1[i].dim(), h1[j].dim());
        for (std::size_t c = 0; c < h1[j].dim(); ++c) {
            Matrix coords = h1[i].coordinates(compose(rho, h1[j].basis[c]));
            for (std::size_t r = 0; r < h1[i].dim(); ++r) action.at(r, c) = coords.at(r, 0);
        }
        maps.push_back(qd[i].projection.mul(action).mul(qd[j].section));
    }
    return Rep(f, std::move(target), std::move(dims), std::move(maps));
}

std::optional<Rep> ar_translate(const Rep& m) {
    auto qop = opposite_of(m.quiver());
    Rep tr = transpose_rep(m, qop);
    if (tr.total_dim() == 0) return std::nullopt;
    return dual_rep(tr, m.quiver_ptr());
}

std::optional<Rep> ar_translate_inverse(const Rep& m) {
    auto qop = opposite_of(m.quiver());
    Rep dm = dual_rep(m, qop);
    Rep tr = transpose_rep(dm, m.quiver_ptr());
    if (tr.total_dim() == 0) return std::nullopt;
    return tr;
}

IsoResult iso_test(const Rep& m1, const Rep& m2, std::uint64_t seed, int trials) {
    if (m1.dims() != m2.dims()) return {false, true, std::nullopt};
    if (m1.total_dim() == 0) return {true, true, zero_map(m1, m2)};

    const Field f = m1.field();
    HomSpace h12 = hom_space(m1, m2);
    HomSpace e1 = hom_space(m1, m1);
    HomSpace e2 = hom_space(m2, m2);
    /* an isomorphism would transport End(m1) onto Hom(m1,m2) onto End(m2) */
    if (h12.dim() != e1.dim() || e1.dim() != e2.dim()) return {false, true, std::nullopt};
    if (h12.dim() == 0) return {false, true, std::nullopt};

    auto try_map = [&](const RepMap& g) -> bool { return g.is_iso(); };
    for (const auto& b : h12.basis)
        if (try_map(b)) return {true, true, b};

    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        Matrix coeffs(f, h12.dim(), 1);
        for (std::size_t i = 0; i < h12.dim(); ++i) coeffs.at(i, 0) = rng.field_scalar(f);
        RepMap g = h12.combine(coeffs);
        if (try_map(g)) return {true, true, g};
    }

    /* deterministic small-coefficient sweep as a last resort */
    if (h12.dim() <= 8) {
        std::vector<int> c(h12.dim(), 0);
        for (;;) {
            std::size_t k = 0;
            while (k < c.size() && c[k] == 2) c[k++] = 0;
            if (k == c.size()) break;
            ++c[k];
            Matrix coeffs(f, h12.dim(), 1);
            for (std::size_t i = 0; i < h12.dim(); ++i) coeffs.at(i, 0) = f.from_int(c[i]);
            RepMap g = h12.combine(coeffs);
            if (try_map(g)) return {true, true, g};
        }
    }
    return {false, false, std::nullopt};
}

namespace {

Matrix poly_at_matrix(const Field& f, const Poly& p, const Matrix& m) {
    Matrix acc(f, m.rows(), m.rows());
    for (std::size_t k = p.size(); k-- > 0;) {
        acc = acc.mul(m);
        if (!f.is_zero(p[k]))
            acc = acc.add(Matrix::identity(f, m.rows()).scaled(p[k]));
    }
    return acc;
}

/* Fitting split: for any endomorphism, kernel and image of a stabilized
   power are complementary submodules. */
std::optional<std::vector<Rep>> fitting_split(const Rep& r, const RepMap& theta) {
    const Field f = r.field();
    const auto n = static_cast<std::size_t>(r.total_dim());
    std::vector<Subspace> ker_sp, im_sp;
    for (const auto& b : theta.blocks) {
        Matrix pw = Matrix::identity(f, b.rows());
        for (std::size_t e = 0; e < n; ++e) pw = pw.mul(b);
        ker_sp.push_back(kernel(pw));
        im_sp.push_back(image(pw));
    }
    Rep k = sub_rep(r, ker_sp).sub;
    Rep i = sub_rep(r, im_sp).sub;
    if (k.total_dim() == 0 || i.total_dim() == 0) return std::nullopt;
    return std::vector<Rep>{std::move(k), std::move(i)};
}

/* over the rationals the coprime factorization is only squarefree; peel off
   small integer roots so idempotent-like spectra still separate */
std::vector<PolyFactor> refine_rational(const Field& f, std::vector<PolyFactor> factors) {
    if (f.kind() != Field::Kind::rationals) return factors;
    std::vector<PolyFactor> out;
    for (auto& [part, mult] : factors) {
        Poly rest = part;
        for (int c = -8; c <= 8; ++c) {
            Poly lin{f.from_int(-c), f.one()};
            int count = 0;
            while (poly_deg(rest) >= 1 && f.is_zero(poly_eval(f, rest, f.from_int(c)))) {
                rest = poly_divmod(f, rest, lin).first;
                ++count;
            }
            if (count > 0) out.push_back({lin, count * mult});
        }
        if (poly_deg(rest) >= 1) out.push_back({std::move(rest), mult});
    }
    return out;
}

/* try to split r along the primary decomposition of one endomorphism */
std::optional<std::vector<Rep>> split_by(const Rep& r, const RepMap& theta, std::uint64_t seed) {
    const Field f = r.field();
    if (auto fit = fitting_split(r, theta)) return fit;
    Poly chi = poly_from_ints(f, {1});
    for (const auto& b : theta.blocks) chi = poly_mul(f, chi, b.char_poly());
    auto factors = refine_rational(f, poly_coprime_factor(f, chi, seed));
    if (factors.size() <= 1) return std::nullopt;

    std::vector<Rep> parts;
    std::int64_t total = 0;
    for (const auto& [g, mult] : factors) {
        std::vector<Subspace> spaces;
        for (std::size_t v = 0; v < theta.blocks.size(); ++v) {
            Matrix gm = poly_at_matrix(f, g, theta.blocks[v]);
            Matrix pw = Matrix::identity(f, gm.rows());
            for (int e = 0; e < mult; ++e) pw = pw.mul(gm);
            spaces.push_back(kernel(pw));
        }
        Rep part = sub_rep(r, spaces).sub;
        total += part.total_dim();
        if (part.total_dim() > 0) parts.push_back(std::move(part));
    }
    if (total != r.total_dim())
        throw Error("Internal", "primary decomposition does not fill the module");
    if (parts.size() <= 1) return std::nullopt;
    return parts;
}

void split_leaves(const Rep& r, std::uint64_t seed, int trials, std::vector<Rep>& leaves,
                  bool& certified) {
    if (r.total_dim() == 0) return;
    HomSpace end = hom_space(r, r);
    if (end.dim() == 1) {
        leaves.push_back(r);
        return;
    }

    std::vector<RepMap> candidates;
    for (const auto& b : end.basis) candidates.push_back(b);
    for (std::size_t i = 0; i < end.dim(); ++i)
        for (std::size_t j = i + 1; j < end.dim(); ++j)
            candidates.push_back(map_add(end.basis[i], end.basis[j]));
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        Matrix coeffs(r.field(), end.dim(), 1);
        for (std::size_t i = 0; i < end.dim(); ++i) coeffs.at(i, 0) = rng.field_scalar(r.field());
        candidates.push_back(end.combine(coeffs));
    }

    for (const auto& theta : candidates) {
        if (auto parts = split_by(r, theta, seed)) {
            for (const auto& p : *parts) split_leaves(p, seed + 1, trials, leaves, certified);
            return;
        }
    }
    /* no endomorphism split the module; endomorphisms are plentiful, so the
       failed search is strong but not conclusive evidence */
    leaves.push_back(r);
    certified = false;
}

} // namespace

Decomposition decompose(const Rep& m, std::uint64_t seed, int trials) {
    Decomposition out;
    split_leaves(m, seed, trials, out.leaves, out.certified);
    for (const Rep& leaf : out.leaves) {
        bool grouped = false;
        for (auto& part : out.parts) {
            if (iso_test(part.rep, leaf, seed, trials).isomorphic) {
                ++part.multiplicity;
                grouped = true;
                break;
            }
        }
        if (!grouped) out.parts.push_back({leaf, 1});
    }
    return out;
}

std::optional<std::size_t> ARQuiver::find_dim(const DimVector& d) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].dim == d) return i;
    return std::nullopt;
}

ARQuiver knit_ar_quiver(Field f, std::shared_ptr<const Quiver> q) {
    if (!is_dynkin(*q))
        throw Error("NotRepresentationFinite",
                    "underlying graph of " + q->name + " is not Dynkin");

    ARQuiver ar;
    constexpr std::size_t kOrbitCap = 200;
    for (std::size_t y = 0; y < q->num_vertices(); ++y) {
        Rep current = projective_rep(f, q, y);
        std::optional<std::size_t> prev;
        for (std::size_t step = 0;; ++step) {
            if (step > kOrbitCap) throw Error("Internal", "translate orbit failed to terminate");
            ar.nodes.push_back(
                ARQuiver::Node{current, current.dims(), step == 0, false, prev, std::nullopt});
            const std::size_t here = ar.nodes.size() - 1;
            if (prev) ar.nodes[*prev].tau_inv = here;
            auto next = ar_translate_inverse(current);
            if (!next) {
                ar.nodes[here].injective = true;
                break;
            }
            prev = here;
            current = *next;
        }
    }

    /* arrows: irreducible maps = rad / rad^2 computed in hom coordinates.
       All nodes are bricks with distinct dimension vectors, so rad(X,Y) is
       the full hom space for X != Y and zero for X = Y. */
    const std::size_t n = ar.nodes.size();
    std::vector<std::vector<HomSpace>> homs(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            homs[x].push_back(hom_space(ar.nodes[x].rep, ar.nodes[y].rep));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y || homs[x][y].dim() == 0) continue;
            const std::size_t amb = homs[x][y].flatten(zero_map(ar.nodes[x].rep, ar.nodes[y].rep)).rows();
            Matrix span(f, amb, 0);
            for (std::size_t z = 0; z < n; ++z) {
                if (z == x || z == y) continue;
                for (const auto& g : homs[z][y].basis)
                    for (const auto& h : homs[x][z].basis)
                        span = span.hstack(homs[x][y].flatten(compose(g, h)));
            }
            const std::size_t rad2 = image(span).dim();
            if (homs[x][y].dim() > rad2)
                ar.arrows.push_back({x, y, homs[x][y].dim() - rad2});
        }
    }
    return ar;
}

} // namespace dualrep
