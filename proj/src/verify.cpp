#include "dualrep/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dualrep/ghost.hpp"
#include "dualrep/lambda_ops.hpp"

namespace dualrep {
namespace {

std::string dims_str(const DimVector& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

/* accumulate per-object outcomes into one check line */
struct Tally {
    std::size_t total = 0, failed = 0;
    std::string first_failures;

    void add(bool ok, const std::string& what) {
        ++total;
        if (ok) return;
        ++failed;
        if (first_failures.size() < 120)
            first_failures += (first_failures.empty() ? "" : "; ") + what;
    }
    CheckLine line(const std::string& name, const std::string& extra = "") const {
        std::string detail = std::to_string(total) + " modules";
        if (!extra.empty()) detail += ", " + extra;
        if (failed) detail += "; failing: " + first_failures;
        return CheckLine{name, failed == 0, detail};
    }
};

}  // namespace

bool SuiteReport::ok() const {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok; });
}

std::string SuiteReport::render() const {
    std::string s = "suite: " + suite + "\nquiver: " + quiver + "\n";
    for (const CheckLine& l : lines) {
        s += "check: " + l.name + ": " + (l.ok ? "pass" : "fail");
        if (!l.detail.empty()) s += " (" + l.detail + ")";
        s += "\n";
    }
    s += "result: " + std::string(ok() ? "pass" : "fail") + "\n";
    return s;
}

std::vector<Subspace> generated_submodule(const DiffRep& m, std::vector<Subspace> s) {
    const Quiver& q = m.quiver();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < q.num_vertices(); ++v) {
            Subspace t = s[v].sum(Subspace::from_columns(m.eps[v].mul(s[v].basis())));
            if (t.dim() != s[v].dim()) {
                s[v] = t;
                changed = true;
            }
        }
        for (std::size_t a = 0; a < q.num_arrows(); ++a) {
            std::size_t i = q.arrows[a].src, j = q.arrows[a].tgt;
            Subspace t = s[j].sum(Subspace::from_columns(m.base.map(a).mul(s[i].basis())));
            if (t.dim() != s[j].dim()) {
                s[j] = t;
                changed = true;
            }
        }
    }
    return s;
}

DiffRep random_diffrep(const Field& f, std::shared_ptr<const Quiver> q, Rng& rng) {
    std::vector<DiffRep> parts;
    std::int64_t n = 1 + rng.below(3);
    for (std::int64_t i = 0; i < n; ++i)
        parts.push_back(suspend(projective_rep(
            f, q,
            static_cast<std::size_t>(rng.below(static_cast<std::int64_t>(q->num_vertices()))))));
    SumDecompDiff free_mod = direct_sum_diff(parts);
    std::vector<Subspace> gen;
    for (std::size_t v = 0; v < q->num_vertices(); ++v) {
        std::size_t d = static_cast<std::size_t>(free_mod.total.dims()[v]);
        std::size_t k = static_cast<std::size_t>(rng.below(static_cast<std::int64_t>(d) + 1) / 2);
        Matrix cols(f, d, k);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < k; ++j) cols.at(i, j) = f.from_int(rng.below(11) - 5);
        gen.push_back(Subspace::from_columns(cols));
    }
    return quotient_diffrep(free_mod.total, generated_submodule(free_mod.total, gen)).quot;
}

Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
    if (n == 0) return Matrix(f, 0, 0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix g(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g.at(i, j) = f.from_int(rng.below(19) - 9);
        if (g.rank() == n) return g;
    }
    return Matrix::identity(f, n);
}

DiffRep random_base_change(const DiffRep& m, Rng& rng) {
    const Field& f = m.field();
    const Quiver& q = m.quiver();
    std::vector<Matrix> g, ginv;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        g.push_back(random_invertible(f, static_cast<std::size_t>(m.dims()[v]), rng));
        ginv.push_back(*g.back().inverse());
    }
    std::vector<Matrix> maps, eps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a)
        maps.push_back(g[q.arrows[a].tgt].mul(m.base.map(a)).mul(ginv[q.arrows[a].src]));
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        eps.push_back(g[v].mul(m.eps[v]).mul(ginv[v]));
    Rep base(f, m.quiver_ptr(), m.dims(), std::move(maps));
    return make_diffrep(std::move(base), std::move(eps));
}

std::vector<DiffRepMap> ghost_basis(const DiffRep& m1, const DiffRep& m2) {
    const Field& f = m1.field();
    DiffHomSpace hs = diff_hom_space(m1, m2);
    Homology h1 = homology(m1);
    Homology h2 = homology(m2);
    std::size_t rows = 0;
    for (std::size_t v = 0; v < h1.h.dims().size(); ++v)
        rows += static_cast<std::size_t>(h1.h.dims()[v] * h2.h.dims()[v]);
    Matrix coords(f, rows, hs.dim());
    for (std::size_t t = 0; t < hs.dim(); ++t) {
        RepMap hm = homology_map(hs.basis[t], h1, h2);
        std::size_t r = 0;
        for (const auto& b : hm.blocks)
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j) coords.at(r++, t) = b.at(i, j);
    }
    Matrix ker = coords.kernel_raw();
    std::vector<DiffRepMap> out;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        Matrix col(f, hs.dim(), 1);
        for (std::size_t r = 0; r < hs.dim(); ++r) col.at(r, 0) = ker.at(r, c);
        out.push_back(hs.combine(col));
    }
    return out;
}

bool indecomposable_probe(const DiffRep& m, Rng& rng, int trials) {
    if (m.total_dim() == 0) return false;
    const Field& f = m.field();
    DiffHomSpace endo = diff_hom_space(m, m);
    for (int t = 0; t < trials; ++t) {
        Matrix coeffs(f, endo.dim(), 1);
        for (std::size_t i = 0; i < endo.dim(); ++i) coeffs.at(i, 0) = f.from_int(rng.below(19) - 9);
        DiffRepMap x = endo.combine(coeffs);
        bool invertible = true;
        for (const Matrix& b : x.blocks)
            if (b.rank() != b.rows()) invertible = false;
        if (invertible) continue;
        DiffRepMap y = x;
        for (std::int64_t p = 1; p < m.total_dim() + 1; p *= 2) y = compose(y, y);
        if (!y.is_zero()) return false; /* neither invertible nor nilpotent */
    }
    return true;
}

std::vector<DiffRep> torsionless_corpus(const Field& f, std::shared_ptr<const Quiver> q) {
    LambdaARQuiver g = gamma_L(f, q);
    std::vector<DiffRep> out;
    out.reserve(g.nodes.size());
    for (const auto& n : g.nodes) out.push_back(n.module);
    return out;
}

bool homology_full_on_pair(const DiffRep& m1, const DiffRep& m2) {
    Homology h1 = homology(m1), h2 = homology(m2);
    HomSpace target = hom_space(h1.h, h2.h);
    if (target.dim() == 0) return true;
    DiffHomSpace dom = diff_hom_space(m1, m2);
    Matrix img(m1.field(), target.dim(), dom.dim());
    for (std::size_t t = 0; t < dom.dim(); ++t) {
        Matrix col = target.coordinates(homology_map(dom.basis[t], h1, h2));
        for (std::size_t r = 0; r < target.dim(); ++r) img.at(r, t) = col.at(r, 0);
    }
    return img.rank() == target.dim();
}

bool homotopy_matches_projective_factors(const DiffRep& m1, const DiffRep& m2) {
    StableHom s = stable_hom(m1, m2);
    return s.homotopies == s.through_projectives;
}

SuiteReport verify_theorem2(const Field& f, std::shared_ptr<const Quiver> q, std::uint64_t seed,
                            int trials) {
    SuiteReport r{"theorem2", q->name, {}};
    ARQuiver kq = knit_ar_quiver(f, q);
    Rng rng(seed);
    Tally round_trip, perfect, nonproj, indec, scrambled;
    for (std::size_t i = 0; i < kq.nodes.size(); ++i) {
        const Rep& n = kq.nodes[i].rep;
        std::string tag = "N " + dims_str(n.dims());
        EtaResult e = eta(n);
        round_trip.add(iso_test(homology(e.m).h, n, seed + i, trials).isomorphic, tag);
        perfect.add(is_perfect(e.m), tag);
        nonproj.add(!is_lambda_projective(e.m), tag);
        indec.add(indecomposable_probe(e.m, rng, trials), tag);
        DiffRep scr = random_base_change(e.m, rng);
        scrambled.add(diff_iso_test(eta(homology(scr).h).m, scr, seed + 1000 + i, trials).isomorphic,
                      tag);
    }
    r.lines.push_back(round_trip.line("homology of the approximation returns the module"));
    r.lines.push_back(perfect.line("approximations are perfect"));
    r.lines.push_back(nonproj.line("approximations are not projective"));
    r.lines.push_back(indec.line("approximations are indecomposable"));
    r.lines.push_back(
        scrambled.line("scrambled perfect modules round-trip through approximation"));
    return r;
}

SuiteReport verify_theorem3(const Field& f, std::shared_ptr<const Quiver> q, std::uint64_t /*seed*/,
                            int /*trials*/) {
    SuiteReport r{"theorem3", q->name, {}};
    LambdaARQuiver g = gamma_L(f, q);
    Tally factored;
    std::size_t pairs = 0, fallbacks = 0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t j = 0; j < g.nodes.size(); ++j) {
            ++pairs;
            for (const DiffRepMap& gmap : ghost_basis(g.nodes[i].module, g.nodes[j].module)) {
                std::string tag = g.nodes[i].label + " -> " + g.nodes[j].label;
                try {
                    GhostFactorization fa = factor_through_ghost_generators(gmap);
                    if (fa.used_full_set) ++fallbacks;
                    factored.add(map_sub(fa.recomposed, gmap).is_zero(), tag);
                } catch (const Error& e) {
                    factored.add(false, tag + ": " + e.what());
                }
            }
        }
    r.lines.push_back(CheckLine{
        "spanning ghosts factor through the canonical generators", factored.failed == 0,
        std::to_string(factored.total) + " ghosts, " + std::to_string(pairs) + " pairs, " +
            std::to_string(fallbacks) + " full-set fallbacks" +
            (factored.failed ? "; failing: " + factored.first_failures : "")});
    return r;
}

SuiteReport verify_sgp(const Field& f, std::shared_ptr<const Quiver> q, std::uint64_t seed,
                       int trials) {
    SuiteReport r{"sgp", q->name, {}};
    ARQuiver kq = knit_ar_quiver(f, q);
    for (std::size_t i = 0; i < kq.nodes.size(); ++i) {
        DiffRep m = eta(kq.nodes[i].rep).m;
        SgpWitness w = sgp_witness(m);
        bool square_zero = compose(w.f, w.f).is_zero();
        bool im_eq_ker = true;
        for (std::size_t v = 0; v < w.p.dims().size(); ++v)
            if (image(w.f.blocks[v]) != kernel(w.f.blocks[v])) im_eq_ker = false;
        bool iso = diff_iso_test(image_diff(w.f).sub, m, seed + i, trials).isomorphic;
        bool doubled = w.p.total_dim() == 2 * m.total_dim();
        r.lines.push_back(CheckLine{
            "witness over " + dims_str(homology(m).h.dims()),
            square_zero && im_eq_ker && iso && doubled,
            "|P| = " + std::to_string(w.p.total_dim()) + " = 2|M|, M " + dims_str(m.dims())});
    }
    return r;
}

namespace {

/* positive real roots by reflection closure from the unit vectors */
std::set<DimVector> positive_real_roots(const Quiver& q) {
    const std::size_t n = q.num_vertices();
    auto reflect = [&](const DimVector& d, std::size_t i) {
        DimVector e(n, 0);
        e[i] = 1;
        std::int64_t pairing = euler_form(q, d, e) + euler_form(q, e, d);
        DimVector out = d;
        out[i] -= pairing;
        return out;
    };
    std::set<DimVector> roots;
    std::vector<DimVector> work;
    for (std::size_t i = 0; i < n; ++i) {
        DimVector e(n, 0);
        e[i] = 1;
        roots.insert(e);
        work.push_back(e);
    }
    while (!work.empty()) {
        DimVector d = work.back();
        work.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            DimVector s = reflect(d, i);
            if (std::any_of(s.begin(), s.end(), [](std::int64_t x) { return x < 0; })) continue;
            if (roots.insert(s).second) work.push_back(s);
        }
    }
    return roots;
}

}  // namespace

SuiteReport verify_kac(const Field& f, std::shared_ptr<const Quiver> q, std::uint64_t /*seed*/,
                       int /*trials*/) {
    SuiteReport r{"kac", q->name, {}};
    LambdaARQuiver g = gamma_L(f, q);
    Tally is_root;
    std::map<DimVector, std::size_t> realized;
    for (const auto& node : g.nodes) {
        if (node.cls == LambdaARQuiver::NodeClass::lambda_projective) continue;
        DimVector hd = homology(node.module).h.dims();
        is_root.add(root_type(*q, hd) != RootType::not_a_root, node.label + " H " + dims_str(hd));
        ++realized[hd];
    }
    r.lines.push_back(is_root.line("homology dimension vectors are positive roots"));

    std::set<DimVector> roots = positive_real_roots(*q);
    bool once = realized.size() == roots.size();
    std::string bad;
    for (const auto& root : roots)
        if (!realized.count(root) || realized[root] != 1) {
            once = false;
            if (bad.size() < 90) bad += " " + dims_str(root);
        }
    for (const auto& [d, c] : realized)
        if (c != 1 || !roots.count(d)) {
            once = false;
            if (bad.size() < 90) bad += " " + dims_str(d) + "x" + std::to_string(c);
        }
    r.lines.push_back(CheckLine{"each positive real root is realized exactly once", once,
                                std::to_string(roots.size()) + " roots, " +
                                    std::to_string(is_root.total) + " modules" +
                                    (bad.empty() ? "" : "; offending:" + bad)});
    return r;
}

SuiteReport verify_lemma21(const Field& f, std::shared_ptr<const Quiver> q, std::uint64_t seed,
                           int random_count) {
    SuiteReport r{"lemma21", q->name, {}};
    Rng rng(seed);
    Tally agree;
    std::size_t perfect_count = 0;
    for (int t = 0; t < random_count; ++t) {
        DiffRep m = random_diffrep(f, q, rng);
        bool perf = is_perfect(m);
        if (perf) ++perfect_count;
        agree.add((ext1_lambda(m) == 0) == perf, "dims " + dims_str(m.dims()));
    }
    r.lines.push_back(agree.line("perfect agrees with vanishing ext1 against the algebra",
                                 std::to_string(perfect_count) + " perfect"));
    return r;
}

SuiteReport run_suite(const std::string& name, const Field& f, std::shared_ptr<const Quiver> q,
                      std::uint64_t seed, int trials, int random_count) {
    if (name == "theorem2") return verify_theorem2(f, q, seed, trials);
    if (name == "theorem3") return verify_theorem3(f, q, seed, trials);
    if (name == "sgp") return verify_sgp(f, q, seed, trials);
    if (name == "kac") return verify_kac(f, q, seed, trials);
    if (name == "lemma21") return verify_lemma21(f, q, seed, random_count);
    throw Error("BadSuite",
                "unknown suite '" + name + "' (want theorem2|theorem3|sgp|kac|lemma21)");
}

}  // namespace dualrep
