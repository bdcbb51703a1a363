#include "dualrep/gamma.hpp"

#include <sstream>
#include <utility>

#include "dualrep/error.hpp"

namespace dualrep {

namespace {

std::string dim_string(const DimVector& d) {
    std::string out;
    for (auto x : d) out += std::to_string(x);
    return out;
}

} // namespace

std::string letter_label(const DiffRep& m) {
    std::string out;
    for (std::size_t v = m.dims().size(); v-- > 0;) {
        std::size_t d = static_cast<std::size_t>(m.dims()[v]);
        if (d == 0) {
            out += '0';
            continue;
        }
        std::size_t r = m.eps[v].rank();
        out += std::string(r, 'A') + std::string(d - 2 * r, 'k');
    }
    return out;
}

LambdaARQuiver gamma_L(Field f, std::shared_ptr<const Quiver> qp) {
    ARQuiver kq = knit_ar_quiver(f, qp);
    const Quiver& q = *qp;
    LambdaARQuiver g{{}, {}, kq};

    auto kq_index = [&](const DimVector& d) {
        auto i = kq.find_dim(d);
        if (!i) throw Error("Internal", "knitted quiver is missing the node " + dim_string(d));
        return *i;
    };

    for (const auto& node : kq.nodes) {
        EtaResult e = eta(node.rep);
        auto cls = node.projective ? LambdaARQuiver::NodeClass::kq_projective_in_L
                                   : LambdaARQuiver::NodeClass::eta_image;
        g.nodes.push_back({letter_label(e.m), "eta(" + dim_string(node.dim) + ")", e.m, cls,
                           std::nullopt});
    }
    std::vector<std::size_t> pnode(q.num_vertices());
    for (std::size_t y = 0; y < q.num_vertices(); ++y) {
        DiffRep p = suspend(projective_rep(f, qp, y));
        pnode[y] = g.nodes.size();
        g.nodes.push_back({letter_label(p), "P(" + q.vertices[y] + ")", std::move(p),
                           LambdaARQuiver::NodeClass::lambda_projective, std::nullopt});
    }

    /* translation: the knitted translate off the projectives, the
     * approximated injective on the zero-eps projectives */
    for (std::size_t y = 0; y < q.num_vertices(); ++y) {
        std::size_t at = kq_index(projective_rep(f, qp, y).dims());
        g.nodes[at].tau = kq_index(injective_rep(f, qp, y).dims());
    }
    for (std::size_t i = 0; i < kq.nodes.size(); ++i)
        if (!kq.nodes[i].projective) g.nodes[i].tau = kq.nodes[i].tau;

    for (const auto& a : kq.arrows)
        g.arrows.push_back({a.from, a.to, a.mult, LambdaARQuiver::ArrowKind::iota_image});
    for (const auto& al : q.arrows)
        g.arrows.push_back({kq_index(injective_rep(f, qp, al.src).dims()),
                            kq_index(projective_rep(f, qp, al.tgt).dims()), 1,
                            LambdaARQuiver::ArrowKind::ghost});
    for (std::size_t y = 0; y < q.num_vertices(); ++y) {
        std::size_t s = kq_index(simple_rep(f, qp, y).dims());
        g.arrows.push_back({s, pnode[y], 1, LambdaARQuiver::ArrowKind::projective_mesh});
        if (q.is_source(y)) {
            g.arrows.push_back({pnode[y], kq_index(projective_rep(f, qp, y).dims()), 1,
                                LambdaARQuiver::ArrowKind::projective_mesh});
        } else {
            auto ti = kq.nodes[s].tau_inv;
            if (!ti) throw Error("Internal", "non-injective simple lost its inverse translate");
            g.arrows.push_back({pnode[y], *ti, 1, LambdaARQuiver::ArrowKind::projective_mesh});
        }
    }
    return g;
}

LambdaARQuiver stable_gamma(const LambdaARQuiver& g) {
    LambdaARQuiver s{{}, {}, g.kq};
    std::size_t n = g.kq.nodes.size();
    for (std::size_t i = 0; i < n; ++i) s.nodes.push_back(g.nodes[i]);
    for (const auto& a : g.arrows)
        if (a.from < n && a.to < n) s.arrows.push_back(a);
    return s;
}

ARSequenceL ar_sequence_ending_at_kq_projective(const Field& f,
                                                std::shared_ptr<const Quiver> qp,
                                                std::size_t y) {
    const Quiver& q = *qp;
    Rep pj = projective_rep(f, qp, y);
    DiffRep p0 = with_zero_eps(pj);
    SubRep rad = radical_rep(pj);
    DiffRep rad0 = with_zero_eps(rad.sub);
    DiffRepMap u{rad0, p0, rad.incl.blocks};

    std::optional<DiffRep> first;
    std::optional<DiffRepMap> comp0;
    if (q.is_source(y)) {
        first = suspend(pj);
        comp0 = DiffRepMap{*first, p0, copy2_projection_base(pj).blocks};
    } else {
        VertexGenerators vg = ghost_generator_vertex(f, qp, y);
        first = vg.eta_c.m;
        comp0 = vg.c;
    }
    SumDecompDiff mid = direct_sum_diff({*first, rad0});
    DiffRepMap onto_right = map_add(compose(*comp0, mid.onto[0]), compose(u, mid.onto[1]));

    SubDiff ker = kernel_diff(onto_right);
    DiffRep left = eta(injective_rep(f, qp, y)).m;
    DiffIsoResult iso = diff_iso_test(left, ker.sub, 1, 64);
    if (!iso.isomorphic || !iso.witness)
        throw Error("Internal", "kernel of the end map is not the approximated injective");
    DiffRepMap into_middle = compose(ker.incl, *iso.witness);

    if (!compose(onto_right, into_middle).is_zero())
        throw Error("Internal", "almost-split candidate is not a complex");
    if (left.total_dim() + p0.total_dim() != mid.total.total_dim())
        throw Error("Internal", "almost-split candidate has the wrong length");
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        if (onto_right.blocks[v].rank() != static_cast<std::size_t>(p0.dims()[v]))
            throw Error("Internal", "end map is not surjective");
        if (into_middle.blocks[v].rank() != static_cast<std::size_t>(left.dims()[v]))
            throw Error("Internal", "start map is not injective");
    }
    return {std::move(left), mid.total, std::move(p0), std::move(into_middle),
            std::move(onto_right)};
}

bool right_almost_split_over(const ARSequenceL& s, const std::vector<DiffRep>& corpus,
                             std::uint64_t seed, int trials) {
    const Field& f = s.right.field();
    for (const auto& x : corpus) {
        DiffHomSpace into_right = diff_hom_space(x, s.right);
        if (into_right.dim() == 0) continue;
        DiffHomSpace into_mid = diff_hom_space(x, s.middle);
        Matrix cols(f, into_right.dim(), into_mid.dim());
        for (std::size_t t = 0; t < into_mid.dim(); ++t) {
            Matrix co = into_right.coordinates(compose(s.onto_right, into_mid.basis[t]));
            for (std::size_t r = 0; r < into_right.dim(); ++r) cols.at(r, t) = co.at(r, 0);
        }
        Subspace fact = Subspace::from_columns(cols);
        DiffIsoResult same = diff_iso_test(x, s.right, seed, trials);
        if (same.isomorphic) {
            /* the non-factoring maps must be exactly the isomorphisms: the
             * factoring subspace misses them with codimension one */
            if (fact.dim() + 1 != into_right.dim()) return false;
            if (!same.witness) return false;
            if (fact.contains(into_right.coordinates(*same.witness))) return false;
        } else {
            if (fact.dim() != into_right.dim()) return false;
        }
    }
    return true;
}

ProjectiveMesh projective_mesh(const Field& f, std::shared_ptr<const Quiver> qp, std::size_t y) {
    DiffRep lam = suspend(projective_rep(f, qp, y));
    SubDiff radical = sub_diffrep(lam, lambda_radical_spaces(lam));
    DiffRep start = eta(simple_rep(f, qp, y)).m;

    DiffIsoResult iso = diff_iso_test(radical.sub, start, 1, 64);
    if (!iso.isomorphic)
        throw Error("Internal", "radical of the suspended projective is not the approximated simple");
    Homology h = homology(radical.sub);
    IsoResult hs = iso_test(h.h, simple_rep(f, qp, y), 1, 64);
    if (!hs.isomorphic)
        throw Error("Internal", "homology of the radical is not the simple");

    std::optional<DiffRep> end;
    if (!qp->is_source(y)) {
        auto ti = ar_translate_inverse(simple_rep(f, qp, y));
        if (!ti) throw Error("Internal", "inverse translate of a non-injective simple vanished");
        end = eta(*ti).m;
    }
    return {std::move(start), std::move(radical), std::move(end)};
}

BijectionReport verify_bijection(Field f, std::shared_ptr<const Quiver> qp) {
    ARQuiver kq = knit_ar_quiver(f, qp);
    BijectionReport report;
    report.objects = kq.nodes.size();
    std::vector<DiffRep> etas;
    for (const auto& node : kq.nodes) {
        std::string tag = dim_string(node.dim);
        EtaResult e = eta(node.rep);
        Homology h = homology(e.m);
        if (!iso_test(h.h, node.rep, 1, 64).isomorphic)
            report.mismatches.push_back("homology does not return " + tag);
        if (!diff_iso_test(eta(h.h).m, e.m, 1, 64).isomorphic)
            report.mismatches.push_back("approximation does not return eta(" + tag + ")");
        etas.push_back(e.m);
    }
    for (std::size_t i = 0; i < etas.size(); ++i)
        for (std::size_t j = i + 1; j < etas.size(); ++j)
            if (diff_iso_test(etas[i], etas[j], 1, 16).isomorphic)
                report.mismatches.push_back("approximations of " + dim_string(kq.nodes[i].dim) +
                                            " and " + dim_string(kq.nodes[j].dim) + " collide");
    return report;
}

std::string gamma_dot(const LambdaARQuiver& g, const std::string& graph_name) {
    std::ostringstream out;
    out << "digraph " << graph_name << " {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        bool box = g.nodes[i].cls == LambdaARQuiver::NodeClass::lambda_projective;
        out << "  n" << i << " [label=\"" << g.nodes[i].label << "\", shape="
            << (box ? "box" : "ellipse") << "];\n";
    }
    for (const auto& a : g.arrows) {
        out << "  n" << a.from << " -> n" << a.to;
        std::string attrs;
        if (a.kind == LambdaARQuiver::ArrowKind::ghost) attrs = "style=dashed";
        if (a.mult > 1) {
            if (!attrs.empty()) attrs += ", ";
            attrs += "label=\"" + std::to_string(a.mult) + "\"";
        }
        if (!attrs.empty()) out << " [" << attrs << "]";
        out << ";\n";
    }
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        if (g.nodes[i].tau)
            out << "  n" << i << " -> n" << *g.nodes[i].tau << " [style=dotted, constraint=false];\n";
    out << "}\n";
    return out.str();
}

std::string ar_dot(const ARQuiver& a, const std::string& graph_name) {
    std::ostringstream out;
    out << "digraph " << graph_name << " {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        out << "  n" << i << " [label=\"" << dim_string(a.nodes[i].dim) << "\", shape="
            << (a.nodes[i].projective ? "box" : "ellipse") << "];\n";
    }
    for (const auto& e : a.arrows) {
        out << "  n" << e.from << " -> n" << e.to;
        if (e.mult > 1) out << " [label=\"" << e.mult << "\"]";
        out << ";\n";
    }
    for (std::size_t i = 0; i < a.nodes.size(); ++i)
        if (a.nodes[i].tau)
            out << "  n" << i << " -> n" << *a.nodes[i].tau << " [style=dotted, constraint=false];\n";
    out << "}\n";
    return out.str();
}

} // namespace dualrep
