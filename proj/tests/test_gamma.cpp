#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "dualrep/error.hpp"
#include "dualrep/gamma.hpp"

using namespace dualrep;

namespace {

const Field F = Field::fp(32003);

std::shared_ptr<const Quiver> make_quiver(const std::string& text) {
    std::istringstream in(text);
    auto q = std::make_shared<Quiver>(parse_quiver(in));
    q->validate();
    return q;
}

std::shared_ptr<const Quiver> a2() {
    return make_quiver("quiver a2\nvertices 1 2\narrow a 1 2\n");
}
std::shared_ptr<const Quiver> a3() {
    return make_quiver("quiver a3\nvertices 1 2 3\narrow a 1 2\narrow b 2 3\n");
}
std::shared_ptr<const Quiver> d4() {
    return make_quiver("quiver d4\nvertices 1 2 3 4\narrow a 1 4\narrow b 2 4\narrow c 3 4\n");
}
std::shared_ptr<const Quiver> kron() {
    return make_quiver("quiver kron\nvertices 1 2\narrow a 2 1\narrow b 2 1\n");
}

std::size_t count_kind(const LambdaARQuiver& g, LambdaARQuiver::ArrowKind k) {
    std::size_t n = 0;
    for (const auto& a : g.arrows)
        if (a.kind == k) ++n;
    return n;
}

std::size_t node_by_label(const LambdaARQuiver& g, const std::string& label) {
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        if (g.nodes[i].label == label) return i;
    REQUIRE(false);
    return 0;
}

std::vector<std::size_t> stable_orbit_sizes(const LambdaARQuiver& g) {
    LambdaARQuiver s = stable_gamma(g);
    std::vector<bool> seen(s.nodes.size(), false);
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0, cur = i;
        while (!seen[cur]) {
            seen[cur] = true;
            ++len;
            REQUIRE(s.nodes[cur].tau.has_value());
            cur = *s.nodes[cur].tau;
        }
        sizes.push_back(len);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

/* frozen output for the three-vertex line */
const char* kGoldenA3Dot = R"(digraph gamma_a3 {
  rankdir=LR;
  n0 [label="kkk", shape=ellipse];
  n1 [label="kk0", shape=ellipse];
  n2 [label="Akk", shape=ellipse];
  n3 [label="k00", shape=ellipse];
  n4 [label="Ak0", shape=ellipse];
  n5 [label="AAk", shape=ellipse];
  n6 [label="AAA", shape=box];
  n7 [label="AA0", shape=box];
  n8 [label="A00", shape=box];
  n0 -> n2;
  n1 -> n0;
  n1 -> n4;
  n2 -> n5;
  n3 -> n1;
  n4 -> n2;
  n5 -> n1 [style=dashed];
  n2 -> n3 [style=dashed];
  n5 -> n6;
  n6 -> n0;
  n4 -> n7;
  n7 -> n5;
  n3 -> n8;
  n8 -> n4;
  n0 -> n5 [style=dotted, constraint=false];
  n1 -> n2 [style=dotted, constraint=false];
  n2 -> n1 [style=dotted, constraint=false];
  n3 -> n0 [style=dotted, constraint=false];
  n4 -> n3 [style=dotted, constraint=false];
  n5 -> n4 [style=dotted, constraint=false];
}
)";

} // namespace

TEST_CASE("two vertex line: full quiver of the torsionless category") {
    LambdaARQuiver g = gamma_L(F, a2());
    CHECK(g.nodes.size() == 5);
    CHECK(g.arrows.size() == 7);
    CHECK(count_kind(g, LambdaARQuiver::ArrowKind::iota_image) == 2);
    CHECK(count_kind(g, LambdaARQuiver::ArrowKind::ghost) == 1);
    CHECK(count_kind(g, LambdaARQuiver::ArrowKind::projective_mesh) == 4);

    /* letter strings, highest vertex leftmost */
    std::vector<std::string> labels;
    for (const auto& n : g.nodes) labels.push_back(n.label);
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<std::string>{"A0", "AA", "Ak", "k0", "kk"});

    /* the ghost arrow runs from the approximated injective at 1 to the
     * zero-eps projective at 2 */
    std::size_t ghost_from = node_by_label(g, "Ak");
    std::size_t ghost_to = node_by_label(g, "k0");
    bool found = false;
    for (const auto& a : g.arrows)
        if (a.kind == LambdaARQuiver::ArrowKind::ghost)
            found = (a.from == ghost_from && a.to == ghost_to);
    CHECK(found);

    CHECK(stable_orbit_sizes(g) == std::vector<std::size_t>{3});
}

TEST_CASE("three vertex line reproduces the printed quiver") {
    LambdaARQuiver g = gamma_L(F, a3());
    REQUIRE(g.nodes.size() == 9);
    CHECK(g.arrows.size() == 14);
    CHECK(count_kind(g, LambdaARQuiver::ArrowKind::iota_image) == 6);
    CHECK(count_kind(g, LambdaARQuiver::ArrowKind::ghost) == 2);
    CHECK(count_kind(g, LambdaARQuiver::ArrowKind::projective_mesh) == 6);

    std::vector<std::string> labels;
    for (const auto& n : g.nodes) labels.push_back(n.label);
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<std::string>{"A00", "AA0", "AAA", "AAk", "Ak0", "Akk", "k00",
                                             "kk0", "kkk"});

    /* ghost arrows by letter string */
    std::map<std::string, std::string> ghosts;
    for (const auto& a : g.arrows)
        if (a.kind == LambdaARQuiver::ArrowKind::ghost)
            ghosts[g.nodes[a.from].label] = g.nodes[a.to].label;
    CHECK(ghosts == std::map<std::string, std::string>{{"AAk", "kk0"}, {"Akk", "k00"}});

    /* translation onto the zero-eps projectives is the approximated
     * injective at the same vertex */
    for (std::size_t y = 0; y < 3; ++y) {
        auto pk = g.kq.find_dim(projective_rep(F, a3(), y).dims());
        auto ik = g.kq.find_dim(injective_rep(F, a3(), y).dims());
        REQUIRE(pk.has_value());
        REQUIRE(ik.has_value());
        CHECK(g.nodes[*pk].tau == ik);
    }

    /* projective nodes carry no translation */
    for (const auto& n : g.nodes)
        if (n.cls == LambdaARQuiver::NodeClass::lambda_projective) CHECK_FALSE(n.tau.has_value());

    CHECK(stable_orbit_sizes(g) == std::vector<std::size_t>{2, 4});

    CHECK(gamma_dot(g, "gamma_a3") == kGoldenA3Dot);
}

TEST_CASE("dropping projectives and ghosts recovers the knitted quiver") {
    for (auto q : {a2(), a3(), d4()}) {
        LambdaARQuiver g = gamma_L(F, q);
        LambdaARQuiver s = stable_gamma(g);
        /* nodes biject with the knitted nodes */
        CHECK(s.nodes.size() == g.kq.nodes.size());
        /* arrows: the embedded ones mirror the knitted arrows one-for-one */
        std::vector<std::pair<std::size_t, std::size_t>> embedded, knitted;
        for (const auto& a : s.arrows)
            if (a.kind == LambdaARQuiver::ArrowKind::iota_image)
                for (std::size_t t = 0; t < a.mult; ++t) embedded.push_back({a.from, a.to});
        for (const auto& a : g.kq.arrows)
            for (std::size_t t = 0; t < a.mult; ++t) knitted.push_back({a.from, a.to});
        std::sort(embedded.begin(), embedded.end());
        std::sort(knitted.begin(), knitted.end());
        CHECK(embedded == knitted);
        /* translation over the embedding matches the knitted translation */
        for (std::size_t i = 0; i < g.kq.nodes.size(); ++i)
            if (!g.kq.nodes[i].projective) CHECK(g.nodes[i].tau == g.kq.nodes[i].tau);
    }
}

TEST_CASE("four subspace quiver") {
    LambdaARQuiver g = gamma_L(F, d4());
    CHECK(g.nodes.size() == 16);
    CHECK(g.arrows.size() == 26);
    CHECK(count_kind(g, LambdaARQuiver::ArrowKind::ghost) == 3);
    CHECK(count_kind(g, LambdaARQuiver::ArrowKind::projective_mesh) == 8);
    CHECK(stable_orbit_sizes(g) == std::vector<std::size_t>{3, 3, 3, 3});

    for (std::size_t y = 0; y < 4; ++y) {
        auto pk = g.kq.find_dim(projective_rep(F, d4(), y).dims());
        auto ik = g.kq.find_dim(injective_rep(F, d4(), y).dims());
        REQUIRE(pk.has_value());
        REQUIRE(ik.has_value());
        CHECK(g.nodes[*pk].tau == ik);
    }
}

TEST_CASE("ghost arrows carry maps that vanish on homology") {
    auto q = a3();
    LambdaARQuiver g = gamma_L(F, q);
    std::size_t checked = 0;
    for (std::size_t al = 0; al < q->num_arrows(); ++al) {
        ArrowGenerator ag = ghost_generator_arrow(F, q, al);
        CHECK(is_ghost(ag.c));
        /* endpoints agree with the quiver nodes */
        std::size_t i = q->arrows[al].src, j = q->arrows[al].tgt;
        auto in = g.kq.find_dim(injective_rep(F, q, i).dims());
        auto pn = g.kq.find_dim(projective_rep(F, q, j).dims());
        REQUIRE(in.has_value());
        REQUIRE(pn.has_value());
        CHECK(diff_iso_test(ag.c.from, g.nodes[*in].module, 1, 32).isomorphic);
        CHECK(diff_iso_test(ag.target, g.nodes[*pn].module, 1, 32).isomorphic);
        ++checked;
    }
    CHECK(checked == 2);
}

TEST_CASE("almost-split sequences ending at the zero-eps projectives") {
    for (auto q : {a2(), a3()}) {
        LambdaARQuiver g = gamma_L(F, q);
        std::vector<DiffRep> corpus;
        for (const auto& n : g.nodes) corpus.push_back(n.module);
        for (std::size_t y = 0; y < q->num_vertices(); ++y) {
            ARSequenceL s = ar_sequence_ending_at_kq_projective(F, q, y);
            /* ends: approximated injective and the zero-eps projective */
            CHECK(diff_iso_test(s.left, eta(injective_rep(F, q, y)).m, 1, 32).isomorphic);
            CHECK(s.right.dims() == projective_rep(F, q, y).dims());
            /* middle by the source split */
            if (q->is_source(y)) {
                SubRep rad = radical_rep(projective_rep(F, q, y));
                CHECK(s.middle.total_dim() ==
                      2 * projective_rep(F, q, y).total_dim() + rad.sub.total_dim());
            } else {
                CHECK(s.middle.total_dim() == s.left.total_dim() + s.right.total_dim());
            }
            CHECK(right_almost_split_over(s, corpus));
        }
    }
}

TEST_CASE("sink middle term collapses to the approximated injective") {
    /* at the sink of the two vertex line the radical of the projective is
     * zero, so the middle term is the approximation of the injective at 1 */
    auto q = a2();
    ARSequenceL s = ar_sequence_ending_at_kq_projective(F, q, 1);
    CHECK(diff_iso_test(s.middle, eta(injective_rep(F, q, 0)).m, 1, 32).isomorphic);
}

TEST_CASE("meshes through the suspended projectives") {
    auto q2 = a2();
    ProjectiveMesh m1 = projective_mesh(F, q2, 0);
    CHECK_FALSE(m1.end.has_value()); /* source: routes onto the zero-eps projective */
    ProjectiveMesh m2 = projective_mesh(F, q2, 1);
    REQUIRE(m2.end.has_value());
    CHECK(diff_iso_test(*m2.end, eta(simple_rep(F, q2, 0)).m, 1, 32).isomorphic);

    auto q3 = a3();
    ProjectiveMesh n2 = projective_mesh(F, q3, 1);
    REQUIRE(n2.end.has_value());
    CHECK(diff_iso_test(*n2.end, eta(simple_rep(F, q3, 0)).m, 1, 32).isomorphic);
    ProjectiveMesh n3 = projective_mesh(F, q3, 2);
    REQUIRE(n3.end.has_value());
    CHECK(diff_iso_test(*n3.end, eta(simple_rep(F, q3, 1)).m, 1, 32).isomorphic);

    /* the start is the radical, with simple homology (verified on build);
     * spot-check the stated iso once more */
    CHECK(diff_iso_test(n2.radical.sub, n2.start, 5, 32).isomorphic);
}

TEST_CASE("homology and approximation are inverse bijections on the node lists") {
    BijectionReport r2 = verify_bijection(F, a2());
    CHECK(r2.objects == 3);
    CHECK(r2.ok());
    BijectionReport r3 = verify_bijection(F, a3());
    CHECK(r3.objects == 6);
    CHECK(r3.ok());
    BijectionReport r4 = verify_bijection(F, d4());
    CHECK(r4.objects == 12);
    CHECK(r4.ok());
}

TEST_CASE("non Dynkin input is rejected") {
    try {
        gamma_L(F, kron());
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.code() == "NotRepresentationFinite");
    }
}
