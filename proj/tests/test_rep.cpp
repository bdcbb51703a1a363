#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <sstream>

#include "dualrep/rep.hpp"
#include "dualrep/rep_ops.hpp"

using namespace dualrep;

namespace {

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

/* independent count: dim Ext^1(M, N) from the cover exact sequence */
std::size_t ext1_dim(const Rep& m, const Rep& n) {
    auto cover = projective_cover(m);
    auto omega = kernel_rep(cover.pi);
    return hom_space(omega.sub, n).dim() + hom_space(m, n).dim() -
           hom_space(cover.proj, n).dim();
}

} // namespace

TEST_CASE("path enumeration is ordered and complete") {
    auto q = a3();
    auto from1 = paths_from(*q, 0);
    REQUIRE(from1.size() == 3);
    CHECK(from1[0].length() == 0);
    CHECK(from1[1].arrows == std::vector<std::size_t>{0});
    CHECK(from1[2].arrows == std::vector<std::size_t>{0, 1});
    auto into3 = paths_into(*q, 2);
    REQUIRE(into3.size() == 3);
    CHECK(into3[0].length() == 0);
    CHECK(into3[1].src == 1);
    CHECK(into3[2].src == 0);
    CHECK(paths_from(*d4(), 3).size() == 1);
    CHECK(paths_into(*d4(), 3).size() == 4);
}

TEST_CASE("standard modules on the linear quiver") {
    Field f = Field::fp(5);
    auto q = a3();
    Rep p1 = projective_rep(f, q, 0);
    CHECK(p1.dims() == DimVector{1, 1, 1});
    CHECK(p1.map(0).is_identity());
    CHECK(p1.map(1).is_identity());
    Rep p3 = projective_rep(f, q, 2);
    CHECK(p3.dims() == DimVector{0, 0, 1});
    CHECK(p3 == simple_rep(f, q, 2));
    Rep i3 = injective_rep(f, q, 2);
    CHECK(i3.dims() == DimVector{1, 1, 1});
    CHECK(i3.map(0).is_identity());
    Rep i1 = injective_rep(f, q, 0);
    CHECK(i1 == simple_rep(f, q, 0));
    /* peeling the lazy path off P(1) leaves exactly P(2) */
    CHECK(radical_of_projective(f, q, 0) == projective_rep(f, q, 1));
    for (std::size_t y = 0; y < 3; ++y) {
        projective_rep(f, q, y).validate();
        injective_rep(f, q, y).validate();
    }
}

TEST_CASE("hom dimensions against the projective/injective adjunctions") {
    Field f = Field::fp(32003);
    for (auto q : {a3(), d4()}) {
        Rng rng(7);
        for (int trial = 0; trial < 4; ++trial) {
            Rep m = random_rep(f, q, 3, rng);
            for (std::size_t y = 0; y < q->num_vertices(); ++y) {
                /* Hom(P(y), M) = M_y and Hom(M, I(y)) = M_y^* */
                CHECK(hom_space(projective_rep(f, q, y), m).dim() ==
                      static_cast<std::size_t>(m.dims()[y]));
                CHECK(hom_space(m, injective_rep(f, q, y)).dim() ==
                      static_cast<std::size_t>(m.dims()[y]));
            }
        }
    }
}

TEST_CASE("hom basis members are morphisms and coordinates invert combine") {
    Field f = Field::fp(13);
    auto q = a3();
    Rng rng(11);
    Rep m = random_rep(f, q, 3, rng);
    Rep n = random_rep(f, q, 3, rng);
    auto hs = hom_space(m, n);
    for (const auto& b : hs.basis) b.validate();
    if (hs.dim() > 0) {
        Matrix coeffs(f, hs.dim(), 1);
        for (std::size_t i = 0; i < hs.dim(); ++i) coeffs.at(i, 0) = f.from_int(2 * i + 1);
        RepMap g = hs.combine(coeffs);
        g.validate();
        CHECK(hs.coordinates(g) == coeffs);
    }
}

TEST_CASE("homological euler identity on random modules") {
    for (Field f : {Field::fp(32003), Field::rationals()}) {
        for (auto q : {a3(), d4()}) {
            Rng rng(3);
            for (int trial = 0; trial < 3; ++trial) {
                Rep m = random_rep(f, q, 2, rng);
                Rep n = random_rep(f, q, 2, rng);
                auto lhs = static_cast<std::int64_t>(hom_space(m, n).dim()) -
                           static_cast<std::int64_t>(ext1_dim(m, n));
                CHECK(lhs == euler_form(*q, m.dims(), n.dims()));
            }
        }
    }
}

TEST_CASE("sub, quotient, kernel, image, cokernel") {
    Field f = Field::fp(7);
    auto q = a3();
    Rep p1 = projective_rep(f, q, 0);

    auto rad = radical_rep(p1);
    CHECK(rad.sub.dims() == DimVector{0, 1, 1});
    rad.incl.validate();
    auto top = top_rep(p1);
    CHECK(top.quot.dims() == DimVector{1, 0, 0});
    top.proj.validate();

    /* the one nonzero map P(1) -> I(3) is an isomorphism on a3 */
    auto hs = hom_space(p1, injective_rep(f, q, 2));
    REQUIRE(hs.dim() == 1);
    const RepMap& iso = hs.basis[0];
    CHECK(iso.is_iso());
    CHECK(kernel_rep(iso).sub.total_dim() == 0);
    CHECK(cokernel_rep(iso).quot.total_dim() == 0);
    CHECK(image_rep(iso).sub.total_dim() == 3);

    /* a map with kernel: P(1) --> P(1)/rad */
    CHECK(kernel_rep(top.proj).sub.dims() == DimVector{0, 1, 1});
    CHECK(cokernel_rep(top.proj).quot.total_dim() == 0);
}

TEST_CASE("sub_rep rejects unstable subspaces") {
    Field f = Field::fp(7);
    auto q = a2();
    Rep p1 = projective_rep(f, q, 0);
    std::vector<Subspace> spaces{Subspace::full(f, 1), Subspace::zero(f, 1)};
    CHECK_THROWS_WITH_AS(sub_rep(p1, spaces), doctest::Contains("NotStable"), Error);
}

TEST_CASE("projective covers and syzygies") {
    Field f = Field::fp(5);
    auto q = a3();

    auto c1 = projective_cover(simple_rep(f, q, 0));
    CHECK(c1.summands == std::vector<std::size_t>{0});
    CHECK(kernel_rep(c1.pi).sub.dims() == DimVector{0, 1, 1});

    auto c2 = projective_cover(simple_rep(f, q, 1));
    CHECK(c2.summands == std::vector<std::size_t>{1});
    CHECK(kernel_rep(c2.pi).sub.dims() == DimVector{0, 0, 1});

    /* I(3) is projective on this orientation */
    CHECK(is_projective_rep(injective_rep(f, q, 2)));
    CHECK(!is_projective_rep(simple_rep(f, q, 0)));
    CHECK(is_projective_rep(zero_rep(f, q)));

    /* cover of a decomposable: S(1) + S(2) */
    auto sum = direct_sum({simple_rep(f, q, 0), simple_rep(f, q, 1)});
    auto c3 = projective_cover(sum.total);
    CHECK(c3.summands == std::vector<std::size_t>{0, 1});
    CHECK(c3.proj.dims() == DimVector{1, 2, 2});
    CHECK(cokernel_rep(c3.pi).quot.total_dim() == 0);
}

TEST_CASE("direct sum inclusions and projections") {
    Field f = Field::rationals();
    auto q = d4();
    Rng rng(5);
    std::vector<Rep> parts{random_rep(f, q, 2, rng), random_rep(f, q, 2, rng),
                           simple_rep(f, q, 3)};
    auto sum = direct_sum(parts);
    sum.total.validate();
    for (std::size_t s = 0; s < parts.size(); ++s) {
        sum.into[s].validate();
        sum.onto[s].validate();
        CHECK(compose(sum.onto[s], sum.into[s]).blocks == identity_map(parts[s]).blocks);
    }
    RepMap acc = zero_map(sum.total, sum.total);
    for (std::size_t s = 0; s < parts.size(); ++s)
        acc = map_add(acc, compose(sum.into[s], sum.onto[s]));
    CHECK(acc.blocks == identity_map(sum.total).blocks);
}

TEST_CASE("block linear system solves sided matrix equations") {
    Field f = Field::fp(101);
    Matrix a = Matrix::from_ints(f, 2, 2, {1, 2, 3, 5});
    Matrix b = Matrix::from_ints(f, 2, 2, {4, 1, 0, 7});

    BlockLinearSystem sys(f, {{2, 2}});
    sys.add_equation({{0, Matrix::identity(f, 2), a}}, b); /* X a = b */
    auto sol = sys.solve();
    REQUIRE(sol.consistent);
    CHECK(sol.kernel.empty());
    CHECK(sol.particular[0].mul(a) == b);

    BlockLinearSystem bad(f, {{2, 2}});
    bad.add_equation({{0, Matrix::identity(f, 2), Matrix(f, 2, 2)}}, b); /* X 0 = b */
    CHECK(!bad.solve().consistent);

    /* two blocks coupled: X - Y = 0 leaves one free block's worth of kernel */
    BlockLinearSystem pair(f, {{2, 2}, {2, 2}});
    pair.add_equation({{0, Matrix::identity(f, 2), Matrix::identity(f, 2)},
                       {1, Matrix::identity(f, 2).neg(), Matrix::identity(f, 2)}},
                      Matrix(f, 2, 2));
    auto psol = pair.solve();
    REQUIRE(psol.consistent);
    CHECK(psol.kernel.size() == 4);
    for (const auto& tup : psol.kernel) CHECK(tup[0] == tup[1]);
}
