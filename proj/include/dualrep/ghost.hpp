#pragma once

#include <cstdint>
#include <vector>

#include "dualrep/lambda_ops.hpp"

namespace dualrep {

/* Ghost maps: module maps that vanish on homology.  A ghost between perfect
 * modules splits into a part that factors through a projective plus a part
 * killing the kernel of eps, and the ghost ideal is generated by identities
 * of indecomposable projectives together with one canonical generator per
 * non-source vertex. */

bool is_ghost(const DiffRepMap& f);

/* f = f0 + f1: f0 factors explicitly through the suspension of the eps-image
 * of the target (a projective module), f1 vanishes on Ker eps of the source. */
struct GhostDecomposition {
    DiffRepMap f0;
    DiffRepMap f1;
    DiffRep middle;     /* suspension of the eps-image of the target */
    DiffRepMap through; /* source -> middle */
    DiffRepMap out;     /* middle -> target, injective */
};
GhostDecomposition ghost_decompose(const DiffRepMap& f);

/* Canonical ghost attached to an arrow a: i -> j, built from the coupling of
 * the injective at i with the projective at j along a.  The comparison map
 * sends the syzygy of the injective onto the projective (always surjective),
 * and c is its pullback along the syzygy readout of the approximation. */
struct ArrowGenerator {
    EtaResult source;   /* approximation data of the injective at i */
    DiffRep target;     /* projective at j with zero differential */
    RepMap comparison;  /* syzygy of the injective -> P(j), surjective */
    DiffRepMap c;       /* the ghost: eta I(i) -> P(j) with zero eps */
};
ArrowGenerator ghost_generator_arrow(const Field& f, std::shared_ptr<const Quiver> q,
                                     std::size_t alpha);

/* Canonical generators attached to a vertex y, from the module glueing the
 * injective and the projective at y along their shared one-dimensional piece.
 * c lives on the approximation of I(y)/S(y) and is zero exactly when y is a
 * source; d lives on the approximation of I(y) and lands in rad P(y).  Both
 * feed the almost-split sequences ending at the zero-eps projective. */
struct VertexGenerators {
    EtaResult eta_c;  /* approximation of I(y)/S(y) */
    EtaResult eta_d;  /* approximation of I(y) */
    DiffRep p0;       /* P(y) with zero differential */
    SubRep rad;       /* rad P(y) inside P(y) */
    DiffRepMap c;     /* eta(I(y)/S(y)) -> P(y)[0]; zero map when y is a source */
    DiffRepMap d;     /* eta(I(y)) -> rad P(y)[0] */
};
VertexGenerators ghost_generator_vertex(const Field& f, std::shared_ptr<const Quiver> q,
                                        std::size_t y);

/* Certificate that a ghost lies in the ideal generated by identities of the
 * indecomposable projective modules and the canonical vertex ghosts: the sum
 * over all summands of post . gen . pre recomposes the input exactly. */
struct GhostSummand {
    enum class Kind {
        projective_identity, /* gen = identity of the suspended projective at `vertex` */
        vertex_c,            /* gen = c(vertex) */
        hom_basis,           /* fallback: gen = basis element of Hom(eta I(aux), P(vertex)[0]) */
    };
    Kind kind;
    std::size_t vertex = 0;
    std::size_t aux = 0;
    DiffRepMap gen;
    DiffRepMap pre;  /* source -> gen.from */
    DiffRepMap post; /* gen.to -> target */
};
struct GhostFactorization {
    std::vector<GhostSummand> summands;
    bool used_full_set = false; /* a fallback hom-basis middle was needed */
    DiffRepMap recomposed;      /* the verified sum, equal to the input */
};
GhostFactorization factor_through_ghost_generators(const DiffRepMap& f);

} // namespace dualrep
