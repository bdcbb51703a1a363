#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualrep/ghost.hpp"
#include "dualrep/rep_ar.hpp"

namespace dualrep {

/* Auslander-Reiten quiver of the torsionless modules: the knitted quiver of
 * the underlying representations embeds node-for-node via the approximation,
 * and the projective modules are appended with their meshes and the ghost
 * arrows into the zero-eps projectives. */
struct LambdaARQuiver {
    enum class NodeClass {
        eta_image,           /* approximation of a non-projective representation */
        kq_projective_in_L,  /* zero-eps projective representation */
        lambda_projective,   /* suspended projective */
    };
    enum class ArrowKind { iota_image, ghost, projective_mesh };

    struct Node {
        std::string label; /* letter string, highest vertex leftmost */
        std::string name;  /* provenance: eta(dims) or P(vertex) */
        DiffRep module;
        NodeClass cls;
        std::optional<std::size_t> tau; /* translation; empty on lambda-projectives */
    };
    struct ArrowEntry {
        std::size_t from, to;
        std::size_t mult;
        ArrowKind kind;
    };

    std::vector<Node> nodes;
    std::vector<ArrowEntry> arrows;
    ARQuiver kq; /* underlying knitted quiver; its node i is node i here */
};

/* per-vertex letter tokens, highest vertex leftmost: one A per eps-rank, one
 * k per remaining dimension, 0 for an empty slot */
std::string letter_label(const DiffRep& m);

/* Throws NotRepresentationFinite (via the knitting) off the Dynkin list. */
LambdaARQuiver gamma_L(Field f, std::shared_ptr<const Quiver> q);

/* the stable quiver: lambda-projective nodes and their meshes removed, the
 * translation total on what remains */
LambdaARQuiver stable_gamma(const LambdaARQuiver& g);

/* 0 -> eta I(y) -> middle -> P(y)[0] -> 0 with middle = P(y)[eps] + rad (y a
 * source) or eta(I(y)/S(y)) + rad; the end map is [c(y), u(y)], exactness is
 * verified on construction. */
struct ARSequenceL {
    DiffRep left, middle, right;
    DiffRepMap into_middle;
    DiffRepMap onto_right;
};
ARSequenceL ar_sequence_ending_at_kq_projective(const Field& f,
                                                std::shared_ptr<const Quiver> q, std::size_t y);

/* Corpus proof of right-almost-splitness: over every corpus module X, the
 * maps X -> right that fail to factor through the end map are exactly the
 * split epimorphisms.  Complete when the corpus lists all indecomposables. */
bool right_almost_split_over(const ARSequenceL& s, const std::vector<DiffRep>& corpus,
                             std::uint64_t seed = 1, int trials = 64);

/* the mesh through the suspended projective: rad P(y) is the approximated
 * simple (verified), and the mesh ends at the approximated inverse translate
 * of the simple unless y is a source (then it routes onto P(y)[0]). */
struct ProjectiveMesh {
    DiffRep start;              /* eta S(y) */
    SubDiff radical;            /* rad P(y)[eps] inside P(y)[eps] */
    std::optional<DiffRep> end; /* eta of the inverse translate of S(y) */
};
ProjectiveMesh projective_mesh(const Field& f, std::shared_ptr<const Quiver> q, std::size_t y);

/* Homology and approximation run both ways over the full indecomposable
 * list; mismatches name the offending node. */
struct BijectionReport {
    std::size_t objects = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};
BijectionReport verify_bijection(Field f, std::shared_ptr<const Quiver> q);

/* DOT exports with deterministic ordering: ellipses for approximation nodes,
 * boxes for the suspended projectives, dashed ghost arrows, dotted
 * translation edges drawn against the flow. */
std::string gamma_dot(const LambdaARQuiver& g, const std::string& graph_name);
std::string ar_dot(const ARQuiver& a, const std::string& graph_name);

} // namespace dualrep
