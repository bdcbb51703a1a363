#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dualrep/rep_ops.hpp"

namespace dualrep {

/* Reflection of a module across the duality: a representation of the
 * opposite-shaped quiver `target` with all arrow maps transposed. */
Rep dual_rep(const Rep& m, std::shared_ptr<const Quiver> target);

/* Transpose of a minimal projective presentation, a representation of the
 * opposite-shaped quiver `target`; vanishes exactly on projectives. */
Rep transpose_rep(const Rep& m, std::shared_ptr<const Quiver> target);

/* Auslander-Reiten translate (dual of the transpose) and its inverse.
 * nullopt encodes "translate vanishes": projective input for the translate,
 * injective input for the inverse. */
std::optional<Rep> ar_translate(const Rep& m);
std::optional<Rep> ar_translate_inverse(const Rep& m);

struct IsoResult {
    bool isomorphic = false;
    /* definite answer (dimension obstructions, or an explicit witness) as
     * opposed to a randomized search that came up empty */
    bool certified = false;
    std::optional<RepMap> witness;
};
IsoResult iso_test(const Rep& m1, const Rep& m2, std::uint64_t seed, int trials);

struct Decomposition {
    struct Part {
        Rep rep;
        std::int64_t multiplicity;
    };
    std::vector<Part> parts; /* grouped up to isomorphism */
    std::vector<Rep> leaves; /* raw leaves in split order */
    /* every leaf has a one-dimensional endomorphism ring; otherwise the
     * indecomposability of some leaf is only backed by the failed splits */
    bool certified = true;
};
Decomposition decompose(const Rep& m, std::uint64_t seed, int trials);

/* Auslander-Reiten quiver of a representation-finite quiver, knitted from
 * the inverse-translate orbits of the projectives. */
struct ARQuiver {
    struct Node {
        Rep rep;
        DimVector dim;
        bool projective = false;
        bool injective = false;
        std::optional<std::size_t> tau;     /* index of the translate, when nonzero */
        std::optional<std::size_t> tau_inv; /* index of the inverse translate */
    };
    struct ArrowEntry {
        std::size_t from, to;
        std::size_t mult; /* dim of the space of irreducible maps */
    };
    std::vector<Node> nodes;
    std::vector<ArrowEntry> arrows;

    std::optional<std::size_t> find_dim(const DimVector& d) const;
};

/* Throws NotRepresentationFinite unless the underlying graph is Dynkin. */
ARQuiver knit_ar_quiver(Field f, std::shared_ptr<const Quiver> q);

} // namespace dualrep
