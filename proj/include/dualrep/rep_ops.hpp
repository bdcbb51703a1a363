#pragma once

#include <vector>

#include "dualrep/linsys.hpp"
#include "dualrep/rep.hpp"
#include "dualrep/subspace.hpp"

namespace dualrep {

/* Hom(from, to) with a deterministic echelon basis. */
struct HomSpace {
    Rep from, to;
    std::vector<RepMap> basis;

    std::size_t dim() const { return basis.size(); }
    Matrix flatten(const RepMap& f) const;     /* coordinate column, block row-major */
    Matrix coordinates(const RepMap& f) const; /* throws NotContained if outside the span */
    RepMap combine(const Matrix& coeffs) const;
};

HomSpace hom_space(const Rep& from, const Rep& to);

struct SubRep {
    Rep sub;
    RepMap incl; /* sub -> ambient */
};
struct QuotRep {
    Rep quot;
    RepMap proj; /* ambient -> quot */
};

/* Build the sub/quotient presented by per-vertex subspaces; throws NotStable
 * if an arrow map leaves the chosen spaces. */
SubRep sub_rep(const Rep& m, const std::vector<Subspace>& spaces);
QuotRep quotient_by(const Rep& m, const std::vector<Subspace>& spaces);

SubRep kernel_rep(const RepMap& f);
SubRep image_rep(const RepMap& f);
QuotRep cokernel_rep(const RepMap& f);

std::vector<Subspace> radical_spaces(const Rep& m); /* sum of arrow images per vertex */
SubRep radical_rep(const Rep& m);
QuotRep top_rep(const Rep& m);

struct ProjCover {
    Rep proj;                          /* = sum.total */
    RepMap pi;                         /* surjection onto the module */
    std::vector<std::size_t> summands; /* vertex of each indecomposable summand */
    SumDecomp sum;                     /* inclusions / projections of the summands */
};
/* Minimal projective cover read off the top of m. */
ProjCover projective_cover(const Rep& m);
SubRep syzygy(const Rep& m); /* kernel of the cover map */

bool is_projective_rep(const Rep& m); /* syzygy vanishes */

} // namespace dualrep
