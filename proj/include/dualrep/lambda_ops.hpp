#pragma once

#include <optional>
#include <vector>

#include "dualrep/diffrep.hpp"

namespace dualrep {

/* Operations on differential representations seen as modules over the path
 * algebra with dual-number coefficients: the perfect / torsionless tests, the
 * minimal right approximation eta, the projective-part splitting, and the
 * complete-resolution witness. */

/* eps as an endomorphism of the underlying representation (it commutes with
 * every arrow map by the DiffRep invariant). */
RepMap eps_endo(const DiffRep& m);
/* eps as a module endomorphism (eps is central). */
DiffRepMap mult_eps(const DiffRep& m);

SubRep eps_kernel(const DiffRep& m); /* Ker eps inside the base */
SubRep eps_image(const DiffRep& m);  /* Im eps inside the base */

/* Solve g.h = f for h (f.to == g.to).  Works inside the finite-dimensional
 * hom space, so the result is automatically a module map. */
std::optional<DiffRepMap> lift_through(const DiffRepMap& g, const DiffRepMap& f);
std::optional<RepMap> lift_through(const RepMap& g, const RepMap& f);
/* Solve h.p = f for h (f.from == p.from). */
std::optional<DiffRepMap> factor_past(const DiffRepMap& p, const DiffRepMap& f);
std::optional<RepMap> factor_past(const RepMap& p, const RepMap& f);

/* Perfect = the underlying representation is projective. */
bool is_perfect(const DiffRep& m);
/* Independent probe: no common kernel over all maps into the indecomposable
 * projectives (i.e. the module embeds into a projective). */
bool is_torsionless(const DiffRep& m);
/* Projective as a module: perfect with vanishing homology. */
bool is_lambda_projective(const DiffRep& m);

/* Explicit isomorphism from the block model (Ker eps + Im eps with eps given
 * by the inclusion in the upper-right corner) onto a perfect module. */
struct NormalForm {
    DiffRep form;
    DiffRepMap iso; /* form -> m */
};
NormalForm perfect_normal_form(const DiffRep& m);

/* Radical = arrow images plus the eps image. */
std::vector<Subspace> lambda_radical_spaces(const DiffRep& m);

struct LambdaCover {
    DiffRep proj;                      /* direct sum of suspended projectives */
    DiffRepMap pi;                     /* surjection onto the module */
    std::vector<std::size_t> summands; /* vertex of each summand */
    SumDecompDiff sum;
};
LambdaCover lambda_projective_cover(const DiffRep& m);

/* dim Ext^1(m, algebra), from one projective-cover step. */
std::size_t ext1_lambda(const DiffRep& m);

/* Minimal right approximation of a representation n by a torsionless module:
 * the pushout of the cover presentation of n along the suspension of its
 * syzygy.  approx is surjective with projective kernel and induces an
 * isomorphism on homology. */
struct EtaResult {
    Rep n;
    DiffRep m;             /* the approximating torsionless module */
    DiffRepMap approx;     /* m -> n (zero eps) */
    DiffRepMap rho;        /* m -> syzygy (zero eps): the canonical readout */
    ProjCover cover;       /* cover of n */
    SubRep omega;          /* syzygy inside the cover */
    DiffRepMap mu_prime;   /* cover with zero eps -> m */
    DiffRepMap u_prime;    /* suspended syzygy -> m */
    QuotDiff quot;         /* ambient sum -> m */
    SumDecompDiff ambient; /* cover-with-zero-eps + suspended syzygy */
};
EtaResult eta(const Rep& n);

/* A projective submodule U containing eps m with m/U identified with the
 * homology; 0 -> U -> m -> H(m) -> 0.  U is built from an exact
 * representation-level section of eps onto its image. */
struct ProjSplit {
    SubDiff u;            /* U -> m */
    DiffRepMap p_iso;     /* suspended eps-image -> U: explicit iso */
    QuotDiff quotient;    /* m -> m/U */
    Homology h;           /* homology(m) */
    RepMap quot_to_h;     /* (m/U).base -> h.h, vertexwise iso */
    DiffRepMap onto_h;    /* m -> H(m) (zero eps), kernel exactly U */
    SubRep m2;            /* eps-image inside the base */
};
ProjSplit split_projective_part(const DiffRep& m);

/* Complete-resolution witness: a projective module p with an endomorphism f
 * such that f^2 = 0 and Im f = Ker f, together with an embedding of m onto
 * that kernel. */
struct SgpWitness {
    DiffRep p;
    DiffRepMap f;     /* endomorphism of p */
    DiffRepMap embed; /* m -> p, image = Ker f = Im f */
};
SgpWitness sgp_witness(const DiffRep& m);

/* Hom modulo the maps factoring through projectives.  Also computes the
 * homotopy subspace {h.eps + eps.h} and checks the two agree. */
struct StableHom {
    DiffHomSpace hom;
    Subspace through_projectives; /* in hom-space coordinates */
    Subspace homotopies;          /* ditto; equal to the above */
    std::vector<DiffRepMap> basis_mod; /* representatives of the quotient */

    std::size_t dim() const { return basis_mod.size(); }
};
StableHom stable_hom(const DiffRep& m1, const DiffRep& m2);

} // namespace dualrep
