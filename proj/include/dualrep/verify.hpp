#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dualrep/gamma.hpp"
#include "dualrep/rng.hpp"

namespace dualrep {

struct CheckLine {
    std::string name;
    bool ok = false;
    std::string detail;
};

/* One verification suite run: named checks, each pass/fail with a detail
 * string (the counterexample on failure). */
struct SuiteReport {
    std::string suite;
    std::string quiver;
    std::vector<CheckLine> lines;

    bool ok() const;
    std::string render() const; /* stable key: value lines */
};

/* --- corpus builders shared by the suites, the tests and the front end --- */

/* smallest arrow- and eps-stable family of subspaces containing s */
std::vector<Subspace> generated_submodule(const DiffRep& m, std::vector<Subspace> s);

/* random quotient of a small free module; reaches every isomorphism class */
DiffRep random_diffrep(const Field& f, std::shared_ptr<const Quiver> q, Rng& rng);

Matrix random_invertible(const Field& f, std::size_t n, Rng& rng);

/* isomorphic copy with scrambled matrices (conjugation by a random
 * per-vertex base change) */
DiffRep random_base_change(const DiffRep& m, Rng& rng);

/* basis of the maps vanishing on homology inside Hom(m1, m2) */
std::vector<DiffRepMap> ghost_basis(const DiffRep& m1, const DiffRep& m2);

/* randomized Fitting probe: draws endomorphisms and rejects any that are
 * neither invertible nor nilpotent.  False for the zero module. */
bool indecomposable_probe(const DiffRep& m, Rng& rng, int trials);

/* the full node list of the torsionless quiver, in node order */
std::vector<DiffRep> torsionless_corpus(const Field& f, std::shared_ptr<const Quiver> q);

/* surjectivity of Hom(m1, m2) onto Hom(H m1, H m2) */
bool homology_full_on_pair(const DiffRep& m1, const DiffRep& m2);

/* the null-homotopic maps coincide with the maps factoring through a
 * projective (both sides recomputed and compared as subspaces) */
bool homotopy_matches_projective_factors(const DiffRep& m1, const DiffRep& m2);

/* --- the suites --- */

/* round-trip of homology and approximation over every indecomposable,
 * plus scrambled copies; needs a representation-finite quiver */
SuiteReport verify_theorem2(const Field& f, std::shared_ptr<const Quiver> q, std::uint64_t seed,
                            int trials);

/* spanning ghost sets between all node pairs factor through the canonical
 * generators with exact recomposition */
SuiteReport verify_theorem3(const Field& f, std::shared_ptr<const Quiver> q, std::uint64_t seed,
                            int trials);

/* square-zero witness on a double-size projective for every approximated
 * indecomposable: f^2 = 0, Im f = Ker f isomorphic to the module, |P| = 2|M| */
SuiteReport verify_sgp(const Field& f, std::shared_ptr<const Quiver> q, std::uint64_t seed,
                       int trials);

/* homology dimension vectors are positive roots, and the positive real
 * roots are each realized exactly once */
SuiteReport verify_kac(const Field& f, std::shared_ptr<const Quiver> q, std::uint64_t seed,
                       int trials);

/* perfect iff ext1 against the algebra vanishes, over a randomized corpus */
SuiteReport verify_lemma21(const Field& f, std::shared_ptr<const Quiver> q, std::uint64_t seed,
                           int random_count);

/* dispatch by name; throws Error("BadSuite") on an unknown name */
SuiteReport run_suite(const std::string& name, const Field& f, std::shared_ptr<const Quiver> q,
                      std::uint64_t seed, int trials, int random_count);

}  // namespace dualrep
