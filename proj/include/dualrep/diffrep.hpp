#pragma once

#include <vector>

#include "dualrep/rep_ops.hpp"

namespace dualrep {

/* Representation with a differential: a square eps per vertex with eps^2 = 0
 * commuting with every arrow map.  Equivalently a module over the quiver
 * algebra with dual-number coefficients. */
struct DiffRep {
    Rep base;
    std::vector<Matrix> eps;

    const Field& field() const { return base.field(); }
    const Quiver& quiver() const { return base.quiver(); }
    const std::shared_ptr<const Quiver>& quiver_ptr() const { return base.quiver_ptr(); }
    const DimVector& dims() const { return base.dims(); }
    std::int64_t total_dim() const { return base.total_dim(); }

    void validate() const;
    bool operator==(const DiffRep& o) const { return base == o.base && eps == o.eps; }
    bool operator!=(const DiffRep& o) const { return !(*this == o); }
};

struct DiffRepMap {
    DiffRep from;
    DiffRep to;
    std::vector<Matrix> blocks;

    void validate() const; /* commutes with arrows and with eps */
    bool is_zero() const;
    bool is_iso() const;
    RepMap on_base() const { return RepMap{from.base, to.base, blocks}; }
};

/* Validating constructor: rejects eps with eps^2 != 0 or eps that fails to
 * commute with some arrow map. */
DiffRep make_diffrep(Rep base, std::vector<Matrix> eps);

DiffRepMap zero_diff_map(const DiffRep& from, const DiffRep& to);
DiffRepMap identity_diff_map(const DiffRep& m);
DiffRepMap compose(const DiffRepMap& g, const DiffRepMap& f);
DiffRepMap map_add(const DiffRepMap& a, const DiffRepMap& b);
DiffRepMap map_sub(const DiffRepMap& a, const DiffRepMap& b);
DiffRepMap map_scaled(const DiffRepMap& a, const Scalar& c);

/* base representation viewed with the zero differential */
DiffRep with_zero_eps(Rep base);

/* M[eps]: doubled spaces with basis (copy1, copy2); eps sends copy2 to copy1
 * and kills copy1; arrows act diagonally. */
DiffRep suspend(const Rep& m);
/* functorial action on maps: diagonal blocks */
DiffRepMap suspend_map(const RepMap& f);
/* the two canonical maps around a suspension */
DiffRepMap copy1_embedding(const Rep& m);  /* with_zero_eps(m) -> suspend(m), into copy1 */
RepMap copy2_projection_base(const Rep& m); /* suspend(m).base -> m, reads copy2 */

struct DiffHomSpace {
    DiffRep from, to;
    std::vector<DiffRepMap> basis;

    std::size_t dim() const { return basis.size(); }
    Matrix flatten(const DiffRepMap& f) const;
    Matrix coordinates(const DiffRepMap& f) const;
    DiffRepMap combine(const Matrix& coeffs) const;
};
DiffHomSpace diff_hom_space(const DiffRep& from, const DiffRep& to);

struct SubDiff {
    DiffRep sub;
    DiffRepMap incl;
};
struct QuotDiff {
    DiffRep quot;
    DiffRepMap proj;
};
SubDiff sub_diffrep(const DiffRep& m, const std::vector<Subspace>& spaces);
QuotDiff quotient_diffrep(const DiffRep& m, const std::vector<Subspace>& spaces);
SubDiff kernel_diff(const DiffRepMap& f);
SubDiff image_diff(const DiffRepMap& f);
QuotDiff cokernel_diff(const DiffRepMap& f);

struct SumDecompDiff {
    DiffRep total;
    std::vector<DiffRepMap> into;
    std::vector<DiffRepMap> onto;
};
SumDecompDiff direct_sum_diff(const std::vector<DiffRep>& parts);

/* Homology: ker eps / im eps vertex-wise, with the induced arrow maps.  The
 * chosen representatives make the result deterministic. */
struct Homology {
    Rep h;
    std::vector<Subspace> ker;          /* ker eps_v in the ambient space */
    std::vector<Matrix> proj_in_ker;    /* h_v x dim(ker_v) */
    std::vector<Matrix> section_in_ker; /* dim(ker_v) x h_v */

    Matrix representative(std::size_t v) const; /* ambient x h_v column set */
    Matrix class_coords(std::size_t v, const Matrix& cols) const; /* throws NotContained */
};
Homology homology(const DiffRep& m);
RepMap homology_map(const DiffRepMap& f, const Homology& hf, const Homology& ht);

struct DiffIsoResult {
    bool isomorphic = false;
    bool certified = false;
    std::optional<DiffRepMap> witness;
};
DiffIsoResult diff_iso_test(const DiffRep& m1, const DiffRep& m2, std::uint64_t seed, int trials);

} // namespace dualrep
