#pragma once

// Ext¹ and Ext² between finite-dimensional simple modules of current algebras,
// in closed form and through truncated cohomology.

#include "curcoh/cecohoml.hpp"
#include "curcoh/rootdata.hpp"

#include <map>
#include <string>
#include <vector>

namespace curcoh::ext {

// Finitely supported map from points to dominant weights. Zero weights are
// dropped, so absent points carry weight 0.
struct WeightAssignment {
    std::vector<std::pair<Rational, Weight>> entries; // sorted by point

    // "0:[2];1:[1]"
    static WeightAssignment parse(const std::string& text, const RootSystem& rs);
    static WeightAssignment from(std::vector<std::pair<Rational, Weight>> entries, const RootSystem& rs);

    Weight at(const Rational& point, int rank) const;
    std::vector<Rational> support() const;
    std::string str() const;
};

using DOverrides = std::map<Rational, int>;

// Closed form: vanishes unless π, π′ differ in at most one point.
std::int64_t ext1(const RootSystem& rs, const WeightAssignment& pi, const WeightAssignment& pi2,
                  const DOverrides& d = {});

// dim Hom_{g^k}(V(λ_1)⊠…⊠V(λ_k), H ⊗ V(μ_1)⊠…⊠V(μ_k)) for H given by its factors.
std::int64_t hom_into_tensor(const RootSystem& rs, const MultiWeight& source, const DecompositionReport& h,
                             const MultiWeight& target);

MultiWeight restrict_to(const WeightAssignment& pi, const std::vector<Rational>& points, int rank);

// H¹(g ⊗ I/I^s) at the given points, computed by the cochain engine.
DecompositionReport h1_truncated(const RootSystem& rs, const std::vector<Rational>& points, int s = 2,
                                 const EngineOptions& opts = {});
// Ext¹ as Hom into H¹ ⊗ V(π′); both assignments must be supported on `points`.
std::int64_t ext1_via_h1(const RootSystem& rs, const DecompositionReport& h1, const std::vector<Rational>& points,
                         const WeightAssignment& pi, const WeightAssignment& pi2);

// H²(sl₂ ⊗ I, C) for two points: C⊠C ⊕ V(2)⊠V(2) ⊕ V(4)⊠C ⊕ C⊠V(4).
DecompositionReport sl2_h2_two_points();

std::int64_t ext2_sl2_twopoint(int lam1, int lam2, int mu1, int mu2, const std::vector<Rational>& points);
std::int64_t self_ext2_sl2(int lam1, int lam2, const std::vector<Rational>& points);

// H²(g ⊗ I/I^s) with the two truncation coadjoints removed and one C⊠C added.
DecompositionReport assembled_h2_ideal(const RootSystem& rs, const std::vector<Rational>& points, int s,
                                       const EngineOptions& opts = {});

struct Ext2Report {
    std::int64_t dim = 0;
    int s = 0;
    DecompositionReport h2_truncated;
    DecompositionReport h2_assembled;
    std::vector<std::string> annotations;
};

Ext2Report ext2_general_report(const RootSystem& rs, const std::vector<Rational>& points,
                               const WeightAssignment& pi, const WeightAssignment& pi2, int s,
                               const EngineOptions& opts = {});

} // namespace curcoh::ext
