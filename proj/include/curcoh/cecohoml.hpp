#pragma once

// Chevalley–Eilenberg (co)homology of finite-dimensional Lie algebras,
// computed block by block over torus weight (and t-degree when graded).

#include "curcoh/chevalley.hpp"
#include "curcoh/exactmat.hpp"
#include "curcoh/rootdata.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace curcoh {

enum class ComplexKind { Chains, Cochains };

struct BlockKey {
    MultiWeight weight;
    std::optional<int> t_degree;
    auto operator<=>(const BlockKey&) const = default;
};

struct BlockData {
    // dims[n] = dimension of the degree-n piece, n in [0, n_hi + 1]
    std::vector<std::size_t> dims;
    // ranks[n] = rank of the differential between degrees n and n − 1
    std::vector<std::size_t> ranks;
};

struct EngineOptions {
    unsigned threads = 0; // 0: hardware concurrency
    bool check_dd = true;
};

struct BlockComplex {
    ComplexKind kind = ComplexKind::Chains;
    int n_lo = 0;
    int n_hi = 0;
    bool graded = false;
    int arity = 1;
    std::map<BlockKey, BlockData> blocks;
    bool dd_checked = false;

    // dim of (co)homology in degree n ∈ [n_lo, n_hi] for one block
    std::int64_t homology(const BlockData& b, int n) const;
    std::size_t total_dim(int n) const;
    std::size_t max_block_dim(int n) const;
};

// Differentials leaving degrees n_lo..n_hi+1 are assembled and ranked, so
// (co)homology is available for n ∈ [n_lo, n_hi].
BlockComplex build_block_complex(const LieTable& L, const ModuleRep& M, int n_lo, int n_hi, ComplexKind kind,
                                 const EngineOptions& opts = {});

// Boundary Λⁿ(L)⊗M → Λⁿ⁻¹(L)⊗M. Row r is the image of basis vector r of
// the source; exterior basis is lexicographic on sorted index tuples with the
// module index varying fastest.
exactmat::SparseRatMatrix ce_differential(const LieTable& L, const ModuleRep& M, int n);
// Coboundary Hom(Λⁿ⁺¹L, M) ← Hom(ΛⁿL, M) in the same orientation: row r is
// the functional (dφ)(basis r of degree n+1) written in φ's coordinates.
exactmat::SparseRatMatrix ce_codifferential(const LieTable& L, const ModuleRep& M, int n);

struct GradedCharacter {
    int arity = 1;
    std::map<std::optional<int>, CharacterMap> by_degree;
    bool operator==(const GradedCharacter&) const = default;
};

// Blocks whose d∘d = 0 was verified by build_block_complex in this process.
std::uint64_t dd_blocks_verified();

// Character of H_n (or H^n) of an assembled block complex.
GradedCharacter character_of(const BlockComplex& bc, int n);
GradedCharacter homology_character(const LieTable& L, const ModuleRep& M, int n, const EngineOptions& opts = {});
GradedCharacter cohomology_character(const LieTable& L, const ModuleRep& M, int n, const EngineOptions& opts = {});

DecompositionReport decompose_character(const RootSystem& rs, const GradedCharacter& chi);
DecompositionReport decompose_homology(const LieTable& L, const ModuleRep& M, int n, int arity,
                                       const EngineOptions& opts = {});
DecompositionReport decompose_cohomology(const LieTable& L, const ModuleRep& M, int n, int arity,
                                         const EngineOptions& opts = {});

struct CheckReport {
    bool pass = true;
    std::size_t blocks_checked = 0;
    std::string first_violation;
};

// Per block: Σ_{n≤N} (−1)ⁿ dim Cₙ = Σ_{n≤N} (−1)ⁿ dim Hₙ + (−1)^N rank ∂_{N+1}.
CheckReport euler_check(const LieTable& L, const ModuleRep& M, int n_max, const EngineOptions& opts = {});
// Trivial coefficients: dim Hⁿ at μ equals dim Hₙ at −μ, chains and cochains
// assembled independently.
CheckReport duality_check(const LieTable& L, int n, const EngineOptions& opts = {});
// d∘d = 0 in every block up to degree n_max + 1, for both complexes.
CheckReport dd_check(const LieTable& L, const ModuleRep& M, int n_max, const EngineOptions& opts = {});

// Removes one copy each of the coadjoint factors sitting in a single slot
// (θ* in slot i, trivial elsewhere), when present.
DecompositionReport remove_slot_coadjoints(const RootSystem& rs, const DecompositionReport& r);

struct StabilityVerdict {
    bool stable = false;
    int s = 0;
    DecompositionReport at_s;
    DecompositionReport at_next;
    std::string note;
};

// Graded truncations: factors of t-degree < s agree between levels s and s+1.
StabilityVerdict stabilization_gtp(const RootSystem& rs, int n, int s, const EngineOptions& opts = {});
// g ⊗ I/I^s: full reports agree after removing the truncation coadjoints.
StabilityVerdict stabilization_gIs(const RootSystem& rs, const std::vector<Rational>& points, int n, int s,
                                   const EngineOptions& opts = {});

} // namespace curcoh
