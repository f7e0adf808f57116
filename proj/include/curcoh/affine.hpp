#pragma once

// Untwisted affine root data, minimal coset representatives W_a^1 via the
// dot action, and the resulting prediction for H^j(g ⊗ tC[t]).

#include "curcoh/rootdata.hpp"

#include <set>
#include <string>
#include <vector>

namespace curcoh {

struct AffineRootData {
    RootSystem base;
    // affine_cartan[i][j] = α_j(h_i), node 0 the affine node
    IntMatrix affine_cartan;
    // alpha0_pairings[j−1] = α_j(α₀^∨) = −α_j(h_θ), j = 1..n
    std::vector<int> alpha0_pairings;
};

AffineRootData affinize(const RootSystem& rs);

// { j ∈ [1,n] : α_j(α₀^∨) ≠ 0 }, 1-based.
std::set<int> table1(const AffineRootData& ard);

struct AffineCosetElement {
    int length = 0;
    std::vector<int> word;      // reduced word, leftmost letter applied last
    std::vector<int> dot_value; // coefficients of w·0 on α₀..α_n
    Weight lambda_w;
    int d_w = 0;

    std::string word_str() const;
};

constexpr int kMaxAffineLength = 6;

// Elements of W_a^1 up to max_length, ordered by length then dot value.
std::vector<AffineCosetElement> enumerate_Wa1(const AffineRootData& ard, int max_length);

// ⊕_{ℓ(w)=j} V(λ_w)* in t-degree d_w.
DecompositionReport gl_predict(const AffineRootData& ard, int j);

} // namespace curcoh
