#pragma once

// Finite root systems (Bourbaki numbering), weights, characters and
// tensor-product decompositions.

#include "curcoh/exactmat.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace curcoh {

// Weight in fundamental-weight coordinates: coords[i] = <λ, α_i^∨>.
struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
    static Weight zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

    int rank() const { return static_cast<int>(coords.size()); }
    bool dominant() const;
    bool is_zero() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight operator*(int k) const;

    auto operator<=>(const Weight&) const = default;
    std::string str() const;
};

// A weight of h ⊕ ... ⊕ h (one part per factor of g × ... × g).
struct MultiWeight {
    std::vector<Weight> parts;

    MultiWeight() = default;
    explicit MultiWeight(std::vector<Weight> p) : parts(std::move(p)) {}
    MultiWeight(const Weight& w) : parts{w} {} // NOLINT(google-explicit-constructor)
    static MultiWeight zero(int arity, int rank);

    int arity() const { return static_cast<int>(parts.size()); }
    bool dominant() const;
    bool is_zero() const;
    MultiWeight operator+(const MultiWeight& o) const;
    MultiWeight operator-() const;

    auto operator<=>(const MultiWeight&) const = default;
    std::string str() const;
};

// Root coordinates: α = Σ k_i α_i.
using RootCoords = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

class RootSystem {
public:
    static constexpr int kMaxRank = 8;

    // Rejects anything but A_n (n≥1), B_n (n≥2), C_n (n≥3), D_n (n≥4),
    // E_6..E_8, F_4, G_2, and ranks above kMaxRank.
    RootSystem(char type_label, int rank);

    char type_label() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const;

    // cartan()[i][j] = <α_i^∨, α_j>.
    const IntMatrix& cartan() const { return cartan_; }
    // d_i = (α_i, α_i)/2, normalized so short roots have d = 1.
    const std::vector<int>& symmetrizer() const { return sym_; }

    // Simple roots in fundamental-weight coordinates (columns of the Cartan matrix).
    std::vector<Weight> simple_roots() const;
    // Fundamental weights in root coordinates (rows of the inverse Cartan transpose).
    std::vector<std::vector<Rational>> fundamental_weights() const;

    const std::vector<RootCoords>& positive_roots() const { return pos_roots_; }
    std::size_t num_positive_roots() const { return pos_roots_.size(); }
    // Index into positive_roots(), or -1.
    int positive_root_index(const RootCoords& r) const;
    bool is_root(const RootCoords& r) const;
    int height(const RootCoords& r) const;

    const RootCoords& theta_root() const { return pos_roots_.back(); }
    Weight theta() const { return root_to_weight(theta_root()); }
    // −w₀ ω_i = ω_{w0_permutation()[i]}.
    const std::vector<int>& w0_permutation() const { return w0_perm_; }

    Weight root_to_weight(const RootCoords& r) const;
    // Root coordinates of a weight (rational in general).
    std::vector<Rational> weight_to_root(const Weight& w) const;

    Rational inner(const Weight& a, const Weight& b) const;
    Rational inner_roots(const RootCoords& a, const RootCoords& b) const;
    // <μ, α^∨> for a root α.
    int coroot_pairing(const Weight& mu, const RootCoords& alpha) const;
    // <ρ^∨, μ>: sum of the root coordinates of μ.
    Rational height_of(const Weight& mu) const;

    Weight simple_reflection(const Weight& mu, int i) const;
    Weight dominant_representative(const Weight& mu) const;
    // ν ≤ λ in dominance order: λ − ν ∈ Q⁺.
    bool dominated_by(const Weight& nu, const Weight& lambda) const;
    Weight rho() const;
    int dim_algebra() const { return rank_ + 2 * static_cast<int>(pos_roots_.size()); }

    bool operator==(const RootSystem& o) const { return type_ == o.type_ && rank_ == o.rank_; }

private:
    char type_;
    int rank_;
    IntMatrix cartan_;
    std::vector<int> sym_;
    std::vector<std::vector<Rational>> cartan_inv_;
    std::vector<RootCoords> pos_roots_;
    std::map<RootCoords, int> root_index_;
    std::vector<int> w0_perm_;
};

RootSystem build_root_system(char type_label, int rank);
// Parses "A1", "G2", "E8".
RootSystem parse_root_system(const std::string& name);

struct CharacterMap {
    int arity = 1;
    std::map<MultiWeight, std::int64_t> entries;

    void add(const MultiWeight& w, std::int64_t m);
    std::int64_t multiplicity(const MultiWeight& w) const;
    std::int64_t total_mass() const;
    bool empty() const { return entries.empty(); }
    bool operator==(const CharacterMap&) const = default;
};

struct Factor {
    MultiWeight highest;
    std::int64_t mult = 0;
    std::optional<int> t_degree;

    bool operator==(const Factor&) const = default;
};

struct DecompositionReport {
    int arity = 1;
    std::vector<Factor> factors;

    // Sorts by (t_degree, weight) and merges duplicates.
    void normalize();
    void add(const MultiWeight& w, std::int64_t m, std::optional<int> t = std::nullopt);
    std::int64_t multiplicity(const MultiWeight& w) const;
    std::int64_t multiplicity(const MultiWeight& w, std::optional<int> t) const;
    std::int64_t total_multiplicity() const;
    DecompositionReport without_degrees() const;
    bool empty() const { return factors.empty(); }
    bool operator==(const DecompositionReport&) const = default;
    std::string str() const;
};

std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda);
std::int64_t weyl_dim(const RootSystem& rs, const MultiWeight& lambda);

// Full weight multiplicities of V(λ) by Freudenthal's recursion.
CharacterMap dominant_character(const RootSystem& rs, const Weight& lambda);
// Character of V(λ_1) ⊠ ... ⊠ V(λ_k).
CharacterMap product_character(const RootSystem& rs, const MultiWeight& lambda);
// Character of a tensor product (arity-1 convolution).
CharacterMap multiply_characters(const CharacterMap& a, const CharacterMap& b);

DecompositionReport decompose_character(const RootSystem& rs, const CharacterMap& chi);
DecompositionReport tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu);

// λ* = −w₀λ.
Weight dual_weight(const RootSystem& rs, const Weight& lambda);
MultiWeight dual_weight(const RootSystem& rs, const MultiWeight& lambda);

// Multiplicity of V(ν) in V(λ) ⊗ V(μ), cached per thread.
std::int64_t tensor_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                 const Weight& nu);

} // namespace curcoh
