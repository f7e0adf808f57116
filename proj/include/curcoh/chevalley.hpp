#pragma once

// Chevalley bases, truncated current algebras g ⊗ B for finite-dimensional
// commutative algebras B ⊂ C[t]/(modulus), and their modules.

#include "curcoh/exactmat.hpp"
#include "curcoh/poly.hpp"
#include "curcoh/rootdata.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace curcoh {

struct Term {
    std::size_t index;
    Rational coeff;
    bool operator==(const Term&) const = default;
};
// Sorted by index, no zero coefficients.
using SparseVec = std::vector<Term>;

void add_term(SparseVec& v, std::size_t index, const Rational& c);

// Finite-dimensional commutative algebra spanned by polynomial classes
// modulo a monic polynomial.
struct AlgebraTable {
    std::vector<std::string> basis_labels;
    std::vector<poly::Poly> polys; // representative of each basis element
    poly::Poly modulus;
    std::vector<std::vector<SparseVec>> products;
    std::optional<std::size_t> unit_index;
    std::vector<int> degree;
    // true when products are additive in degree (monomial bases of C[t]/t^s)
    bool graded = false;
    // For idempotent-adapted bases: which point's idempotent a basis element carries.
    std::vector<int> slot;
    int num_slots = 0;
    std::vector<Rational> points;

    std::size_t dim() const { return basis_labels.size(); }
    const SparseVec& product(std::size_t i, std::size_t j) const { return products[i][j]; }
    // Commutativity and associativity on all basis triples.
    void verify() const;
};

// x ↦ x ⊗ e_i, i = 1..k, for e_i the idempotents of C[t]/I^s.
struct IdempotentSplitting {
    std::vector<Rational> points;
    int s = 0;
    poly::Poly modulus; // ∏ (t − a_i)^s
    std::vector<poly::Poly> idempotents;
    // Checks e_i² ≡ e_i, e_i e_j ≡ 0, Σ e_i ≡ 1.
    void verify() const;
};

IdempotentSplitting idempotent_splitting(const std::vector<Rational>& points, int s);

class LieTable {
public:
    LieTable(std::string name, RootSystem rs, std::vector<std::string> labels, int weight_arity);

    const std::string& name() const { return name_; }
    const RootSystem& root_system() const { return rs_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    int weight_arity() const { return arity_; }

    const SparseVec& bracket(std::size_t i, std::size_t j) const { return brackets_[i][j]; }
    // Sets [i,j] = v and [j,i] = −v.
    void set_bracket(std::size_t i, std::size_t j, const SparseVec& v);

    const MultiWeight& weight(std::size_t i) const { return weights_[i]; }
    void set_weight(std::size_t i, MultiWeight w);

    bool graded() const { return t_degree_.has_value(); }
    int t_degree(std::size_t i) const;
    void set_t_degrees(std::vector<int> degrees) { t_degree_ = std::move(degrees); }

    // Current-algebra structure: basis i is x_{g_index(i)} ⊗ poly(i).
    bool is_current() const { return !g_index_.empty(); }
    std::size_t g_index(std::size_t i) const { return g_index_.at(i); }
    const poly::Poly& poly(std::size_t i) const { return polys_.at(i); }
    const poly::Poly& modulus() const { return modulus_; }
    const std::vector<Rational>& slot_points() const { return slot_points_; }
    void set_current_data(std::vector<std::size_t> g_index, std::vector<poly::Poly> polys, poly::Poly modulus,
                          std::vector<Rational> slot_points);

    SparseVec bracket_vec(const SparseVec& a, const SparseVec& b) const;

    // Throws InvariantViolation on failure.
    void verify_antisymmetry() const;
    void verify_jacobi() const;
    void verify_weights() const;
    void verify_grading() const;
    void verify_all() const;

    // Debug report: {"name","dim","basis","weights","t_degree","brackets":[[i,j,[[k,"c"],...]],...]}
    std::string to_json() const;

private:
    std::string name_;
    RootSystem rs_;
    std::vector<std::string> labels_;
    int arity_;
    std::vector<std::vector<SparseVec>> brackets_;
    std::vector<MultiWeight> weights_;
    std::optional<std::vector<int>> t_degree_;
    std::vector<std::size_t> g_index_;
    std::vector<poly::Poly> polys_;
    poly::Poly modulus_;
    std::vector<Rational> slot_points_;
};

// Basis {y_α (α > 0 by height), h_1..h_n, x_α}.
LieTable structure_constants(const RootSystem& rs);

// Index helpers for tables returned by structure_constants.
struct ChevalleyIndex {
    std::size_t num_pos;
    std::size_t rank;
    std::size_t y(std::size_t root) const { return root; }
    std::size_t h(std::size_t i) const { return num_pos + i; }
    std::size_t x(std::size_t root) const { return num_pos + rank + root; }
};
ChevalleyIndex chevalley_index(const RootSystem& rs);

// N_{α,β} for the table above, α, β arbitrary roots in root coordinates.
int structure_constant(const RootSystem& rs, const RootCoords& alpha, const RootCoords& beta);

AlgebraTable build_algebra_table(const std::vector<Rational>& points, int s, bool unital);
// tC[t]/t^s (graded).
AlgebraTable positive_truncation_algebra(int s);
// C[t]/t^s (graded).
AlgebraTable full_truncation_algebra(int s);
// Idempotent-adapted basis {e_i f^m : 1 ≤ m < s} of I/I^s, optionally with 1.
AlgebraTable idempotent_algebra(const IdempotentSplitting& split, bool unital);

// g ⊗ B.
LieTable current_algebra(const LieTable& g, const AlgebraTable& b, const std::string& name);

LieTable build_gtp_s(const RootSystem& rs, int s);
std::pair<LieTable, IdempotentSplitting> build_gIs(const RootSystem& rs, const std::vector<Rational>& points, int s);

struct TruncationSpec {
    enum class Kind { FullPolynomial, UnitalAugmented } kind = Kind::FullPolynomial;
    int s = 1;
    std::vector<Rational> points;
};
LieTable build_full_truncation(const RootSystem& rs, const TruncationSpec& spec);

// By name: "gtp", "gIs", "full", "unital" or "simple" (s and points ignored).
LieTable build_algebra(const std::string& kind, const RootSystem& rs, int s, const std::vector<Rational>& points);
// Truncation level used when none is given: 5 for gtp, 4 for gIs and unital, 3 for full.
int default_truncation(const std::string& kind);

// L1 ⊕ L2 with weights concatenated (arity adds).
LieTable direct_sum(const LieTable& a, const LieTable& b);

// Coordinates of x_{g_index} ⊗ p in a current-algebra table.
SparseVec current_element(const LieTable& table, std::size_t g_index, const poly::Poly& p);

struct ModuleRep {
    std::string host_name;
    std::size_t host_dim = 0;
    std::size_t dim = 0;
    // action[i](w, v) = coefficient of e_w in ρ(b_i) e_v
    std::vector<exactmat::SparseRatMatrix> action;
    std::vector<MultiWeight> weights;
    std::vector<std::string> labels;

    // ρ([u,v]) = [ρ(u), ρ(v)] on all basis pairs, and weight compatibility.
    void verify(const LieTable& host) const;
    // True if some basis element of positive t-degree acts nonzero.
    bool positive_degree_acts(const LieTable& host) const;
};

ModuleRep trivial_module(const LieTable& host);
// V(λ) as a module over structure_constants(rs).
ModuleRep irreducible_module(const LieTable& g, const Weight& lambda);
// Pullback of V(λ) along evaluation at a root of the host's modulus.
ModuleRep evaluation_module(const RootSystem& rs, const Weight& lambda, const Rational& point, const LieTable& host);
ModuleRep tensor_modules(const ModuleRep& a, const ModuleRep& b);
// Same, re-verifying bracket compatibility against the host.
ModuleRep tensor_modules(const ModuleRep& a, const ModuleRep& b, const LieTable& host);
ModuleRep dual_module(const ModuleRep& m);

} // namespace curcoh
