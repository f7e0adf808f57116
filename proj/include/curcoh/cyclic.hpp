#pragma once

// First cyclic homology HC₁(A) = Λ²(A)/T(A), T(A) spanned by
// ab∧c + bc∧a + ca∧b, for A = C ⊕ I with I = ⟨(t−a)(t−b)⟩ (filtered by
// polynomial degree) and for finite-dimensional algebra tables.

#include "curcoh/chevalley.hpp"
#include "curcoh/exactmat.hpp"
#include "curcoh/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace curcoh::cyclic {

// Monomial basis of C ⊕ I after normalizing the points to {0,1}, f = t² − t:
// degree 0 is 1, even d ≥ 2 is f^{d/2}, odd d ≥ 3 is t f^{(d−1)/2}.
bool is_basis_degree(int d);
poly::Poly basis_poly(int d);
// Label (i,j) meaning t^i (t−1)^j: f^m = (m,m), t f^m = (m+1,m).
std::pair<int, int> basis_label(int d);
std::string label_str(int d);
// Coordinates of p ∈ C ⊕ I on the monomial basis, as (degree, coefficient).
std::vector<std::pair<int, Rational>> expand(const poly::Poly& p);
// t^i (t−1)^j expanded on the monomial basis.
std::vector<std::pair<int, Rational>> expand_label(int i, int j);

struct FilteredWedgeSpace {
    int cutoff = 0;
    std::vector<std::pair<int, int>> basis; // (deg u, deg v), deg u < deg v
    exactmat::SparseRatMatrix generators;   // rows: generator vectors on the wedge basis

    std::map<std::pair<int, int>, std::size_t> index;

    std::size_t index_of(int du, int dv) const; // throws if absent
    std::string label(std::size_t k) const;     // higher-degree factor first
    int total_degree(std::size_t k) const { return basis[k].first + basis[k].second; }
    // ab∧c + bc∧a + ca∧b for basis degrees a, b, c.
    exactmat::SparseRatMatrix::Row generator(int a, int b, int c) const;
};

// C ⊕ I at cutoff D; `only_f` restricts to the subalgebra C[f].
FilteredWedgeSpace build_wedge_space(int D, bool only_f = false);

struct HC1Result {
    std::size_t dim = 0;
    std::vector<std::string> survivors;
};

HC1Result hc1_cutoff(const std::vector<Rational>& points, int D);
std::size_t hc1_Cf_cutoff(int D);
std::size_t hc1_finite(const AlgebraTable& a);

// True when the two survivors (2,1)∧(1,1) and (3,2)∧(1,1) are independent
// modulo the generator span at cutoff D.
bool survivors_independent(int D);

// Matrix of the degree-(2D+1) relations among (D−j+1, D−j)∧(j,j), j = 1..D−1.
exactmat::SparseRatMatrix relation_matrix(int D);
Integer detM(int D);

} // namespace curcoh::cyclic
