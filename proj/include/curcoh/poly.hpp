#pragma once

// Dense univariate polynomials over Q, coefficient i is the t^i coefficient.

#include "curcoh/exactmat.hpp"

#include <string>
#include <vector>

namespace curcoh::poly {

using Poly = std::vector<Rational>;

void trim(Poly& p);
Poly constant(const Rational& c);
Poly monomial(int degree, const Rational& c = 1);
// (t − a)
Poly linear(const Rational& a);

int degree(const Poly& p); // −1 for zero
bool is_zero(const Poly& p);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);
Poly mul(const Poly& a, const Poly& b);
Poly pow(const Poly& a, int e);
// Remainder of a modulo a monic polynomial.
Poly mod(const Poly& a, const Poly& monic);
Rational eval(const Poly& p, const Rational& x);

std::string str(const Poly& p);

// Coordinates of polynomials with respect to a fixed linearly independent list.
class PolyBasis {
public:
    explicit PolyBasis(std::vector<Poly> basis);

    std::size_t size() const { return basis_.size(); }
    const Poly& operator[](std::size_t i) const { return basis_[i]; }
    // Throws InvariantViolation when p is outside the span.
    std::vector<Rational> coords(const Poly& p) const;
    bool contains(const Poly& p) const;

private:
    struct Pivot {
        std::size_t column;
        Poly row;
        std::vector<Rational> combo;
    };
    bool reduce(Poly p, std::vector<Rational>* out) const;

    std::vector<Poly> basis_;
    std::vector<Pivot> pivots_;
};

} // namespace curcoh::poly
