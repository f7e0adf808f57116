#include "curcoh/poly.hpp"

#include "curcoh/errors.hpp"

#include <sstream>

namespace curcoh::poly {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

Poly constant(const Rational& c) {
    Poly p{c};
    trim(p);
    return p;
}

Poly monomial(int degree, const Rational& c) {
    Poly p(static_cast<std::size_t>(degree) + 1, 0);
    p.back() = c;
    trim(p);
    return p;
}

Poly linear(const Rational& a) { return Poly{-a, 1}; }

int degree(const Poly& p) {
    for (std::size_t i = p.size(); i > 0; --i)
        if (p[i - 1] != 0)
            return static_cast<int>(i - 1);
    return -1;
}

bool is_zero(const Poly& p) { return degree(p) < 0; }

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) { return add(a, scale(b, -1)); }

Poly scale(const Poly& a, const Rational& c) {
    Poly r = a;
    for (auto& x : r)
        x *= c;
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly pow(const Poly& a, int e) {
    Poly r = constant(1);
    for (int i = 0; i < e; ++i)
        r = mul(r, a);
    return r;
}

Poly mod(const Poly& a, const Poly& monic) {
    const int dm = degree(monic);
    if (dm < 0 || monic[static_cast<std::size_t>(dm)] != 1)
        throw ValidationError("poly::mod needs a monic modulus");
    Poly r = a;
    trim(r);
    while (degree(r) >= dm) {
        const int dr = degree(r);
        const Rational lead = r[static_cast<std::size_t>(dr)];
        const auto shift = static_cast<std::size_t>(dr - dm);
        for (std::size_t i = 0; i <= static_cast<std::size_t>(dm); ++i)
            r[shift + i] -= lead * monic[i];
        trim(r);
    }
    return r;
}

Rational eval(const Poly& p, const Rational& x) {
    Rational v = 0;
    for (std::size_t i = p.size(); i > 0; --i)
        v = v * x + p[i - 1];
    return v;
}

std::string str(const Poly& p) {
    if (is_zero(p))
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i > 0; --i) {
        const Rational& c = p[i - 1];
        if (c == 0)
            continue;
        if (!first)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << '-';
        const Rational a = abs(c);
        const std::size_t d = i - 1;
        if (a != 1 || d == 0)
            os << a;
        if (d >= 1)
            os << 't';
        if (d >= 2)
            os << '^' << d;
        first = false;
    }
    return os.str();
}

PolyBasis::PolyBasis(std::vector<Poly> basis) : basis_(std::move(basis)) {
    const std::size_t n = basis_.size();
    for (std::size_t k = 0; k < n; ++k) {
        Poly p = basis_[k];
        trim(p);
        std::vector<Rational> combo(n, 0);
        combo[k] = 1;
        for (const auto& pv : pivots_) {
            if (pv.column >= p.size() || p[pv.column] == 0)
                continue;
            const Rational c = p[pv.column];
            p = sub(p, scale(pv.row, c));
            for (std::size_t j = 0; j < n; ++j)
                combo[j] -= c * pv.combo[j];
        }
        const int d = degree(p);
        if (d < 0)
            throw InvariantViolation("PolyBasis: basis polynomials are linearly dependent");
        const Rational lead = p[static_cast<std::size_t>(d)];
        p = scale(p, 1 / lead);
        for (auto& c : combo)
            c /= lead;
        // keep earlier pivot rows reduced at the new pivot column
        for (auto& pv : pivots_) {
            if (static_cast<std::size_t>(d) >= pv.row.size() || pv.row[static_cast<std::size_t>(d)] == 0)
                continue;
            const Rational c = pv.row[static_cast<std::size_t>(d)];
            pv.row = sub(pv.row, scale(p, c));
            for (std::size_t j = 0; j < n; ++j)
                pv.combo[j] -= c * combo[j];
        }
        pivots_.push_back(Pivot{static_cast<std::size_t>(d), std::move(p), std::move(combo)});
    }
}

bool PolyBasis::reduce(Poly p, std::vector<Rational>* out) const {
    trim(p);
    std::vector<Rational> coords(basis_.size(), 0);
    for (const auto& pv : pivots_) {
        if (pv.column >= p.size() || p[pv.column] == 0)
            continue;
        const Rational c = p[pv.column];
        p = sub(p, scale(pv.row, c));
        for (std::size_t j = 0; j < coords.size(); ++j)
            coords[j] += c * pv.combo[j];
    }
    if (!is_zero(p))
        return false;
    if (out)
        *out = std::move(coords);
    return true;
}

std::vector<Rational> PolyBasis::coords(const Poly& p) const {
    std::vector<Rational> out;
    if (!reduce(p, &out))
        throw InvariantViolation("polynomial " + str(p) + " is outside the span of the basis");
    return out;
}

bool PolyBasis::contains(const Poly& p) const { return reduce(p, nullptr); }

} // namespace curcoh::poly
