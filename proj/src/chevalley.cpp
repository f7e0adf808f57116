#include "curcoh/chevalley.hpp"

#include "curcoh/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace curcoh {

using exactmat::SparseRatMatrix;
using poly::Poly;

void add_term(SparseVec& v, std::size_t index, const Rational& c) {
    if (c == 0)
        return;
    auto it = std::lower_bound(v.begin(), v.end(), index, [](const Term& t, std::size_t i) { return t.index < i; });
    if (it != v.end() && it->index == index) {
        it->coeff += c;
        if (it->coeff == 0)
            v.erase(it);
    } else {
        v.insert(it, Term{index, c});
    }
}

namespace {

SparseVec negate(const SparseVec& v) {
    SparseVec r = v;
    for (auto& t : r)
        t.coeff = -t.coeff;
    return r;
}

void check_distinct(const std::vector<Rational>& points) {
    if (points.empty())
        throw ValidationError("at least one evaluation point is required");
    std::set<Rational> seen;
    for (const auto& p : points)
        if (!seen.insert(p).second)
            throw ValidationError("evaluation points must be distinct (repeated " + p.get_str() + ")");
}

Poly f_poly(const std::vector<Rational>& points) {
    Poly f = poly::constant(1);
    for (const auto& a : points)
        f = poly::mul(f, poly::linear(a));
    return f;
}

std::string root_label(const RootCoords& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i)
        s += (i ? "," : "") + std::to_string(r[i]);
    return s + ")";
}

RootCoords operator+(const RootCoords& a, const RootCoords& b) {
    RootCoords r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

RootCoords operator-(const RootCoords& a) {
    RootCoords r = a;
    for (int& x : r)
        x = -x;
    return r;
}

RootCoords operator-(const RootCoords& a, const RootCoords& b) { return a + (-b); }

bool positive(const RootCoords& r) {
    return std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; }) &&
           std::any_of(r.begin(), r.end(), [](int x) { return x > 0; });
}

// Structure constants N_{α,β} by the extraspecial-pair recursion.
class NComputer {
public:
    explicit NComputer(const RootSystem& rs) : rs_(rs) {
        const auto& pos = rs.positive_roots();
        for (const auto& xi : pos) {
            if (rs.height(xi) < 2)
                continue;
            for (const auto& a : pos) {
                RootCoords b = xi - a;
                if (rs.positive_root_index(b) >= 0) {
                    special_.emplace(xi, std::make_pair(a, b));
                    break;
                }
            }
        }
    }

    int operator()(const RootCoords& a, const RootCoords& b) {
        auto key = std::make_pair(a, b);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        const int v = compute(a, b);
        memo_.emplace(key, v);
        return v;
    }

private:
    int p_value(const RootCoords& a, const RootCoords& b) const {
        int p = 0;
        RootCoords c = b - a;
        while (rs_.is_root(c)) {
            ++p;
            c = c - a;
        }
        return p;
    }

    Rational norm(const RootCoords& r) const { return rs_.inner_roots(r, r); }

    int compute(const RootCoords& a, const RootCoords& b) {
        const RootCoords sum = a + b;
        if (!rs_.is_root(sum))
            return 0;
        const bool pa = positive(a), pb = positive(b);
        if (pa && pb) {
            const auto& [a1, b1] = special_.at(sum);
            if (a == a1)
                return p_value(a, b) + 1;
            if (b == a1)
                return -(p_value(b, a) + 1);
            if (rs_.positive_root_index(a) > rs_.positive_root_index(b))
                return -(*this)(b, a);
            Rational t = 0;
            const RootCoords ba = b - a1, aa = a - a1;
            if (rs_.is_root(ba))
                t += Rational((*this)(b, -a1) * (*this)(a, -b1)) / norm(ba);
            if (rs_.is_root(aa))
                t += Rational((*this)(-a1, a) * (*this)(b, -b1)) / norm(aa);
            Rational v = norm(sum) / (*this)(a1, b1) * t;
            if (v.get_den() != 1)
                throw InvariantViolation("non-integral structure constant");
            return static_cast<int>(v.get_num().get_si());
        }
        if (!pa && !pb)
            return -(*this)(-a, -b);
        const RootCoords g = -sum;
        Rational v;
        if (positive(b) == positive(g))
            v = norm(g) / norm(a) * (*this)(b, g);
        else
            v = norm(g) / norm(b) * (*this)(g, a);
        if (v.get_den() != 1)
            throw InvariantViolation("non-integral structure constant");
        return static_cast<int>(v.get_num().get_si());
    }

    const RootSystem& rs_;
    std::map<RootCoords, std::pair<RootCoords, RootCoords>> special_;
    std::map<std::pair<RootCoords, RootCoords>, int> memo_;
};

SparseRatMatrix scaled(const SparseRatMatrix& m, const Rational& c) {
    SparseRatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i))
            r.set(i, j, v * c);
    return r;
}

void accumulate(SparseRatMatrix& acc, const SparseRatMatrix& m, const Rational& c) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i))
            acc.add(i, j, v * c);
}

SparseRatMatrix commutator(const SparseRatMatrix& a, const SparseRatMatrix& b) {
    SparseRatMatrix r = a * b;
    accumulate(r, b * a, -1);
    return r;
}

} // namespace

// ------------------------------------------------------------ algebras

void AlgebraTable::verify() const {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (products[i][j] != products[j][i])
                throw InvariantViolation("algebra table is not commutative");
    auto times = [&](const SparseVec& a, std::size_t k) {
        SparseVec r;
        for (const auto& t : a)
            for (const auto& u : products[t.index][k])
                add_term(r, u.index, t.coeff * u.coeff);
        return r;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                SparseVec left = times(products[i][j], k);
                SparseVec right = times(products[j][k], i);
                if (left != right)
                    throw InvariantViolation("algebra table is not associative");
            }
}

void IdempotentSplitting::verify() const {
    Poly total;
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
        const Poly& e = idempotents[i];
        if (poly::mod(poly::sub(poly::mul(e, e), e), modulus) != Poly{})
            throw InvariantViolation("idempotent " + std::to_string(i + 1) + " is not idempotent");
        for (std::size_t j = i + 1; j < idempotents.size(); ++j)
            if (!poly::is_zero(poly::mod(poly::mul(e, idempotents[j]), modulus)))
                throw InvariantViolation("idempotents are not orthogonal");
        total = poly::add(total, e);
    }
    if (poly::mod(total, modulus) != poly::constant(1))
        throw InvariantViolation("idempotents do not sum to 1");
}

IdempotentSplitting idempotent_splitting(const std::vector<Rational>& points, int s) {
    check_distinct(points);
    if (s < 1)
        throw ValidationError("truncation level must be at least 1");
    IdempotentSplitting sp;
    sp.points = points;
    sp.s = s;
    sp.modulus = poly::pow(f_poly(points), s);
    int iterations = 1;
    while ((1 << (iterations - 1)) < s)
        ++iterations;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Poly e = poly::constant(1);
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i)
                e = poly::scale(poly::mul(e, poly::linear(points[j])), 1 / Rational(points[i] - points[j]));
        for (int it = 0; it < iterations; ++it) {
            Poly e2 = poly::mul(e, e);
            e = poly::mod(poly::sub(poly::scale(e2, 3), poly::scale(poly::mul(e2, e), 2)), sp.modulus);
        }
        sp.idempotents.push_back(e);
    }
    sp.verify();
    return sp;
}

namespace {

void fill_products(AlgebraTable& b) {
    const std::size_t n = b.polys.size();
    poly::PolyBasis basis(b.polys);
    b.products.assign(n, std::vector<SparseVec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Poly p = poly::mod(poly::mul(b.polys[i], b.polys[j]), b.modulus);
            auto c = basis.coords(p);
            SparseVec v;
            for (std::size_t k = 0; k < n; ++k)
                add_term(v, k, c[k]);
            b.products[i][j] = v;
            b.products[j][i] = v;
        }
}

std::string power_label(const std::string& base, int e) {
    if (e == 0)
        return "";
    return e == 1 ? base : base + "^" + std::to_string(e);
}

} // namespace

AlgebraTable positive_truncation_algebra(int s) {
    if (s < 2)
        throw ValidationError("truncation level s must be at least 2");
    AlgebraTable b;
    b.modulus = poly::monomial(s);
    for (int m = 1; m < s; ++m) {
        b.basis_labels.push_back(power_label("t", m));
        b.polys.push_back(poly::monomial(m));
        b.degree.push_back(m);
    }
    b.graded = true;
    fill_products(b);
    return b;
}

AlgebraTable full_truncation_algebra(int s) {
    if (s < 1)
        throw ValidationError("truncation level s must be at least 1");
    AlgebraTable b;
    b.modulus = poly::monomial(s);
    for (int m = 0; m < s; ++m) {
        b.basis_labels.push_back(m == 0 ? "1" : power_label("t", m));
        b.polys.push_back(poly::monomial(m));
        b.degree.push_back(m);
    }
    b.unit_index = 0;
    b.graded = true;
    fill_products(b);
    return b;
}

AlgebraTable build_algebra_table(const std::vector<Rational>& points, int s, bool unital) {
    check_distinct(points);
    if (s < 1)
        throw ValidationError("truncation level s must be at least 1");
    const int k = static_cast<int>(points.size());
    const Poly f = f_poly(points);
    AlgebraTable b;
    b.points = points;
    b.modulus = poly::pow(f, s);
    if (unital) {
        b.basis_labels.push_back("1");
        b.polys.push_back(poly::constant(1));
        b.degree.push_back(0);
        b.unit_index = 0;
    }
    for (int m = 1; m < s; ++m)
        for (int r = 0; r < k; ++r) {
            std::string label = power_label("t", r);
            label += (label.empty() ? "" : " ") + power_label("f", m);
            b.basis_labels.push_back(label);
            b.polys.push_back(poly::mul(poly::monomial(r), poly::pow(f, m)));
            b.degree.push_back(r + k * m);
        }
    fill_products(b);
    return b;
}

AlgebraTable idempotent_algebra(const IdempotentSplitting& split, bool unital) {
    const Poly f = f_poly(split.points);
    AlgebraTable b;
    b.points = split.points;
    b.modulus = split.modulus;
    if (unital) {
        b.basis_labels.push_back("1");
        b.polys.push_back(poly::constant(1));
        b.degree.push_back(0);
        b.unit_index = 0;
    } else {
        b.num_slots = static_cast<int>(split.points.size());
    }
    for (int m = 1; m < split.s; ++m)
        for (std::size_t i = 0; i < split.points.size(); ++i) {
            b.basis_labels.push_back("e" + std::to_string(i + 1) + " " + power_label("f", m));
            b.polys.push_back(poly::mod(poly::mul(split.idempotents[i], poly::pow(f, m)), split.modulus));
            b.degree.push_back(m);
            if (!unital)
                b.slot.push_back(static_cast<int>(i));
        }
    fill_products(b);
    return b;
}

// ------------------------------------------------------------ LieTable

LieTable::LieTable(std::string name, RootSystem rs, std::vector<std::string> labels, int weight_arity)
    : name_(std::move(name)), rs_(std::move(rs)), labels_(std::move(labels)), arity_(weight_arity) {
    brackets_.assign(labels_.size(), std::vector<SparseVec>(labels_.size()));
    weights_.assign(labels_.size(), MultiWeight::zero(arity_, rs_.rank()));
}

void LieTable::set_bracket(std::size_t i, std::size_t j, const SparseVec& v) {
    brackets_[i][j] = v;
    brackets_[j][i] = negate(v);
}

void LieTable::set_weight(std::size_t i, MultiWeight w) {
    if (w.arity() != arity_)
        throw ValidationError("weight arity mismatch in table " + name_);
    weights_[i] = std::move(w);
}

int LieTable::t_degree(std::size_t i) const {
    if (!t_degree_)
        throw ValidationError("table " + name_ + " is not graded");
    return (*t_degree_)[i];
}

void LieTable::set_current_data(std::vector<std::size_t> g_index, std::vector<Poly> polys, Poly modulus,
                                std::vector<Rational> slot_points) {
    g_index_ = std::move(g_index);
    polys_ = std::move(polys);
    modulus_ = std::move(modulus);
    slot_points_ = std::move(slot_points);
}

SparseVec LieTable::bracket_vec(const SparseVec& a, const SparseVec& b) const {
    SparseVec r;
    for (const auto& s : a)
        for (const auto& t : b)
            for (const auto& u : brackets_[s.index][t.index])
                add_term(r, u.index, s.coeff * t.coeff * u.coeff);
    return r;
}

void LieTable::verify_antisymmetry() const {
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!brackets_[i][i].empty())
            throw InvariantViolation(name_ + ": [b,b] ≠ 0 for " + labels_[i]);
        for (std::size_t j = i + 1; j < dim(); ++j)
            if (brackets_[i][j] != negate(brackets_[j][i]))
                throw InvariantViolation(name_ + ": bracket is not antisymmetric");
    }
}

void LieTable::verify_jacobi() const {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const SparseVec& ij = brackets_[i][j];
            for (std::size_t k = j + 1; k < n; ++k) {
                SparseVec total;
                for (const auto& t : ij)
                    for (const auto& u : brackets_[t.index][k])
                        add_term(total, u.index, t.coeff * u.coeff);
                for (const auto& t : brackets_[j][k])
                    for (const auto& u : brackets_[t.index][i])
                        add_term(total, u.index, t.coeff * u.coeff);
                for (const auto& t : brackets_[k][i])
                    for (const auto& u : brackets_[t.index][j])
                        add_term(total, u.index, t.coeff * u.coeff);
                if (!total.empty())
                    throw InvariantViolation(name_ + ": Jacobi fails on (" + labels_[i] + ", " + labels_[j] +
                                             ", " + labels_[k] + ")");
            }
        }
}

void LieTable::verify_weights() const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            for (const auto& t : brackets_[i][j])
                if (weights_[t.index] != weights_[i] + weights_[j])
                    throw InvariantViolation(name_ + ": bracket does not respect weights");
}

void LieTable::verify_grading() const {
    if (!t_degree_)
        return;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            for (const auto& t : brackets_[i][j])
                if ((*t_degree_)[t.index] != (*t_degree_)[i] + (*t_degree_)[j])
                    throw InvariantViolation(name_ + ": bracket is not additive in t-degree");
}

void LieTable::verify_all() const {
    verify_antisymmetry();
    verify_weights();
    verify_grading();
    verify_jacobi();
}

std::string LieTable::to_json() const {
    using nlohmann::json;
    json j;
    j["name"] = name_;
    j["dim"] = dim();
    j["basis"] = labels_;
    json ws = json::array();
    for (const auto& w : weights_) {
        json parts = json::array();
        for (const auto& p : w.parts)
            parts.push_back(p.coords);
        ws.push_back(arity_ == 1 ? parts[0] : parts);
    }
    j["weights"] = ws;
    if (t_degree_)
        j["t_degree"] = *t_degree_;
    json br = json::array();
    for (std::size_t a = 0; a < dim(); ++a)
        for (std::size_t b = a + 1; b < dim(); ++b) {
            if (brackets_[a][b].empty())
                continue;
            json terms = json::array();
            for (const auto& t : brackets_[a][b])
                terms.push_back(json::array({t.index, t.coeff.get_str()}));
            br.push_back(json::array({a, b, terms}));
        }
    j["brackets"] = br;
    return j.dump();
}

// ------------------------------------------------------------ Chevalley basis

ChevalleyIndex chevalley_index(const RootSystem& rs) {
    return ChevalleyIndex{rs.num_positive_roots(), static_cast<std::size_t>(rs.rank())};
}

int structure_constant(const RootSystem& rs, const RootCoords& alpha, const RootCoords& beta) {
    NComputer n(rs);
    return n(alpha, beta);
}

namespace {

LieTable make_structure_constants(const RootSystem& rs) {
    const auto idx = chevalley_index(rs);
    const auto& pos = rs.positive_roots();
    const std::size_t P = pos.size(), n = idx.rank;
    std::vector<std::string> labels;
    for (const auto& r : pos)
        labels.push_back("y" + root_label(r));
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back("h" + std::to_string(i + 1));
    for (const auto& r : pos)
        labels.push_back("x" + root_label(r));
    LieTable g(rs.name(), rs, labels, 1);

    // every root vector e_γ as (root, index)
    std::vector<std::pair<RootCoords, std::size_t>> roots;
    for (std::size_t k = 0; k < P; ++k) {
        roots.emplace_back(-pos[k], idx.y(k));
        roots.emplace_back(pos[k], idx.x(k));
        const Weight w = rs.root_to_weight(pos[k]);
        g.set_weight(idx.x(k), MultiWeight(w));
        g.set_weight(idx.y(k), MultiWeight(-w));
    }
    auto index_of = [&](const RootCoords& r) -> std::size_t {
        if (positive(r))
            return idx.x(static_cast<std::size_t>(rs.positive_root_index(r)));
        return idx.y(static_cast<std::size_t>(rs.positive_root_index(-r)));
    };

    // [h_i, e_γ] = <γ, α_i^∨> e_γ
    for (const auto& [r, e] : roots) {
        const Weight w = rs.root_to_weight(r);
        for (std::size_t i = 0; i < n; ++i) {
            SparseVec v;
            add_term(v, e, w.coords[i]);
            g.set_bracket(idx.h(i), e, v);
        }
    }

    NComputer N(rs);
    const auto& sym = rs.symmetrizer();
    for (std::size_t a = 0; a < roots.size(); ++a)
        for (std::size_t b = a + 1; b < roots.size(); ++b) {
            const auto& [ra, ea] = roots[a];
            const auto& [rb, eb] = roots[b];
            const RootCoords sum = ra + rb;
            SparseVec v;
            if (std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; })) {
                // [x_α, y_α] = h_α = Σ k_i (d_i/d_α) h_i
                const RootCoords& alpha = positive(ra) ? ra : rb;
                const Rational d_alpha = rs.inner_roots(alpha, alpha) / 2;
                for (std::size_t i = 0; i < n; ++i) {
                    Rational c = alpha[i] * sym[i] / d_alpha;
                    add_term(v, idx.h(i), c);
                }
                if (!positive(ra))
                    v = negate(v);
            } else if (rs.is_root(sum)) {
                add_term(v, index_of(sum), N(ra, rb));
            }
            if (!v.empty())
                g.set_bracket(ea, eb, v);
        }

    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
            for (const auto& t : g.bracket(i, j))
                if (t.coeff.get_den() != 1)
                    throw InvariantViolation("non-integral Chevalley structure constant");
    g.verify_all();
    return g;
}

} // namespace

LieTable structure_constants(const RootSystem& rs) {
    static std::mutex mu;
    static std::map<std::pair<char, int>, std::shared_ptr<const LieTable>> cache;
    const auto key = std::make_pair(rs.type_label(), rs.rank());
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end())
            return *it->second;
    }
    auto table = std::make_shared<const LieTable>(make_structure_constants(rs));
    std::lock_guard lock(mu);
    cache.emplace(key, table);
    return *table;
}

// ------------------------------------------------------------ current algebras

LieTable current_algebra(const LieTable& g, const AlgebraTable& b, const std::string& name) {
    const std::size_t dg = g.dim(), db = b.dim();
    const int arity = b.num_slots > 0 ? b.num_slots : 1;
    std::vector<std::string> labels;
    std::vector<std::size_t> gidx;
    std::vector<Poly> polys;
    for (std::size_t p = 0; p < db; ++p)
        for (std::size_t a = 0; a < dg; ++a) {
            const std::string& bl = b.basis_labels[p];
            labels.push_back(bl == "1" ? g.basis_labels()[a] : g.basis_labels()[a] + "⊗" + bl);
            gidx.push_back(a);
            polys.push_back(b.polys[p]);
        }
    LieTable L(name, g.root_system(), labels, arity);
    const int rank = g.root_system().rank();
    for (std::size_t p = 0; p < db; ++p)
        for (std::size_t a = 0; a < dg; ++a) {
            const Weight& w = g.weight(a).parts.front();
            if (b.num_slots > 0) {
                MultiWeight mw = MultiWeight::zero(arity, rank);
                mw.parts[static_cast<std::size_t>(b.slot[p])] = w;
                L.set_weight(p * dg + a, mw);
            } else {
                L.set_weight(p * dg + a, MultiWeight(w));
            }
        }
    for (std::size_t p = 0; p < db; ++p)
        for (std::size_t q = p; q < db; ++q) {
            const SparseVec& pq = b.product(p, q);
            if (pq.empty())
                continue;
            for (std::size_t a = 0; a < dg; ++a)
                for (std::size_t c = (p == q ? a + 1 : 0); c < dg; ++c) {
                    const SparseVec& ac = g.bracket(a, c);
                    if (ac.empty())
                        continue;
                    SparseVec v;
                    for (const auto& u : pq)
                        for (const auto& t : ac)
                            add_term(v, u.index * dg + t.index, u.coeff * t.coeff);
                    L.set_bracket(p * dg + a, q * dg + c, v);
                }
        }
    if (b.graded) {
        std::vector<int> deg;
        for (std::size_t p = 0; p < db; ++p)
            for (std::size_t a = 0; a < dg; ++a)
                deg.push_back(b.degree[p]);
        L.set_t_degrees(deg);
    }
    L.set_current_data(gidx, polys, b.modulus, b.num_slots > 0 ? b.points : std::vector<Rational>{});
    return L;
}

namespace {
std::string points_str(const std::vector<Rational>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i)
        s += (i ? "," : "") + pts[i].get_str();
    return s;
}
} // namespace

LieTable build_gtp_s(const RootSystem& rs, int s) {
    if (s < 2)
        throw ValidationError("gtp_s needs s ≥ 2 (got " + std::to_string(s) + ")");
    LieTable L = current_algebra(structure_constants(rs), positive_truncation_algebra(s),
                                 "gtp(" + rs.name() + ",s=" + std::to_string(s) + ")");
    L.verify_antisymmetry();
    L.verify_weights();
    L.verify_grading();
    return L;
}

std::pair<LieTable, IdempotentSplitting> build_gIs(const RootSystem& rs, const std::vector<Rational>& points,
                                                   int s) {
    check_distinct(points);
    if (s < 2)
        throw ValidationError("g⊗I/I^s needs s ≥ 2 (got " + std::to_string(s) + ")");
    IdempotentSplitting split = idempotent_splitting(points, s);
    LieTable L = current_algebra(structure_constants(rs), idempotent_algebra(split, false),
                                 "gIs(" + rs.name() + ";" + points_str(points) + ";s=" + std::to_string(s) + ")");
    L.verify_antisymmetry();
    L.verify_weights();
    return {std::move(L), std::move(split)};
}

LieTable build_full_truncation(const RootSystem& rs, const TruncationSpec& spec) {
    const LieTable g = structure_constants(rs);
    if (spec.kind == TruncationSpec::Kind::FullPolynomial) {
        if (spec.s < 1)
            throw ValidationError("g[t]_s needs s ≥ 1");
        LieTable L = current_algebra(g, full_truncation_algebra(spec.s),
                                     "g[t](" + rs.name() + ",s=" + std::to_string(spec.s) + ")");
        L.verify_antisymmetry();
        L.verify_grading();
        return L;
    }
    check_distinct(spec.points);
    if (spec.s < 2)
        throw ValidationError("g⊗(C⊕I/I^s) needs s ≥ 2");
    LieTable L = current_algebra(g, idempotent_algebra(idempotent_splitting(spec.points, spec.s), true),
                                 "gA(" + rs.name() + ";" + points_str(spec.points) + ";s=" + std::to_string(spec.s) +
                                     ")");
    L.verify_antisymmetry();
    L.verify_weights();
    return L;
}

LieTable build_algebra(const std::string& kind, const RootSystem& rs, int s, const std::vector<Rational>& points) {
    if (kind == "gtp")
        return build_gtp_s(rs, s);
    if (kind == "gIs")
        return build_gIs(rs, points, s).first;
    if (kind == "full")
        return build_full_truncation(rs, {TruncationSpec::Kind::FullPolynomial, s, {}});
    if (kind == "unital")
        return build_full_truncation(rs, {TruncationSpec::Kind::UnitalAugmented, s, points});
    if (kind == "simple")
        return structure_constants(rs);
    throw ValidationError("unknown algebra '" + kind + "' (gtp, gIs, full, unital, simple)");
}

int default_truncation(const std::string& kind) {
    if (kind == "gtp")
        return 5;
    if (kind == "full")
        return 3;
    return 4;
}

LieTable direct_sum(const LieTable& a, const LieTable& b) {
    if (!(a.root_system() == b.root_system()))
        throw ValidationError("direct_sum needs tables over the same root system");
    std::vector<std::string> labels;
    for (const auto& l : a.basis_labels())
        labels.push_back(l + "[1]");
    for (const auto& l : b.basis_labels())
        labels.push_back(l + "[2]");
    const int arity = a.weight_arity() + b.weight_arity();
    const int rank = a.root_system().rank();
    LieTable L("(" + a.name() + ")⊕(" + b.name() + ")", a.root_system(), labels, arity);
    const std::size_t na = a.dim();
    for (std::size_t i = 0; i < na; ++i) {
        MultiWeight w = a.weight(i);
        for (int k = 0; k < b.weight_arity(); ++k)
            w.parts.push_back(Weight::zero(rank));
        L.set_weight(i, w);
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        MultiWeight w = MultiWeight::zero(a.weight_arity(), rank);
        for (const auto& p : b.weight(i).parts)
            w.parts.push_back(p);
        L.set_weight(na + i, w);
    }
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = i + 1; j < na; ++j)
            if (!a.bracket(i, j).empty())
                L.set_bracket(i, j, a.bracket(i, j));
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = i + 1; j < b.dim(); ++j)
            if (!b.bracket(i, j).empty()) {
                SparseVec v;
                for (const auto& t : b.bracket(i, j))
                    add_term(v, na + t.index, t.coeff);
                L.set_bracket(na + i, na + j, v);
            }
    if (a.graded() && b.graded()) {
        std::vector<int> deg;
        for (std::size_t i = 0; i < na; ++i)
            deg.push_back(a.t_degree(i));
        for (std::size_t i = 0; i < b.dim(); ++i)
            deg.push_back(b.t_degree(i));
        L.set_t_degrees(deg);
    }
    return L;
}

SparseVec current_element(const LieTable& table, std::size_t g_index, const Poly& p) {
    if (!table.is_current())
        throw ValidationError(table.name() + " is not a current algebra");
    const std::size_t dg = static_cast<std::size_t>(table.root_system().dim_algebra());
    if (g_index >= dg)
        throw ValidationError("g index out of range");
    const std::size_t db = table.dim() / dg;
    std::vector<Poly> polys;
    for (std::size_t b = 0; b < db; ++b)
        polys.push_back(table.poly(b * dg));
    poly::PolyBasis basis(polys);
    const Poly r = poly::mod(p, table.modulus());
    if (!basis.contains(r))
        throw ValidationError("element " + poly::str(p) + " does not lie in the coefficient algebra");
    const auto c = basis.coords(r);
    SparseVec v;
    for (std::size_t b = 0; b < db; ++b)
        add_term(v, b * dg + g_index, c[b]);
    return v;
}

// ------------------------------------------------------------ modules

void ModuleRep::verify(const LieTable& host) const {
    if (host.name() != host_name || host.dim() != host_dim || action.size() != host.dim())
        throw InvariantViolation("module does not belong to host " + host.name());
    for (std::size_t i = 0; i < host.dim(); ++i) {
        const auto& a = action[i];
        for (std::size_t w = 0; w < dim; ++w)
            for (const auto& [v, c] : a.row(w))
                if (weights[w] != weights[v] + host.weight(i))
                    throw InvariantViolation("module action does not respect weights");
    }
    for (std::size_t i = 0; i < host.dim(); ++i)
        for (std::size_t j = i + 1; j < host.dim(); ++j) {
            SparseRatMatrix lhs(dim, dim);
            for (const auto& t : host.bracket(i, j))
                accumulate(lhs, action[t.index], t.coeff);
            if (!(commutator(action[i], action[j]) == lhs))
                throw InvariantViolation("module action is not a Lie homomorphism on (" + host.basis_labels()[i] +
                                         ", " + host.basis_labels()[j] + ")");
        }
}

bool ModuleRep::positive_degree_acts(const LieTable& host) const {
    if (!host.graded())
        return false;
    for (std::size_t i = 0; i < host.dim(); ++i)
        if (host.t_degree(i) > 0 && !action[i].is_zero())
            return true;
    return false;
}

ModuleRep trivial_module(const LieTable& host) {
    ModuleRep m;
    m.host_name = host.name();
    m.host_dim = host.dim();
    m.dim = 1;
    m.action.assign(host.dim(), SparseRatMatrix(1, 1));
    m.weights = {MultiWeight::zero(host.weight_arity(), host.root_system().rank())};
    m.labels = {"1"};
    return m;
}

ModuleRep irreducible_module(const LieTable& g, const Weight& lambda) {
    const RootSystem& rs = g.root_system();
    if (g.is_current() || g.dim() != static_cast<std::size_t>(rs.dim_algebra()))
        throw ValidationError("irreducible_module needs the Chevalley table of g");
    const CharacterMap chi = dominant_character(rs, lambda);
    const int n = rs.rank();
    const auto simple = rs.simple_roots();

    // weight spaces by depth below λ
    std::map<Weight, std::size_t> dims;
    std::map<Weight, int> depth;
    for (const auto& [w, m] : chi.entries) {
        const Weight& mu = w.parts.front();
        dims[mu] = static_cast<std::size_t>(m);
        depth[mu] = static_cast<int>(rs.height_of(lambda - mu).get_num().get_si());
    }
    std::vector<std::vector<Weight>> levels;
    for (const auto& [mu, d] : depth) {
        if (static_cast<std::size_t>(d) >= levels.size())
            levels.resize(static_cast<std::size_t>(d) + 1);
        levels[static_cast<std::size_t>(d)].push_back(mu);
    }
    using Dense = std::vector<std::vector<Rational>>; // [row][col]
    // E[j][μ]: V_μ → V_{μ+α_j};  F[i][μ]: V_μ → V_{μ−α_i}
    std::vector<std::map<Weight, Dense>> E(static_cast<std::size_t>(n)), F(static_cast<std::size_t>(n));
    auto has = [&](const Weight& w) { return dims.count(w) > 0; };

    for (std::size_t lv = 1; lv < levels.size(); ++lv) {
        for (const auto& mu : levels[lv]) {
            const std::size_t m = dims[mu];
            // e-image coordinates: concatenation over j of V_{μ+α_j}
            std::vector<std::size_t> offset(static_cast<std::size_t>(n) + 1, 0);
            for (int j = 0; j < n; ++j) {
                const Weight up = mu + simple[static_cast<std::size_t>(j)];
                offset[static_cast<std::size_t>(j) + 1] = offset[static_cast<std::size_t>(j)] + (has(up) ? dims[up] : 0);
            }
            const std::size_t len = offset.back();
            struct Cand {
                int i;
                std::size_t b;
                std::vector<Rational> image;
            };
            std::vector<Cand> cands;
            for (int i = 0; i < n; ++i) {
                const Weight src = mu + simple[static_cast<std::size_t>(i)];
                if (!has(src))
                    continue;
                for (std::size_t b = 0; b < dims[src]; ++b) {
                    std::vector<Rational> img(len, 0);
                    for (int j = 0; j < n; ++j) {
                        const Weight up = mu + simple[static_cast<std::size_t>(j)];
                        if (!has(up))
                            continue;
                        const std::size_t off = offset[static_cast<std::size_t>(j)];
                        // f_i e_j u_b
                        const Weight top = src + simple[static_cast<std::size_t>(j)];
                        if (has(top)) {
                            const Dense& ej = E[static_cast<std::size_t>(j)].at(src);
                            const Dense& fi = F[static_cast<std::size_t>(i)].at(top);
                            for (std::size_t r = 0; r < dims[up]; ++r)
                                for (std::size_t c = 0; c < dims[top]; ++c)
                                    if (fi[r][c] != 0 && ej[c][b] != 0)
                                        img[off + r] += fi[r][c] * ej[c][b];
                        }
                        if (i == j)
                            img[off + b] += src.coords[static_cast<std::size_t>(i)];
                    }
                    cands.push_back(Cand{i, b, std::move(img)});
                }
            }
            exactmat::RowSpaceBasis rsb(len);
            std::vector<std::size_t> chosen;
            for (std::size_t c = 0; c < cands.size() && chosen.size() < m; ++c) {
                exactmat::SparseRatMatrix::Row row;
                for (std::size_t k = 0; k < len; ++k)
                    if (cands[c].image[k] != 0)
                        row.emplace(k, cands[c].image[k]);
                if (rsb.insert(row))
                    chosen.push_back(c);
            }
            if (chosen.size() != m)
                throw InvariantViolation("weight space " + mu.str() + " of V" + lambda.str() + " has dimension " +
                                         std::to_string(chosen.size()) + ", expected " + std::to_string(m));
            std::vector<Poly> chosen_rows;
            for (auto c : chosen)
                chosen_rows.push_back(cands[c].image);
            poly::PolyBasis solver(chosen_rows);
            for (int i = 0; i < n; ++i) {
                const Weight src = mu + simple[static_cast<std::size_t>(i)];
                if (has(src))
                    F[static_cast<std::size_t>(i)][src] = Dense(m, std::vector<Rational>(dims[src], 0));
            }
            for (const auto& c : cands) {
                const auto coords = solver.coords(c.image);
                const Weight src = mu + simple[static_cast<std::size_t>(c.i)];
                auto& f = F[static_cast<std::size_t>(c.i)][src];
                for (std::size_t r = 0; r < m; ++r)
                    f[r][c.b] = coords[r];
            }
            for (int j = 0; j < n; ++j) {
                const Weight up = mu + simple[static_cast<std::size_t>(j)];
                if (!has(up))
                    continue;
                Dense e(dims[up], std::vector<Rational>(m, 0));
                for (std::size_t c = 0; c < m; ++c)
                    for (std::size_t r = 0; r < dims[up]; ++r)
                        e[r][c] = cands[chosen[c]].image[offset[static_cast<std::size_t>(j)] + r];
                E[static_cast<std::size_t>(j)][mu] = std::move(e);
            }
        }
    }

    // global basis: levels in order
    std::map<Weight, std::size_t> start;
    ModuleRep mod;
    mod.host_name = g.name();
    mod.host_dim = g.dim();
    for (const auto& level : levels)
        for (const auto& mu : level) {
            start[mu] = mod.dim;
            for (std::size_t k = 0; k < dims[mu]; ++k) {
                mod.weights.emplace_back(mu);
                mod.labels.push_back("v" + mu.str() + (dims[mu] > 1 ? "#" + std::to_string(k) : ""));
            }
            mod.dim += dims[mu];
        }
    mod.action.assign(g.dim(), SparseRatMatrix(mod.dim, mod.dim));
    const auto idx = chevalley_index(rs);
    for (const auto& [mu, d] : dims)
        for (std::size_t k = 0; k < d; ++k)
            for (int i = 0; i < n; ++i)
                mod.action[idx.h(static_cast<std::size_t>(i))].set(start[mu] + k, start[mu] + k,
                                                                   mu.coords[static_cast<std::size_t>(i)]);
    auto place = [&](SparseRatMatrix& target, const std::map<Weight, Dense>& blocks, const Weight& shift) {
        for (const auto& [mu, blk] : blocks) {
            const Weight to = mu + shift;
            for (std::size_t r = 0; r < blk.size(); ++r)
                for (std::size_t c = 0; c < blk[r].size(); ++c)
                    target.set(start[to] + r, start[mu] + c, blk[r][c]);
        }
    };
    const auto& pos = rs.positive_roots();
    for (int i = 0; i < n; ++i) {
        RootCoords r(static_cast<std::size_t>(n), 0);
        r[static_cast<std::size_t>(i)] = 1;
        const auto k = static_cast<std::size_t>(rs.positive_root_index(r));
        place(mod.action[idx.x(k)], E[static_cast<std::size_t>(i)], simple[static_cast<std::size_t>(i)]);
        place(mod.action[idx.y(k)], F[static_cast<std::size_t>(i)], -simple[static_cast<std::size_t>(i)]);
    }
    for (std::size_t k = 0; k < pos.size(); ++k) {
        if (rs.height(pos[k]) < 2)
            continue;
        bool done = false;
        for (int i = 0; i < n && !done; ++i) {
            RootCoords beta = pos[k];
            --beta[static_cast<std::size_t>(i)];
            const int bi = rs.positive_root_index(beta);
            if (bi < 0)
                continue;
            RootCoords ai(static_cast<std::size_t>(n), 0);
            ai[static_cast<std::size_t>(i)] = 1;
            const auto si = static_cast<std::size_t>(rs.positive_root_index(ai));
            const auto b = static_cast<std::size_t>(bi);
            auto coeff_of = [&](const SparseVec& v, std::size_t target) {
                for (const auto& t : v)
                    if (t.index == target)
                        return t.coeff;
                throw InvariantViolation("expected root vector missing from bracket");
            };
            const Rational cx = coeff_of(g.bracket(idx.x(si), idx.x(b)), idx.x(k));
            mod.action[idx.x(k)] = scaled(commutator(mod.action[idx.x(si)], mod.action[idx.x(b)]), 1 / cx);
            const Rational cy = coeff_of(g.bracket(idx.y(si), idx.y(b)), idx.y(k));
            mod.action[idx.y(k)] = scaled(commutator(mod.action[idx.y(si)], mod.action[idx.y(b)]), 1 / cy);
            done = true;
        }
        if (!done)
            throw InvariantViolation("no simple root decomposition for a positive root");
    }
    mod.verify(g);
    return mod;
}

ModuleRep evaluation_module(const RootSystem& rs, const Weight& lambda, const Rational& point, const LieTable& host) {
    if (!(host.root_system() == rs))
        throw ValidationError("host table is over a different root system");
    if (!lambda.dominant())
        throw ValidationError("evaluation_module: weight " + lambda.str() + " is not dominant");
    const LieTable g = structure_constants(rs);
    if (!host.is_current()) {
        if (host.name() != g.name())
            throw ValidationError("evaluation_module needs g or a current-algebra host");
        return irreducible_module(g, lambda);
    }
    // Evaluation at a is well defined on C[t]/(modulus) only when a is a root.
    if (poly::eval(host.modulus(), point) != 0)
        throw ValidationError("evaluation at " + point.get_str() + " does not factor through " + host.name());
    const ModuleRep v = irreducible_module(g, lambda);
    ModuleRep m;
    m.host_name = host.name();
    m.host_dim = host.dim();
    m.dim = v.dim;
    m.labels = v.labels;
    const int arity = host.weight_arity();
    if (arity == 1) {
        m.weights = v.weights;
    } else {
        const auto& pts = host.slot_points();
        auto it = std::find(pts.begin(), pts.end(), point);
        if (it == pts.end())
            throw ValidationError("point " + point.get_str() + " is not a support point of " + host.name());
        const auto slot = static_cast<std::size_t>(it - pts.begin());
        for (const auto& w : v.weights) {
            MultiWeight mw = MultiWeight::zero(arity, rs.rank());
            mw.parts[slot] = w.parts.front();
            m.weights.push_back(mw);
        }
    }
    for (std::size_t i = 0; i < host.dim(); ++i) {
        const Rational c = poly::eval(host.poly(i), point);
        m.action.push_back(c == 0 ? SparseRatMatrix(v.dim, v.dim) : scaled(v.action[host.g_index(i)], c));
    }
    m.verify(host);
    return m;
}

ModuleRep tensor_modules(const ModuleRep& a, const ModuleRep& b) {
    if (a.host_name != b.host_name || a.host_dim != b.host_dim)
        throw ValidationError("tensor_modules: modules live over different hosts (" + a.host_name + ", " +
                              b.host_name + ")");
    ModuleRep m;
    m.host_name = a.host_name;
    m.host_dim = a.host_dim;
    m.dim = a.dim * b.dim;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j) {
            m.weights.push_back(a.weights[i] + b.weights[j]);
            m.labels.push_back(a.labels[i] + "⊗" + b.labels[j]);
        }
    for (std::size_t x = 0; x < a.host_dim; ++x) {
        SparseRatMatrix act(m.dim, m.dim);
        for (std::size_t r = 0; r < a.dim; ++r)
            for (const auto& [c, v] : a.action[x].row(r))
                for (std::size_t j = 0; j < b.dim; ++j)
                    act.add(r * b.dim + j, c * b.dim + j, v);
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t r = 0; r < b.dim; ++r)
                for (const auto& [c, v] : b.action[x].row(r))
                    act.add(i * b.dim + r, i * b.dim + c, v);
        m.action.push_back(std::move(act));
    }
    return m;
}

ModuleRep tensor_modules(const ModuleRep& a, const ModuleRep& b, const LieTable& host) {
    ModuleRep m = tensor_modules(a, b);
    m.verify(host);
    return m;
}

ModuleRep dual_module(const ModuleRep& m) {
    ModuleRep d = m;
    for (auto& a : d.action)
        a = scaled(a.transpose(), -1);
    for (auto& w : d.weights)
        w = -w;
    for (auto& l : d.labels)
        l += "*";
    return d;
}

} // namespace curcoh
