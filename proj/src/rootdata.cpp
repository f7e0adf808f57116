#include "curcoh/rootdata.hpp"

#include "curcoh/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace curcoh {

// ---------------------------------------------------------------- weights

bool Weight::dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool Weight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Weight Weight::operator+(const Weight& o) const {
    if (o.coords.size() != coords.size())
        throw ValidationError("weight rank mismatch");
    Weight r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i)
        r.coords[i] += o.coords[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
    Weight r = *this;
    for (int& c : r.coords)
        c = -c;
    return r;
}

Weight Weight::operator*(int k) const {
    Weight r = *this;
    for (int& c : r.coords)
        c *= k;
    return r;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coords.size(); ++i)
        os << (i ? "," : "") << coords[i];
    os << ']';
    return os.str();
}

MultiWeight MultiWeight::zero(int arity, int rank) {
    return MultiWeight(std::vector<Weight>(static_cast<std::size_t>(arity), Weight::zero(rank)));
}

bool MultiWeight::dominant() const {
    return std::all_of(parts.begin(), parts.end(), [](const Weight& w) { return w.dominant(); });
}

bool MultiWeight::is_zero() const {
    return std::all_of(parts.begin(), parts.end(), [](const Weight& w) { return w.is_zero(); });
}

MultiWeight MultiWeight::operator+(const MultiWeight& o) const {
    if (o.parts.size() != parts.size())
        throw ValidationError("weight arity mismatch");
    MultiWeight r = *this;
    for (std::size_t i = 0; i < parts.size(); ++i)
        r.parts[i] = r.parts[i] + o.parts[i];
    return r;
}

MultiWeight MultiWeight::operator-() const {
    MultiWeight r = *this;
    for (auto& p : r.parts)
        p = -p;
    return r;
}

std::string MultiWeight::str() const {
    if (parts.size() == 1)
        return parts.front().str();
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? "," : "") + parts[i].str();
    return s + ")";
}

// ---------------------------------------------------------- root systems

namespace {

void link(IntMatrix& c, int i, int j, int cij = -1, int cji = -1) {
    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cij;
    c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = cji;
}

IntMatrix make_cartan(char type, int n) {
    IntMatrix c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    switch (type) {
    case 'A':
        for (int i = 0; i + 1 < n; ++i)
            link(c, i, i + 1);
        break;
    case 'B':
        for (int i = 0; i + 2 < n; ++i)
            link(c, i, i + 1);
        link(c, n - 2, n - 1, -1, -2); // α_n short
        break;
    case 'C':
        for (int i = 0; i + 2 < n; ++i)
            link(c, i, i + 1);
        link(c, n - 2, n - 1, -2, -1); // α_n long
        break;
    case 'D':
        for (int i = 0; i + 2 < n; ++i)
            link(c, i, i + 1);
        link(c, n - 3, n - 1);
        break;
    case 'E':
        // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
        link(c, 0, 2);
        link(c, 1, 3);
        for (int i = 2; i + 1 < n; ++i)
            link(c, i, i + 1);
        break;
    case 'F':
        link(c, 0, 1);
        link(c, 1, 2, -1, -2); // α_3, α_4 short
        link(c, 2, 3);
        break;
    case 'G':
        link(c, 0, 1, -3, -1); // α_1 short
        break;
    default:
        break;
    }
    return c;
}

bool valid_type(char type, int n) {
    switch (type) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 3;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
    }
}

std::vector<std::vector<Rational>> invert(const IntMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0)
            ++p;
        if (p == n)
            throw InvariantViolation("Cartan matrix is singular");
        std::swap(a[p], a[k]);
        const Rational piv = a[k][k];
        for (auto& x : a[k])
            x /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0)
                continue;
            const Rational f = a[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j)
                a[i][j] -= f * a[k][j];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = a[i][n + j];
    return inv;
}

std::vector<int> symmetrize(const IntMatrix& c) {
    const std::size_t n = c.size();
    std::vector<Rational> d(n, 0);
    d[0] = 1;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || c[i][j] == 0 || d[j] != 0)
                continue;
            d[j] = d[i] * c[i][j] / c[j][i];
            queue.push_back(j);
        }
    }
    Rational lo = *std::min_element(d.begin(), d.end());
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational q = d[i] / lo;
        if (q.get_den() != 1)
            throw InvariantViolation("Cartan matrix is not symmetrizable over the integers");
        out[i] = static_cast<int>(q.get_num().get_si());
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (out[i] * c[i][j] != out[j] * c[j][i])
                throw InvariantViolation("Cartan matrix is not symmetrizable");
    return out;
}

} // namespace

RootSystem::RootSystem(char type_label, int rank) : type_(type_label), rank_(rank) {
    if (rank > kMaxRank)
        throw ValidationError("rank " + std::to_string(rank) + " exceeds the cap of " +
                              std::to_string(kMaxRank));
    if (!valid_type(type_label, rank))
        throw ValidationError(std::string("invalid finite type ") + type_label + std::to_string(rank));

    cartan_ = make_cartan(type_, rank_);
    sym_ = symmetrize(cartan_);
    cartan_inv_ = invert(cartan_);

    // Positive roots by simple-root strings, level by level.
    const auto n = static_cast<std::size_t>(rank_);
    std::vector<std::vector<RootCoords>> by_height(2);
    for (std::size_t i = 0; i < n; ++i) {
        RootCoords r(n, 0);
        r[i] = 1;
        by_height[1].push_back(r);
    }
    std::set<RootCoords> known(by_height[1].begin(), by_height[1].end());
    for (std::size_t h = 1; !by_height[h].empty(); ++h) {
        by_height.emplace_back();
        for (const auto& beta : by_height[h]) {
            for (std::size_t i = 0; i < n; ++i) {
                int p = 0;
                RootCoords down = beta;
                for (;;) {
                    if (down[i] == 0)
                        break;
                    --down[i];
                    if (!known.count(down))
                        break;
                    ++p;
                }
                int pairing = 0;
                for (std::size_t j = 0; j < n; ++j)
                    pairing += beta[j] * cartan_[i][j];
                const int q = p - pairing;
                if (q > 0) {
                    RootCoords up = beta;
                    ++up[i];
                    if (known.insert(up).second)
                        by_height[h + 1].push_back(up);
                }
            }
        }
    }
    for (auto& level : by_height) {
        std::sort(level.begin(), level.end());
        for (auto& r : level)
            pos_roots_.push_back(r);
    }
    for (std::size_t k = 0; k < pos_roots_.size(); ++k)
        root_index_.emplace(pos_roots_[k], static_cast<int>(k));

    // The highest root is the unique root of maximal height.
    if (by_height.size() < 3 || by_height[by_height.size() - 2].size() != 1)
        throw InvariantViolation("highest root is not unique");

    w0_perm_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Weight w = Weight::zero(rank_);
        w.coords[i] = -1;
        Weight d = dominant_representative(w);
        auto it = std::find(d.coords.begin(), d.coords.end(), 1);
        if (it == d.coords.end() || std::count(d.coords.begin(), d.coords.end(), 0) != rank_ - 1)
            throw InvariantViolation("−w₀ does not permute fundamental weights");
        w0_perm_[i] = static_cast<int>(it - d.coords.begin());
    }
}

std::string RootSystem::name() const { return std::string(1, type_) + std::to_string(rank_); }

std::vector<Weight> RootSystem::simple_roots() const {
    std::vector<Weight> out;
    for (int i = 0; i < rank_; ++i) {
        RootCoords r(static_cast<std::size_t>(rank_), 0);
        r[static_cast<std::size_t>(i)] = 1;
        out.push_back(root_to_weight(r));
    }
    return out;
}

std::vector<std::vector<Rational>> RootSystem::fundamental_weights() const {
    std::vector<std::vector<Rational>> out;
    for (int i = 0; i < rank_; ++i) {
        Weight w = Weight::zero(rank_);
        w.coords[static_cast<std::size_t>(i)] = 1;
        out.push_back(weight_to_root(w));
    }
    return out;
}

int RootSystem::positive_root_index(const RootCoords& r) const {
    auto it = root_index_.find(r);
    return it == root_index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const RootCoords& r) const {
    if (positive_root_index(r) >= 0)
        return true;
    RootCoords neg = r;
    for (int& x : neg)
        x = -x;
    return positive_root_index(neg) >= 0;
}

int RootSystem::height(const RootCoords& r) const { return std::accumulate(r.begin(), r.end(), 0); }

Weight RootSystem::root_to_weight(const RootCoords& r) const {
    Weight w = Weight::zero(rank_);
    for (std::size_t i = 0; i < static_cast<std::size_t>(rank_); ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(rank_); ++j)
            w.coords[i] += cartan_[i][j] * r[j];
    return w;
}

std::vector<Rational> RootSystem::weight_to_root(const Weight& w) const {
    std::vector<Rational> c(static_cast<std::size_t>(rank_), 0);
    for (std::size_t k = 0; k < c.size(); ++k)
        for (std::size_t j = 0; j < c.size(); ++j)
            c[k] += cartan_inv_[k][j] * w.coords[j];
    return c;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
    const auto c = weight_to_root(a);
    Rational s = 0;
    for (std::size_t k = 0; k < c.size(); ++k)
        s += c[k] * sym_[k] * b.coords[k];
    return s;
}

Rational RootSystem::inner_roots(const RootCoords& a, const RootCoords& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            s += a[i] * b[j] * sym_[i] * cartan_[i][j];
    return s;
}

int RootSystem::coroot_pairing(const Weight& mu, const RootCoords& alpha) const {
    Rational num = 0;
    for (std::size_t k = 0; k < alpha.size(); ++k)
        num += alpha[k] * sym_[k] * mu.coords[k];
    Rational v = 2 * num / inner_roots(alpha, alpha);
    if (v.get_den() != 1)
        throw InvariantViolation("non-integral coroot pairing");
    return static_cast<int>(v.get_num().get_si());
}

Rational RootSystem::height_of(const Weight& mu) const {
    Rational s = 0;
    for (const auto& c : weight_to_root(mu))
        s += c;
    return s;
}

Weight RootSystem::simple_reflection(const Weight& mu, int i) const {
    Weight r = mu;
    const int m = mu.coords[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < static_cast<std::size_t>(rank_); ++j)
        r.coords[j] -= m * cartan_[j][static_cast<std::size_t>(i)];
    return r;
}

Weight RootSystem::dominant_representative(const Weight& mu) const {
    Weight w = mu;
    for (;;) {
        auto it = std::find_if(w.coords.begin(), w.coords.end(), [](int c) { return c < 0; });
        if (it == w.coords.end())
            return w;
        w = simple_reflection(w, static_cast<int>(it - w.coords.begin()));
    }
}

bool RootSystem::dominated_by(const Weight& nu, const Weight& lambda) const {
    for (const auto& c : weight_to_root(lambda - nu))
        if (c.get_den() != 1 || c < 0)
            return false;
    return true;
}

Weight RootSystem::rho() const { return Weight(std::vector<int>(static_cast<std::size_t>(rank_), 1)); }

RootSystem build_root_system(char type_label, int rank) { return RootSystem(type_label, rank); }

RootSystem parse_root_system(const std::string& name) {
    if (name.size() < 2 || !std::isalpha(static_cast<unsigned char>(name[0])))
        throw ValidationError("cannot parse Lie type '" + name + "'");
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            throw ValidationError("cannot parse Lie type '" + name + "'");
    const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    return RootSystem(t, std::stoi(name.substr(1)));
}

// ------------------------------------------------------------ characters

void CharacterMap::add(const MultiWeight& w, std::int64_t m) {
    if (m == 0)
        return;
    if (w.arity() != arity)
        throw ValidationError("character arity mismatch");
    auto [it, inserted] = entries.try_emplace(w, m);
    if (!inserted) {
        it->second += m;
        if (it->second == 0)
            entries.erase(it);
    }
}

std::int64_t CharacterMap::multiplicity(const MultiWeight& w) const {
    auto it = entries.find(w);
    return it == entries.end() ? 0 : it->second;
}

std::int64_t CharacterMap::total_mass() const {
    std::int64_t s = 0;
    for (const auto& [w, m] : entries)
        s += m;
    return s;
}

void DecompositionReport::normalize() {
    std::map<std::pair<std::optional<int>, MultiWeight>, std::int64_t> merged;
    for (const auto& f : factors)
        merged[{f.t_degree, f.highest}] += f.mult;
    factors.clear();
    for (const auto& [key, m] : merged)
        if (m != 0)
            factors.push_back(Factor{key.second, m, key.first});
}

void DecompositionReport::add(const MultiWeight& w, std::int64_t m, std::optional<int> t) {
    factors.push_back(Factor{w, m, t});
    normalize();
}

std::int64_t DecompositionReport::multiplicity(const MultiWeight& w) const {
    std::int64_t s = 0;
    for (const auto& f : factors)
        if (f.highest == w)
            s += f.mult;
    return s;
}

std::int64_t DecompositionReport::multiplicity(const MultiWeight& w, std::optional<int> t) const {
    std::int64_t s = 0;
    for (const auto& f : factors)
        if (f.highest == w && f.t_degree == t)
            s += f.mult;
    return s;
}

std::int64_t DecompositionReport::total_multiplicity() const {
    std::int64_t s = 0;
    for (const auto& f : factors)
        s += f.mult;
    return s;
}

DecompositionReport DecompositionReport::without_degrees() const {
    DecompositionReport r;
    r.arity = arity;
    for (const auto& f : factors)
        r.factors.push_back(Factor{f.highest, f.mult, std::nullopt});
    r.normalize();
    return r;
}

std::string DecompositionReport::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        os << (i ? ", " : "") << f.highest.str() << ':' << f.mult;
        if (f.t_degree)
            os << "@t" << *f.t_degree;
    }
    os << '}';
    return os.str();
}

std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda) {
    if (lambda.rank() != rs.rank())
        throw ValidationError("weight rank does not match root system");
    if (!lambda.dominant())
        throw ValidationError("weyl_dim: weight " + lambda.str() + " is not dominant");
    const Weight lr = lambda + rs.rho();
    Rational d = 1;
    for (const auto& alpha : rs.positive_roots())
    {
        Rational f(rs.coroot_pairing(lr, alpha), rs.coroot_pairing(rs.rho(), alpha));
        f.canonicalize();
        d *= f;
    }
    if (d.get_den() != 1 || !d.get_num().fits_slong_p())
        throw InvariantViolation("Weyl dimension is not a machine integer");
    return d.get_num().get_si();
}

std::int64_t weyl_dim(const RootSystem& rs, const MultiWeight& lambda) {
    std::int64_t d = 1;
    for (const auto& p : lambda.parts)
        d *= weyl_dim(rs, p);
    return d;
}

CharacterMap dominant_character(const RootSystem& rs, const Weight& lambda) {
    if (lambda.rank() != rs.rank())
        throw ValidationError("weight rank does not match root system");
    if (!lambda.dominant())
        throw ValidationError("dominant_character: weight " + lambda.str() + " is not dominant");

    const auto simple = rs.simple_roots();
    // Weights of V(λ), grouped by depth below λ.
    std::map<Weight, int> depth{{lambda, 0}};
    std::vector<std::vector<Weight>> levels{{lambda}};
    for (std::size_t lv = 0; lv < levels.size(); ++lv) {
        std::vector<Weight> next;
        for (const auto& mu : levels[lv]) {
            for (const auto& a : simple) {
                Weight nu = mu - a;
                if (depth.count(nu))
                    continue;
                if (!rs.dominated_by(rs.dominant_representative(nu), lambda))
                    continue;
                depth.emplace(nu, static_cast<int>(lv + 1));
                next.push_back(nu);
            }
        }
        if (next.empty())
            break;
        std::sort(next.begin(), next.end());
        levels.push_back(std::move(next));
    }

    std::vector<Weight> pos;
    for (const auto& r : rs.positive_roots())
        pos.push_back(rs.root_to_weight(r));
    const Weight rho = rs.rho();
    const Rational top = rs.inner(lambda + rho, lambda + rho);

    std::map<Weight, Rational> mult{{lambda, 1}};
    for (std::size_t lv = 1; lv < levels.size(); ++lv) {
        for (const auto& mu : levels[lv]) {
            // Multiplicities are W-invariant; reuse the dominant representative
            // when it has been computed already.
            const Weight dom = rs.dominant_representative(mu);
            if (dom != mu) {
                auto it = mult.find(dom);
                if (it != mult.end()) {
                    mult.emplace(mu, it->second);
                    continue;
                }
            }
            Rational num = 0;
            for (const auto& a : pos) {
                Weight nu = mu + a;
                while (depth.count(nu)) {
                    auto it = mult.find(nu);
                    if (it != mult.end())
                        num += it->second * rs.inner(nu, a);
                    nu = nu + a;
                }
            }
            const Rational den = top - rs.inner(mu + rho, mu + rho);
            if (den == 0)
                throw InvariantViolation("Freudenthal denominator vanished at " + mu.str());
            Rational m = 2 * num / den;
            m.canonicalize();
            if (m.get_den() != 1 || m < 0)
                throw InvariantViolation("non-integral weight multiplicity at " + mu.str());
            mult.emplace(mu, m);
        }
    }

    CharacterMap chi;
    chi.arity = 1;
    for (const auto& [w, m] : mult)
        if (m != 0)
            chi.add(MultiWeight(w), m.get_num().get_si());
    return chi;
}

CharacterMap multiply_characters(const CharacterMap& a, const CharacterMap& b) {
    if (a.arity != b.arity)
        throw ValidationError("character arity mismatch");
    CharacterMap out;
    out.arity = a.arity;
    for (const auto& [wa, ma] : a.entries)
        for (const auto& [wb, mb] : b.entries)
            out.add(wa + wb, ma * mb);
    return out;
}

CharacterMap product_character(const RootSystem& rs, const MultiWeight& lambda) {
    CharacterMap out;
    out.arity = lambda.arity();
    out.entries.emplace(MultiWeight(std::vector<Weight>{}), 1);
    out.arity = 0;
    for (const auto& part : lambda.parts) {
        const CharacterMap single = dominant_character(rs, part);
        CharacterMap next;
        next.arity = out.arity + 1;
        for (const auto& [w, m] : out.entries) {
            for (const auto& [v, n] : single.entries) {
                MultiWeight key = w;
                key.parts.push_back(v.parts.front());
                next.add(key, m * n);
            }
        }
        out = std::move(next);
    }
    return out;
}

DecompositionReport decompose_character(const RootSystem& rs, const CharacterMap& chi) {
    DecompositionReport report;
    report.arity = chi.arity;
    auto work = chi.entries;
    std::map<MultiWeight, CharacterMap> cache;

    auto height = [&](const MultiWeight& w) {
        Rational h = 0;
        for (const auto& p : w.parts)
            h += rs.height_of(p);
        return h;
    };

    while (!work.empty()) {
        // A support weight of maximal height is maximal in dominance order;
        // among those, the lexicographically largest is taken.
        auto best = work.begin();
        Rational best_h = height(best->first);
        for (auto it = std::next(work.begin()); it != work.end(); ++it) {
            Rational h = height(it->first);
            if (h > best_h || (h == best_h && best->first < it->first)) {
                best = it;
                best_h = h;
            }
        }
        const MultiWeight top = best->first;
        const std::int64_t m = best->second;
        if (m < 0 || !top.dominant())
            throw InvariantViolation("not a character: subtraction left multiplicity " +
                                     std::to_string(m) + " at " + top.str());
        auto cit = cache.find(top);
        if (cit == cache.end())
            cit = cache.emplace(top, product_character(rs, top)).first;
        for (const auto& [w, n] : cit->second.entries) {
            auto& slot = work[w];
            slot -= m * n;
            if (slot == 0)
                work.erase(w);
        }
        report.factors.push_back(Factor{top, m, std::nullopt});
    }
    report.normalize();
    return report;
}

DecompositionReport tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    if (!lambda.dominant() || !mu.dominant())
        throw ValidationError("tensor_decompose: weights must be dominant");
    return decompose_character(
        rs, multiply_characters(dominant_character(rs, lambda), dominant_character(rs, mu)));
}

Weight dual_weight(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.dominant())
        throw ValidationError("dual_weight: weight " + lambda.str() + " is not dominant");
    return rs.dominant_representative(-lambda);
}

MultiWeight dual_weight(const RootSystem& rs, const MultiWeight& lambda) {
    MultiWeight r = lambda;
    for (auto& p : r.parts)
        p = dual_weight(rs, p);
    return r;
}

std::int64_t tensor_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                 const Weight& nu) {
    using Key = std::tuple<char, int, Weight, Weight>;
    thread_local std::map<Key, DecompositionReport> cache;
    const Weight& a = std::min(lambda, mu);
    const Weight& b = std::max(lambda, mu);
    Key key{rs.type_label(), rs.rank(), a, b};
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, tensor_decompose(rs, a, b)).first;
    return it->second.multiplicity(MultiWeight(nu));
}

} // namespace curcoh
