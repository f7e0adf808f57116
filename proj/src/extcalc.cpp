#include "curcoh/extcalc.hpp"

#include "curcoh/chevalley.hpp"
#include "curcoh/errors.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

namespace curcoh::ext {

namespace {

void check_two_points(const std::vector<Rational>& points) {
    if (points.size() != 2)
        throw ValidationError("exactly two points are supported");
    if (points[0] == points[1])
        throw ValidationError("points must be distinct");
}

void check_sl2_weight(int v) {
    if (v < 0)
        throw ValidationError("sl2 weights must be nonnegative");
}

Rational parse_rational(const std::string& s) {
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::exception&) {
        throw ValidationError("not a rational number: '" + s + "'");
    }
}

} // namespace

WeightAssignment WeightAssignment::from(std::vector<std::pair<Rational, Weight>> entries, const RootSystem& rs) {
    WeightAssignment a;
    std::set<Rational> seen;
    for (auto& [p, w] : entries) {
        if (!seen.insert(p).second)
            throw ValidationError("point " + p.get_str() + " assigned twice");
        if (w.rank() != rs.rank())
            throw ValidationError("weight " + w.str() + " has the wrong rank for " + rs.name());
        if (!w.dominant())
            throw ValidationError("weight " + w.str() + " is not dominant");
        if (!w.is_zero())
            a.entries.emplace_back(p, w);
    }
    std::sort(a.entries.begin(), a.entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return a;
}

WeightAssignment WeightAssignment::parse(const std::string& text, const RootSystem& rs) {
    static const std::regex item(R"(\s*([^:\s]+)\s*:\s*\[([^\]]*)\]\s*)");
    std::vector<std::pair<Rational, Weight>> entries;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        if (part.find_first_not_of(" \t") == std::string::npos)
            continue;
        std::smatch m;
        if (!std::regex_match(part, m, item))
            throw ValidationError("cannot parse assignment entry '" + part + "' (expected point:[w1,...])");
        std::vector<int> coords;
        std::stringstream cs(m[2].str());
        std::string c;
        while (std::getline(cs, c, ',')) {
            try {
                std::size_t used = 0;
                coords.push_back(std::stoi(c, &used));
                if (c.find_first_not_of(" \t", used) != std::string::npos)
                    throw std::invalid_argument(c);
            } catch (const std::exception&) {
                throw ValidationError("bad weight coordinate '" + c + "'");
            }
        }
        entries.emplace_back(parse_rational(m[1].str()), Weight(coords));
    }
    return from(std::move(entries), rs);
}

Weight WeightAssignment::at(const Rational& point, int rank) const {
    for (const auto& [p, w] : entries)
        if (p == point)
            return w;
    return Weight::zero(rank);
}

std::vector<Rational> WeightAssignment::support() const {
    std::vector<Rational> out;
    for (const auto& e : entries)
        out.push_back(e.first);
    return out;
}

std::string WeightAssignment::str() const {
    std::string s;
    for (const auto& [p, w] : entries) {
        if (!s.empty())
            s += ";";
        s += p.get_str() + ":" + w.str();
    }
    return s;
}

std::int64_t ext1(const RootSystem& rs, const WeightAssignment& pi, const WeightAssignment& pi2, const DOverrides& d) {
    for (const auto& [p, v] : d)
        if (v < 1)
            throw ValidationError("d at point " + p.get_str() + " must be positive");
    std::set<Rational> points;
    for (const auto& p : pi.support())
        points.insert(p);
    for (const auto& p : pi2.support())
        points.insert(p);
    auto d_at = [&](const Rational& p) {
        auto it = d.find(p);
        return it == d.end() ? 1 : it->second;
    };
    const Weight theta = rs.theta();
    std::vector<Rational> differ;
    for (const auto& p : points)
        if (pi.at(p, rs.rank()) != pi2.at(p, rs.rank()))
            differ.push_back(p);
    if (differ.size() >= 2)
        return 0;
    if (differ.size() == 1) {
        const auto& p = differ[0];
        return d_at(p) * tensor_multiplicity(rs, theta, pi.at(p, rs.rank()), pi2.at(p, rs.rank()));
    }
    std::int64_t total = 0;
    for (const auto& p : points) {
        const Weight w = pi.at(p, rs.rank());
        total += d_at(p) * tensor_multiplicity(rs, theta, w, w);
    }
    return total;
}

std::int64_t hom_into_tensor(const RootSystem& rs, const MultiWeight& source, const DecompositionReport& h,
                             const MultiWeight& target) {
    if (source.arity() != h.arity || target.arity() != h.arity)
        throw ValidationError("arity mismatch in Hom computation");
    std::int64_t total = 0;
    for (const auto& f : h.factors) {
        std::int64_t term = f.mult;
        for (int k = 0; k < h.arity && term != 0; ++k) {
            const auto i = static_cast<std::size_t>(k);
            term *= tensor_multiplicity(rs, f.highest.parts[i], target.parts[i], source.parts[i]);
        }
        total += term;
    }
    return total;
}

MultiWeight restrict_to(const WeightAssignment& pi, const std::vector<Rational>& points, int rank) {
    for (const auto& p : pi.support())
        if (std::find(points.begin(), points.end(), p) == points.end())
            throw ValidationError("assignment " + pi.str() + " is supported outside the given points");
    MultiWeight w;
    for (const auto& p : points)
        w.parts.push_back(pi.at(p, rank));
    return w;
}

DecompositionReport h1_truncated(const RootSystem& rs, const std::vector<Rational>& points, int s,
                                 const EngineOptions& opts) {
    const auto L = build_gIs(rs, points, s).first;
    return decompose_cohomology(L, trivial_module(L), 1, static_cast<int>(points.size()), opts).without_degrees();
}

std::int64_t ext1_via_h1(const RootSystem& rs, const DecompositionReport& h1, const std::vector<Rational>& points,
                         const WeightAssignment& pi, const WeightAssignment& pi2) {
    return hom_into_tensor(rs, restrict_to(pi, points, rs.rank()), h1, restrict_to(pi2, points, rs.rank()));
}

DecompositionReport sl2_h2_two_points() {
    DecompositionReport r;
    r.arity = 2;
    auto mw = [](int a, int b) { return MultiWeight({Weight({a}), Weight({b})}); };
    r.add(mw(0, 0), 1);
    r.add(mw(2, 2), 1);
    r.add(mw(4, 0), 1);
    r.add(mw(0, 4), 1);
    r.normalize();
    return r;
}

std::int64_t ext2_sl2_twopoint(int lam1, int lam2, int mu1, int mu2, const std::vector<Rational>& points) {
    check_two_points(points);
    for (int v : {lam1, lam2, mu1, mu2})
        check_sl2_weight(v);
    if (lam1 == mu1 && lam2 == mu2)
        throw ValidationError("equal weight pairs: use self-ext2-sl2");
    const RootSystem a1('A', 1);
    const MultiWeight src({Weight({lam1}), Weight({lam2})});
    const MultiWeight tgt({Weight({mu1}), Weight({mu2})});
    return hom_into_tensor(a1, src, sl2_h2_two_points(), tgt);
}

std::int64_t self_ext2_sl2(int lam1, int lam2, const std::vector<Rational>& points) {
    check_two_points(points);
    check_sl2_weight(lam1);
    check_sl2_weight(lam2);
    const RootSystem a1('A', 1);
    // V* ⊗ V = (V(λ1)⊗V(λ1)) ⊠ (V(λ2)⊗V(λ2))
    const auto left = tensor_decompose(a1, Weight({lam1}), Weight({lam1}));
    const auto right = tensor_decompose(a1, Weight({lam2}), Weight({lam2}));
    DecompositionReport one_point;
    one_point.add(Weight({4}), 1);
    const auto two_points = sl2_h2_two_points();
    std::int64_t total = 0; // H²(g[t], C) = 0
    for (const auto& fl : left.factors)
        for (const auto& fr : right.factors) {
            const Weight& p = fl.highest.parts[0];
            const Weight& q = fr.highest.parts[0];
            const std::int64_t m = fl.mult * fr.mult;
            if (p.is_zero() && q.is_zero())
                continue;
            if (q.is_zero())
                total += m * hom_into_tensor(a1, Weight({0}), one_point, p);
            else if (p.is_zero())
                total += m * hom_into_tensor(a1, Weight({0}), one_point, q);
            else
                total += m * hom_into_tensor(a1, MultiWeight({Weight({0}), Weight({0})}), two_points,
                                             MultiWeight({p, q}));
        }
    return total;
}

DecompositionReport assembled_h2_ideal(const RootSystem& rs, const std::vector<Rational>& points, int s,
                                       const EngineOptions& opts) {
    check_two_points(points);
    const auto L = build_gIs(rs, points, s).first;
    const auto h2 = decompose_cohomology(L, trivial_module(L), 2, 2, opts).without_degrees();
    DecompositionReport out = remove_slot_coadjoints(rs, h2);
    if (out.total_multiplicity() != h2.total_multiplicity() - 2)
        throw InvariantViolation("truncation coadjoints missing from H² of the truncated ideal");
    out.add(MultiWeight::zero(2, rs.rank()), 1);
    out.normalize();
    return out;
}

Ext2Report ext2_general_report(const RootSystem& rs, const std::vector<Rational>& points,
                               const WeightAssignment& pi, const WeightAssignment& pi2, int s,
                               const EngineOptions& opts) {
    check_two_points(points);
    if (s < 2)
        throw ValidationError("truncation level must be at least 2");
    const MultiWeight src = restrict_to(pi, points, rs.rank());
    const MultiWeight tgt = restrict_to(pi2, points, rs.rank());
    if (src == tgt)
        throw ValidationError("assignments agree at every point");
    Ext2Report r;
    r.s = s;
    const auto L = build_gIs(rs, points, s).first;
    r.h2_truncated = decompose_cohomology(L, trivial_module(L), 2, 2, opts).without_degrees();
    r.h2_assembled = assembled_h2_ideal(rs, points, s, opts);
    r.dim = hom_into_tensor(rs, src, r.h2_assembled, tgt);
    if (rs.type_label() == 'A' && rs.rank() == 1) {
        const auto closed = ext2_sl2_twopoint(src.parts[0].coords[0], src.parts[1].coords[0],
                                              tgt.parts[0].coords[0], tgt.parts[1].coords[0], points);
        r.annotations.push_back(closed == r.dim ? "matches closed form"
                                                : "differs from closed form " + std::to_string(closed));
    } else {
        r.annotations.push_back("truncation-based");
    }
    return r;
}

} // namespace curcoh::ext
