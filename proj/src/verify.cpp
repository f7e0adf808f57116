#include "curcoh/verify.hpp"

#include "curcoh/affine.hpp"
#include "curcoh/chevalley.hpp"
#include "curcoh/cyclic.hpp"
#include "curcoh/errors.hpp"
#include "curcoh/extcalc.hpp"

#include <functional>

namespace curcoh::verify {

namespace {

const std::vector<Rational> kPoints{Rational(0), Rational(1)};

void check(SuiteResult& r, std::string name, const std::string& expected, const std::string& computed) {
    r.lines.push_back({std::move(name), expected, computed, expected == computed});
}

std::string num(std::int64_t v) { return std::to_string(v); }

std::int64_t total_dim(const BlockComplex& bc, int n) {
    std::int64_t total = 0;
    for (const auto& [key, data] : bc.blocks)
        total += bc.homology(data, n);
    return total;
}

void whitehead(SuiteResult& r, const EngineOptions& opts) {
    const std::vector<std::pair<RootSystem, std::vector<Weight>>> cases{
        {RootSystem('A', 1), {Weight({0}), Weight({1}), Weight({2}), Weight({3})}},
        {RootSystem('A', 2), {Weight({0, 0}), Weight({1, 0}), Weight({1, 1}), Weight({2, 0})}}};
    for (const auto& [rs, weights] : cases) {
        const LieTable g = structure_constants(rs);
        for (const auto& w : weights) {
            const ModuleRep M = irreducible_module(g, w);
            const BlockComplex bc = build_block_complex(g, M, 1, 2, ComplexKind::Cochains, opts);
            check(r, rs.name() + " V" + w.str() + " H1", "0", num(total_dim(bc, 1)));
            check(r, rs.name() + " V" + w.str() + " H2", "0", num(total_dim(bc, 2)));
        }
    }
}

void garland_lepowsky(SuiteResult& r, const EngineOptions& opts) {
    for (auto rs : {RootSystem('A', 1), RootSystem('A', 2)}) {
        const auto ard = affinize(rs);
        for (int s : {5, 6}) {
            const LieTable L = build_gtp_s(rs, s);
            for (int j = 0; j <= 2; ++j) {
                DecompositionReport expected = gl_predict(ard, j);
                if (j == 2)
                    expected.add(dual_weight(rs, rs.theta()), 1, s);
                expected.normalize();
                const auto computed = decompose_cohomology(L, trivial_module(L), j, 1, opts);
                check(r, rs.name() + " s=" + std::to_string(s) + " H^" + std::to_string(j), expected.str(),
                      computed.str());
            }
        }
    }
}

void fgt(SuiteResult& r, const EngineOptions& opts) {
    const RootSystem a1('A', 1);
    for (int s : {2, 3}) {
        const LieTable L = build_full_truncation(a1, {TruncationSpec::Kind::FullPolynomial, s, {}});
        const BlockComplex bc = build_block_complex(L, trivial_module(L), 0, 3, ComplexKind::Cochains, opts);
        // coefficients of (1 + q³)^s
        for (int n = 0; n <= 3; ++n) {
            const std::int64_t want = n == 0 ? 1 : (n == 3 ? s : 0);
            check(r, "A1 s=" + std::to_string(s) + " dim H^" + std::to_string(n), num(want), num(total_dim(bc, n)));
        }
    }
}

void hc1(SuiteResult& r, const EngineOptions&) {
    for (int D = 5; D <= 14; ++D)
        check(r, "HC1 cutoff " + std::to_string(D), D <= 6 ? "1" : "2",
              num(static_cast<std::int64_t>(cyclic::hc1_cutoff(kPoints, D).dim)));
    for (int D : {7, 10, 14})
        check(r, "survivors independent at cutoff " + std::to_string(D), "true",
              cyclic::survivors_independent(D) ? "true" : "false");
    for (int D = 2; D <= 10; ++D)
        check(r, "HC1 of C[f] cutoff " + std::to_string(D), "0",
              num(static_cast<std::int64_t>(cyclic::hc1_Cf_cutoff(D))));
    for (int D = 4; D <= 12; ++D)
        check(r, "det M at D=" + std::to_string(D), num(-(2 * D + 1)), cyclic::detM(D).get_str());
}

void sl2_h2(SuiteResult& r, const EngineOptions& opts) {
    const RootSystem a1('A', 1);
    DecompositionReport five;
    five.arity = 2;
    for (auto [a, b] : {std::pair{4, 0}, {2, 0}, {2, 2}, {0, 2}, {0, 4}})
        five.add(MultiWeight({Weight({a}), Weight({b})}), 1);
    five.normalize();
    for (int s : {3, 4}) {
        const auto L = build_gIs(a1, kPoints, s).first;
        check(r, "H2 of sl2⊗I/I^" + std::to_string(s), five.str(),
              decompose_cohomology(L, trivial_module(L), 2, 2, opts).str());
        check(r, "assembled H2 of sl2⊗I from s=" + std::to_string(s), ext::sl2_h2_two_points().str(),
              ext::assembled_h2_ideal(a1, kPoints, s, opts).str());
    }
}

void ext_crosscheck(SuiteResult& r, const EngineOptions& opts) {
    for (auto rs : {RootSystem('A', 1), RootSystem('A', 2)}) {
        const auto h1 = ext::h1_truncated(rs, kPoints, 2, opts);
        std::vector<Weight> ws;
        std::vector<int> c(static_cast<std::size_t>(rs.rank()), 0);
        while (true) {
            ws.emplace_back(c);
            std::size_t i = 0;
            while (i < c.size() && c[i] == 2)
                c[i++] = 0;
            if (i == c.size())
                break;
            ++c[i];
        }
        std::int64_t queries = 0, agree = 0;
        for (const auto& a : ws)
            for (const auto& b : ws)
                for (const auto& x : ws)
                    for (const auto& y : ws) {
                        auto pi = ext::WeightAssignment::from({{kPoints[0], a}, {kPoints[1], b}}, rs);
                        auto pi2 = ext::WeightAssignment::from({{kPoints[0], x}, {kPoints[1], y}}, rs);
                        ++queries;
                        agree += ext::ext1(rs, pi, pi2) == ext::ext1_via_h1(rs, h1, kPoints, pi, pi2);
                    }
        check(r, rs.name() + " Ext1 closed form vs Hom into H1 (" + num(queries) + " pairs)", num(queries),
              num(agree));
    }
    const RootSystem a1('A', 1);
    std::int64_t queries = 0, agree = 0;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int x = 0; x <= 4; x += 2) {
                if (a == x && b == 0)
                    continue;
                auto pi = ext::WeightAssignment::from({{kPoints[0], Weight({a})}, {kPoints[1], Weight({b})}}, a1);
                auto pi2 = ext::WeightAssignment::from({{kPoints[0], Weight({x})}}, a1);
                ++queries;
                agree += ext::ext2_general_report(a1, kPoints, pi, pi2, 3, opts).annotations.front() ==
                         "matches closed form";
            }
    check(r, "A1 Ext2 truncated pipeline vs closed form (" + num(queries) + " pairs)", num(queries), num(agree));
}

void gr_vs_filtered(SuiteResult& r, const EngineOptions& opts) {
    const RootSystem a1('A', 1);
    const MultiWeight trivial = MultiWeight::zero(2, 1);
    for (int s : {3, 4}) {
        const LieTable gtp = build_gtp_s(a1, s);
        const LieTable gr = direct_sum(gtp, gtp);
        const auto h2gr = decompose_cohomology(gr, trivial_module(gr), 2, 2, opts).without_degrees();
        check(r, "C⊠C in H2 of gtp_" + std::to_string(s) + "⊕gtp_" + std::to_string(s), "0",
              num(h2gr.multiplicity(trivial)));
        check(r, "C⊠C in assembled H2 of sl2⊗I (s=" + std::to_string(s) + ")", "1",
              num(ext::assembled_h2_ideal(a1, kPoints, s, opts).multiplicity(trivial)));
    }
}

using SuiteFn = std::function<void(SuiteResult&, const EngineOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"whitehead", whitehead}, {"garland-lepowsky", garland_lepowsky}, {"fgt", fgt}, {"hc1", hc1},
        {"sl2-h2", sl2_h2},       {"ext-crosscheck", ext_crosscheck},     {"gr-vs-filtered", gr_vs_filtered}};
    return r;
}

} // namespace

bool SuiteResult::pass() const {
    for (const auto& l : lines)
        if (!l.pass)
            return false;
    return !lines.empty();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry())
            n.push_back(name);
        return n;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, const EngineOptions& opts) {
    for (const auto& [n, fn] : registry())
        if (n == name) {
            SuiteResult r;
            r.suite = name;
            fn(r, opts);
            return r;
        }
    std::string known;
    for (const auto& n : suite_names())
        known += (known.empty() ? "" : ", ") + n;
    throw ValidationError("unknown suite '" + name + "' (known: " + known + ")");
}

} // namespace curcoh::verify
