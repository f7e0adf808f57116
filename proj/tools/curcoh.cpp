#include "curcoh/affine.hpp"
#include "curcoh/cecohoml.hpp"
#include "curcoh/chevalley.hpp"
#include "curcoh/cyclic.hpp"
#include "curcoh/errors.hpp"
#include "curcoh/extcalc.hpp"
#include "curcoh/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace curcoh;
using Json = nlohmann::ordered_json;

namespace {

struct Common {
    bool json = false;
    unsigned threads = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(item);
    return out;
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

std::vector<Rational> parse_points(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& p : split(s, ','))
        out.push_back(parse_rational(p));
    if (out.empty())
        throw ValidationError("no points given");
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& p : split(s, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(p, &used));
            if (used != p.size())
                throw std::invalid_argument(p);
        } catch (const std::exception&) {
            throw ValidationError("not an integer: '" + p + "'");
        }
    }
    return out;
}

std::vector<int> parse_pair(const std::string& s, const std::string& flag) {
    auto v = parse_ints(s);
    if (v.size() != 2)
        throw ValidationError(flag + " needs two comma-separated weights");
    return v;
}

Json points_json(const std::vector<Rational>& pts) {
    Json a = Json::array();
    for (const auto& p : pts)
        a.push_back(p.get_str());
    return a;
}

Json factor_json(const Factor& f) {
    Json j;
    for (std::size_t k = 0; k < f.highest.parts.size(); ++k)
        j[k == 0 ? "weight" : "weight" + std::to_string(k + 1)] = f.highest.parts[k].coords;
    j["mult"] = f.mult;
    if (f.t_degree)
        j["t_degree"] = *f.t_degree;
    return j;
}

Json report_json(const DecompositionReport& r) {
    Json a = Json::array();
    for (const auto& f : r.factors)
        a.push_back(factor_json(f));
    return a;
}

std::string factor_text(const Factor& f) {
    std::string s;
    for (std::size_t k = 0; k < f.highest.parts.size(); ++k)
        s += (k ? " ⊠ " : "") + std::string("V") + f.highest.parts[k].str();
    s += "  mult " + std::to_string(f.mult);
    if (f.t_degree)
        s += "  t-degree " + std::to_string(*f.t_degree);
    return s;
}

void print_params(const Json& params) {
    std::cout << "# params:";
    for (const auto& [k, v] : params.items())
        std::cout << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    std::cout << '\n';
}

void emit(const Common& c, const std::string& command, const Json& params, Json body,
          const std::function<void()>& text) {
    if (c.json) {
        Json out;
        out["schema"] = "v1";
        out["command"] = command;
        out["params"] = params;
        for (auto& [k, v] : body.items())
            out[k] = v;
        std::cout << out.dump(2) << '\n';
    } else {
        print_params(params);
        text();
    }
}

void print_report(const DecompositionReport& r) {
    if (r.empty())
        std::cout << "  (zero)\n";
    for (const auto& f : r.factors)
        std::cout << "  " << factor_text(f) << '\n';
}

// cohomology
struct CohomologyArgs {
    std::string algebra = "gtp";
    std::string type;
    std::optional<int> s;
    std::string points;
    int degree = 0;
    std::optional<int> arity;
    bool homology = false;
    std::string module;
    bool dump_table = false;
    bool no_stability = false;
};

int run_cohomology(const Common& c, const CohomologyArgs& a) {
    const RootSystem rs = parse_root_system(a.type);
    Json params;
    params["algebra"] = a.algebra;
    params["type"] = rs.name();
    std::vector<Rational> points;
    if (a.algebra == "gIs" || a.algebra == "unital") {
        if (a.points.empty())
            throw ValidationError("--points is required for --algebra " + a.algebra);
        points = parse_points(a.points);
        params["points"] = points_json(points);
    }
    const int s = a.s.value_or(default_truncation(a.algebra));
    const LieTable L = build_algebra(a.algebra, rs, s, points);
    if (a.algebra != "simple")
        params["s"] = s;
    const int arity = a.arity.value_or(L.weight_arity());
    params["degree"] = a.degree;
    params["arity"] = arity;
    params["kind"] = a.homology ? "homology" : "cohomology";
    params["module"] = a.module.empty() ? "trivial" : a.module;

    ModuleRep M = trivial_module(L);
    if (!a.module.empty()) {
        const auto assignment = ext::WeightAssignment::parse(a.module, rs);
        bool first = true;
        for (const auto& [p, w] : assignment.entries) {
            ModuleRep e = evaluation_module(rs, w, p, L);
            M = first ? e : tensor_modules(M, e, L);
            first = false;
        }
    }
    if (arity != L.weight_arity())
        throw ValidationError("requested arity " + std::to_string(arity) + " but " + L.name() + " carries arity " +
                              std::to_string(L.weight_arity()) + " weights");
    if (a.degree < 0 || a.degree > static_cast<int>(L.dim()))
        throw ValidationError("degree must lie in [0, " + std::to_string(L.dim()) + "]");

    EngineOptions opts;
    opts.threads = c.threads;
    const auto kind = a.homology ? ComplexKind::Chains : ComplexKind::Cochains;
    const BlockComplex bc = build_block_complex(L, M, a.degree, a.degree, kind, opts);
    const DecompositionReport rep = decompose_character(rs, character_of(bc, a.degree));

    Json body;
    body["algebra"] = L.name();
    body["degree"] = a.degree;
    body["arity"] = arity;
    body["factors"] = report_json(rep);
    body["block_stats"] = {{"blocks", bc.blocks.size()},
                           {"chain_dim", bc.total_dim(a.degree)},
                           {"max_block_dim", bc.max_block_dim(a.degree)},
                           {"dd_checked", bc.dd_checked}};
    std::optional<StabilityVerdict> verdict;
    const bool stab_applicable = !a.homology && a.module.empty() && (a.algebra == "gtp" || a.algebra == "gIs");
    if (stab_applicable && !a.no_stability)
        verdict = a.algebra == "gtp" ? stabilization_gtp(rs, a.degree, s, opts)
                                     : stabilization_gIs(rs, points, a.degree, s, opts);
    if (a.algebra != "simple")
        body["truncation_level"] = s;
    if (verdict)
        body["stabilization"] = {{"stable", verdict->stable}, {"compared", {s, s + 1}}, {"note", verdict->note}};
    else
        body["stabilization"] = {{"note", stab_applicable ? "skipped" : "not applicable"}};
    if (a.dump_table)
        body["table"] = Json::parse(L.to_json());

    emit(c, "cohomology", params, body, [&] {
        std::cout << (a.homology ? "H_" : "H^") << a.degree << " of " << L.name() << " with "
                  << (a.module.empty() ? "trivial" : a.module) << " coefficients\n";
        print_report(rep);
        std::cout << "blocks " << bc.blocks.size() << ", chain dim " << bc.total_dim(a.degree) << ", max block "
                  << bc.max_block_dim(a.degree) << ", d∘d checked " << (bc.dd_checked ? "yes" : "no") << '\n';
        if (verdict)
            std::cout << "stabilization: " << (verdict->stable ? "stable" : "NOT stable") << " (" << verdict->note
                      << ")\n";
        if (a.dump_table)
            std::cout << L.to_json() << '\n';
    });
    return 0;
}

int run_gl_predict(const Common& c, const std::string& type, int degree) {
    const RootSystem rs = parse_root_system(type);
    if (degree < 0 || degree > kMaxAffineLength)
        throw ValidationError("degree must lie in [0, " + std::to_string(kMaxAffineLength) + "]");
    const auto ard = affinize(rs);
    const auto rep = gl_predict(ard, degree);
    Json params{{"type", rs.name()}, {"degree", degree}};
    Json elements = Json::array();
    std::vector<AffineCosetElement> at_length;
    for (const auto& e : enumerate_Wa1(ard, degree))
        if (e.length == degree) {
            at_length.push_back(e);
            elements.push_back({{"word", e.word_str()}, {"lambda_w", e.lambda_w.coords}, {"d_w", e.d_w}});
        }
    emit(c, "gl-predict", params, {{"factors", report_json(rep)}, {"elements", elements}}, [&] {
        std::cout << "H^" << degree << " of " << rs.name() << "⊗tC[t]: ⊕ V(λ_w)* over W_a^1 of length " << degree
                  << '\n';
        for (const auto& e : at_length)
            std::cout << "  w = " << e.word_str() << "  λ_w = " << e.lambda_w.str() << "  d_w = " << e.d_w << '\n';
        print_report(rep);
    });
    return 0;
}

int run_table1(const Common& c, const std::string& type) {
    const RootSystem rs = parse_root_system(type);
    const auto js = table1(affinize(rs));
    std::vector<int> v(js.begin(), js.end());
    std::string text;
    for (int j : v)
        text += (text.empty() ? "" : ", ") + std::to_string(j);
    emit(c, "table1", {{"type", rs.name()}}, {{"indices", v}}, [&] { std::cout << "j = " << text << '\n'; });
    return 0;
}

int run_hc1(const Common& c, const std::string& pts, int cutoff) {
    const auto points = parse_points(pts);
    const auto r = cyclic::hc1_cutoff(points, cutoff);
    Json params{{"points", points_json(points)}, {"cutoff", cutoff}};
    emit(c, "hc1", params, {{"dim", r.dim}, {"survivors", r.survivors}}, [&] {
        std::cout << "dim HC1 at cutoff " << cutoff << " = " << r.dim << '\n';
        for (const auto& s : r.survivors)
            std::cout << "  " << s << '\n';
    });
    return 0;
}

int run_hc1_finite(const Common& c, const std::string& pts, int s, bool unital) {
    const auto points = parse_points(pts);
    if (s < 1)
        throw ValidationError("--s must be positive");
    const auto table = build_algebra_table(points, s, unital);
    const auto d = cyclic::hc1_finite(table);
    Json params{{"points", points_json(points)}, {"s", s}, {"unital", unital}};
    emit(c, "hc1-finite", params, {{"dim", d}, {"algebra_dim", table.dim()}}, [&] {
        std::cout << "dim HC1 of " << (unital ? "C⊕" : "") << "I/I^" << s << " = " << d << '\n';
    });
    return 0;
}

int run_detm(const Common& c, int D) {
    const Integer det = cyclic::detM(D);
    const Integer expected = -(2 * D + 1);
    emit(c, "detm", {{"D", D}}, {{"det", det.get_str()}, {"expected", expected.get_str()}, {"matches", det == expected}},
         [&] { std::cout << "det M(" << D << ") = " << det.get_str() << " (expected " << expected.get_str() << ")\n"; });
    return det == expected ? 0 : 1;
}

ext::DOverrides parse_d(const std::string& s) {
    ext::DOverrides d;
    for (const auto& item : split(s, ';')) {
        if (item.empty())
            continue;
        const auto kv = split(item, ':');
        if (kv.size() != 2)
            throw ValidationError("--d entries look like point:value");
        const auto v = parse_ints(kv[1]);
        if (v.size() != 1)
            throw ValidationError("--d value must be one integer");
        d[parse_rational(kv[0])] = v[0];
    }
    return d;
}

int run_ext1(const Common& c, const std::string& type, const std::string& pi, const std::string& pi2,
             const std::string& dstr) {
    const RootSystem rs = parse_root_system(type);
    const auto a = ext::WeightAssignment::parse(pi, rs);
    const auto b = ext::WeightAssignment::parse(pi2, rs);
    const auto d = parse_d(dstr);
    const auto dim = ext::ext1(rs, a, b, d);
    Json dj = Json::object();
    for (const auto& [p, v] : d)
        dj[p.get_str()] = v;
    Json params{{"type", rs.name()}, {"pi", a.str()}, {"pi2", b.str()}, {"d", dj}};
    Json ann = Json::array();
    if (!d.empty())
        ann.push_back("d overrides applied");
    emit(c, "ext1", params, {{"dim", dim}, {"method", "closed form"}, {"annotations", ann}},
         [&] { std::cout << "dim Ext1 = " << dim << '\n'; });
    return 0;
}

int run_ext2_sl2(const Common& c, const std::string& lams, const std::string& mus, const std::string& pts) {
    const auto l = parse_pair(lams, "--lams");
    const auto m = parse_pair(mus, "--mus");
    const auto points = parse_points(pts);
    const auto dim = ext::ext2_sl2_twopoint(l[0], l[1], m[0], m[1], points);
    Json params{{"lams", l}, {"mus", m}, {"points", points_json(points)}};
    emit(c, "ext2-sl2", params, {{"dim", dim}, {"method", "closed form"}, {"annotations", Json::array()}},
         [&] { std::cout << "dim Ext2 = " << dim << '\n'; });
    return 0;
}

int run_self_ext2(const Common& c, const std::string& lams, const std::string& pts) {
    const auto l = parse_pair(lams, "--lams");
    const auto points = parse_points(pts);
    const auto dim = ext::self_ext2_sl2(l[0], l[1], points);
    Json params{{"lams", l}, {"points", points_json(points)}};
    emit(c, "self-ext2-sl2", params, {{"dim", dim}, {"method", "closed form"}, {"annotations", Json::array()}},
         [&] { std::cout << "dim self-Ext2 = " << dim << '\n'; });
    return 0;
}

int run_ext2_report(const Common& c, const std::string& type, const std::string& pts, const std::string& pi,
                    const std::string& pi2, int s) {
    const RootSystem rs = parse_root_system(type);
    const auto points = parse_points(pts);
    const auto a = ext::WeightAssignment::parse(pi, rs);
    const auto b = ext::WeightAssignment::parse(pi2, rs);
    EngineOptions opts;
    opts.threads = c.threads;
    const auto r = ext::ext2_general_report(rs, points, a, b, s, opts);
    const auto verdict = stabilization_gIs(rs, points, 2, s, opts);
    Json params{{"type", rs.name()}, {"points", points_json(points)}, {"pi", a.str()}, {"pi2", b.str()}, {"s", s}};
    Json body{{"dim", r.dim},
              {"method", "truncated cohomology"},
              {"annotations", r.annotations},
              {"truncation_level", s},
              {"h2_truncated", report_json(r.h2_truncated)},
              {"h2_assembled", report_json(r.h2_assembled)},
              {"stabilization", {{"stable", verdict.stable}, {"compared", {s, s + 1}}, {"note", verdict.note}}}};
    emit(c, "ext2-report", params, body, [&] {
        std::cout << "dim Ext2 = " << r.dim << "  [";
        for (std::size_t i = 0; i < r.annotations.size(); ++i)
            std::cout << (i ? "; " : "") << r.annotations[i];
        std::cout << "]\nH2 of the truncated ideal (s=" << s << "):\n";
        print_report(r.h2_truncated);
        std::cout << "assembled H2 of the ideal:\n";
        print_report(r.h2_assembled);
        std::cout << "stabilization: " << (verdict.stable ? "stable" : "NOT stable") << " (" << verdict.note << ")\n";
    });
    return 0;
}

int run_verify(const Common& c, const std::string& suite) {
    EngineOptions opts;
    opts.threads = c.threads;
    const auto r = verify::run_suite(suite, opts);
    Json lines = Json::array();
    for (const auto& l : r.lines)
        lines.push_back({{"check", l.name}, {"expected", l.expected}, {"computed", l.computed}, {"pass", l.pass}});
    emit(c, "verify", {{"suite", suite}}, {{"pass", r.pass()}, {"checks", lines}}, [&] {
        for (const auto& l : r.lines)
            std::cout << (l.pass ? "pass" : "FAIL") << "  " << l.name << ": expected " << l.expected << ", computed "
                      << l.computed << '\n';
        std::cout << suite << ": " << (r.pass() ? "pass" : "FAIL") << '\n';
    });
    return r.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology of current algebras: truncated Chevalley–Eilenberg complexes, affine Weyl "
                 "predictions, first cyclic homology and Ext between simple modules"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_flag("--json", common.json, "Emit JSON (schema v1)");
    app.add_option("--threads", common.threads, "Worker threads for block computations (0 = hardware)");
    std::function<int()> action;

    CohomologyArgs ca;
    auto* coh = app.add_subcommand("cohomology", "Decompose (co)homology of a truncated current algebra");
    coh->add_option("--algebra", ca.algebra, "gtp | gIs | full | unital | simple")->capture_default_str();
    coh->add_option("--type", ca.type, "Root system, e.g. A1, G2")->required();
    coh->add_option("--s", ca.s, "Truncation level (default 5 for gtp, 4 for gIs and unital, 3 for full)");
    coh->add_option("--points", ca.points, "Comma-separated distinct points (gIs, unital)");
    coh->add_option("--degree", ca.degree, "Cohomological degree")->required();
    coh->add_option("--arity", ca.arity, "Weight arity of the report (defaults to the algebra's)");
    coh->add_flag("--homology", ca.homology, "Compute homology instead of cohomology");
    coh->add_option("--module", ca.module, "Evaluation-module coefficients, e.g. \"0:[1];1:[2]\"");
    coh->add_flag("--dump-table", ca.dump_table, "Include the structure-constant table");
    coh->add_flag("--no-stability", ca.no_stability, "Skip the s+1 stabilization comparison");
    coh->callback([&] { action = [&] { return run_cohomology(common, ca); }; });

    std::string type;
    int degree = 0;
    auto* glp = app.add_subcommand("gl-predict", "Affine-Weyl prediction of H^j(g⊗tC[t])");
    glp->add_option("--type", type)->required();
    glp->add_option("--degree", degree)->required();
    glp->callback([&] { action = [&] { return run_gl_predict(common, type, degree); }; });

    auto* t1 = app.add_subcommand("table1", "Indices j with α_j(α₀^∨) ≠ 0");
    t1->add_option("--type", type)->required();
    t1->callback([&] { action = [&] { return run_table1(common, type); }; });

    std::string points = "0,1";
    int cutoff = 12;
    auto* hc = app.add_subcommand("hc1", "HC1 of C⊕⟨(t−a)(t−b)⟩ at a degree cutoff");
    hc->add_option("--points", points)->capture_default_str();
    hc->add_option("--cutoff", cutoff)->capture_default_str();
    hc->callback([&] { action = [&] { return run_hc1(common, points, cutoff); }; });

    int s_finite = 2;
    bool unital = false;
    auto* hcf = app.add_subcommand("hc1-finite", "HC1 of the finite algebra (C⊕)I/I^s");
    hcf->add_option("--points", points)->capture_default_str();
    hcf->add_option("--s", s_finite)->required();
    hcf->add_flag("--unital", unital, "Adjoin the unit");
    hcf->callback([&] { action = [&] { return run_hc1_finite(common, points, s_finite, unital); }; });

    int D = 4;
    auto* dm = app.add_subcommand("detm", "Determinant of the degree-(2D+1) relation matrix");
    dm->add_option("--D", D)->required();
    dm->callback([&] { action = [&] { return run_detm(common, D); }; });

    std::string pi, pi2, dstr;
    auto* e1 = app.add_subcommand("ext1", "Ext1 between simple modules (closed form)");
    e1->add_option("--type", type)->required();
    e1->add_option("--pi", pi, "Assignment point:[weight];...")->required();
    e1->add_option("--pi2", pi2)->required();
    e1->add_option("--d", dstr, "Per-point d_i overrides, e.g. \"0:2\"");
    e1->callback([&] { action = [&] { return run_ext1(common, type, pi, pi2, dstr); }; });

    std::string lams, mus;
    auto* e2 = app.add_subcommand("ext2-sl2", "Ext2 between distinct two-point sl2 modules");
    e2->add_option("--lams", lams)->required();
    e2->add_option("--mus", mus)->required();
    e2->add_option("--points", points)->capture_default_str();
    e2->callback([&] { action = [&] { return run_ext2_sl2(common, lams, mus, points); }; });

    auto* se = app.add_subcommand("self-ext2-sl2", "Self-Ext2 of a two-point sl2 module");
    se->add_option("--lams", lams)->required();
    se->add_option("--points", points)->capture_default_str();
    se->callback([&] { action = [&] { return run_self_ext2(common, lams, points); }; });

    int s_report = 4;
    auto* er = app.add_subcommand("ext2-report", "Ext2 through truncated H2 of g⊗I");
    er->add_option("--type", type)->required();
    er->add_option("--points", points)->capture_default_str();
    er->add_option("--pi", pi)->required();
    er->add_option("--pi2", pi2)->required();
    er->add_option("--s", s_report)->capture_default_str();
    er->callback([&] { action = [&] { return run_ext2_report(common, type, points, pi, pi2, s_report); }; });

    std::string suite;
    auto* vf = app.add_subcommand("verify", "Run a named self-check suite");
    vf->add_option("suite", suite)->required()->check(CLI::IsMember(verify::suite_names()));
    vf->callback([&] { action = [&] { return run_verify(common, suite); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
