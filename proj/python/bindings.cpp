#include "curcoh/affine.hpp"
#include "curcoh/cecohoml.hpp"
#include "curcoh/chevalley.hpp"
#include "curcoh/cyclic.hpp"
#include "curcoh/errors.hpp"
#include "curcoh/extcalc.hpp"
#include "curcoh/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace curcoh;

namespace {

Rational to_rational(const py::handle& h) {
    const std::string s = py::str(h);
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::exception&) {
        throw ValidationError("not a rational number: '" + s + "'");
    }
}

std::vector<Rational> to_points(const py::sequence& seq) {
    std::vector<Rational> out;
    for (const auto& h : seq)
        out.push_back(to_rational(h));
    return out;
}

py::list report_list(const DecompositionReport& r) {
    py::list out;
    for (const auto& f : r.factors) {
        py::dict d;
        py::list ws;
        for (const auto& p : f.highest.parts)
            ws.append(py::cast(p.coords));
        d["weights"] = ws;
        d["mult"] = f.mult;
        d["t_degree"] = f.t_degree ? py::object(py::int_(*f.t_degree)) : py::object(py::none());
        out.append(d);
    }
    return out;
}

py::list cohomology(const std::string& algebra, const std::string& type, int degree, std::optional<int> s,
                    const py::sequence& points, bool homology, unsigned threads) {
    const RootSystem rs = parse_root_system(type);
    const LieTable L = build_algebra(algebra, rs, s.value_or(default_truncation(algebra)), to_points(points));
    EngineOptions opts;
    opts.threads = threads;
    const ModuleRep M = trivial_module(L);
    return report_list(homology ? decompose_homology(L, M, degree, L.weight_arity(), opts)
                                : decompose_cohomology(L, M, degree, L.weight_arity(), opts));
}

} // namespace

PYBIND11_MODULE(_curcoh, m) {
    m.doc() = "Cohomology of current algebras";

    static py::exception<InvariantViolation> invariant(m, "InvariantViolation", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const ValidationError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const InvariantViolation& e) {
            invariant(e.what());
        }
    });

    m.def(
        "root_system_info",
        [](const std::string& type) {
            const RootSystem rs = parse_root_system(type);
            py::dict d;
            d["name"] = rs.name();
            d["rank"] = rs.rank();
            d["cartan"] = rs.cartan();
            d["positive_roots"] = rs.positive_roots();
            d["theta"] = rs.theta().coords;
            d["dim"] = rs.dim_algebra();
            return d;
        },
        py::arg("type"));
    m.def(
        "weyl_dim", [](const std::string& type, std::vector<int> w) { return weyl_dim(parse_root_system(type), Weight(w)); },
        py::arg("type"), py::arg("weight"));
    m.def(
        "tensor_decompose",
        [](const std::string& type, std::vector<int> a, std::vector<int> b) {
            return report_list(tensor_decompose(parse_root_system(type), Weight(a), Weight(b)));
        },
        py::arg("type"), py::arg("a"), py::arg("b"));

    m.def("cohomology", &cohomology, py::arg("algebra"), py::arg("type"), py::arg("degree"),
          py::arg("s") = py::none(), py::arg("points") = py::list(), py::arg("homology") = false,
          py::arg("threads") = 0u, "Irreducible factors of H^n (or H_n) with trivial coefficients");

    m.def(
        "gl_predict",
        [](const std::string& type, int j) { return report_list(gl_predict(affinize(parse_root_system(type)), j)); },
        py::arg("type"), py::arg("degree"));
    m.def(
        "table1", [](const std::string& type) { return table1(affinize(parse_root_system(type))); },
        py::arg("type"));

    m.def(
        "hc1_cutoff",
        [](const py::sequence& points, int cutoff) {
            const auto r = cyclic::hc1_cutoff(to_points(points), cutoff);
            return py::make_tuple(r.dim, r.survivors);
        },
        py::arg("points"), py::arg("cutoff") = 12);
    m.def("hc1_Cf_cutoff", &cyclic::hc1_Cf_cutoff, py::arg("cutoff"));
    m.def(
        "hc1_finite",
        [](const py::sequence& points, int s, bool unital) {
            return cyclic::hc1_finite(build_algebra_table(to_points(points), s, unital));
        },
        py::arg("points"), py::arg("s"), py::arg("unital") = false);
    m.def(
        "detM", [](int D) { return py::int_(py::str(cyclic::detM(D).get_str())); }, py::arg("D"));

    m.def(
        "ext1",
        [](const std::string& type, const std::string& pi, const std::string& pi2, const py::dict& d) {
            const RootSystem rs = parse_root_system(type);
            ext::DOverrides over;
            for (const auto& [k, v] : d)
                over[to_rational(k)] = v.cast<int>();
            return ext::ext1(rs, ext::WeightAssignment::parse(pi, rs), ext::WeightAssignment::parse(pi2, rs), over);
        },
        py::arg("type"), py::arg("pi"), py::arg("pi2"), py::arg("d") = py::dict());
    m.def(
        "ext2_sl2_twopoint",
        [](std::pair<int, int> lams, std::pair<int, int> mus, const py::sequence& points) {
            return ext::ext2_sl2_twopoint(lams.first, lams.second, mus.first, mus.second, to_points(points));
        },
        py::arg("lams"), py::arg("mus"), py::arg("points") = py::make_tuple(0, 1));
    m.def(
        "self_ext2_sl2",
        [](std::pair<int, int> lams, const py::sequence& points) {
            return ext::self_ext2_sl2(lams.first, lams.second, to_points(points));
        },
        py::arg("lams"), py::arg("points") = py::make_tuple(0, 1));
    m.def(
        "ext2_report",
        [](const std::string& type, const std::string& pi, const std::string& pi2, const py::sequence& points, int s) {
            const RootSystem rs = parse_root_system(type);
            const auto r = ext::ext2_general_report(rs, to_points(points), ext::WeightAssignment::parse(pi, rs),
                                                    ext::WeightAssignment::parse(pi2, rs), s);
            py::dict d;
            d["dim"] = r.dim;
            d["s"] = r.s;
            d["annotations"] = r.annotations;
            d["h2_truncated"] = report_list(r.h2_truncated);
            d["h2_assembled"] = report_list(r.h2_assembled);
            return d;
        },
        py::arg("type"), py::arg("pi"), py::arg("pi2"), py::arg("points") = py::make_tuple(0, 1), py::arg("s") = 4);

    m.def("suite_names", &verify::suite_names);
    m.def(
        "verify",
        [](const std::string& suite) {
            const auto r = verify::run_suite(suite);
            py::list lines;
            for (const auto& l : r.lines)
                lines.append(py::make_tuple(l.name, l.expected, l.computed, l.pass));
            return py::make_tuple(r.pass(), lines);
        },
        py::arg("suite"));
}
