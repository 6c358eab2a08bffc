#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ffext/budget.hpp"
#include "ffext/extensions.hpp"
#include "ffext/kottwitz.hpp"
#include "ffext/minute.hpp"
#include "ffext/polygon.hpp"
#include "ffext/strata.hpp"

namespace py = pybind11;
using namespace ffext;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.str());
}

py::dict witness_dict(const PathWitness& w) {
    py::list b;
    for (const auto& x : w.b) b.append(to_fraction(x));
    py::dict d;
    d["h_positions"] = w.h_positions;
    d["k_positions"] = w.k_positions;
    d["b"] = b;
    return d;
}

py::dict record_dict(const StratumRecord& rec) {
    py::dict d;
    d["nu_b_prime"] = rec.nu_b_prime;
    d["nonempty"] = rec.nonempty;
    d["hn_decomposable"] = rec.hn_decomposable;
    d["cuts"] = rec.cuts;
    d["wa_status"] = std::string(to_string(rec.wa_status));
    if (rec.witness) {
        py::dict w;
        w["m"] = rec.witness->m;
        w["s"] = rec.witness->s;
        w["x1"] = rec.witness->x1;
        w["x2"] = rec.witness->x2;
        d["witness"] = w;
    } else {
        d["witness"] = py::none();
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_ffext, m) {
    m.doc() = "Exact Harder-Narasimhan polygon combinatorics for vector bundles on the "
              "Fargues-Fontaine curve";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<HNPolygon>(m, "Polygon")
        .def(py::init([](const std::string& text) { return parse_polygon(text); }), py::arg("text"),
             "Parse from the block grammar, e.g. \"(2/5^(6),-3/5^(4))\".")
        .def_property_readonly("rank", &HNPolygon::rank)
        .def_property_readonly("degree", [](const HNPolygon& p) { return to_fraction(p.degree()); })
        .def_property_readonly("blocks",
                               [](const HNPolygon& p) {
                                   py::list out;
                                   for (const auto& b : p.blocks())
                                       out.append(py::make_tuple(to_fraction(b.slope), b.multiplicity));
                                   return out;
                               })
        .def_property_readonly("integral_breakpoints", &HNPolygon::has_integral_breakpoints)
        .def_property_readonly("semistable", &HNPolygon::is_semistable)
        .def("coordinates",
             [](const HNPolygon& p) {
                 py::list out;
                 for (const auto& c : p.coordinates()) out.append(to_fraction(c));
                 return out;
             })
        .def("prefix_sum",
             [](const HNPolygon& p, std::int64_t l) { return to_fraction(p.prefix_sum(l)); })
        .def("dual", &HNPolygon::dual)
        .def("__str__", [](const HNPolygon& p) { return format_polygon(p); })
        .def("__repr__", [](const HNPolygon& p) { return "Polygon(\"" + format_polygon(p) + "\")"; })
        .def("__hash__", [](const HNPolygon& p) { return py::hash(py::str(format_polygon(p))); })
        .def(py::self == py::self)
        .def(py::self < py::self);

    py::implicitly_convertible<std::string, HNPolygon>();

    m.def("parse", &parse_polygon, py::arg("text"));
    m.def("format", &format_polygon, py::arg("polygon"));
    m.def("direct_sum", &direct_sum);
    m.def("leq_dominance", &leq_dominance, py::arg("p"), py::arg("q"),
          "p <= q in the dominance order (equal prefix totals at the right end).");
    m.def("strongly_slopewise_dominates", &strongly_slopewise_dominates, py::arg("a"), py::arg("d"));
    m.def("bundle_vector", &bundle_vector, py::arg("v"),
          "Newton point <-> bundle slope vector dictionary (the dual; self-inverse).");

    m.def(
        "kottwitz_set",
        [](std::int64_t n, std::int64_t k, const HNPolygon& delta) {
            return kottwitz_set({n, k, delta});
        },
        py::arg("n"), py::arg("k"), py::arg("delta"));
    m.def(
        "kottwitz_member",
        [](const HNPolygon& v, std::int64_t n, std::int64_t k, const HNPolygon& delta) {
            return kottwitz_member(v, {n, k, delta});
        },
        py::arg("v"), py::arg("n"), py::arg("k"), py::arg("delta"));
    m.def(
        "basic_element",
        [](std::int64_t n, std::int64_t k, const HNPolygon& delta) {
            return basic_element({n, k, delta});
        },
        py::arg("n"), py::arg("k"), py::arg("delta"));
    m.def("hn_decomposable_cuts", &hn_decomposable_cuts, py::arg("v"), py::arg("delta"));
    m.def(
        "involution_check",
        [](std::int64_t n, std::int64_t k, const HNPolygon& delta) {
            return involution_check({n, k, delta});
        },
        py::arg("n"), py::arg("k"), py::arg("delta"));

    m.def(
        "tilde_ext",
        [](const HNPolygon& a, const HNPolygon& c, const HNPolygon& d) -> py::object {
            const auto w = tilde_ext_contains(a, {c, d});
            if (!w) return py::none();
            return witness_dict(*w);
        },
        py::arg("a"), py::arg("c"), py::arg("d"),
        "Witness dict when a lies in tilde-Ext^1(c, d), else None.");
    m.def(
        "ext_enumerate",
        [](const HNPolygon& c, const HNPolygon& d) { return ext_enumerate({c, d}); },
        py::arg("c"), py::arg("d"));
    m.def(
        "ext_contains",
        [](const HNPolygon& a, const HNPolygon& c, const HNPolygon& d) {
            return ext_contains(a, {c, d});
        },
        py::arg("a"), py::arg("c"), py::arg("d"));
    m.def("ext_semistable_pair", &ext_semistable_pair, py::arg("c"), py::arg("d"));
    m.def("interpolate_general", &interpolate_general, py::arg("a"), py::arg("c"), py::arg("m"));
    m.def("interpolate_constant", &interpolate_constant, py::arg("a"), py::arg("c"), py::arg("m"));

    m.def(
        "levi_reductions",
        [](std::int64_t n, std::int64_t r) { return levi_reductions({n, r}); }, py::arg("n"),
        py::arg("r"));
    m.def(
        "mu_negative_splits",
        [](std::int64_t n, std::int64_t r, std::int64_t m) {
            const StrataConfig cfg{n, r};
            py::list out;
            for (const auto& sp : mu_negative_splits(cfg, m)) {
                py::dict d;
                d["m"] = sp.m;
                d["s"] = sp.s;
                d["k"] = sp.k(cfg);
                d["delta1"] = sp.delta1(cfg);
                d["delta2"] = sp.delta2(cfg);
                out.append(d);
            }
            return out;
        },
        py::arg("n"), py::arg("r"), py::arg("m"));
    m.def(
        "stratum_status",
        [](std::int64_t n, std::int64_t r, const HNPolygon& nu) {
            return record_dict(stratum_status({n, r}, nu));
        },
        py::arg("n"), py::arg("r"), py::arg("nu"));
    m.def(
        "stratification_report",
        [](std::int64_t n, std::int64_t r) {
            const auto rep = stratification_report({n, r});
            py::dict out;
            out["delta"] = rep.delta;
            py::list records;
            for (const auto& rec : rep.records) records.append(record_dict(rec));
            out["records"] = records;
            py::dict summary;
            summary["nonempty"] = rep.summary.nonempty;
            summary["hn_decomposable"] = rep.summary.hn_decomposable;
            summary["hn_indecomposable"] = rep.summary.hn_indecomposable;
            summary["disjoint"] = rep.summary.disjoint;
            summary["proper_intersect"] = rep.summary.proper_intersect;
            summary["contained"] = rep.summary.contained;
            out["summary"] = summary;
            return out;
        },
        py::arg("n"), py::arg("r"));
    m.def(
        "extension_union",
        [](std::int64_t n, std::int64_t r) { return extension_union({n, r}); }, py::arg("n"),
        py::arg("r"));
    m.def(
        "extension_union_split_sums",
        [](std::int64_t n, std::int64_t r) { return extension_union_split_sums({n, r}); },
        py::arg("n"), py::arg("r"));

    auto minute_pair = [](const MinuteResult& res) {
        return py::make_tuple(res.value, res.violations);
    };
    m.def(
        "fully_hn_gl",
        [minute_pair](std::int64_t n, const std::vector<std::int64_t>& mu) {
            return minute_pair(fully_hn_gl({n, mu}));
        },
        py::arg("n"), py::arg("mu"));
    m.def(
        "weakly_fully_hn_gl",
        [minute_pair](std::int64_t n, const std::vector<std::int64_t>& mu) {
            return minute_pair(weakly_fully_hn_gl({n, mu}));
        },
        py::arg("n"), py::arg("mu"));
    m.def(
        "fully_hn_typeA",
        [minute_pair](std::int64_t n, std::int64_t i, std::int64_t i_prime) {
            return minute_pair(fully_hn_typeA({n, i, i_prime}));
        },
        py::arg("n"), py::arg("i"), py::arg("i_prime") = 0);
    m.def(
        "weakly_fully_hn_typeA",
        [minute_pair](std::int64_t n, std::int64_t i, std::int64_t i_prime) {
            return minute_pair(weakly_fully_hn_typeA({n, i, i_prime}));
        },
        py::arg("n"), py::arg("i"), py::arg("i_prime") = 0);

    m.attr("__version__") = "0.1.0";
}
