#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subzeta/enumerate.hpp"
#include "subzeta/oracle.hpp"
#include "subzeta/permgroup.hpp"
#include "subzeta/polymod.hpp"
#include "subzeta/ring.hpp"
#include "subzeta/series.hpp"
#include "subzeta/verify.hpp"

namespace py = pybind11;
using namespace subzeta;

namespace {

py::int_ to_py_int(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt from_py_int(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

std::vector<BigInt> poly_from_obj(const py::object& poly) {
    if (py::isinstance<py::str>(poly)) return parse_polynomial(poly.cast<std::string>());
    std::vector<BigInt> out;
    for (auto item : poly.cast<py::sequence>()) out.push_back(from_py_int(py::int_(item)));
    return out;
}

py::dict report_to_dict(const BoundCheckReport& rep) {
    py::dict d;
    d["prop"] = rep.prop;
    d["grid"] = rep.grid;
    d["worst_ratio"] = rep.worst_ratio;
    d["runtime_ms"] = rep.runtime_ms;
    py::list viols;
    for (const auto& v : rep.violations) {
        py::dict jv;
        jv["params"] = v.params;
        jv["observed"] = v.observed;
        jv["bound"] = v.bound;
        viols.append(jv);
    }
    d["violations"] = viols;
    py::list detail;
    for (const auto& [k, v] : rep.detail) detail.append(py::make_tuple(k, v));
    d["detail"] = detail;
    return d;
}

}  // namespace

PYBIND11_MODULE(subzeta, m) {
    m.doc() = "exact counting of finite-index subrings and orders of structure-constant rings";

    py::register_exception<InputError>(m, "InputError");
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");

    py::class_<StructureRing>(m, "StructureRing")
        .def_property_readonly("rank", &StructureRing::rank)
        .def_property_readonly("label", &StructureRing::label)
        .def("validate",
             [](const StructureRing& r) -> py::object {
                 auto v = r.validate();
                 if (!v) return py::none();
                 py::dict d;
                 d["kind"] = v->kind;
                 d["detail"] = v->detail;
                 return d;
             })
        .def("to_json", &ring_to_json_text)
        .def("__repr__", [](const StructureRing& r) {
            return "<StructureRing rank=" + std::to_string(r.rank()) + " '" + r.label() + "'>";
        });

    m.def("split_ring", &make_split_ring, py::arg("rank"));
    m.def(
        "monogenic_ring", [](const py::object& poly) { return make_monogenic_ring(poly_from_obj(poly)); },
        py::arg("poly"));
    m.def(
        "unramified_product",
        [](long long p, const std::vector<int>& parts) {
            return make_unramified_product(p, SplittingType{parts});
        },
        py::arg("p"), py::arg("parts"));
    m.def("product_ring", &product_ring);
    m.def("ring_from_json", &ring_from_json_text);
    m.def(
        "find_irreducible",
        [](long long p, int degree) {
            py::list out;
            for (const auto& c : find_irreducible(p, degree)) out.append(to_py_int(c));
            return out;
        },
        py::arg("p"), py::arg("degree"));
    m.def(
        "splitting_type",
        [](const py::object& poly, long long p) { return splitting_type_of(poly_from_obj(poly), p).degrees; },
        py::arg("poly"), py::arg("p"));

    m.def(
        "count_index",
        [](const StructureRing& ring, long long p, int mm, bool unital, int workers) {
            CountConfig cfg;
            cfg.unital = unital;
            cfg.workers = workers;
            return to_py_int(count_index(ring, p, mm, cfg));
        },
        py::arg("ring"), py::arg("p"), py::arg("m"), py::arg("unital") = false, py::arg("workers") = 1);
    m.def(
        "count_for_diagonal",
        [](const StructureRing& ring, long long p, const std::vector<int>& diag, bool unital) {
            EnumOptions opts;
            opts.unital = unital;
            return to_py_int(count_for_diagonal(ring, p, diag, opts));
        },
        py::arg("ring"), py::arg("p"), py::arg("diag"), py::arg("unital") = false);
    m.def(
        "mu_volume",
        [](const StructureRing& ring, long long p, const std::vector<int>& diag) {
            MuVolume mv = mu_volume(ring, p, diag);
            return py::make_tuple(to_py_int(mv.count), mv.exponent);
        },
        py::arg("ring"), py::arg("p"), py::arg("diag"));
    m.def(
        "local_factor_coeffs",
        [](const StructureRing& ring, long long p, int m_max, bool unital, int workers) {
            CountConfig cfg;
            cfg.unital = unital;
            cfg.workers = workers;
            py::list out;
            for (const auto& v : local_factor_coeffs(ring, p, m_max, cfg)) out.append(to_py_int(v));
            return out;
        },
        py::arg("ring"), py::arg("p"), py::arg("m_max"), py::arg("unital") = false, py::arg("workers") = 1);
    m.def(
        "count_global",
        [](const StructureRing& ring, const py::int_& k, bool unital) {
            return to_py_int(count_global(ring, from_py_int(k), unital));
        },
        py::arg("ring"), py::arg("k"), py::arg("unital") = false);

    m.def(
        "assemble_series",
        [](const std::string& family, long long B, int workers) {
            CountConfig cfg;
            cfg.workers = workers;
            SeriesProfile profile = assemble_counts(parse_family(family), B, cfg);
            py::list f, N;
            for (long long k = 0; k <= B; ++k) {
                f.append(to_py_int(profile.f[static_cast<size_t>(k)]));
                N.append(to_py_int(profile.N[static_cast<size_t>(k)]));
            }
            py::dict d;
            d["family"] = profile.family.str();
            d["B"] = profile.B;
            d["f"] = f;  // index k holds f(k); entry 0 unused
            d["N"] = N;
            d["excluded_primes"] = profile.excluded_primes;
            return d;
        },
        py::arg("family"), py::arg("B"), py::arg("workers") = 1);

    m.def(
        "r2_orbits",
        [](int degree, const std::vector<std::vector<std::vector<int>>>& generator_cycles) {
            std::vector<Perm> gens;
            for (const auto& cycles : generator_cycles) gens.push_back(perm_from_cycles(degree, cycles));
            PermGroup g(degree, std::move(gens));
            return r2_orbits(g);
        },
        py::arg("degree"), py::arg("generators"));
    m.def(
        "burnside_r",
        [](int degree, const std::vector<std::vector<std::vector<int>>>& generator_cycles) {
            std::vector<Perm> gens;
            for (const auto& cycles : generator_cycles) gens.push_back(perm_from_cycles(degree, cycles));
            PermGroup g(degree, std::move(gens));
            Rational r = burnside_r(g);
            return py::make_tuple(r.num, r.den);
        },
        py::arg("degree"), py::arg("generators"));
    m.def("r2_closed_form", &r2_closed_form, py::arg("kind"), py::arg("n"), py::arg("order") = 0);
    m.def("table1_rows", []() {
        py::list rows;
        for (const auto& g : builtin_transitive_groups()) {
            R2Row row = r2_report_row(g);
            py::dict d;
            d["name"] = row.name;
            d["degree"] = row.degree;
            d["order"] = row.order;
            d["r2"] = row.r2;
            d["burnside"] = py::make_tuple(row.burnside.num, row.burnside.den);
            d["match"] = row.match;
            rows.append(d);
        }
        return rows;
    });

    m.def(
        "check_congruence_props",
        [](long long p, int k_max, int l_max) {
            py::list out;
            for (const auto& rep : check_congruence_props(p, k_max, l_max)) out.append(report_to_dict(rep));
            return out;
        },
        py::arg("p"), py::arg("k_max") = 6, py::arg("l_max") = 6);
    m.def(
        "check_mu_bounds",
        [](int d_order, const std::vector<long long>& p_set, int sum_max, int workers) {
            CountConfig cfg;
            cfg.workers = workers;
            py::list out;
            for (const auto& rep : check_mu_bounds(d_order, p_set, sum_max, cfg)) out.append(report_to_dict(rep));
            return out;
        },
        py::arg("d"), py::arg("p_set"), py::arg("sum_max") = 4, py::arg("workers") = 1);
    m.def(
        "verify_a1",
        [](long long p, const std::vector<int>& parts) {
            A1Result r = verify_a1(p, SplittingType{parts});
            py::dict d;
            d["formula"] = to_py_int(r.formula);
            d["brute"] = to_py_int(r.brute);
            d["match"] = r.match;
            return d;
        },
        py::arg("p"), py::arg("type"));
    m.def(
        "check_quintic_exponent",
        [](const std::vector<long long>& p_set, const std::vector<int>& m_set, double slack) {
            return report_to_dict(check_quintic_exponent(p_set, m_set, slack));
        },
        py::arg("p_set"), py::arg("m_set"), py::arg("slack") = 1.0);
    m.def(
        "check_wishful",
        [](long long p, int m_max, const std::vector<int>& parts) {
            return report_to_dict(check_wishful(p, m_max, SplittingType{parts}));
        },
        py::arg("p"), py::arg("m_max"), py::arg("type"));
}
