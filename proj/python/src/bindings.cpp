#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "prym/curves.hpp"
#include "prym/fibers.hpp"
#include "prym/groupalg.hpp"
#include "prym/json_io.hpp"
#include "prym/lattice.hpp"
#include "prym/moduli.hpp"
#include "prym/prym.hpp"
#include "prym/verify.hpp"

namespace py = pybind11;
using namespace prym;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it) {
                out[py::str(it.key())] = json_to_py(it.value());
            }
            return out;
        }
        default: return py::none();
    }
}

py::dict report_to_py(const Report& r) {
    py::dict out;
    out["pass"] = r.all_pass();
    out["assertions"] = json_to_py(report_json(r));
    return out;
}

SignVector signs_from_tuple(const std::array<int, 3>& s) {
    for (int x : s) {
        if (x != 1 && x != -1) {
            throw Error(ErrorCode::ParseError, "signs must be +1 or -1");
        }
    }
    return SignVector{s};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "fibers of the degree-4 Prym map of genus-2 curves: moduli triples, "
              "cross-ratio invariants, quadric-pencil fibers, exact lattice and "
              "group-algebra verification";

    static py::exception<Error> prym_error(m, "PrymError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            std::string message = std::string(to_string(e.code())) + ": " + e.what();
            py::set_error(prym_error, message.c_str());
        }
    });

    py::class_<ToleranceConfig>(m, "ToleranceConfig")
        .def(py::init<>())
        .def(py::init([](double abs_tol, double rel_tol) {
                 return ToleranceConfig{abs_tol, rel_tol};
             }),
             py::arg("abs_tol"), py::arg("rel_tol"))
        .def_readwrite("abs_tol", &ToleranceConfig::abs_tol)
        .def_readwrite("rel_tol", &ToleranceConfig::rel_tol);

    m.def("approx_eq", &approx_eq, py::arg("x"), py::arg("y"), py::arg("cfg") = ToleranceConfig{});
    m.def(
        "solve_quadratic",
        [](Complex a, Complex b, Complex c) {
            QuadraticRoots r = solve_quadratic(a, b, c);
            return py::make_tuple(r.roots, r.repeated);
        },
        py::arg("a"), py::arg("b"), py::arg("c"),
        "roots of a z^2 + b z + c, with a flag for a repeated root");

    py::class_<ModuliPoint>(m, "ModuliPoint")
        .def_property_readonly("triple",
                               [](const ModuliPoint& p) {
                                   return py::make_tuple(p.t[0], p.t[1], p.t[2]);
                               })
        .def("__repr__", [](const ModuliPoint& p) { return moduli_json(p).dump(); });

    m.def(
        "validate",
        [](Complex t1, Complex t2, Complex t3, const ToleranceConfig& cfg) {
            return validate(t1, t2, t3, cfg);
        },
        py::arg("t1"), py::arg("t2"), py::arg("t3"), py::arg("cfg") = ToleranceConfig{},
        "admissible moduli triple, canonically sorted");
    m.def("moduli_eq", &moduli_eq, py::arg("a"), py::arg("b"), py::arg("cfg") = ToleranceConfig{});

    m.def(
        "cover",
        [](const ModuliPoint& p, const std::array<int, 3>& signs) {
            return json_to_py(cover_json(cover_from_point(p, signs_from_tuple(signs))));
        },
        py::arg("point"), py::arg("signs") = std::array<int, 3>{1, 1, 1},
        "normalized six-point cover datum");
    m.def(
        "curve_system",
        [](const ModuliPoint& p, const std::array<int, 3>& signs) {
            return json_to_py(curve_system_json(curve_system(p, signs_from_tuple(signs))));
        },
        py::arg("point"), py::arg("signs") = std::array<int, 3>{1, 1, 1},
        "branch loci of the five curves in the cover tower");

    m.def(
        "lambda_pair",
        [](Complex t1, Complex t2, Complex t3, const ToleranceConfig& cfg) {
            auto [l1, l2] = lambda_pair(t1, t2, t3, cfg);
            return py::make_tuple(l1, l2);
        },
        py::arg("t1"), py::arg("t2"), py::arg("t3"), py::arg("cfg") = ToleranceConfig{});
    m.def("s3_orbit", &s3_orbit, py::arg("l1"), py::arg("l2"), py::arg("cfg") = ToleranceConfig{});
    m.def(
        "canonical_invariant",
        [](Complex l1, Complex l2, const ToleranceConfig& cfg) {
            FiberInvariant inv = canonical_invariant(l1, l2, cfg);
            py::dict out;
            out["lambda1"] = inv.lambda1;
            out["lambda2"] = inv.lambda2;
            out["orbit"] = py::cast(inv.orbit);
            out["canonical"] = py::make_tuple(inv.canonical.first, inv.canonical.second);
            return out;
        },
        py::arg("l1"), py::arg("l2"), py::arg("cfg") = ToleranceConfig{});
    m.def("lambdas_distinct", &lambdas_distinct, py::arg("point"), py::arg("cfg") = ToleranceConfig{});
    m.def("same_fiber", &same_fiber, py::arg("p"), py::arg("q"), py::arg("cfg") = ToleranceConfig{});
    m.def(
        "descriptor",
        [](const ModuliPoint& p, const ToleranceConfig& cfg) {
            return json_to_py(descriptor_json(prym_descriptor(p, cfg)));
        },
        py::arg("point"), py::arg("cfg") = ToleranceConfig{},
        "Prym image descriptor: jE, jF, canonical lambda pair");

    m.def("cross_ratio",
          [](Complex a, Complex b, Complex c, Complex d) {
              return cross_ratio(P1Point::finite(a), P1Point::finite(b), P1Point::finite(c),
                                 P1Point::finite(d));
          });
    m.def("j_from_lambda",
          [](Complex l) { return j_from_lambda(l); });

    m.def(
        "solve_fiber",
        [](Complex l1, Complex l2, Complex t1, const ToleranceConfig& cfg) {
            std::vector<std::pair<Complex, Complex>> out;
            for (const FiberSolution& s : solve_fiber(l1, l2, t1, cfg)) {
                out.emplace_back(s.t2, s.t3);
            }
            return out;
        },
        py::arg("l1"), py::arg("l2"), py::arg("t1"), py::arg("cfg") = ToleranceConfig{});

    py::class_<FiberSample>(m, "FiberSample")
        .def_property_readonly("points",
                               [](const FiberSample& s) { return py::cast(s.points); })
        .def_property_readonly("ordered", [](const FiberSample& s) { return py::cast(s.ordered); })
        .def_property_readonly("residual_max",
                               [](const FiberSample& s) { return s.residual_max; })
        .def_property_readonly("ranks",
                               [](const FiberSample& s) {
                                   std::vector<int> out;
                                   for (const auto& d : s.diagnostics) out.push_back(d.rank);
                                   return out;
                               })
        .def("to_json", [](const FiberSample& s) { return fiber_sample_json(s).dump(); })
        .def("to_csv", [](const FiberSample& s) { return fiber_sample_csv(s); });

    m.def(
        "sample_fiber",
        [](Complex l1, Complex l2, std::size_t n, std::uint64_t seed, const ToleranceConfig& cfg) {
            return sample_fiber(l1, l2, n, seed, cfg);
        },
        py::arg("l1"), py::arg("l2"), py::arg("n") = 20, py::arg("seed") = 0,
        py::arg("cfg") = ToleranceConfig{});
    m.def(
        "is_exceptional",
        [](Complex l1, Complex l2, const ToleranceConfig& cfg) {
            return is_exceptional(l1, l2, cfg);
        },
        py::arg("l1"), py::arg("l2"), py::arg("cfg") = ToleranceConfig{});
    m.def(
        "glued_points",
        [](Complex l1, Complex l2, std::size_t n, std::uint64_t seed, const ToleranceConfig& cfg) {
            std::vector<py::tuple> out;
            for (const GluedPoint& g : glued_points(l1, l2, n, seed, cfg)) {
                out.push_back(py::make_tuple(
                    g.point, py::make_tuple(g.permutation[0], g.permutation[1], g.permutation[2])));
            }
            return out;
        },
        py::arg("l1"), py::arg("l2"), py::arg("n") = 100, py::arg("seed") = 0,
        py::arg("cfg") = ToleranceConfig{});

    m.def(
        "eval_quadrics",
        [](Complex l1, Complex l2, const std::array<Complex, 4>& coords) {
            QuadricPair qp = make_quadric_pair(l1, l2);
            auto [q1, q2] = eval_quadrics(qp, make_point3(coords));
            return py::make_tuple(q1, q2);
        },
        py::arg("l1"), py::arg("l2"), py::arg("coords"));
    m.def(
        "jacobian_rank",
        [](Complex l1, Complex l2, const std::array<Complex, 4>& coords) {
            return jacobian_rank(make_quadric_pair(l1, l2), make_point3(coords));
        },
        py::arg("l1"), py::arg("l2"), py::arg("coords"));

    m.def("tt_class",
          [](int i, int j) { return tt_from_pair(i, j).indices(); });
    m.def("tt_sum", [](const std::vector<std::pair<int, int>>& pairs) {
        TwoTorsionClass acc;
        for (auto [i, j] : pairs) acc = tt_add(acc, tt_from_pair(i, j));
        return acc.indices();
    });

    m.def("scenario_prym", [] { return report_to_py(scenario_prym()); },
          "exact lattice pipeline report");
    m.def("verify_decomposition", [] { return report_to_py(verify_decomposition()); },
          "exact group algebra report");
    m.def(
        "verify",
        [](const std::string& suite, std::uint64_t seed, std::size_t samples) {
            Report r;
            if (suite == "lattice") {
                r = run_lattice_suite();
            } else if (suite == "group") {
                r = run_group_suite();
            } else if (suite == "prym") {
                r = run_prym_suite(seed, samples);
            } else if (suite == "fibers") {
                r = run_fibers_suite(seed, samples);
            } else if (suite == "all") {
                r = run_all_suites(seed, samples);
            } else {
                throw Error(ErrorCode::ParseError, "suite must be lattice|group|prym|fibers|all");
            }
            return report_to_py(r);
        },
        py::arg("suite") = "all", py::arg("seed") = 0, py::arg("samples") = 200);
}
