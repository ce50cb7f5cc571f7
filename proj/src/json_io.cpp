#include "prym/json_io.hpp"

#include <cstdio>

namespace prym {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json p1_json(const P1Point& p) {
    if (p.infinite) return Json("inf");
    return complex_json(p.value);
}

Json moduli_json(const ModuliPoint& p) {
    Json t = Json::array();
    for (Complex x : p.t) t.push_back(complex_json(x));
    return Json{{"t", t}};
}

Json cover_json(const CoverDatum& c) {
    Json points = Json::array();
    const char* names[4] = {"w1", "w2", "w3", "w4"};
    for (int i = 0; i < 4; ++i) {
        points.push_back(Json{{"name", names[i]}, {"point", p1_json(c.w[i])}});
    }
    points.push_back(Json{{"name", "u1"}, {"point", p1_json(c.u1)}});
    points.push_back(Json{{"name", "u2"}, {"point", p1_json(c.u2)}});
    Json signs = Json::array();
    for (int s : c.signs.s) signs.push_back(s);
    return Json{{"points", points}, {"signs", signs}};
}

Json curve_system_json(const CurveSystem& cs) {
    auto list = [](const auto& pts) {
        Json out = Json::array();
        for (const P1Point& p : pts) out.push_back(p1_json(p));
        return out;
    };
    return Json{{"c_sigma2", list(cs.c_sigma2)},
                {"h", list(cs.h)},
                {"e_s2_js", list(cs.e_s2_js.points)},
                {"e_j", list(cs.e_j.points)},
                {"e_js2", list(cs.e_js2.points)}};
}

Json descriptor_json(const PrymDescriptor& d) {
    return Json{{"jE", complex_json(d.j_e)},
                {"jF", complex_json(d.j_f)},
                {"canonical_lambda", Json::array({complex_json(d.invariant.canonical.first),
                                                  complex_json(d.invariant.canonical.second)})}};
}

Json fiber_sample_json(const FiberSample& s) {
    Json points = Json::array();
    for (const ModuliPoint& p : s.points) points.push_back(moduli_json(p));
    Json ranks = Json::array();
    for (const PointDiagnostics& d : s.diagnostics) ranks.push_back(d.rank);
    return Json{{"lambda_canonical", Json::array({complex_json(s.lambda.canonical.first),
                                                  complex_json(s.lambda.canonical.second)})},
                {"points", points},
                {"residual_max", s.residual_max},
                {"ranks", ranks}};
}

Json report_json(const Report& r) {
    Json entries = Json::array();
    for (const Assertion& a : r.entries) {
        entries.push_back(Json{{"assertion", a.name},
                               {"expected", a.expected},
                               {"computed", a.computed},
                               {"pass", a.pass}});
    }
    return entries;
}

Json error_json(const Error& e) {
    return Json{{"code", to_string(e.code())}, {"message", e.what()}};
}

std::string fiber_sample_csv(const FiberSample& s) {
    std::string out = "t1_re,t1_im,t2_re,t2_im,t3_re,t3_im,residual1,residual2,rank\n";
    char buf[64];
    auto put = [&](double v, char sep) {
        std::snprintf(buf, sizeof(buf), "%.17g%c", v, sep);
        out += buf;
    };
    for (std::size_t i = 0; i < s.ordered.size(); ++i) {
        for (Complex t : s.ordered[i]) {
            put(t.real(), ',');
            put(t.imag(), ',');
        }
        put(s.diagnostics[i].residual1, ',');
        put(s.diagnostics[i].residual2, ',');
        std::snprintf(buf, sizeof(buf), "%d\n", s.diagnostics[i].rank);
        out += buf;
    }
    return out;
}

}  // namespace prym
