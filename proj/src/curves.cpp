#include "prym/curves.hpp"

namespace prym {

BranchQuartic make_quartic(const std::array<P1Point, 4>& points, const ToleranceConfig& cfg) {
    for (int i = 0; i < 4; ++i) {
        for (int k = i + 1; k < 4; ++k) {
            if (p1_approx_eq(points[i], points[k], cfg)) {
                throw Error(ErrorCode::DegenerateQuadruple, "branch quartic needs 4 distinct points");
            }
        }
    }
    return BranchQuartic{points};
}

CurveSystem curve_system(const ModuliPoint& p, const SignVector& sv) {
    const Complex one{1.0, 0.0};
    CurveSystem cs;
    cs.c_sigma2 = {P1Point::finite(one),     P1Point::finite(-one),
                   P1Point::finite(p.t[0]),  P1Point::finite(-p.t[0]),
                   P1Point::finite(p.t[1]),  P1Point::finite(-p.t[1]),
                   P1Point::finite(p.t[2]),  P1Point::finite(-p.t[2])};
    cs.h = {P1Point::finite(Complex{}),      P1Point::finite(one),
            P1Point::finite(p.t[0] * p.t[0]), P1Point::finite(p.t[1] * p.t[1]),
            P1Point::finite(p.t[2] * p.t[2]), P1Point::infinity()};
    cs.e_s2_js = BranchQuartic{{P1Point::finite(one), P1Point::finite(p.t[0] * p.t[0]),
                                P1Point::finite(p.t[1] * p.t[1]), P1Point::finite(p.t[2] * p.t[2])}};
    std::array<Complex, 3> signed_t;
    for (int i = 0; i < 3; ++i) signed_t[i] = static_cast<double>(sv.s[i]) * p.t[i];
    cs.e_j = BranchQuartic{{P1Point::finite(one), P1Point::finite(signed_t[0]),
                            P1Point::finite(signed_t[1]), P1Point::finite(signed_t[2])}};
    cs.e_js2 = BranchQuartic{{P1Point::finite(-one), P1Point::finite(-signed_t[0]),
                              P1Point::finite(-signed_t[1]), P1Point::finite(-signed_t[2])}};
    return cs;
}

namespace {
// homogeneous coordinates: finite v -> [v:1], infinity -> [1:0]
struct Homog {
    Complex x, y;
};

Homog homog(const P1Point& p) {
    if (p.infinite) return {Complex{1.0, 0.0}, Complex{}};
    return {p.value, Complex{1.0, 0.0}};
}

Complex bracket(const Homog& p, const Homog& q) {
    return p.x * q.y - q.x * p.y;
}
}  // namespace

Complex cross_ratio(const P1Point& a, const P1Point& b, const P1Point& c, const P1Point& d,
                    const ToleranceConfig& cfg) {
    const std::array<const P1Point*, 4> pts = {&a, &b, &c, &d};
    for (int i = 0; i < 4; ++i) {
        for (int k = i + 1; k < 4; ++k) {
            if (p1_approx_eq(*pts[i], *pts[k], cfg)) {
                throw Error(ErrorCode::DegenerateQuadruple, "cross_ratio needs 4 distinct points");
            }
        }
    }
    Homog ha = homog(a), hb = homog(b), hc = homog(c), hd = homog(d);
    return (bracket(hc, ha) * bracket(hd, hb)) / (bracket(hc, hb) * bracket(hd, ha));
}

Complex j_from_lambda(Complex lambda, const ToleranceConfig& cfg) {
    if (approx_eq(lambda, Complex{}, cfg) || approx_eq(lambda, Complex{1.0, 0.0}, cfg)) {
        throw Error(ErrorCode::ExcludedLambda, "j_from_lambda: lambda must avoid {0, 1}");
    }
    Complex n = lambda * lambda - lambda + Complex{1.0, 0.0};
    Complex d = lambda * lambda * (lambda - Complex{1.0, 0.0}) * (lambda - Complex{1.0, 0.0});
    return 256.0 * n * n * n / d;
}

Complex j_invariant(const BranchQuartic& q, const ToleranceConfig& cfg) {
    return j_from_lambda(cross_ratio(q.points[0], q.points[1], q.points[2], q.points[3], cfg), cfg);
}

bool marked_iso_exists(const BranchQuartic& a, const BranchQuartic& b, const ToleranceConfig& cfg) {
    Complex ca = cross_ratio(a.points[0], a.points[1], a.points[2], a.points[3], cfg);
    Complex cb = cross_ratio(b.points[0], b.points[1], b.points[2], b.points[3], cfg);
    return approx_eq(ca, cb, cfg);
}

}  // namespace prym
