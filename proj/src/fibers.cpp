#include "prym/fibers.hpp"

#include <algorithm>
#include <cmath>

#include "prym/rng.hpp"

namespace prym {

namespace {
const Complex kOne{1.0, 0.0};

constexpr double kResidualRelTol = 1e-8;   // accept roots of the cleared quadratic
constexpr double kRankRelTol = 1e-7;       // minor threshold relative to entry scale
constexpr double kSampleInnerRadius = 0.2;
constexpr double kSampleOuterRadius = 5.0;
}  // namespace

ProjectivePoint3 make_point3(const std::array<Complex, 4>& coords) {
    int last = -1;
    for (int i = 3; i >= 0; --i) {
        if (coords[i] != Complex{}) {
            last = i;
            break;
        }
    }
    if (last < 0) {
        throw Error(ErrorCode::ExcludedValue, "projective point needs a nonzero coordinate");
    }
    ProjectivePoint3 p;
    for (int i = 0; i < 4; ++i) p.coords[i] = coords[i] / coords[last];
    p.coords[last] = kOne;
    return p;
}

QuadricPair make_quadric_pair(Complex l1, Complex l2, const ToleranceConfig& cfg) {
    for (Complex l : {l1, l2}) {
        if (!is_finite(l) || approx_eq(l, Complex{}, cfg) || approx_eq(l, kOne, cfg)) {
            throw Error(ErrorCode::ExcludedLambda, "quadric pair needs lambdas outside {0, 1}");
        }
    }
    if (approx_eq(l1, l2, cfg)) {
        throw Error(ErrorCode::EqualLambdas, "quadric pair needs distinct lambdas");
    }
    return QuadricPair{l1, l2, l2 / l1};
}

std::pair<Complex, Complex> eval_quadrics(const QuadricPair& qp, const ProjectivePoint3& p) {
    const auto& t = p.coords;
    Complex q1 = (t[1] - t[3]) * (t[2] - t[0]) - qp.lambda1 * (t[1] - t[0]) * (t[2] - t[3]);
    Complex q2 = (t[1] + t[3]) * (t[2] + t[0]) - qp.lambda2_prime * (t[1] + t[0]) * (t[2] + t[3]);
    return {q1, q2};
}

std::pair<double, double> quadric_scales(const QuadricPair& qp, const ProjectivePoint3& p) {
    const auto& t = p.coords;
    double s1 = std::max(std::abs((t[1] - t[3]) * (t[2] - t[0])),
                         std::abs(qp.lambda1) * std::abs((t[1] - t[0]) * (t[2] - t[3])));
    double s2 = std::max(std::abs((t[1] + t[3]) * (t[2] + t[0])),
                         std::abs(qp.lambda2_prime) * std::abs((t[1] + t[0]) * (t[2] + t[3])));
    return {std::max(s1, 1e-300), std::max(s2, 1e-300)};
}

int jacobian_rank(const QuadricPair& qp, const ProjectivePoint3& p, const ToleranceConfig& cfg) {
    const auto& t = p.coords;
    const Complex l1 = qp.lambda1, l2p = qp.lambda2_prime;
    std::array<Complex, 4> r1 = {
        (t[3] - t[1]) + l1 * (t[2] - t[3]),
        (t[2] - t[0]) + l1 * (t[3] - t[2]),
        (t[1] - t[3]) + l1 * (t[0] - t[1]),
        (t[0] - t[2]) + l1 * (t[1] - t[0]),
    };
    std::array<Complex, 4> r2 = {
        (t[1] + t[3]) - l2p * (t[2] + t[3]),
        (t[0] + t[2]) - l2p * (t[2] + t[3]),
        (t[1] + t[3]) - l2p * (t[0] + t[1]),
        (t[0] + t[2]) - l2p * (t[1] + t[0]),
    };
    double coord_scale = 0.0;
    for (const Complex& x : t) coord_scale = std::max(coord_scale, std::abs(x));
    double entry_scale = 0.0;
    for (int i = 0; i < 4; ++i) {
        entry_scale = std::max({entry_scale, std::abs(r1[i]), std::abs(r2[i])});
    }
    double entry_floor = std::max(
        cfg.abs_tol, kRankRelTol * (1.0 + std::abs(l1) + std::abs(l2p)) * (1.0 + coord_scale));
    if (entry_scale <= entry_floor) return 0;

    double minor_max = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int k = i + 1; k < 4; ++k) {
            minor_max = std::max(minor_max, std::abs(r1[i] * r2[k] - r1[k] * r2[i]));
        }
    }
    double minor_floor = std::max(cfg.abs_tol, kRankRelTol * entry_scale * entry_scale);
    return minor_max <= minor_floor ? 1 : 2;
}

std::vector<FiberSolution> solve_fiber(Complex l1, Complex l2, Complex t1,
                                       const ToleranceConfig& cfg, SolveDiagnostics* diag) {
    QuadricPair qp = make_quadric_pair(l1, l2, cfg);
    if (!is_finite(t1) || approx_eq(t1, Complex{}, cfg) || approx_eq(t1, kOne, cfg)) {
        throw Error(ErrorCode::ExcludedValue, "solve_fiber: t1 must avoid {0, 1}");
    }
    const Complex l2p = qp.lambda2_prime;

    // t3 = (a1 t2 + b1) / (g1 t2 + d1) from the first equation, and
    // t3 = (a2 t2 + b2) / (g2 t2 + d2) from the second.
    const Complex a1 = t1 - l1, b1 = t1 * (l1 - kOne), g1 = kOne - l1, d1 = l1 * t1 - kOne;
    const Complex a2 = l2p - t1, b2 = t1 * (l2p - kOne), g2 = kOne - l2p, d2 = kOne - l2p * t1;

    const Complex A = a1 * g2 - a2 * g1;
    const Complex B = a1 * d2 + b1 * g2 - a2 * d1 - b2 * g1;
    const Complex C = b1 * d2 - b2 * d1;
    double coeff_scale = (std::abs(a1) + std::abs(b1) + std::abs(g1) + std::abs(d1)) *
                         (std::abs(a2) + std::abs(b2) + std::abs(g2) + std::abs(d2));
    if (std::abs(A) <= 1e-14 * coeff_scale && std::abs(B) <= 1e-14 * coeff_scale &&
        std::abs(C) <= 1e-14 * coeff_scale) {
        throw Error(ErrorCode::DegenerateElimination,
                    "fiber elimination degenerated to the zero polynomial");
    }

    QuadraticRoots roots;
    try {
        roots = solve_quadratic(A, B, C);
    } catch (const Error&) {
        throw Error(ErrorCode::DegenerateElimination,
                    "fiber elimination degenerated to the zero polynomial");
    }
    if (roots.repeated && roots.roots.size() == 2) {
        roots.roots.pop_back();  // a tangency point counts once
    }

    std::vector<FiberSolution> out;
    if (diag != nullptr) diag->candidate_roots = static_cast<int>(roots.roots.size());
    auto reject = [&](const std::string& why) {
        if (diag != nullptr) diag->rejections.push_back(why);
    };
    for (Complex t2 : roots.roots) {
        // back-substitute through whichever fractional-linear form is defined
        Complex den = g1 * t2 + d1;
        Complex num = a1 * t2 + b1;
        if (std::abs(den) <= cfg.abs_tol * (std::abs(g1 * t2) + std::abs(d1) + 1.0)) {
            den = g2 * t2 + d2;
            num = a2 * t2 + b2;
            if (std::abs(den) <= cfg.abs_tol * (std::abs(g2 * t2) + std::abs(d2) + 1.0)) {
                reject("back-substitution denominators vanished");
                continue;
            }
        }
        Complex t3 = num / den;
        // spurious-root filter on the original rational equations
        Complex e1d = (t2 - t1) * (t3 - kOne);
        Complex e2d = (t2 + t1) * (t3 + kOne);
        if (std::abs(e1d) <= cfg.abs_tol || std::abs(e2d) <= cfg.abs_tol) {
            reject("rational-form denominator vanished");
            continue;
        }
        Complex res1 = (t2 - kOne) * (t3 - t1) / e1d - l1;
        Complex res2 = (t2 + kOne) * (t3 + t1) / e2d - l2p;
        double rtol = kResidualRelTol * (1.0 + std::abs(l1) + std::abs(l2p));
        if (std::abs(res1) > rtol || std::abs(res2) > rtol) {
            reject("residual check failed on the rational equations");
            continue;
        }
        try {
            (void)validate(t1, t2, t3, cfg);
        } catch (const Error& e) {
            reject(std::string("inadmissible triple: ") + to_string(e.code()));
            continue;
        }
        out.push_back(FiberSolution{t2, t3});
    }
    if (out.empty()) {
        throw Error(ErrorCode::NoAdmissibleSolution,
                    "no admissible fiber solution over the given t1");
    }
    return out;
}

namespace {
FiberSample sample_impl(Complex l1, Complex l2, std::size_t n, std::uint64_t seed,
                        const ToleranceConfig& cfg) {
    FiberSample sample;
    sample.lambda = canonical_invariant(l1, l2, cfg);
    QuadricPair qp = make_quadric_pair(l1, l2, cfg);
    SeededRng rng(seed);
    std::size_t draws = 0;
    const std::size_t max_draws = 100 * std::max<std::size_t>(n, 1);
    while (sample.points.size() < n && draws < max_draws) {
        ++draws;
        Complex t1 = rng.annulus(kSampleInnerRadius, kSampleOuterRadius);
        if (std::abs(t1 - kOne) < 10.0 * cfg.abs_tol || std::abs(t1 + kOne) < 10.0 * cfg.abs_tol) {
            continue;
        }
        std::vector<FiberSolution> sols;
        try {
            sols = solve_fiber(l1, l2, t1, cfg);
        } catch (const Error&) {
            continue;  // failed draw
        }
        for (const FiberSolution& s : sols) {
            if (sample.points.size() >= n) break;
            ModuliPoint p = validate(t1, s.t2, s.t3, cfg);
            ProjectivePoint3 pp{{t1, s.t2, s.t3, kOne}};
            auto [q1, q2] = eval_quadrics(qp, pp);
            auto [s1, s2] = quadric_scales(qp, pp);
            PointDiagnostics d;
            d.residual1 = std::abs(q1) / s1;
            d.residual2 = std::abs(q2) / s2;
            d.rank = jacobian_rank(qp, pp, cfg);
            sample.residual_max = std::max({sample.residual_max, d.residual1, d.residual2});
            sample.points.push_back(p);
            sample.ordered.push_back({t1, s.t2, s.t3});
            sample.diagnostics.push_back(d);
        }
    }
    if (sample.points.size() < n) {
        throw Error(ErrorCode::InsufficientYield, "sample_fiber: too few admissible points after " +
                                                      std::to_string(draws) + " draws");
    }
    return sample;
}
}  // namespace

FiberSample sample_fiber(Complex l1, Complex l2, std::size_t n, std::uint64_t seed,
                         const ToleranceConfig& cfg) {
    return sample_impl(l1, l2, n, seed, cfg);
}

bool is_exceptional(Complex l1, Complex l2, const ToleranceConfig& cfg) {
    FiberInvariant inv = canonical_invariant(l1, l2, cfg);
    const double half_sqrt3 = 0.86602540378443864676;
    const LambdaPair harmonic{Complex{-1.0, 0.0}, Complex{0.5, 0.0}};
    const LambdaPair equianharmonic{Complex{0.5, half_sqrt3}, Complex{0.5, -half_sqrt3}};
    // orbits partition the pairs, so orbit equality == membership
    for (const LambdaPair& member : inv.orbit) {
        if ((approx_eq(member.first, harmonic.first, cfg) &&
             approx_eq(member.second, harmonic.second, cfg)) ||
            (approx_eq(member.first, equianharmonic.first, cfg) &&
             approx_eq(member.second, equianharmonic.second, cfg))) {
            return true;
        }
    }
    return false;
}

std::vector<GluedPoint> glued_points(Complex l1, Complex l2, std::size_t n, std::uint64_t seed,
                                     const ToleranceConfig& cfg) {
    FiberSample sample = sample_impl(l1, l2, n, seed, cfg);
    QuadricPair qp = make_quadric_pair(l1, l2, cfg);
    static const std::array<std::array<int, 3>, 5> kPerms = {{
        {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    std::vector<GluedPoint> out;
    for (std::size_t i = 0; i < sample.ordered.size(); ++i) {
        const auto& t = sample.ordered[i];
        for (const auto& perm : kPerms) {
            ProjectivePoint3 pp{{t[perm[0]], t[perm[1]], t[perm[2]], kOne}};
            auto [q1, q2] = eval_quadrics(qp, pp);
            auto [s1, s2] = quadric_scales(qp, pp);
            if (std::abs(q1) <= kResidualRelTol * s1 && std::abs(q2) <= kResidualRelTol * s2) {
                out.push_back(GluedPoint{sample.points[i], t, perm});
            }
        }
    }
    return out;
}

}  // namespace prym
