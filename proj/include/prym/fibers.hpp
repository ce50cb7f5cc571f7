#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prym/moduli.hpp"
#include "prym/numerics.hpp"
#include "prym/prym.hpp"

namespace prym {

/// Point of P^3, normalized so that the last nonzero coordinate (scanning
/// index 3 down to 0) equals 1.
struct ProjectivePoint3 {
    std::array<Complex, 4> coords{};
};

ProjectivePoint3 make_point3(const std::array<Complex, 4>& coords);

/// The quadric pencil data of a fiber:
///   q1 = (t2-t4)(t3-t1) - l1 (t2-t1)(t3-t4)
///   q2 = (t2+t4)(t3+t1) - (l2/l1) (t2+t1)(t3+t4)
struct QuadricPair {
    Complex lambda1{}, lambda2{};
    Complex lambda2_prime{};  // l2/l1, != 1 iff l1 != l2
};

QuadricPair make_quadric_pair(Complex l1, Complex l2, const ToleranceConfig& cfg = {});

/// Literal evaluation of (q1(p), q2(p)).
std::pair<Complex, Complex> eval_quadrics(const QuadricPair& qp, const ProjectivePoint3& p);

/// Scale of the two quadric monomial groups at p; residuals are compared
/// against it to get a relative smallness test.
std::pair<double, double> quadric_scales(const QuadricPair& qp, const ProjectivePoint3& p);

/// Numerical rank of the 2x4 Jacobian of (q1, q2) at p: 2 unless all six
/// 2x2 minors are small relative to the entry scale, 0 when the entries
/// themselves vanish at scale.
int jacobian_rank(const QuadricPair& qp, const ProjectivePoint3& p, const ToleranceConfig& cfg = {});

struct FiberSolution {
    Complex t2{}, t3{};
};

struct SolveDiagnostics {
    int candidate_roots = 0;
    std::vector<std::string> rejections;  // one reason per discarded root
};

/// Solves the fiber system for (t2, t3) given t1: both equations are solved
/// for t3 as a fractional-linear function of t2, equated, cleared into a
/// quadratic in t2. Cleared-form roots are re-checked against the original
/// rational equations, and each resulting triple must pass moduli validation.
std::vector<FiberSolution> solve_fiber(Complex l1, Complex l2, Complex t1,
                                       const ToleranceConfig& cfg = {},
                                       SolveDiagnostics* diag = nullptr);

struct PointDiagnostics {
    double residual1 = 0.0;  // |q1| / scale at [t1:t2:t3:1]
    double residual2 = 0.0;
    int rank = 0;
};

struct FiberSample {
    FiberInvariant lambda;
    std::vector<ModuliPoint> points;
    std::vector<std::array<Complex, 3>> ordered;  // solver-order triples (t1,t2,t3)
    std::vector<PointDiagnostics> diagnostics;
    double residual_max = 0.0;
};

/// Draws t1 from the annulus 0.2 <= |t1| <= 5 (rejecting proximity to the
/// excluded values), solves, and aggregates admissible points until n are
/// found. Deterministic for a fixed seed. Throws InsufficientYield after
/// 100*n draws.
FiberSample sample_fiber(Complex l1, Complex l2, std::size_t n, std::uint64_t seed,
                         const ToleranceConfig& cfg = {});

/// True iff (l1, l2) lies on the orbit of (-1, 1/2) or of
/// (e^{i pi/3}, e^{-i pi/3}).
bool is_exceptional(Complex l1, Complex l2, const ToleranceConfig& cfg = {});

struct GluedPoint {
    ModuliPoint point;
    std::array<Complex, 3> ordered{};
    std::array<int, 3> permutation{};  // 0-based image: ordered[perm[i]]
};

/// Among n sampled fiber points, reports those whose coordinates admit a
/// nontrivial reordering that also satisfies both quadric equations at t4=1.
std::vector<GluedPoint> glued_points(Complex l1, Complex l2, std::size_t n, std::uint64_t seed,
                                     const ToleranceConfig& cfg = {});

}  // namespace prym
