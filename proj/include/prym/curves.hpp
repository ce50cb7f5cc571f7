#pragma once

#include <array>

#include "prym/moduli.hpp"
#include "prym/numerics.hpp"

namespace prym {

/// Four ordered, pairwise distinct branch points on the projective line.
/// Represents an elliptic curve y^2 = prod (x - p_i) with marked 2-torsion
/// given by the ordering.
struct BranchQuartic {
    std::array<P1Point, 4> points{};
};

BranchQuartic make_quartic(const std::array<P1Point, 4>& points, const ToleranceConfig& cfg = {});

/// Branch loci of the cover tower for one sign choice:
///   c_sigma2 : +-1, +-t1, +-t2, +-t3     (genus-3 hyperelliptic curve)
///   h        : 0, 1, t1^2, t2^2, t3^2, oo (the genus-2 base)
///   e_s2_js  : 1, t1^2, t2^2, t3^2
///   e_j      : 1, s1 t1, s2 t2, s3 t3
///   e_js2    : -1, -s1 t1, -s2 t2, -s3 t3
struct CurveSystem {
    std::array<P1Point, 8> c_sigma2{};
    std::array<P1Point, 6> h{};
    BranchQuartic e_s2_js;
    BranchQuartic e_j;
    BranchQuartic e_js2;
};

CurveSystem curve_system(const ModuliPoint& p, const SignVector& s);

/// cr(a,b,c,d) = ((c-a)(d-b)) / ((c-b)(d-a)), with infinity handled by the
/// limit. Chosen so that cr(1, t1, t2, t3) = (t2-1)(t3-t1)/((t2-t1)(t3-1)).
Complex cross_ratio(const P1Point& a, const P1Point& b, const P1Point& c, const P1Point& d,
                    const ToleranceConfig& cfg = {});

/// j = 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)
Complex j_from_lambda(Complex lambda, const ToleranceConfig& cfg = {});

Complex j_invariant(const BranchQuartic& q, const ToleranceConfig& cfg = {});

/// True iff a Moebius map carries a onto b preserving the marked ordering,
/// i.e. the cross-ratios agree under the same ordering.
bool marked_iso_exists(const BranchQuartic& a, const BranchQuartic& b, const ToleranceConfig& cfg = {});

}  // namespace prym
