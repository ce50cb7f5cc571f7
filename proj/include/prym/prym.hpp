#pragma once

#include <string>
#include <utility>
#include <vector>

#include "prym/moduli.hpp"
#include "prym/numerics.hpp"

namespace prym {

using LambdaPair = std::pair<Complex, Complex>;

/// The two fiber cross-ratios of an ordered triple:
///   l1 = (t2-1)(t3-t1) / ((t2-t1)(t3-1))
///   l2 = (t2^2-1)(t3^2-t1^2) / ((t2^2-t1^2)(t3^2-1))
LambdaPair lambda_pair(Complex t1, Complex t2, Complex t3, const ToleranceConfig& cfg = {});

/// Applies the six cross-ratio transformations
///   l, 1/l, 1/(1-l), 1-l, l/(l-1), (l-1)/l
/// simultaneously to both coordinates, deduplicating within tolerance.
/// The result has 6 entries except on the orbit of the equianharmonic pair.
std::vector<LambdaPair> s3_orbit(Complex l1, Complex l2, const ToleranceConfig& cfg = {});

/// Fiber label: the pair, its diagonal orbit, and the lexicographic minimum
/// of the orbit under complex_order on (l1, then l2).
struct FiberInvariant {
    Complex lambda1{}, lambda2{};
    std::vector<LambdaPair> orbit;
    LambdaPair canonical{};
};

FiberInvariant canonical_invariant(Complex l1, Complex l2, const ToleranceConfig& cfg = {});

/// Always true on valid moduli points; exposed as a checkable predicate.
bool lambdas_distinct(const ModuliPoint& p, const ToleranceConfig& cfg = {});

/// Two points lie on the same fiber iff their canonical invariants agree.
bool same_fiber(const ModuliPoint& p, const ModuliPoint& q, const ToleranceConfig& cfg = {});

/// Finite descriptor of the Prym image: j-invariants of the two elliptic
/// curves E (branch points 1,t1,t2,t3) and F (their squares), plus the
/// canonical fiber invariant.
struct PrymDescriptor {
    Complex j_e{}, j_f{};
    FiberInvariant invariant;
    std::string kernel_note = "<e1+e1+f1, e2+e2+f2>";
};

PrymDescriptor prym_descriptor(const ModuliPoint& p, const ToleranceConfig& cfg = {});

}  // namespace prym
