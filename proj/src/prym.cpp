#include "prym/prym.hpp"

#include <algorithm>

#include "prym/curves.hpp"

namespace prym {

namespace {
const Complex kOne{1.0, 0.0};

bool pair_approx_eq(const LambdaPair& a, const LambdaPair& b, const ToleranceConfig& cfg) {
    return approx_eq(a.first, b.first, cfg) && approx_eq(a.second, b.second, cfg);
}

bool pair_less(const LambdaPair& a, const LambdaPair& b) {
    auto c = complex_order(a.first, b.first);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return complex_less(a.second, b.second);
}

void check_lambda_domain(Complex l, const ToleranceConfig& cfg) {
    if (!is_finite(l) || approx_eq(l, Complex{}, cfg) || approx_eq(l, kOne, cfg)) {
        throw Error(ErrorCode::ExcludedLambda, "lambda must be finite and avoid {0, 1}");
    }
}
}  // namespace

LambdaPair lambda_pair(Complex t1, Complex t2, Complex t3, const ToleranceConfig& cfg) {
    Complex d1 = (t2 - t1) * (t3 - kOne);
    Complex s1 = t1 * t1, s2 = t2 * t2, s3 = t3 * t3;
    Complex d2 = (s2 - s1) * (s3 - kOne);
    double scale1 = std::abs(t2 - t1) + std::abs(t3 - kOne) + 1.0;
    double scale2 = std::abs(s2 - s1) + std::abs(s3 - kOne) + 1.0;
    if (std::abs(d1) <= cfg.abs_tol * scale1 || std::abs(d2) <= cfg.abs_tol * scale2) {
        throw Error(ErrorCode::DegenerateDenominator,
                    "lambda_pair: vanishing denominator, input is not a valid moduli point");
    }
    Complex l1 = (t2 - kOne) * (t3 - t1) / d1;
    Complex l2 = (s2 - kOne) * (s3 - s1) / d2;
    return {l1, l2};
}

std::vector<LambdaPair> s3_orbit(Complex l1, Complex l2, const ToleranceConfig& cfg) {
    check_lambda_domain(l1, cfg);
    check_lambda_domain(l2, cfg);
    auto apply = [](int m, Complex l) -> Complex {
        switch (m) {
            case 0: return l;
            case 1: return kOne / l;
            case 2: return kOne / (kOne - l);
            case 3: return kOne - l;
            case 4: return l / (l - kOne);
            default: return (l - kOne) / l;
        }
    };
    std::vector<LambdaPair> orbit;
    for (int m = 0; m < 6; ++m) {
        LambdaPair cand{apply(m, l1), apply(m, l2)};
        bool dup = false;
        for (const auto& seen : orbit) {
            if (pair_approx_eq(seen, cand, cfg)) {
                dup = true;
                break;
            }
        }
        if (!dup) orbit.push_back(cand);
    }
    return orbit;
}

FiberInvariant canonical_invariant(Complex l1, Complex l2, const ToleranceConfig& cfg) {
    check_lambda_domain(l1, cfg);
    check_lambda_domain(l2, cfg);
    if (approx_eq(l1, l2, cfg)) {
        throw Error(ErrorCode::EqualLambdas,
                    "equal fiber cross-ratios cannot arise from a valid moduli point");
    }
    FiberInvariant inv;
    inv.lambda1 = l1;
    inv.lambda2 = l2;
    inv.orbit = s3_orbit(l1, l2, cfg);
    inv.canonical = *std::min_element(inv.orbit.begin(), inv.orbit.end(), pair_less);
    return inv;
}

bool lambdas_distinct(const ModuliPoint& p, const ToleranceConfig& cfg) {
    auto [l1, l2] = lambda_pair(p.t[0], p.t[1], p.t[2], cfg);
    return !approx_eq(l1, l2, cfg);
}

bool same_fiber(const ModuliPoint& p, const ModuliPoint& q, const ToleranceConfig& cfg) {
    auto lp = lambda_pair(p.t[0], p.t[1], p.t[2], cfg);
    auto lq = lambda_pair(q.t[0], q.t[1], q.t[2], cfg);
    auto cp = canonical_invariant(lp.first, lp.second, cfg).canonical;
    auto cq = canonical_invariant(lq.first, lq.second, cfg).canonical;
    return pair_approx_eq(cp, cq, cfg);
}

PrymDescriptor prym_descriptor(const ModuliPoint& p, const ToleranceConfig& cfg) {
    auto [l1, l2] = lambda_pair(p.t[0], p.t[1], p.t[2], cfg);
    PrymDescriptor d;
    d.invariant = canonical_invariant(l1, l2, cfg);
    // j is constant on the orbit, so any member works; the canonical one keeps
    // the descriptor independent of the triple's ordering.
    d.j_e = j_from_lambda(d.invariant.canonical.first, cfg);
    d.j_f = j_from_lambda(d.invariant.canonical.second, cfg);
    return d;
}

}  // namespace prym
