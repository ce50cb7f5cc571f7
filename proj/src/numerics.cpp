#include "prym/numerics.hpp"

#include <cmath>
#include <cstdlib>

namespace prym {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ExcludedValue: return "ExcludedValue";
        case ErrorCode::SquareCollision: return "SquareCollision";
        case ErrorCode::AllCoefficientsZero: return "AllCoefficientsZero";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::EqualIndices: return "EqualIndices";
        case ErrorCode::DegenerateQuadruple: return "DegenerateQuadruple";
        case ErrorCode::ExcludedLambda: return "ExcludedLambda";
        case ErrorCode::EqualLambdas: return "EqualLambdas";
        case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorCode::NoAdmissibleSolution: return "NoAdmissibleSolution";
        case ErrorCode::DegenerateElimination: return "DegenerateElimination";
        case ErrorCode::InsufficientYield: return "InsufficientYield";
        case ErrorCode::NonIntegralPolarization: return "NonIntegralPolarization";
        case ErrorCode::NotASublattice: return "NotASublattice";
        case ErrorCode::DegenerateForm: return "DegenerateForm";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

ToleranceConfig tolerance_from_env(ToleranceConfig base) {
    const char* raw = std::getenv("PRYM_TOL");
    if (raw == nullptr || *raw == '\0') return base;
    char* end = nullptr;
    double abs_tol = std::strtod(raw, &end);
    if (end == raw || !(abs_tol > 0.0)) {
        throw Error(ErrorCode::ParseError, "PRYM_TOL must be \"abs\" or \"abs,rel\" with positive values");
    }
    ToleranceConfig cfg = base;
    cfg.abs_tol = abs_tol;
    if (*end == ',') {
        const char* rest = end + 1;
        double rel_tol = std::strtod(rest, &end);
        if (end == rest || !(rel_tol > 0.0)) {
            throw Error(ErrorCode::ParseError, "PRYM_TOL must be \"abs\" or \"abs,rel\" with positive values");
        }
        cfg.rel_tol = rel_tol;
    }
    return cfg;
}

bool is_finite(Complex x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
}

bool approx_eq(Complex x, Complex y, const ToleranceConfig& cfg) {
    double diff = std::abs(x - y);
    double scale = std::max(std::abs(x), std::abs(y));
    return diff <= std::max(cfg.abs_tol, cfg.rel_tol * scale);
}

std::strong_ordering complex_order(Complex x, Complex y) {
    if (x.real() < y.real()) return std::strong_ordering::less;
    if (x.real() > y.real()) return std::strong_ordering::greater;
    if (x.imag() < y.imag()) return std::strong_ordering::less;
    if (x.imag() > y.imag()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool complex_less(Complex x, Complex y) {
    return complex_order(x, y) == std::strong_ordering::less;
}

QuadraticRoots solve_quadratic(Complex a, Complex b, Complex c) {
    QuadraticRoots out;
    if (a == Complex{} && b == Complex{} && c == Complex{}) {
        throw Error(ErrorCode::AllCoefficientsZero, "solve_quadratic: a = b = c = 0");
    }
    if (a == Complex{}) {
        if (b == Complex{}) return out;  // c != 0: no roots
        out.roots.push_back(-c / b);
        return out;
    }
    if (c == Complex{}) {
        // roots 0 and -b/a; avoids the c/q division entirely
        out.roots.push_back(Complex{});
        if (b == Complex{}) {
            out.roots.push_back(Complex{});
            out.repeated = true;
        } else {
            out.roots.push_back(-b / a);
        }
        return out;
    }
    Complex disc = b * b - 4.0 * a * c;
    Complex s = std::sqrt(disc);
    // align s with b so that b + s does not cancel
    if ((std::conj(b) * s).real() < 0.0) s = -s;
    Complex q = -(b + s) * 0.5;
    // q = 0 would force s = -b, i.e. disc = b^2, i.e. a*c = 0 -- excluded above
    out.roots.push_back(q / a);
    out.roots.push_back(c / q);
    double scale = std::abs(b * b) + 4.0 * std::abs(a) * std::abs(c);
    out.repeated = std::abs(disc) <= 1e-14 * scale;
    return out;
}

}  // namespace prym
