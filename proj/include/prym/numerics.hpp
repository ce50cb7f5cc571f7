#pragma once

#include <compare>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace prym {

using Complex = std::complex<double>;

enum class ErrorCode {
    ExcludedValue,
    SquareCollision,
    AllCoefficientsZero,
    IndexOutOfRange,
    EqualIndices,
    DegenerateQuadruple,
    ExcludedLambda,
    EqualLambdas,
    DegenerateDenominator,
    NoAdmissibleSolution,
    DegenerateElimination,
    InsufficientYield,
    NonIntegralPolarization,
    NotASublattice,
    DegenerateForm,
    ParseError,
};

const char* to_string(ErrorCode code);

/// Exception carrying a machine-readable code; the CLI maps it to
/// {"code":..., "message":...} with exit status 2 or 3.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

struct ToleranceConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
};

/// Reads PRYM_TOL ("abs" or "abs,rel") if set, otherwise returns `base`.
ToleranceConfig tolerance_from_env(ToleranceConfig base = {});

bool is_finite(Complex x);

/// |x-y| <= max(abs_tol, rel_tol * max(|x|,|y|))
bool approx_eq(Complex x, Complex y, const ToleranceConfig& cfg = {});

/// Lexicographic order by (re, im). Total and deterministic on finite values;
/// carries no mathematical meaning, used only for canonical representatives.
std::strong_ordering complex_order(Complex x, Complex y);
bool complex_less(Complex x, Complex y);

struct QuadraticRoots {
    std::vector<Complex> roots;  // 0, 1 or 2 entries
    bool repeated = false;       // both roots coincide (vanishing discriminant)
};

/// Roots of a z^2 + b z + c over C. Degenerates to the linear root -c/b when
/// a = 0, and to the empty set when only c is nonzero. Uses the
/// cancellation-free variant q = -(b + s*sqrt(b^2-4ac))/2, roots q/a and c/q,
/// with s chosen so that b and s*sqrt(...) do not cancel.
QuadraticRoots solve_quadratic(Complex a, Complex b, Complex c);

}  // namespace prym
