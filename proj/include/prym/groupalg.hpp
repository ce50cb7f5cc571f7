#pragma once

#include <array>
#include <string>
#include <vector>

#include "prym/rational.hpp"
#include "prym/report.hpp"

namespace prym {

/// Element j^f sigma^k of the dihedral group of order 8, presentation
/// sigma^4 = j^2 = 1, sigma j = j sigma^3. Canonical form (f, k).
struct D4Element {
    int f = 0;  // j-flag, 0 or 1
    int k = 0;  // sigma exponent, 0..3

    friend bool operator==(const D4Element&, const D4Element&) = default;
};

D4Element d4_mul(D4Element a, D4Element b);
int d4_index(D4Element g);  // f * 4 + k, the fixed monomial order
std::array<D4Element, 8> d4_elements();
std::string d4_name(D4Element g);

/// Exact rational element of the group algebra Q[D4].
class AlgebraElement {
  public:
    AlgebraElement() = default;
    static AlgebraElement unit(D4Element g);
    static AlgebraElement zero() { return {}; }
    static AlgebraElement one() { return unit({0, 0}); }

    const Rational& coeff(D4Element g) const { return c_[d4_index(g)]; }
    Rational& coeff(D4Element g) { return c_[d4_index(g)]; }
    const std::array<Rational, 8>& coeffs() const { return c_; }

    bool is_zero() const;
    std::string to_string() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const Rational& s);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  private:
    std::array<Rational, 8> c_{};
};

/// Bilinear extension of the group multiplication.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

/// (1/|G|) sum over the subgroup generated by the given elements.
AlgebraElement idempotent_for(const std::vector<D4Element>& generators);

/// Row-reduced basis of the two-sided ideal generated by
/// r = 1 + j + sigma^2 + j sigma^2 (the genus-0 quotient relations), computed
/// by closing {g r h} under span. Pivots sit on the highest monomials in the
/// (j-flag, sigma-exponent) order, so reduce(1) = 1.
const std::vector<AlgebraElement>& relation_ideal();

/// Canonical representative modulo the relation ideal.
AlgebraElement reduce(const AlgebraElement& x);

/// Checks, modulo the relation ideal, that the three isotypical idempotents
/// are idempotent, pairwise orthogonal, and sum to 1 - eps_{JC_sigma}.
Report verify_decomposition();

}  // namespace prym
