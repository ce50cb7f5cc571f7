#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "prym/numerics.hpp"

namespace prym {

/// Point of the projective line, stored as the affine value or the tagged
/// point at infinity.
struct P1Point {
    Complex value{};
    bool infinite = false;

    static P1Point finite(Complex v) { return {v, false}; }
    static P1Point infinity() { return {{}, true}; }
};

bool p1_approx_eq(const P1Point& a, const P1Point& b, const ToleranceConfig& cfg = {});

/// An admissible unordered triple {t1,t2,t3}: entries avoid {0,1} and have
/// pairwise distinct squares. Stored sorted by complex_order.
struct ModuliPoint {
    std::array<Complex, 3> t{};
};

/// Validates membership and returns the canonical sorted point.
/// Throws ExcludedValue / SquareCollision.
ModuliPoint validate(Complex t1, Complex t2, Complex t3, const ToleranceConfig& cfg = {});

/// Canonical-sorted componentwise approx_eq.
bool moduli_eq(const ModuliPoint& a, const ModuliPoint& b, const ToleranceConfig& cfg = {});

struct SignVector {
    std::array<int, 3> s{+1, +1, +1};
};

/// Six Weierstrass points in the normalized frame, plus the sign choice
/// selecting one of the eight square roots of the cover bundle.
struct CoverDatum {
    std::array<P1Point, 4> w{};  // w1=[t1:1], w2=[t2:1], w3=[t3:1], w4=[1:1]
    P1Point u1;                  // [1:0]
    P1Point u2;                  // [0:1]
    SignVector signs;
};

CoverDatum cover_from_point(const ModuliPoint& p, const SignVector& s);

/// The eight sign vectors {+-1}^3, one per element of the square-root set Q.
std::array<SignVector, 8> q_set(const CoverDatum& c);

/// Two-torsion class of the genus-2 Jacobian: an even-cardinality subset of
/// the six Weierstrass indices modulo complementation. The canonical
/// representative has cardinality 0 or 2.
class TwoTorsionClass {
  public:
    TwoTorsionClass() = default;  // zero class

    std::uint8_t bits() const { return mask_; }
    bool is_zero() const { return mask_ == 0; }
    std::vector<int> indices() const;  // 1-based, sorted

    friend bool operator==(TwoTorsionClass a, TwoTorsionClass b) { return a.mask_ == b.mask_; }
    friend bool operator<(TwoTorsionClass a, TwoTorsionClass b) { return a.mask_ < b.mask_; }

    friend TwoTorsionClass tt_from_pair(int i, int j);
    friend TwoTorsionClass tt_add(TwoTorsionClass a, TwoTorsionClass b);

  private:
    explicit TwoTorsionClass(std::uint8_t raw);
    std::uint8_t mask_ = 0;  // canonical 6-bit subset mask
};

/// Class of {i,j}, 1 <= i,j <= 6, i != j.
TwoTorsionClass tt_from_pair(int i, int j);

/// Symmetric difference of index sets, reduced to the canonical representative.
TwoTorsionClass tt_add(TwoTorsionClass a, TwoTorsionClass b);

/// All 16 classes: the zero class plus the 15 pairs.
std::vector<TwoTorsionClass> tt_enumerate();

}  // namespace prym
