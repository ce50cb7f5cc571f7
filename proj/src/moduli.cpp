#include "prym/moduli.hpp"

#include <algorithm>
#include <bit>

namespace prym {

bool p1_approx_eq(const P1Point& a, const P1Point& b, const ToleranceConfig& cfg) {
    if (a.infinite || b.infinite) return a.infinite && b.infinite;
    return approx_eq(a.value, b.value, cfg);
}

ModuliPoint validate(Complex t1, Complex t2, Complex t3, const ToleranceConfig& cfg) {
    std::array<Complex, 3> t{t1, t2, t3};
    for (Complex x : t) {
        if (!is_finite(x)) {
            throw Error(ErrorCode::ExcludedValue, "moduli point entries must be finite");
        }
        if (approx_eq(x, Complex{0.0, 0.0}, cfg) || approx_eq(x, Complex{1.0, 0.0}, cfg)) {
            throw Error(ErrorCode::ExcludedValue, "moduli point entries must avoid {0, 1}");
        }
    }
    for (int i = 0; i < 3; ++i) {
        for (int k = i + 1; k < 3; ++k) {
            if (approx_eq(t[i] * t[i], t[k] * t[k], cfg)) {
                throw Error(ErrorCode::SquareCollision, "moduli point entries must have distinct squares");
            }
        }
    }
    std::sort(t.begin(), t.end(), complex_less);
    return ModuliPoint{t};
}

bool moduli_eq(const ModuliPoint& a, const ModuliPoint& b, const ToleranceConfig& cfg) {
    for (int i = 0; i < 3; ++i) {
        if (!approx_eq(a.t[i], b.t[i], cfg)) return false;
    }
    return true;
}

CoverDatum cover_from_point(const ModuliPoint& p, const SignVector& s) {
    CoverDatum d;
    d.w = {P1Point::finite(p.t[0]), P1Point::finite(p.t[1]), P1Point::finite(p.t[2]),
           P1Point::finite(Complex{1.0, 0.0})};
    d.u1 = P1Point::infinity();          // [1:0]
    d.u2 = P1Point::finite(Complex{});   // [0:1]
    d.signs = s;
    return d;
}

std::array<SignVector, 8> q_set(const CoverDatum&) {
    std::array<SignVector, 8> out;
    for (int m = 0; m < 8; ++m) {
        out[m].s = {(m & 1) ? -1 : +1, (m & 2) ? -1 : +1, (m & 4) ? -1 : +1};
    }
    return out;
}

namespace {
constexpr std::uint8_t kFullMask = 0x3f;  // all six indices

std::uint8_t canonical_mask(std::uint8_t raw) {
    std::uint8_t comp = static_cast<std::uint8_t>(~raw & kFullMask);
    return std::popcount(raw) <= std::popcount(comp) ? raw : comp;
}
}  // namespace

TwoTorsionClass::TwoTorsionClass(std::uint8_t raw) : mask_(canonical_mask(raw)) {}

std::vector<int> TwoTorsionClass::indices() const {
    std::vector<int> out;
    for (int i = 0; i < 6; ++i) {
        if (mask_ & (1u << i)) out.push_back(i + 1);
    }
    return out;
}

TwoTorsionClass tt_from_pair(int i, int j) {
    if (i < 1 || i > 6 || j < 1 || j > 6) {
        throw Error(ErrorCode::IndexOutOfRange, "two-torsion indices must lie in 1..6");
    }
    if (i == j) {
        throw Error(ErrorCode::EqualIndices, "two-torsion class needs two distinct Weierstrass points");
    }
    return TwoTorsionClass(static_cast<std::uint8_t>((1u << (i - 1)) | (1u << (j - 1))));
}

TwoTorsionClass tt_add(TwoTorsionClass a, TwoTorsionClass b) {
    return TwoTorsionClass(static_cast<std::uint8_t>(a.mask_ ^ b.mask_));
}

std::vector<TwoTorsionClass> tt_enumerate() {
    std::vector<TwoTorsionClass> out;
    out.push_back(TwoTorsionClass{});
    for (int i = 1; i <= 6; ++i) {
        for (int j = i + 1; j <= 6; ++j) out.push_back(tt_from_pair(i, j));
    }
    return out;
}

}  // namespace prym
