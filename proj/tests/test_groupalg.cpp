#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prym/groupalg.hpp"
#include "prym/rng.hpp"

using namespace prym;

namespace {
const D4Element kOne{0, 0};
const D4Element kSigma{0, 1};
const D4Element kJ{1, 0};

AlgebraElement unit(D4Element g) { return AlgebraElement::unit(g); }
}  // namespace

TEST_CASE("d4 presentation relations") {
    // sigma^4 = 1, j^2 = 1, sigma j = j sigma^3
    D4Element s4 = d4_mul(d4_mul(kSigma, kSigma), d4_mul(kSigma, kSigma));
    CHECK(s4 == kOne);
    CHECK(d4_mul(kJ, kJ) == kOne);
    CHECK(d4_mul(kSigma, kJ) == D4Element{1, 3});
}

TEST_CASE("d4 associativity (exhaustive over all 512 triples)") {
    auto elems = d4_elements();
    for (const auto& a : elems) {
        for (const auto& b : elems) {
            for (const auto& c : elems) {
                CHECK(d4_mul(d4_mul(a, b), c) == d4_mul(a, d4_mul(b, c)));
            }
        }
    }
}

TEST_CASE("multiply basics") {
    CHECK(multiply(unit(kSigma), unit(kJ)) == unit(D4Element{1, 3}));
    AlgebraElement e = idempotent_for({kJ});
    CHECK(multiply(e, e) == e);
    SeededRng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        AlgebraElement x;
        for (int i = 0; i < 8; ++i) {
            x.coeff({i / 4, i % 4}) = Rational(static_cast<int>(rng.uniform01() * 11) - 5, 3);
        }
        CHECK(multiply(AlgebraElement::one(), x) == x);
        CHECK(multiply(x, AlgebraElement::one()) == x);
    }
}

TEST_CASE("idempotent_for matches the subgroup averages") {
    AlgebraElement e_j = idempotent_for({kJ});
    CHECK(e_j.coeff(kOne) == Rational(1, 2));
    CHECK(e_j.coeff(kJ) == Rational(1, 2));

    AlgebraElement e = idempotent_for({D4Element{1, 1}, D4Element{0, 2}});
    CHECK(e.coeff(kOne) == Rational(1, 4));
    CHECK(e.coeff(D4Element{1, 1}) == Rational(1, 4));
    CHECK(e.coeff(D4Element{0, 2}) == Rational(1, 4));
    CHECK(e.coeff(D4Element{1, 3}) == Rational(1, 4));
    CHECK(e.coeff(kJ) == Rational(0));

    AlgebraElement e_s = idempotent_for({kSigma});
    for (int k = 0; k < 4; ++k) CHECK(e_s.coeff(D4Element{0, k}) == Rational(1, 4));
    for (int k = 0; k < 4; ++k) CHECK(e_s.coeff(D4Element{1, k}) == Rational(0));
}

TEST_CASE("idempotent_for always returns an idempotent") {
    auto elems = d4_elements();
    for (const auto& a : elems) {
        for (const auto& b : elems) {
            AlgebraElement e = idempotent_for({a, b});
            CHECK(multiply(e, e) == e);
        }
    }
}

TEST_CASE("relation ideal: generators, dimension, membership") {
    AlgebraElement r = unit(kOne) + unit(kJ) + unit(D4Element{0, 2}) + unit(D4Element{1, 2});
    CHECK(reduce(r).is_zero());
    // the second displayed relation equals sigma * r
    AlgebraElement second = multiply(unit(kSigma), r);
    CHECK(second.coeff(kSigma) == Rational(1));
    CHECK(second.coeff(D4Element{0, 3}) == Rational(1));
    CHECK(second.coeff(D4Element{1, 1}) == Rational(1));
    CHECK(second.coeff(D4Element{1, 3}) == Rational(1));
    CHECK(reduce(second).is_zero());
    // the row-reduction oracle over the 64 products gives a 2-dimensional
    // two-sided ideal: r averages the normal subgroup <sigma^2, j>, so it is
    // central and the span is {r, sigma r}
    CHECK(relation_ideal().size() == 2);
    // identity is not in the ideal
    CHECK(reduce(AlgebraElement::one()) == AlgebraElement::one());
}

TEST_CASE("reduce absorbs ideal multiples") {
    AlgebraElement r = unit(kOne) + unit(kJ) + unit(D4Element{0, 2}) + unit(D4Element{1, 2});
    SeededRng rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        AlgebraElement x, y;
        for (int i = 0; i < 8; ++i) {
            x.coeff({i / 4, i % 4}) = Rational(static_cast<int>(rng.uniform01() * 9) - 4);
            y.coeff({i / 4, i % 4}) = Rational(static_cast<int>(rng.uniform01() * 9) - 4, 2);
        }
        CHECK(reduce(x + multiply(r, y)) == reduce(x));
        CHECK(reduce(x + multiply(y, r)) == reduce(x));
    }
}

TEST_CASE("ideal is two-sided: g b h reduces to zero exhaustively") {
    auto elems = d4_elements();
    for (const AlgebraElement& b : relation_ideal()) {
        for (const auto& g : elems) {
            for (const auto& h : elems) {
                CHECK(reduce(multiply(multiply(unit(g), b), unit(h))).is_zero());
            }
        }
    }
}

TEST_CASE("verify_decomposition passes every assertion") {
    Report r = verify_decomposition();
    CHECK(r.all_pass());
    CHECK(r.entries.size() == 7);
}
