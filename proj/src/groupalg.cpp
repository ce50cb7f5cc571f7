#include "prym/groupalg.hpp"

#include <sstream>

namespace prym {

D4Element d4_mul(D4Element a, D4Element b) {
    // (j^f1 s^k1)(j^f2 s^k2) = j^(f1 xor f2) s^(k2 +- k1), sign flipped by f2
    int k = b.f ? (b.k - a.k) : (a.k + b.k);
    return D4Element{a.f ^ b.f, ((k % 4) + 4) % 4};
}

int d4_index(D4Element g) { return g.f * 4 + g.k; }

std::array<D4Element, 8> d4_elements() {
    std::array<D4Element, 8> out;
    for (int f = 0; f < 2; ++f) {
        for (int k = 0; k < 4; ++k) out[f * 4 + k] = D4Element{f, k};
    }
    return out;
}

std::string d4_name(D4Element g) {
    static const char* names[8] = {"1", "s", "s^2", "s^3", "j", "j*s", "j*s^2", "j*s^3"};
    return names[d4_index(g)];
}

AlgebraElement AlgebraElement::unit(D4Element g) {
    AlgebraElement e;
    e.c_[d4_index(g)] = 1;
    return e;
}

bool AlgebraElement::is_zero() const {
    for (const Rational& x : c_) {
        if (x != 0) return false;
    }
    return true;
}

std::string AlgebraElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto elems = d4_elements();
    for (const D4Element& g : elems) {
        const Rational& x = c_[d4_index(g)];
        if (x == 0) continue;
        if (!first) os << " + ";
        os << x << "*" << d4_name(g);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (int i = 0; i < 8; ++i) c_[i] += o.c_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (int i = 0; i < 8; ++i) c_[i] -= o.c_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
    for (int i = 0; i < 8; ++i) c_[i] *= s;
    return *this;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out;
    auto elems = d4_elements();
    for (const D4Element& g : elems) {
        const Rational& xg = x.coeff(g);
        if (xg == 0) continue;
        for (const D4Element& h : elems) {
            const Rational& yh = y.coeff(h);
            if (yh == 0) continue;
            out.coeff(d4_mul(g, h)) += xg * yh;
        }
    }
    return out;
}

AlgebraElement idempotent_for(const std::vector<D4Element>& generators) {
    std::vector<D4Element> group = {D4Element{0, 0}};
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < group.size(); ++i) {
            for (const D4Element& gen : generators) {
                D4Element prod = d4_mul(group[i], gen);
                bool seen = false;
                for (const D4Element& h : group) {
                    if (h == prod) {
                        seen = true;
                        break;
                    }
                }
                if (!seen) {
                    group.push_back(prod);
                    grew = true;
                }
            }
        }
    }
    AlgebraElement sum;
    for (const D4Element& g : group) sum += AlgebraElement::unit(g);
    sum *= Rational(1, static_cast<int>(group.size()));
    return sum;
}

namespace {
// Row reduction with pivots chosen from the highest monomial downward.
std::vector<AlgebraElement> rref_high_pivots(std::vector<AlgebraElement> rows) {
    std::vector<AlgebraElement> basis;
    for (int col = 7; col >= 0; --col) {
        D4Element mono{col / 4, col % 4};
        std::size_t found = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].coeff(mono) != 0) {
                found = i;
                break;
            }
        }
        if (found == rows.size()) continue;
        AlgebraElement pivot = rows[found];
        pivot *= Rational(1) / Rational(pivot.coeff(mono));
        for (AlgebraElement& r : rows) {
            if (r.coeff(mono) != 0) {
                AlgebraElement scaled = pivot;
                scaled *= r.coeff(mono);
                r -= scaled;
            }
        }
        for (AlgebraElement& b : basis) {
            if (b.coeff(mono) != 0) {
                AlgebraElement scaled = pivot;
                scaled *= b.coeff(mono);
                b -= scaled;
            }
        }
        basis.push_back(pivot);
    }
    return basis;
}
}  // namespace

const std::vector<AlgebraElement>& relation_ideal() {
    static const std::vector<AlgebraElement> basis = [] {
        AlgebraElement r = AlgebraElement::unit({0, 0}) + AlgebraElement::unit({1, 0}) +
                           AlgebraElement::unit({0, 2}) + AlgebraElement::unit({1, 2});
        std::vector<AlgebraElement> products;
        auto elems = d4_elements();
        for (const D4Element& g : elems) {
            for (const D4Element& h : elems) {
                products.push_back(
                    multiply(multiply(AlgebraElement::unit(g), r), AlgebraElement::unit(h)));
            }
        }
        return rref_high_pivots(std::move(products));
    }();
    return basis;
}

AlgebraElement reduce(const AlgebraElement& x) {
    AlgebraElement out = x;
    for (const AlgebraElement& b : relation_ideal()) {
        // each basis row has a unit leading coefficient on its pivot monomial
        int pivot = -1;
        for (int col = 7; col >= 0; --col) {
            if (b.coeff({col / 4, col % 4}) != 0) {
                pivot = col;
                break;
            }
        }
        D4Element mono{pivot / 4, pivot % 4};
        if (out.coeff(mono) != 0) {
            AlgebraElement scaled = b;
            scaled *= out.coeff(mono);
            out -= scaled;
        }
    }
    return out;
}

Report verify_decomposition() {
    Report report;
    AlgebraElement e_j = idempotent_for({D4Element{1, 0}});
    AlgebraElement e_js2 = idempotent_for({D4Element{1, 2}});
    AlgebraElement e_js_s2 = idempotent_for({D4Element{1, 1}, D4Element{0, 2}});
    AlgebraElement e_jc = idempotent_for({D4Element{0, 1}});

    auto check_idem = [&](const std::string& name, const AlgebraElement& e) {
        bool ok = multiply(e, e) == e;
        report.add("idempotent " + name, "e*e = e", ok ? "e*e = e" : "e*e != e", ok);
    };
    check_idem("eps_Ej", e_j);
    check_idem("eps_Ejs2", e_js2);
    check_idem("eps_Ejs_s2", e_js_s2);

    AlgebraElement total = e_j + e_js2 + e_js_s2;
    AlgebraElement target = AlgebraElement::one() - e_jc;
    bool sum_ok = reduce(total - target).is_zero();
    report.add("sum of idempotents", "1 - eps_JCs (mod ideal)",
               sum_ok ? "1 - eps_JCs (mod ideal)" : reduce(total - target).to_string(), sum_ok);

    auto check_orth = [&](const std::string& name, const AlgebraElement& a, const AlgebraElement& b) {
        AlgebraElement red = reduce(multiply(a, b));
        report.add("orthogonality " + name, "0 (mod ideal)",
                   red.is_zero() ? "0 (mod ideal)" : red.to_string(), red.is_zero());
    };
    check_orth("eps_Ej * eps_Ejs2", e_j, e_js2);
    check_orth("eps_Ej * eps_Ejs_s2", e_j, e_js_s2);
    check_orth("eps_Ejs2 * eps_Ejs_s2", e_js2, e_js_s2);
    return report;
}

}  // namespace prym
