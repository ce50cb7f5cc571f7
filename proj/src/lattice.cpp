#include "prym/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace prym {

namespace {

RMat canonical_basis(const RMat& generators, std::size_t dim) {
    RMat gens = generators;
    for (const RVec& v : gens) {
        if (v.size() != dim) {
            throw Error(ErrorCode::NotASublattice, "generator dimension mismatch");
        }
    }
    Int den = common_denominator(gens);
    IMat scaled(gens.size(), IVec(dim, Int(0)));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            Rational x = gens[i][j] * Rational(den);
            scaled[i][j] = to_integer(x);
        }
    }
    IMat h = hnf_rows(std::move(scaled));
    RMat basis(h.size(), RVec(dim, Rational(0)));
    for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = 0; j < dim; ++j) basis[i][j] = Rational(h[i][j], den);
    }
    return basis;
}

RMat form_as_rmat(const IMat& form) {
    RMat f(form.size(), RVec(form.size(), Rational(0)));
    for (std::size_t i = 0; i < form.size(); ++i) {
        for (std::size_t j = 0; j < form.size(); ++j) f[i][j] = Rational(form[i][j]);
    }
    return f;
}

std::string chain_string(const std::vector<Int>& xs) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ",";
        os << xs[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

std::string to_string(const InvariantFactors& f) { return chain_string(f.factors); }

std::string to_string(const FiniteGroupDescriptor& g) {
    return g.factors.empty() ? "trivial" : chain_string(g.factors);
}

PolarizedLattice make_lattice(RMat basis, IMat form) {
    std::size_t dim = form.size();
    for (const auto& row : form) {
        if (row.size() != dim) throw Error(ErrorCode::DegenerateForm, "form matrix must be square");
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (form[i][j] != -form[j][i]) {
                throw Error(ErrorCode::DegenerateForm, "form matrix must be alternating");
            }
        }
    }
    RMat canon = canonical_basis(basis, dim);
    if (canon.size() != basis.size()) {
        throw Error(ErrorCode::DegenerateForm, "basis vectors must be linearly independent");
    }
    PolarizedLattice L{std::move(canon), std::move(form)};
    IMat g = gram_matrix(L);  // throws NonIntegralPolarization
    if (bareiss_determinant(g) == 0) {
        throw Error(ErrorCode::DegenerateForm, "form degenerates on the lattice");
    }
    return L;
}

PolarizedLattice product_lattice(const std::vector<Int>& types) {
    if (types.empty()) throw Error(ErrorCode::DegenerateForm, "product lattice needs at least one factor");
    for (const Int& d : types) {
        if (d < 1) throw Error(ErrorCode::DegenerateForm, "polarization types must be positive");
    }
    std::size_t g = types.size();
    std::size_t dim = 2 * g;
    IMat form(dim, IVec(dim, Int(0)));
    for (std::size_t i = 0; i < g; ++i) {
        form[2 * i][2 * i + 1] = types[i];
        form[2 * i + 1][2 * i] = -types[i];
    }
    return make_lattice(rmat_identity(dim), std::move(form));
}

PolarizedLattice enlarge(const PolarizedLattice& L, const RMat& vs) {
    RMat gens = L.basis;
    gens.insert(gens.end(), vs.begin(), vs.end());
    RMat canon = canonical_basis(gens, L.dim());
    if (canon.size() != L.rank()) {
        throw Error(ErrorCode::NotASublattice, "enlargement vector leaves the lattice span");
    }
    PolarizedLattice out{std::move(canon), L.form};
    (void)gram_matrix(out);  // NonIntegralPolarization when the form does not descend
    return out;
}

IMat gram_matrix(const PolarizedLattice& L) {
    RMat g = rmat_mul(rmat_mul(L.basis, form_as_rmat(L.form)), rmat_transpose(L.basis));
    IMat out(g.size(), IVec(g.size(), Int(0)));
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (!is_integer(g[i][j])) {
                throw Error(ErrorCode::NonIntegralPolarization,
                            "polarization form is non-integral on the lattice");
            }
            out[i][j] = to_integer(g[i][j]);
        }
    }
    return out;
}

Int gram_determinant(const PolarizedLattice& L) { return bareiss_determinant(gram_matrix(L)); }

InvariantFactors polarization_type(const PolarizedLattice& L) {
    IVec div = smith_divisors(gram_matrix(L));
    std::size_t r = L.rank();
    if (r % 2 != 0) throw Error(ErrorCode::DegenerateForm, "odd-rank polarized lattice");
    for (const Int& d : div) {
        if (d == 0) throw Error(ErrorCode::DegenerateForm, "form degenerates on the lattice");
    }
    InvariantFactors out;
    for (std::size_t i = 0; i < r; i += 2) {
        if (div[i] != div[i + 1]) {
            throw Error(ErrorCode::DegenerateForm, "alternating divisors failed to pair up");
        }
        out.factors.push_back(div[i]);
    }
    return out;
}

namespace {
FiniteGroupDescriptor group_from_coordinate_matrix(const IMat& coords) {
    IVec div = smith_divisors(coords);
    FiniteGroupDescriptor out;
    for (const Int& d : div) {
        if (d == 0) throw Error(ErrorCode::NotASublattice, "sublattice has smaller rank");
        if (d > 1) out.factors.push_back(d);
    }
    return out;
}

IMat integral_coordinates(const RMat& sub, const RMat& super) {
    IMat coords(sub.size(), IVec(super.size(), Int(0)));
    for (std::size_t i = 0; i < sub.size(); ++i) {
        RVec c = solve_left(super, sub[i]);
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (!is_integer(c[j])) {
                throw Error(ErrorCode::NotASublattice, "basis vector has non-integer coordinates");
            }
            coords[i][j] = to_integer(c[j]);
        }
    }
    return coords;
}
}  // namespace

FiniteGroupDescriptor quotient_group(const PolarizedLattice& sub, const PolarizedLattice& super) {
    if (sub.dim() != super.dim() || sub.rank() != super.rank()) {
        throw Error(ErrorCode::NotASublattice, "quotient needs lattices of equal rank and ambient");
    }
    return group_from_coordinate_matrix(integral_coordinates(sub.basis, super.basis));
}

RMat dual_basis(const PolarizedLattice& L) {
    RMat g = rmat_mul(rmat_mul(L.basis, form_as_rmat(L.form)), rmat_transpose(L.basis));
    RMat ginv = rmat_inverse(g);  // DegenerateForm when singular
    return rmat_mul(ginv, L.basis);
}

FiniteGroupDescriptor k_group(const PolarizedLattice& L) {
    RMat dual = dual_basis(L);
    IMat coords(L.rank(), IVec(L.rank(), Int(0)));
    for (std::size_t i = 0; i < L.rank(); ++i) {
        RVec c = solve_left(dual, L.basis[i]);
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (!is_integer(c[j])) {
                throw Error(ErrorCode::NonIntegralPolarization,
                            "lattice is not contained in its dual");
            }
            coords[i][j] = to_integer(c[j]);
        }
    }
    return group_from_coordinate_matrix(coords);
}

RMat k_two_torsion_lifts(const PolarizedLattice& L) {
    RMat dual = dual_basis(L);
    IMat coords(L.rank(), IVec(L.rank(), Int(0)));
    for (std::size_t i = 0; i < L.rank(); ++i) {
        RVec c = solve_left(dual, L.basis[i]);
        for (std::size_t j = 0; j < c.size(); ++j) coords[i][j] = to_integer(c[j]);
    }
    IMat vinv;
    IVec div = smith_divisors(coords, &vinv);
    // adapted dual basis rows: vinv * dual
    RMat vinv_r(vinv.size(), RVec(vinv.size(), Rational(0)));
    for (std::size_t i = 0; i < vinv.size(); ++i) {
        for (std::size_t j = 0; j < vinv.size(); ++j) vinv_r[i][j] = Rational(vinv[i][j]);
    }
    RMat adapted = rmat_mul(vinv_r, dual);
    RMat lifts;
    for (std::size_t i = 0; i < div.size(); ++i) {
        if (div[i] > 1 && div[i] % 2 == 0) {
            Int half = div[i] / 2;
            RVec v = adapted[i];
            for (Rational& x : v) x *= Rational(half);
            lifts.push_back(std::move(v));
        }
    }
    return lifts;
}

RMat intersect_coordinates(const PolarizedLattice& L, const std::vector<std::size_t>& keep) {
    std::size_t dim = L.dim();
    std::vector<bool> keep_mask(dim, false);
    for (std::size_t k : keep) keep_mask.at(k) = true;
    std::vector<std::size_t> order;  // dropped coordinates first
    for (std::size_t j = 0; j < dim; ++j) {
        if (!keep_mask[j]) order.push_back(j);
    }
    std::size_t dropped = order.size();
    for (std::size_t j = 0; j < dim; ++j) {
        if (keep_mask[j]) order.push_back(j);
    }

    Int den = common_denominator(L.basis);
    IMat scaled(L.rank(), IVec(dim, Int(0)));
    for (std::size_t i = 0; i < L.rank(); ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            scaled[i][j] = to_integer(L.basis[i][order[j]] * Rational(den));
        }
    }
    IMat h = hnf_rows(std::move(scaled));
    RMat out;
    for (const IVec& row : h) {
        bool inside = true;
        for (std::size_t j = 0; j < dropped; ++j) {
            if (row[j] != 0) {
                inside = false;
                break;
            }
        }
        if (!inside) continue;
        RVec v(dim, Rational(0));
        for (std::size_t j = 0; j < dim; ++j) v[order[j]] = Rational(row[j], den);
        out.push_back(std::move(v));
    }
    return out;
}

bool lattice_eq(const PolarizedLattice& a, const PolarizedLattice& b) {
    return a.form == b.form && a.basis == b.basis;
}

RMat default_scenario_kernel(std::size_t g) {
    RMat kernel(2, RVec(2 * g, Rational(0)));
    for (std::size_t i = 0; i < g; ++i) {
        kernel[0][2 * i] = Rational(1, 2);      // (a1 + ... + ag) / 2
        kernel[1][2 * i + 1] = Rational(1, 2);  // (b1 + ... + bg) / 2
    }
    return kernel;
}

Report scenario_prym(const ScenarioOptions& options) {
    Report report;
    const std::size_t g = options.types.size();
    PolarizedLattice base = product_lattice(options.types);
    RMat kernel = options.kernel.value_or(default_scenario_kernel(g));

    PolarizedLattice enlarged = base;
    try {
        enlarged = enlarge(base, kernel);
        report.add("enlarge by kernel", "integral polarization", "integral polarization");
    } catch (const Error& e) {
        report.add("enlarge by kernel", "integral polarization", to_string(e.code()), false);
        return report;
    }

    auto guarded = [&report](const std::string& name, const std::string& expected, auto&& fn) {
        try {
            report.add(name, expected, fn());
        } catch (const Error& e) {
            report.add(name, expected, std::string("error: ") + to_string(e.code()), false);
        }
    };

    guarded("polarization type of the quotient", "(1,1,4)",
            [&] { return to_string(polarization_type(enlarged)); });
    guarded("K(Xi)", "(4,4)", [&] { return to_string(k_group(enlarged)); });
    guarded("ker mu", "(2,2)", [&] { return to_string(quotient_group(base, enlarged)); });

    try {
        PolarizedLattice principal = enlarge(enlarged, k_two_torsion_lifts(enlarged));
        std::string type2 = to_string(polarization_type(principal));

        std::vector<std::size_t> front, back;
        for (std::size_t j = 0; j + 2 < 2 * g; ++j) front.push_back(j);
        back = {2 * g - 2, 2 * g - 1};
        RMat m1 = intersect_coordinates(principal, front);
        RMat m2 = intersect_coordinates(principal, back);

        std::string split = "not split";
        std::string m1_type = "-", m2_type = "-";
        if (m1.size() + m2.size() == principal.rank()) {
            PolarizedLattice L1 = make_lattice(m1, principal.form);
            PolarizedLattice L2 = make_lattice(m2, principal.form);
            m1_type = to_string(polarization_type(L1));
            m2_type = to_string(polarization_type(L2));
            RMat both = m1;
            both.insert(both.end(), m2.begin(), m2.end());
            PolarizedLattice sum = make_lattice(both, principal.form);
            bool orthogonal = true;
            RMat pairing = rmat_mul(rmat_mul(L1.basis, form_as_rmat(principal.form)),
                                    rmat_transpose(L2.basis));
            for (const auto& row : pairing) {
                for (const auto& x : row) {
                    if (x != 0) orthogonal = false;
                }
            }
            if (lattice_eq(sum, principal) && orthogonal) split = "orthogonal direct sum";
        }
        report.add("quotient by K(Xi)[2]", "(1,1,1)", type2);
        report.add("splitting", "orthogonal direct sum", split);
        report.add("factor types", "(1,1) and (1)", m1_type + " and " + m2_type);

        guarded("total kernel", "(2,2,2,2)",
                [&] { return to_string(quotient_group(base, principal)); });
    } catch (const Error& e) {
        report.add("quotient by K(Xi)[2]", "(1,1,1)", std::string("error: ") + to_string(e.code()),
                   false);
    }
    return report;
}

}  // namespace prym
