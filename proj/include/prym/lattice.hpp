#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "prym/rational.hpp"
#include "prym/report.hpp"

namespace prym {

/// A lattice with exact rational basis inside Q^dim, carrying an integral
/// alternating form on the ambient standard basis. The form restricted to
/// the lattice must be integral and nondegenerate. The stored basis is the
/// canonical Hermite form of its row span, so equal lattices compare equal.
struct PolarizedLattice {
    RMat basis;  // rank rows of length dim
    IMat form;   // dim x dim, alternating

    std::size_t rank() const { return basis.size(); }
    std::size_t dim() const { return form.size(); }
};

/// Validates and canonicalizes. Throws NonIntegralPolarization when the form
/// is not integral on the lattice, DegenerateForm when it degenerates.
PolarizedLattice make_lattice(RMat basis, IMat form);

/// Standard lattice Z^{2g} with form E(a_i, b_i) = d_i on the basis ordered
/// a1, b1, a2, b2, ...
PolarizedLattice product_lattice(const std::vector<Int>& types);

/// Overlattice generated by L and the given rational vectors. Throws
/// NonIntegralPolarization when the polarization does not stay integral,
/// NotASublattice when a vector leaves the rational span of L.
PolarizedLattice enlarge(const PolarizedLattice& L, const RMat& vs);

/// Integer Gram matrix of the form on the lattice basis.
IMat gram_matrix(const PolarizedLattice& L);
Int gram_determinant(const PolarizedLattice& L);

struct InvariantFactors {
    std::vector<Int> factors;  // d1 | d2 | ... | dg
    friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};
std::string to_string(const InvariantFactors& f);

/// Elementary divisors of the Gram matrix read off its integer Smith form:
/// the divisors come in equal pairs (d1,d1,...,dg,dg) and the polarization
/// type is the chain (d1,...,dg).
InvariantFactors polarization_type(const PolarizedLattice& L);

/// Invariant factors of a finite abelian group (entries >= 2; empty chain is
/// the trivial group).
struct FiniteGroupDescriptor {
    std::vector<Int> factors;
    friend bool operator==(const FiniteGroupDescriptor&, const FiniteGroupDescriptor&) = default;
};
std::string to_string(const FiniteGroupDescriptor& g);

/// super / sub via the Smith form of the coordinate matrix of sub in super.
FiniteGroupDescriptor quotient_group(const PolarizedLattice& sub, const PolarizedLattice& super);

/// Basis of the dual lattice {x in span(L) : E(x, L) subset Z}. Its Gram is
/// not integral in general, so it is returned as a plain basis.
RMat dual_basis(const PolarizedLattice& L);

/// K(Xi) = dual/L, computed through dual_basis + coordinate Smith form as a
/// path independent of polarization_type.
FiniteGroupDescriptor k_group(const PolarizedLattice& L);

/// Lifts to Q^dim of generators of the 2-torsion subgroup K(Xi)[2].
RMat k_two_torsion_lifts(const PolarizedLattice& L);

/// Basis of {x in L : x_j = 0 for all j outside keep}.
RMat intersect_coordinates(const PolarizedLattice& L, const std::vector<std::size_t>& keep);

bool lattice_eq(const PolarizedLattice& a, const PolarizedLattice& b);

/// The isogeny kernel generators of the product-of-elliptic-curves picture:
/// (sum of a_i)/2 and (sum of b_i)/2.
RMat default_scenario_kernel(std::size_t g);

struct ScenarioOptions {
    std::vector<Int> types = {Int(2), Int(2), Int(4)};
    std::optional<RMat> kernel;  // defaults to default_scenario_kernel
};

/// Runs the full verification pipeline on the product lattice:
/// enlarge by the kernel, check type (1,1,4), K = Z4 x Z4, ker mu = Z2 x Z2,
/// quotient by K[2] principal and split orthogonally as (1,1) x (1), total
/// kernel Z2^4. Assertion failures become report entries, not exceptions.
Report scenario_prym(const ScenarioOptions& options = {});

}  // namespace prym
