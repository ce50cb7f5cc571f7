#pragma once

#include <cstdint>

#include "prym/moduli.hpp"
#include "prym/numerics.hpp"
#include "prym/report.hpp"
#include "prym/rng.hpp"

namespace prym {

/// Draws an admissible moduli point: annulus draws with validation rejection.
ModuliPoint random_moduli_point(SeededRng& rng, const ToleranceConfig& cfg = {});

/// Draws a valid non-exceptional lambda pair.
std::pair<Complex, Complex> random_lambda_pair(SeededRng& rng, const ToleranceConfig& cfg = {});

/// Exact lattice pipeline (scenario assertions).
Report run_lattice_suite();

/// Exact group algebra decomposition identities.
Report run_group_suite();

/// Statistical invariants of the fiber label: lambda distinctness, orbit
/// closure, canonical invariance across orderings, fiber-equality symmetry.
Report run_prym_suite(std::uint64_t seed, std::size_t samples, const ToleranceConfig& cfg = {});

/// Sampled-fiber checks: round trip, residuals, smoothness, exceptional
/// detection, glued-point behavior.
Report run_fibers_suite(std::uint64_t seed, std::size_t samples, const ToleranceConfig& cfg = {});

Report run_all_suites(std::uint64_t seed, std::size_t samples, const ToleranceConfig& cfg = {});

}  // namespace prym
