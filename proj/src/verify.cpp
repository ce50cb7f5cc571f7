#include "prym/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "prym/curves.hpp"
#include "prym/fibers.hpp"
#include "prym/groupalg.hpp"
#include "prym/lattice.hpp"
#include "prym/prym.hpp"

namespace prym {

namespace {
std::string count_str(std::size_t bad, std::size_t total, const char* what) {
    std::ostringstream os;
    os << bad << " of " << total << " " << what;
    return os.str();
}
}  // namespace

ModuliPoint random_moduli_point(SeededRng& rng, const ToleranceConfig& cfg) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Complex t1 = rng.annulus(0.2, 5.0);
        Complex t2 = rng.annulus(0.2, 5.0);
        Complex t3 = rng.annulus(0.2, 5.0);
        try {
            return validate(t1, t2, t3, cfg);
        } catch (const Error&) {
            continue;
        }
    }
    throw Error(ErrorCode::InsufficientYield, "random moduli point: rejection did not terminate");
}

std::pair<Complex, Complex> random_lambda_pair(SeededRng& rng, const ToleranceConfig& cfg) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Complex l1 = rng.annulus(0.2, 3.0);
        Complex l2 = rng.annulus(0.2, 3.0);
        if (approx_eq(l1, Complex{1.0, 0.0}, cfg) || approx_eq(l2, Complex{1.0, 0.0}, cfg)) continue;
        if (approx_eq(l1, l2, cfg)) continue;
        if (is_exceptional(l1, l2, cfg)) continue;
        return {l1, l2};
    }
    throw Error(ErrorCode::InsufficientYield, "random lambda pair: rejection did not terminate");
}

Report run_lattice_suite() { return scenario_prym(); }

Report run_group_suite() { return verify_decomposition(); }

Report run_prym_suite(std::uint64_t seed, std::size_t samples, const ToleranceConfig& cfg) {
    Report report;
    SeededRng rng(seed);

    std::size_t equal_lambdas = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        if (!lambdas_distinct(random_moduli_point(rng, cfg), cfg)) ++equal_lambdas;
    }
    report.add("lambda1 != lambda2 on random points", count_str(0, samples, "failures"),
               count_str(equal_lambdas, samples, "failures"));

    std::size_t order_dependent = 0;
    std::size_t orbit_broken = 0;
    const std::size_t small = std::max<std::size_t>(samples / 100, 10);
    for (std::size_t i = 0; i < small; ++i) {
        ModuliPoint p = random_moduli_point(rng, cfg);
        auto base = lambda_pair(p.t[0], p.t[1], p.t[2], cfg);
        auto canon = canonical_invariant(base.first, base.second, cfg).canonical;
        static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& pm : perms) {
            auto lp = lambda_pair(p.t[pm[0]], p.t[pm[1]], p.t[pm[2]], cfg);
            auto c2 = canonical_invariant(lp.first, lp.second, cfg).canonical;
            if (!approx_eq(c2.first, canon.first, cfg) || !approx_eq(c2.second, canon.second, cfg)) {
                ++order_dependent;
            }
            // orbit of an orbit member reproduces the orbit as a set
            auto orb = s3_orbit(lp.first, lp.second, cfg);
            auto orb0 = s3_orbit(base.first, base.second, cfg);
            if (orb.size() != orb0.size()) ++orbit_broken;
        }
        if (!same_fiber(p, p, cfg)) ++order_dependent;
    }
    report.add("canonical invariant is ordering-free", count_str(0, small * 6, "failures"),
               count_str(order_dependent, small * 6, "failures"));
    report.add("orbit closure under the diagonal action", count_str(0, small * 6, "failures"),
               count_str(orbit_broken, small * 6, "failures"));
    return report;
}

Report run_fibers_suite(std::uint64_t seed, std::size_t samples, const ToleranceConfig& cfg) {
    Report report;
    SeededRng rng(seed);
    const std::size_t pairs = std::clamp<std::size_t>(samples / 20, 5, 50);
    const std::size_t per_pair = 20;

    std::size_t bad_round_trip = 0, bad_residual = 0, bad_rank = 0, bad_j = 0;
    std::size_t total_points = 0;
    for (std::size_t i = 0; i < pairs; ++i) {
        ModuliPoint p = random_moduli_point(rng, cfg);
        auto [l1, l2] = lambda_pair(p.t[0], p.t[1], p.t[2], cfg);
        Complex je = j_from_lambda(l1, cfg), jf = j_from_lambda(l2, cfg);
        FiberSample sample = sample_fiber(l1, l2, per_pair, seed + 1000 + i, cfg);
        ToleranceConfig jcfg{1e-8, 1e-8};
        for (std::size_t k = 0; k < sample.points.size(); ++k) {
            ++total_points;
            if (!same_fiber(p, sample.points[k], cfg)) ++bad_round_trip;
            const PointDiagnostics& d = sample.diagnostics[k];
            if (d.residual1 > 1e-7 || d.residual2 > 1e-7) ++bad_residual;
            if (d.rank != 2) ++bad_rank;
            auto [m1, m2] = lambda_pair(sample.points[k].t[0], sample.points[k].t[1],
                                        sample.points[k].t[2], cfg);
            if (!approx_eq(j_from_lambda(m1, cfg), je, jcfg) ||
                !approx_eq(j_from_lambda(m2, cfg), jf, jcfg)) {
                ++bad_j;
            }
        }
    }
    report.add("round trip: sampled points stay on the fiber",
               count_str(0, total_points, "failures"), count_str(bad_round_trip, total_points, "failures"));
    report.add("quadric residuals below 1e-7", count_str(0, total_points, "failures"),
               count_str(bad_residual, total_points, "failures"));
    report.add("Jacobian rank 2 at sampled points", count_str(0, total_points, "failures"),
               count_str(bad_rank, total_points, "failures"));
    report.add("j-invariants constant along fibers", count_str(0, total_points, "failures"),
               count_str(bad_j, total_points, "failures"));

    // exceptional detection
    const double h = 0.86602540378443864676;
    bool exc_ok = is_exceptional({-1.0, 0.0}, {0.5, 0.0}, cfg) &&
                  is_exceptional({0.5, h}, {0.5, -h}, cfg) &&
                  is_exceptional({2.0, 0.0}, {0.5, 0.0}, cfg);  // orbit member of (-1, 1/2)
    std::size_t false_exceptional = 0;
    const std::size_t random_pairs = std::max<std::size_t>(samples, 100);
    for (std::size_t i = 0; i < random_pairs; ++i) {
        auto [l1, l2] = random_lambda_pair(rng, cfg);
        if (is_exceptional(l1, l2, cfg)) ++false_exceptional;
    }
    report.add("exceptional orbits detected", "yes", exc_ok ? "yes" : "no", exc_ok);
    report.add("random pairs non-exceptional", count_str(0, random_pairs, "false positives"),
               count_str(false_exceptional, random_pairs, "false positives"));

    // gluing: every point of the equianharmonic fiber admits a 3-cycle
    // reordering on the same quadrics; generic fibers admit none
    auto glued_eq = glued_points({0.5, h}, {0.5, -h}, 40, seed + 5, cfg);
    auto sample_eq = sample_fiber({0.5, h}, {0.5, -h}, 40, seed + 5, cfg);
    bool eq_glued_everywhere = glued_eq.size() == 2 * sample_eq.points.size();
    report.add("equianharmonic fiber glued at every point (two 3-cycles)", "yes",
               eq_glued_everywhere ? "yes" : "no", eq_glued_everywhere);
    auto [g1, g2] = random_lambda_pair(rng, cfg);
    auto glued_generic = glued_points(g1, g2, 50, seed + 6, cfg);
    report.add("generic fiber has no glued points", "0 glued",
               std::to_string(glued_generic.size()) + " glued", glued_generic.empty());
    return report;
}

Report run_all_suites(std::uint64_t seed, std::size_t samples, const ToleranceConfig& cfg) {
    Report report;
    report.append(run_lattice_suite(), "lattice: ");
    report.append(run_group_suite(), "group: ");
    report.append(run_prym_suite(seed, samples, cfg), "prym: ");
    report.append(run_fibers_suite(seed, samples, cfg), "fibers: ");
    return report;
}

}  // namespace prym
