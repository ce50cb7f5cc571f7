#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "prym/fibers.hpp"
#include "prym/json_io.hpp"
#include "prym/moduli.hpp"
#include "prym/prym.hpp"
#include "prym/verify.hpp"

namespace {

using prym::Complex;
using prym::Error;
using prym::ErrorCode;

// exit codes: 0 success, 1 verification failure, 2 input validation, 3 yield
constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;
constexpr int kYieldFailed = 3;

Complex parse_complex(const std::string& s) {
    std::size_t comma = s.find(',');
    if (comma == std::string::npos) {
        throw Error(ErrorCode::ParseError, "complex value must be \"re,im\": " + s);
    }
    try {
        std::size_t used = 0;
        double re = std::stod(s.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument(s);
        std::string imag_part = s.substr(comma + 1);
        double im = std::stod(imag_part, &used);
        if (used != imag_part.size()) throw std::invalid_argument(s);
        return {re, im};
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "complex value must be \"re,im\": " + s);
    }
}

std::vector<Complex> parse_triple(const std::string& s) {
    std::vector<Complex> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t semi = s.find(';', start);
        std::string part = s.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        if (!part.empty()) out.push_back(parse_complex(part));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (out.size() != 3) {
        throw Error(ErrorCode::ParseError, "expected three components \"re,im;re,im;re,im\"");
    }
    return out;
}

prym::SignVector parse_signs(const std::string& s) {
    prym::SignVector sv;
    std::size_t idx = 0, start = 0;
    while (start <= s.size() && idx < 4) {
        std::size_t comma = s.find(',', start);
        std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (part == "+") {
            if (idx >= 3) { idx = 4; break; }
            sv.s[idx++] = +1;
        } else if (part == "-") {
            if (idx >= 3) { idx = 4; break; }
            sv.s[idx++] = -1;
        } else {
            throw Error(ErrorCode::ParseError, "signs must be three of +/-: " + s);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (idx != 3) throw Error(ErrorCode::ParseError, "signs must have exactly three entries: " + s);
    return sv;
}

int fail_with(const Error& e) {
    std::cout << prym::error_json(e).dump() << "\n";
    return e.code() == ErrorCode::InsufficientYield ? kYieldFailed : kBadInput;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-4 Prym map toolkit: fiber invariants, curve systems, fiber sampling, exact verification"};
    app.require_subcommand(1);

    std::string t_flag, signs_flag = "+,+,+", l1_flag, l2_flag, out_flag = "json", suite = "all";
    double tol_flag = 0.0;
    std::uint64_t seed = 0;
    std::size_t count = 20, samples = 200;

    auto* cmd_invariants = app.add_subcommand("invariants", "Prym descriptor of a moduli point");
    cmd_invariants->add_option("--t", t_flag, "triple \"re,im;re,im;re,im\"")->required();
    cmd_invariants->add_option("--tol", tol_flag, "absolute tolerance override");

    auto* cmd_fiber = app.add_subcommand("fiber", "sample a fiber of the Prym map");
    cmd_fiber->add_option("--l1", l1_flag, "lambda1 as \"re,im\"")->required();
    cmd_fiber->add_option("--l2", l2_flag, "lambda2 as \"re,im\"")->required();
    cmd_fiber->add_option("--count", count, "number of points");
    cmd_fiber->add_option("--seed", seed, "RNG seed");
    cmd_fiber->add_option("--out", out_flag, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    auto* cmd_curves = app.add_subcommand("curves", "defining branch loci of the cover tower");
    cmd_curves->add_option("--t", t_flag, "triple \"re,im;re,im;re,im\"")->required();
    cmd_curves->add_option("--signs", signs_flag, "three signs, e.g. \"+,-,+\"");

    auto* cmd_verify = app.add_subcommand("verify", "run the verification suites");
    cmd_verify->add_option("--suite", suite, "lattice|group|prym|fibers|all")
        ->check(CLI::IsMember({"lattice", "group", "prym", "fibers", "all"}));
    cmd_verify->add_option("--seed", seed, "RNG seed");
    cmd_verify->add_option("--samples", samples, "sample count for the statistical suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cout << prym::Json{{"code", "ParseError"}, {"message", e.what()}}.dump() << "\n";
        return kBadInput;
    }

    try {
        prym::ToleranceConfig cfg = prym::tolerance_from_env();
        if (tol_flag > 0.0) cfg.abs_tol = tol_flag;

        if (cmd_invariants->parsed()) {
            auto t = parse_triple(t_flag);
            prym::ModuliPoint p = prym::validate(t[0], t[1], t[2], cfg);
            std::cout << prym::descriptor_json(prym::prym_descriptor(p, cfg)).dump() << "\n";
            return kOk;
        }
        if (cmd_fiber->parsed()) {
            Complex l1 = parse_complex(l1_flag), l2 = parse_complex(l2_flag);
            prym::FiberSample sample = prym::sample_fiber(l1, l2, count, seed, cfg);
            if (out_flag == "csv") {
                std::cout << prym::fiber_sample_csv(sample);
                return kOk;
            }
            prym::Json j = prym::fiber_sample_json(sample);
            j["exceptional"] = prym::is_exceptional(l1, l2, cfg);
            prym::Json residuals = prym::Json::array();
            for (const auto& d : sample.diagnostics) {
                residuals.push_back(prym::Json::array({d.residual1, d.residual2}));
            }
            j["residuals"] = residuals;
            prym::Json glued = prym::Json::array();
            for (const auto& gp : prym::glued_points(l1, l2, count, seed, cfg)) {
                prym::Json perm = prym::Json::array();
                for (int x : gp.permutation) perm.push_back(x);
                glued.push_back(prym::Json{{"point", prym::moduli_json(gp.point)}, {"perm", perm}});
            }
            j["glued"] = glued;
            std::cout << j.dump() << "\n";
            return kOk;
        }
        if (cmd_curves->parsed()) {
            auto t = parse_triple(t_flag);
            prym::SignVector sv = parse_signs(signs_flag);
            prym::ModuliPoint p = prym::validate(t[0], t[1], t[2], cfg);
            std::cout << prym::curve_system_json(prym::curve_system(p, sv)).dump() << "\n";
            return kOk;
        }
        if (cmd_verify->parsed()) {
            prym::Report report;
            if (suite == "lattice") {
                report = prym::run_lattice_suite();
            } else if (suite == "group") {
                report = prym::run_group_suite();
            } else if (suite == "prym") {
                report = prym::run_prym_suite(seed, samples, cfg);
            } else if (suite == "fibers") {
                report = prym::run_fibers_suite(seed, samples, cfg);
            } else {
                report = prym::run_all_suites(seed, samples, cfg);
            }
            prym::Json j{{"suite", suite},
                         {"seed", seed},
                         {"samples", samples},
                         {"pass", report.all_pass()},
                         {"assertions", prym::report_json(report)}};
            std::cout << j.dump() << "\n";
            return report.all_pass() ? kOk : kVerifyFailed;
        }
    } catch (const Error& e) {
        return fail_with(e);
    }
    return kBadInput;
}
