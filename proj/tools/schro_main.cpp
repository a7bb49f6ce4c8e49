// Command-line front end: batch evolutions, supershift scans, kernel tables
// and the built-in selfcheck, all emitting machine-readable output.
//
// Exit codes: 0 success, 1 selfcheck invariant failure, 2 configuration
// error, 3 capability error, 4 some grid cells failed to converge (rows are
// still written).

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "schro/oracle.hpp"
#include "schro/run_config.hpp"
#include "schro/selfcheck.hpp"

using namespace schro;

namespace {

struct KeyOverride {
    std::vector<std::string> pairs; // key=value from --set
};

runcfg::RunConfig load_config(const std::string& config_path, const KeyOverride& overrides) {
    runcfg::RunConfig cfg;
    if (!config_path.empty()) cfg = runcfg::parse_file(config_path);
    for (const auto& kv : overrides.pairs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--set expects key=value, got: " + kv);
        runcfg::apply_key(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    return cfg;
}

void write_output(const runcfg::RunConfig& cfg, const std::string& text) {
    if (cfg.output_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output path: " + cfg.output_path);
    out << text;
}

int cmd_evolve(const runcfg::RunConfig& cfg) {
    if (cfg.grid_t.empty() || cfg.grid_x.empty())
        throw std::invalid_argument("grid.t and grid.x must be nonempty");
    const auto prob = runcfg::make_problem(cfg);
    const auto wf = evolution::evolve_grid(prob, cfg.grid_t, cfg.grid_x);
    write_output(cfg, runcfg::wavefield_csv(wf));
    for (bool ok : wf.converged)
        if (!ok) return 4;
    return 0;
}

int cmd_supershift(const runcfg::RunConfig& cfg) {
    auto fam = superosc::build_supershift_plane_waves(cfg.supershift_k0, cfg.supershift_kappa);
    if (cfg.variant == "free")
        fam = superosc::build_supershift_plane_waves_free(cfg.supershift_k0, cfg.supershift_kappa);
    runcfg::RunConfig base_cfg = cfg;
    base_cfg.initial_kind = "plane_wave";
    base_cfg.k = 0.0;
    evolution::EvolutionProblem base(runcfg::make_spec(cfg), [](Cplx) { return Cplx(1.0, 0.0); },
                                     GrowthBound(1.0, 0.0, 1.0), cfg.theta,
                                     quadrature::QuadratureConfig(cfg.rel_tol, 1 << 22, 1e-2));
    std::vector<int> ns;
    for (double v : cfg.n_seq) ns.push_back(static_cast<int>(v));
    const evolution::CompactInterval compact{cfg.compact_lo, cfg.compact_hi, cfg.compact_samples};
    const auto rows = evolution::supershift_scan(base, fam, ns, cfg.scan_t, compact);
    write_output(cfg, runcfg::supershift_csv(rows));
    for (const auto& r : rows)
        if (!r.converged) return 4;
    return 0;
}

int cmd_green_table(const runcfg::RunConfig& cfg) {
    if (cfg.grid_t.empty() || cfg.grid_x.empty())
        throw std::invalid_argument("grid.t and grid.x must be nonempty");
    const auto spec = runcfg::make_spec(cfg);
    const std::vector<double>& zs = cfg.grid_z.empty() ? cfg.grid_x : cfg.grid_z;
    std::vector<runcfg::GreenTableRow> rows;
    for (double t : cfg.grid_t)
        for (double x : cfg.grid_x)
            for (double zr : zs) {
                const Cplx z(zr, cfg.grid_z_im);
                runcfg::GreenTableRow row{t, x, z.real(), z.imag(), Cplx(), Cplx(), 0.0};
                const auto g = greens::eval_green(spec, t, x, z);
                row.g = g.value;
                row.gtilde = g.gtilde;
                const double hx = std::min(std::abs(x) / 20.0, 3e-4);
                const double ht = std::min(t / 20.0, 3e-4);
                row.residual_abs = std::abs(greens::schrodinger_residual(spec, t, x, z, ht, hx));
                rows.push_back(row);
            }
    write_output(cfg, runcfg::green_table_csv(rows));
    return 0;
}

int cmd_selfcheck(const std::string& level) {
    std::vector<selfcheck::CheckResult> results;
    if (level == "fast") {
        results = selfcheck::run_fast();
    } else if (level == "full") {
        results = selfcheck::run_fast();
        const auto acc = selfcheck::run_acceptance();
        results.insert(results.end(), acc.begin(), acc.end());
    } else {
        std::fprintf(stderr, "selfcheck level must be 'fast' or 'full', got '%s'\n", level.c_str());
        return 2;
    }
    int failed = 0;
    for (const auto& r : results) {
        std::printf("%s  %s  [%.1fs]  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::printf("{\"check\":\"%s\",\"pass\":%s,\"seconds\":%.3f}\n", r.name.c_str(),
                    r.pass ? "true" : "false", r.seconds);
        if (!r.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"contour-integral propagators for the 1-D Schrodinger equation on the punctured "
                 "line: singular and point potentials, superoscillation persistence checks"};
    app.require_subcommand(1);

    std::string config_path;
    KeyOverride overrides;
    app.add_option("-c,--config", config_path, "configuration file (key = value lines)");
    app.add_option("-s,--set", overrides.pairs, "override a configuration key (key=value; wins)");

    auto* evolve = app.add_subcommand("evolve", "evolve the initial datum over grid.t x grid.x");
    auto* supershift = app.add_subcommand("supershift", "supershift persistence scan over n");
    auto* green = app.add_subcommand("green-table", "tabulate the kernel and its residuals");
    auto* self = app.add_subcommand("selfcheck", "run built-in verification");
    std::string level = "fast";
    self->add_option("level", level, "fast or full");
    auto* defaults = app.add_subcommand("defaults", "print the effective configuration");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto cfg = load_config(config_path, overrides);
        if (evolve->parsed()) return cmd_evolve(cfg);
        if (supershift->parsed()) return cmd_supershift(cfg);
        if (green->parsed()) return cmd_green_table(cfg);
        if (self->parsed()) return cmd_selfcheck(level);
        if (defaults->parsed()) {
            std::fputs(runcfg::serialize(cfg).c_str(), stdout);
            return 0;
        }
    } catch (const CapabilityError& e) {
        std::fprintf(stderr, "capability error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    }
    return 0;
}
