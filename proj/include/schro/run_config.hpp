#pragma once

// Plain-text run configuration (dotted key = value lines) and the CSV
// emitters behind the command-line tools. Flags are merged on top of the
// file by the CLI, so parse() + serialize() must round-trip exactly.

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "schro/evolution.hpp"
#include "schro/greens.hpp"
#include "schro/superosc.hpp"

namespace schro::runcfg {

struct RunConfig {
    // potential
    std::string variant = "free"; // free | centrifugal | point
    double lambda = -0.1875;
    double phi = 0.0;
    double alpha_re = 0.0, alpha_im = 0.0;
    double beta_re = 1.0, beta_im = 0.0;
    // initial datum
    std::string initial_kind = "plane_wave"; // plane_wave | superosc | custom_poly_exp
    double k = 1.0;
    int n = 8;
    std::vector<double> poly = {1.0}; // custom_poly_exp coefficients
    // contour + quadrature
    double theta = kPi / 4.0;
    double rel_tol = 1e-10;
    // grids
    std::vector<double> grid_t = {0.2};
    std::vector<double> grid_x = {0.5, 1.0, 1.5};
    std::vector<double> grid_z = {};
    double grid_z_im = 0.0;
    // supershift scan
    double supershift_k0 = 1.0;
    double supershift_kappa = 3.0;
    std::vector<double> n_seq = {4, 8, 16};
    double scan_t = 0.2;
    double compact_lo = 0.5, compact_hi = 2.0;
    int compact_samples = 201;
    // output
    std::string output_path = "";
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<double> parse_list(const std::string& v) {
    // either "a,b,c" or "lin:start:stop:count"
    std::vector<double> out;
    if (v.rfind("lin:", 0) == 0) {
        double start = 0.0, stop = 0.0;
        long count = 0;
        if (std::sscanf(v.c_str(), "lin:%lf:%lf:%ld", &start, &stop, &count) != 3 || count < 1)
            throw std::invalid_argument("bad grid spec: " + v);
        for (long i = 0; i < count; ++i)
            out.push_back(count == 1 ? start : start + (stop - start) * i / (count - 1));
        return out;
    }
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string fmt_list(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += fmt(v[i]);
    }
    return s;
}

} // namespace detail

inline void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    using detail::parse_list;
    if (key == "potential.variant") cfg.variant = value;
    else if (key == "potential.lambda") cfg.lambda = std::stod(value);
    else if (key == "potential.phi") cfg.phi = std::stod(value);
    else if (key == "potential.alpha_re") cfg.alpha_re = std::stod(value);
    else if (key == "potential.alpha_im") cfg.alpha_im = std::stod(value);
    else if (key == "potential.beta_re") cfg.beta_re = std::stod(value);
    else if (key == "potential.beta_im") cfg.beta_im = std::stod(value);
    else if (key == "initial.kind") cfg.initial_kind = value;
    else if (key == "initial.k") cfg.k = std::stod(value);
    else if (key == "initial.n") cfg.n = std::stoi(value);
    else if (key == "initial.poly") cfg.poly = parse_list(value);
    else if (key == "contour.theta") cfg.theta = std::stod(value);
    else if (key == "quadrature.rel_tol") cfg.rel_tol = std::stod(value);
    else if (key == "grid.t") cfg.grid_t = parse_list(value);
    else if (key == "grid.x") cfg.grid_x = parse_list(value);
    else if (key == "grid.z") cfg.grid_z = parse_list(value);
    else if (key == "grid.z_im") cfg.grid_z_im = std::stod(value);
    else if (key == "supershift.k0") cfg.supershift_k0 = std::stod(value);
    else if (key == "supershift.kappa") cfg.supershift_kappa = std::stod(value);
    else if (key == "supershift.n_seq") cfg.n_seq = parse_list(value);
    else if (key == "supershift.t") cfg.scan_t = std::stod(value);
    else if (key == "supershift.compact_lo") cfg.compact_lo = std::stod(value);
    else if (key == "supershift.compact_hi") cfg.compact_hi = std::stod(value);
    else if (key == "supershift.compact_samples") cfg.compact_samples = std::stoi(value);
    else if (key == "output.path") cfg.output_path = value;
    else throw std::invalid_argument("unknown configuration key: " + key);
}

inline RunConfig parse(std::istream& in) {
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key = value");
        apply_key(cfg, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
    }
    return cfg;
}

inline RunConfig parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open configuration file: " + path);
    return parse(in);
}

inline std::string serialize(const RunConfig& cfg) {
    using detail::fmt;
    using detail::fmt_list;
    std::string s;
    s += "potential.variant = " + cfg.variant + "\n";
    s += "potential.lambda = " + fmt(cfg.lambda) + "\n";
    s += "potential.phi = " + fmt(cfg.phi) + "\n";
    s += "potential.alpha_re = " + fmt(cfg.alpha_re) + "\n";
    s += "potential.alpha_im = " + fmt(cfg.alpha_im) + "\n";
    s += "potential.beta_re = " + fmt(cfg.beta_re) + "\n";
    s += "potential.beta_im = " + fmt(cfg.beta_im) + "\n";
    s += "initial.kind = " + cfg.initial_kind + "\n";
    s += "initial.k = " + fmt(cfg.k) + "\n";
    s += "initial.n = " + std::to_string(cfg.n) + "\n";
    s += "initial.poly = " + fmt_list(cfg.poly) + "\n";
    s += "contour.theta = " + fmt(cfg.theta) + "\n";
    s += "quadrature.rel_tol = " + fmt(cfg.rel_tol) + "\n";
    s += "grid.t = " + fmt_list(cfg.grid_t) + "\n";
    s += "grid.x = " + fmt_list(cfg.grid_x) + "\n";
    s += "grid.z = " + fmt_list(cfg.grid_z) + "\n";
    s += "grid.z_im = " + fmt(cfg.grid_z_im) + "\n";
    s += "supershift.k0 = " + fmt(cfg.supershift_k0) + "\n";
    s += "supershift.kappa = " + fmt(cfg.supershift_kappa) + "\n";
    s += "supershift.n_seq = " + fmt_list(cfg.n_seq) + "\n";
    s += "supershift.t = " + fmt(cfg.scan_t) + "\n";
    s += "supershift.compact_lo = " + fmt(cfg.compact_lo) + "\n";
    s += "supershift.compact_hi = " + fmt(cfg.compact_hi) + "\n";
    s += "supershift.compact_samples = " + std::to_string(cfg.compact_samples) + "\n";
    s += "output.path = " + cfg.output_path + "\n";
    return s;
}

// ---------------------------------------------------------------------------
// Config -> problem objects.
// ---------------------------------------------------------------------------

inline greens::GreensFunctionSpec make_spec(const RunConfig& cfg) {
    if (cfg.variant == "free") return greens::GreensFunctionSpec::free();
    if (cfg.variant == "centrifugal") return greens::GreensFunctionSpec::centrifugal(cfg.lambda);
    if (cfg.variant == "point")
        return greens::GreensFunctionSpec::point_interaction(
            cfg.phi, Cplx(cfg.alpha_re, cfg.alpha_im), Cplx(cfg.beta_re, cfg.beta_im));
    throw std::invalid_argument("potential.variant must be free | centrifugal | point");
}

struct InitialDatum {
    std::function<Cplx(Cplx)> f;
    GrowthBound bound;
};

inline InitialDatum make_initial(const RunConfig& cfg) {
    if (cfg.initial_kind == "plane_wave") {
        const double k = cfg.k;
        return {[k](Cplx z) { return std::exp(Cplx(0.0, k) * z); },
                GrowthBound(1.0, std::abs(k), 1.0)};
    }
    if (cfg.initial_kind == "superosc") {
        const auto seq = superosc::build_superosc(cfg.n, cfg.k);
        // |F_n(z)| <= |k|^n e^{|Im z|}: band-limited to [-1, 1]
        return {[seq](Cplx z) { return superosc::eval_superosc(seq, z, superosc::EvalForm::Product); },
                GrowthBound(std::pow(std::abs(cfg.k), cfg.n), 1.0, 1.0)};
    }
    if (cfg.initial_kind == "custom_poly_exp") {
        const auto poly = cfg.poly;
        const double k = cfg.k;
        double amax = 1.0;
        for (double c : poly) amax += std::abs(c);
        // |sum c_j z^j| <= (sum |c_j|) d! e^{|z|} since |z|^j / j! <= e^{|z|}
        const double dfact = std::tgamma(static_cast<double>(poly.size()) + 1.0);
        return {[poly, k](Cplx z) {
                    Cplx p(0.0, 0.0);
                    for (std::size_t i = poly.size(); i-- > 0;) p = p * z + poly[i];
                    return p * std::exp(Cplx(0.0, k) * z);
                },
                GrowthBound(amax * dfact, std::abs(k) + 1.0, 1.0)};
    }
    throw std::invalid_argument("initial.kind must be plane_wave | superosc | custom_poly_exp");
}

inline evolution::EvolutionProblem make_problem(const RunConfig& cfg) {
    auto initial = make_initial(cfg);
    return evolution::EvolutionProblem(
        make_spec(cfg), std::move(initial.f), initial.bound, cfg.theta,
        quadrature::QuadratureConfig(cfg.rel_tol, 1 << 22, 1e-2));
}

// ---------------------------------------------------------------------------
// CSV emitters: 17 significant digits, '.' decimal, '\n' line endings,
// deterministic row order (t-major, then x).
// ---------------------------------------------------------------------------

inline std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string wavefield_csv(const evolution::WaveField& wf) {
    std::string out = "t,x,psi_re,psi_im,psi_abs,psi_arg,converged\n";
    for (std::size_t it = 0; it < wf.t_grid.size(); ++it)
        for (std::size_t ix = 0; ix < wf.x_grid.size(); ++ix) {
            const Cplx v = wf.at(it, ix);
            out += csv_num(wf.t_grid[it]) + "," + csv_num(wf.x_grid[ix]) + "," +
                   csv_num(v.real()) + "," + csv_num(v.imag()) + "," + csv_num(std::abs(v)) + "," +
                   csv_num(std::arg(v)) + "," + (wf.ok(it, ix) ? "1" : "0") + "\n";
        }
    return out;
}

inline std::string supershift_csv(const std::vector<evolution::SupershiftRow>& rows) {
    std::string out = "n,sup_error,linearity_residual\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + "," + csv_num(r.sup_error) + ",";
        if (r.linearity_checked) out += csv_num(r.linearity_residual);
        out += "\n";
    }
    return out;
}

struct GreenTableRow {
    double t, x, z_re, z_im;
    Cplx g, gtilde;
    double residual_abs;
};

inline std::string green_table_csv(const std::vector<GreenTableRow>& rows) {
    std::string out = "t,x,z_re,z_im,g_re,g_im,gtilde_re,gtilde_im,residual_abs\n";
    for (const auto& r : rows) {
        out += csv_num(r.t) + "," + csv_num(r.x) + "," + csv_num(r.z_re) + "," + csv_num(r.z_im) +
               "," + csv_num(r.g.real()) + "," + csv_num(r.g.imag()) + "," +
               csv_num(r.gtilde.real()) + "," + csv_num(r.gtilde.imag()) + "," +
               csv_num(r.residual_abs) + "\n";
    }
    return out;
}

} // namespace schro::runcfg
