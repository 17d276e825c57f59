// Command-line front end: symbolic verification suites, Ricci checks,
// D-field tabulation, region solves, redshift/cycle/deficit calculators and
// operator application on parsed expressions.  CSV numbers carry 17
// significant digits; every CSV has an optional JSON mirror.

#include "ncwave/clgeom.hpp"
#include "ncwave/expr.hpp"
#include "ncwave/solver.hpp"
#include "ncwave/symchecks.hpp"
#include "ncwave/waveops.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

using json = nlohmann::json;

std::string num17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct OutputSink {
    std::string path;       // empty = stdout
    bool as_json = false;

    void write_table(const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) const {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            os = &file;
        }
        if (as_json) {
            json j = json::array();
            for (const auto& row : rows) {
                json obj;
                for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
                j.push_back(obj);
            }
            *os << j.dump(2) << "\n";
            return;
        }
        for (std::size_t i = 0; i < header.size(); ++i)
            *os << header[i] << (i + 1 < header.size() ? "," : "\n");
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                *os << num17(row[i]) << (i + 1 < row.size() ? "," : "\n");
        }
    }
};

struct SolveOptions {
    std::string preset;
    std::string region = "exterior";
    double omega = 10.0;
    bhnum::PhysParams params{1.0, 0.1, 1.0, 0};
    double r_min = 0.0, r_max = 0.0;  // 0 = derive from region/preset
    std::string bc_location = "right";
    double bc_re = 1.0, bc_im = 0.0, bc_slope_re = 0.0, bc_slope_im = 0.0;
    int steps = 4096;
    double tolerance = 1e-10;
    bool classical = false;
};

bhnum::RegionSpec build_spec(SolveOptions& o) {
    if (o.preset == "fig1a") {
        // exterior standing comparison: omega=10, lambda_p=1/10, psi=1, psi'=0 at r=10
        o.omega = 10.0;
        o.params = {1.0, 0.1, 1.0, 0};
        o.region = "exterior";
        o.r_min = 1.001;
        o.r_max = 10.0;
        o.bc_location = "right";
        o.bc_re = 1.0;
        o.bc_im = 0.0;
        o.bc_slope_re = 0.0;
        o.bc_slope_im = 0.0;
    } else if (o.preset == "fig1b") {
        // interior standing waves: omega=10, lambda_p=0.03, psi=0, psi'=1 near r=0
        o.omega = 10.0;
        o.params = {1.0, 0.03, 1.0, 0};
        o.region = "interior";
        o.r_min = 1e-3;
        o.r_max = 0.0;  // filled below from the region edge
        o.bc_location = "left";
        o.bc_re = 0.0;
        o.bc_im = 0.0;
        o.bc_slope_re = 1.0;
        o.bc_slope_im = 0.0;
    } else if (o.preset == "fig1c") {
        // interregnum amplification: omega=2.7, lambda_p=1/10, psi=1, psi'=0
        // on the horizon side
        o.omega = 2.7;
        o.params = {1.0, 0.1, 1.0, 0};
        o.region = "interregnum";
        o.bc_location = "right";
        o.bc_re = 1.0;
        o.bc_im = 0.0;
        o.bc_slope_re = 0.0;
        o.bc_slope_im = 0.0;
    } else if (!o.preset.empty()) {
        throw CLI::ValidationError("--preset", "unknown preset: " + o.preset);
    }
    if (o.classical) o.params.lambda_p = 0.0;

    bhnum::RegionSpec spec;
    if (o.region == "exterior") spec.region = bhnum::RegionSpec::Region::exterior;
    else if (o.region == "interior") spec.region = bhnum::RegionSpec::Region::interior;
    else if (o.region == "interregnum") spec.region = bhnum::RegionSpec::Region::interregnum;
    else throw CLI::ValidationError("--region", "unknown region: " + o.region);

    auto [lo, hi] = bhnum::region_bounds(spec.region, o.omega, o.params);
    const double inset = 1e-6 * o.params.gamma;
    spec.r_min = o.r_min > 0 ? o.r_min : lo + inset;
    spec.r_max = o.r_max > 0 ? o.r_max : (std::isfinite(hi) ? hi - inset : 10.0 * o.params.gamma);
    spec.bc_location = o.bc_location == "left" ? bhnum::RegionSpec::Side::left
                                               : bhnum::RegionSpec::Side::right;
    spec.bc_value = {o.bc_re, o.bc_im};
    spec.bc_slope = {o.bc_slope_re, o.bc_slope_im};
    spec.steps = o.steps;
    spec.tolerance = o.tolerance;
    return spec;
}

int run_symcheck(bool verbose) {
    auto results = symchecks::run_all();
    int failed = 0;
    for (const auto& r : results) {
        if (r.pass) {
            std::cout << "PASS  " << r.name << "  (" << r.cases << " cases)\n";
        } else {
            ++failed;
            std::cout << "FAIL  " << r.name;
            if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
            std::cout << "\n";
        }
        (void)verbose;
    }
    std::cout << (failed == 0 ? "symcheck: all " : "symcheck: FAILED ")
              << (failed == 0 ? std::to_string(results.size()) + " suites passed"
                              : std::to_string(failed) + " suites")
              << "\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"noncommutative black-hole wave operator toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file; flags override");
    app.allow_config_extras(false);

    bool json_out = false;
    app.add_flag("--json", json_out, "emit JSON instead of CSV");

    // --- symcheck ---
    auto* sym = app.add_subcommand("symcheck", "run the exact symbolic identity suite");
    bool sym_verbose = false;
    sym->add_flag("-v,--verbose", sym_verbose, "verbose output");

    // --- ricci ---
    auto* ricci = app.add_subcommand("ricci", "Ricci components for a static metric in F=f^2, H=h^2 form");
    std::string F_str = "1 - gam/r", H_str = "1/(1 - gam/r)";
    ricci->add_option("--F", F_str, "F(r) = f(r)^2 as a rational function of r, gam, K");
    ricci->add_option("--H", H_str, "H(r) = h(r)^2 as a rational function of r, gam, K");

    // --- dfield ---
    auto* dfieldc = app.add_subcommand("dfield", "tabulate D(omega, r)");
    double df_omega = 1.0;
    bhnum::PhysParams df_params{1.0, 0.1, 1.0, 0};
    double df_rmin = 0.1, df_rmax = 3.0;
    int df_steps = 256;
    std::string df_out;
    dfieldc->add_option("--omega", df_omega, "mode frequency (signed)");
    dfieldc->add_option("--lambda-p", df_params.lambda_p, "Planck-scale parameter");
    dfieldc->add_option("--gamma", df_params.gamma, "Schwarzschild radius");
    dfieldc->add_option("--rmin", df_rmin, "grid start");
    dfieldc->add_option("--rmax", df_rmax, "grid end");
    dfieldc->add_option("--steps", df_steps, "grid intervals");
    dfieldc->add_option("--out", df_out, "output path (default stdout)");

    // --- solve ---
    auto* solve = app.add_subcommand("solve", "integrate the radial wave equation over one region");
    SolveOptions so;
    std::string solve_out;
    solve->add_option("--preset", so.preset, "fig1a | fig1b | fig1c");
    solve->add_option("--region", so.region, "exterior | interregnum | interior");
    solve->add_option("--omega", so.omega, "mode frequency");
    solve->add_option("--lambda-p", so.params.lambda_p, "Planck-scale parameter");
    solve->add_option("--gamma", so.params.gamma, "Schwarzschild radius");
    solve->add_option("--c", so.params.c, "speed of light");
    solve->add_option("--l", so.params.l, "orbital angular momentum");
    solve->add_option("--rmin", so.r_min, "grid start (default: region edge + inset)");
    solve->add_option("--rmax", so.r_max, "grid end (default: region edge - inset)");
    solve->add_option("--bc", so.bc_location, "boundary side: left | right");
    solve->add_option("--bc-psi-re", so.bc_re, "Re psi at the boundary");
    solve->add_option("--bc-psi-im", so.bc_im, "Im psi at the boundary");
    solve->add_option("--bc-dpsi-re", so.bc_slope_re, "Re psi' at the boundary");
    solve->add_option("--bc-dpsi-im", so.bc_slope_im, "Im psi' at the boundary");
    solve->add_option("--steps", so.steps, "output grid intervals");
    solve->add_option("--tol", so.tolerance, "adaptive tolerance");
    solve->add_flag("--classical", so.classical, "force lambda_p = 0");
    solve->add_option("--out", solve_out, "output path (default stdout)");

    // --- redshift ---
    auto* red = app.add_subcommand("redshift", "gravitational redshift 1+z over a grid, plus z_max");
    double rs_omega = 1.0;
    bhnum::PhysParams rs_params{1.0, 0.1, 1.0, 0};
    double rs_rmin = 1.1, rs_rmax = 10.0;
    int rs_steps = 128;
    bool rs_si = false;
    std::string rs_out;
    red->add_option("--omega", rs_omega, "mode frequency (rad/s in SI mode)");
    red->add_option("--lambda-p", rs_params.lambda_p, "Planck-scale parameter (s in SI mode)");
    red->add_option("--gamma", rs_params.gamma, "Schwarzschild radius (m in SI mode)");
    red->add_option("--rmin", rs_rmin, "grid start");
    red->add_option("--rmax", rs_rmax, "grid end");
    red->add_option("--steps", rs_steps, "grid intervals");
    red->add_flag("--si", rs_si, "SI units: c = 2.99792458e8 m/s");
    red->add_option("--out", rs_out, "output path (default stdout)");

    // --- cycles ---
    auto* cyc = app.add_subcommand("cycles", "interior standing-wave diagnostics");
    double cy_omega = 16.0;
    bhnum::PhysParams cy_params{1.0, 1.0 / 16.0, 1.0, 0};
    int cy_steps = 20000;
    double cy_tol = 1e-10;
    cyc->add_option("--omega", cy_omega, "mode frequency");
    cyc->add_option("--lambda-p", cy_params.lambda_p, "Planck-scale parameter");
    cyc->add_option("--gamma", cy_params.gamma, "Schwarzschild radius");
    cyc->add_option("--c", cy_params.c, "speed of light");
    cyc->add_option("--steps", cy_steps, "output grid intervals");
    cyc->add_option("--tol", cy_tol, "adaptive tolerance");

    // --- deficit ---
    auto* def = app.add_subcommand("deficit", "harmonic distance deficit per cycle and accumulation length");
    double de_omega = 0.0, de_wavelength = 1e-10;
    double de_gamma_over_r = 0.1;
    int de_n = 10;
    double de_lambda_p = 5.391247e-44;
    bool de_si = true;
    def->add_option("--omega", de_omega, "base frequency (overrides --wavelength)");
    def->add_option("--wavelength", de_wavelength, "base wavelength in m (omega = c/wavelength)");
    def->add_option("--gamma-over-r", de_gamma_over_r, "gamma/r at the emission radius");
    def->add_option("--n", de_n, "harmonic multiple");
    def->add_option("--lambda-p", de_lambda_p, "Planck-scale time in s");
    def->add_flag("--si,!--geometric", de_si, "SI units (default)");

    // --- apply ---
    auto* ap = app.add_subcommand("apply", "apply an operator to a parsed expression");
    std::string ap_expr = "t^2", ap_op = "d", ap_beta = "1", ap_geometry = "flat";
    std::string ap_drift;
    ap->add_option("--expr", ap_expr, "expression (grammar: see README)");
    ap->add_option("--op", ap_op, "d | box | partial0 | delta0 | tau | laplacian | assembled");
    ap->add_option("--beta", ap_beta, "beta(r) for the calculus");
    ap->add_option("--geometry", ap_geometry, "flat | flat-drift | schwarzschild-laurent");
    ap->add_option("--drift", ap_drift, "q(r) = beta'/(2 beta) for flat-drift");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*sym) return run_symcheck(sym_verbose);

        if (*ricci) {
            clgeom::RationalFunction F = clgeom::parse_ratfn(F_str);
            clgeom::RationalFunction H = clgeom::parse_ratfn(H_str);
            clgeom::RicciComponents ric = clgeom::ricci_static4(F, H);
            std::cout << "c_ang = " << ric.c_ang.str() << "\n";
            std::cout << "c_rr  = " << ric.c_rr.str() << "\n";
            std::cout << "c_tt  = " << ric.c_tt.str() << "\n";
            std::cout << "RICCI-FLAT: " << (ric.all_zero() ? "PASS" : "FAIL") << "\n";
            clgeom::RationalFunction residual = clgeom::einstein_residual(H);
            std::cout << "EINSTEIN (3-geometry): "
                      << (residual.is_zero() ? "PASS" : "FAIL") << "\n";
            return 0;
        }

        if (*dfieldc) {
            df_params.validate();
            std::vector<std::vector<double>> rows;
            for (int i = 0; i <= df_steps; ++i) {
                double r = df_rmin + (df_rmax - df_rmin) * double(i) / df_steps;
                bhnum::Complex D = df_params.classical()
                                       ? bhnum::Complex(bhnum::dfield_classical(df_omega, r, df_params), 0)
                                       : bhnum::dfield(df_omega, r, df_params);
                rows.push_back({r, D.real(), D.imag()});
            }
            OutputSink{df_out, json_out}.write_table({"r", "re_D", "im_D"}, rows);
            return 0;
        }

        if (*solve) {
            bhnum::RegionSpec spec = build_spec(so);
            bhnum::RegionSolution sol = bhnum::solve_region(spec, so.omega, so.params);
            std::vector<std::vector<double>> rows;
            for (std::size_t i = 0; i < sol.r.size(); ++i)
                rows.push_back({sol.r[i], sol.psi[i].real(), sol.psi[i].imag(),
                                std::abs(sol.psi[i]), sol.dpsi[i].real(),
                                sol.dpsi[i].imag()});
            OutputSink{solve_out, json_out}.write_table(
                {"r", "re_psi", "im_psi", "abs_psi", "re_dpsi", "im_dpsi"}, rows);
            if (sol.diverged)
                std::cerr << "note: divergence cap reached; solution truncated\n";
            return 0;
        }

        if (*red) {
            if (rs_si) rs_params.c = 2.99792458e8;
            rs_params.validate();
            std::vector<std::vector<double>> rows;
            for (int i = 0; i <= rs_steps; ++i) {
                double r = rs_rmin + (rs_rmax - rs_rmin) * double(i) / rs_steps;
                rows.push_back({r, bhnum::redshift(rs_omega, r, rs_params)});
            }
            OutputSink{rs_out, json_out}.write_table({"r", "one_plus_z"}, rows);
            std::cout << "z_max = " << num17(bhnum::zmax(rs_omega, rs_params)) << "\n";
            return 0;
        }

        if (*cyc) {
            bhnum::RegionSpec spec;
            spec.region = bhnum::RegionSpec::Region::interior;
            auto [lo, hi] = bhnum::region_bounds(spec.region, cy_omega, cy_params);
            (void)lo;
            spec.r_min = 1e-4 * cy_params.gamma;
            spec.r_max = hi - 1e-6 * cy_params.gamma;
            spec.bc_location = bhnum::RegionSpec::Side::left;
            spec.bc_value = {0.0, 0.0};
            spec.bc_slope = {1.0, 0.0};
            spec.steps = cy_steps;
            spec.tolerance = cy_tol;
            bhnum::RegionSolution sol = bhnum::solve_region(spec, cy_omega, cy_params);
            bhnum::Diagnostics d = bhnum::diagnostics(sol);
            json j;
            j["omega_over_nu"] = cy_omega * cy_params.gamma / cy_params.c;
            j["omega_lambda_p"] = cy_omega * cy_params.lambda_p;
            j["zero_crossings"] = d.zero_crossings;
            j["cycle_count"] = d.cycle_count;
            j["max_amplitude"] = d.max_amplitude;
            j["interior_edge"] = hi;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*def) {
            bhnum::PhysParams p;
            p.c = de_si ? 2.99792458e8 : 1.0;
            p.lambda_p = de_lambda_p;
            double omega = de_omega > 0 ? de_omega : p.c / de_wavelength;
            // only gamma/r enters; use a few-km hole as the reference scale
            p.gamma = de_si ? 3000.0 : 1.0;
            double r = p.gamma / de_gamma_over_r;
            bhnum::HarmonicShift hs = bhnum::harmonic_shift(omega, de_n, r, p);
            json j;
            j["omega"] = omega;
            j["n"] = de_n;
            if (hs.exact_resolvable) j["deficit_exact"] = hs.deficit_exact;
            else j["deficit_exact"] = "below double precision at this omega*lambda_p";
            j["deficit_approx"] = hs.deficit_approx;
            j["accumulation_length_m"] = hs.accumulation_length;
            j["accumulation_length_ly"] = hs.accumulation_length / 9.4607e15;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*ap) {
            ncalg::ModelConfig unit = ncalg::ModelConfig::with_beta(ncalg::AlgebraElement::one());
            ncalg::ModelConfig model =
                ncalg::ModelConfig::with_beta(ncalg::parse_element(ap_beta, unit));
            if (!ap_drift.empty())
                model.drift = ncalg::parse_element(ap_drift, model);
            ncalg::Parsed parsed = ncalg::parse(ap_expr, model);
            if (std::holds_alternative<ncalg::FormSum>(parsed)) {
                if (ap_op != "format")
                    throw CLI::ValidationError("--expr", "operators act on degree-0 expressions");
                std::cout << ncalg::format(parsed) << "\n";
                return 0;
            }
            const ncalg::AlgebraElement psi = std::get<ncalg::AlgebraElement>(parsed);
            if (ap_op == "d") {
                std::cout << ncalg::format(waveops::exterior_d(psi, model)) << "\n";
            } else if (ap_op == "box") {
                std::cout << ncalg::format(waveops::wave_extract(psi, model).wave_op())
                          << "\n";
            } else if (ap_op == "partial0") {
                std::cout << ncalg::format(waveops::partial0(psi)) << "\n";
            } else if (ap_op == "delta0") {
                std::cout << ncalg::format(waveops::delta0(psi, model)) << "\n";
            } else if (ap_op == "tau") {
                std::cout << ncalg::format(ncalg::tau(psi)) << "\n";
            } else if (ap_op == "laplacian") {
                std::cout << ncalg::format(ncalg::laplacian_flat(psi)) << "\n";
            } else if (ap_op == "assembled") {
                waveops::Geometry g = waveops::Geometry::flat;
                if (ap_geometry == "flat-drift") g = waveops::Geometry::flat_drift;
                else if (ap_geometry == "schwarzschild-laurent")
                    g = waveops::Geometry::schwarzschild_laurent;
                else if (ap_geometry != "flat")
                    throw CLI::ValidationError("--geometry", "unknown geometry");
                std::cout << ncalg::format(waveops::wave_assembled(psi, model, g)) << "\n";
            } else if (ap_op == "format") {
                std::cout << ncalg::format(psi) << "\n";
            } else {
                throw CLI::ValidationError("--op", "unknown operator: " + ap_op);
            }
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ncalg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
