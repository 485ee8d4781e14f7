// Command-line front end: every capability of the library with file-based,
// bit-reproducible outputs. One command per invocation; all writes go to the
// --out directory, and every resolved value is echoed into run-manifest.json
// so a run can be reproduced exactly from its manifest alone.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical precondition
// violation (domain/runtime failure raised during the computation itself).

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlandau/analytic.hpp"
#include "qlandau/config.hpp"
#include "qlandau/dynamics.hpp"
#include "qlandau/eigensolve.hpp"
#include "qlandau/grid.hpp"
#include "qlandau/io.hpp"
#include "qlandau/operators.hpp"
#include "qlandau/thermal.hpp"
#include "qlandau/units.hpp"

using json = nlohmann::ordered_json;
using namespace qlandau;

namespace {

// potassium-40, the reference species; used when mass_kg is not configured
constexpr double DEFAULT_MASS_KG = 39.9639985 * AMU;

struct Resolved {
    PhysParams p;
    std::optional<double> beta;        // direct beta_soc parameterization
    std::optional<double> vx;          // m/s
    std::optional<double> temperature; // K
    bool mass_defaulted = false;
    std::string out_dir = ".";
    bool quiet = false;
    long long seed = 0;
};

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail_config(const std::string& msg) { throw CliError{2, msg}; }

json params_json(const Resolved& r) {
    json j;
    j["mass_kg"] = r.p.mass;
    j["mass_defaulted"] = r.mass_defaulted;
    j["alpha"] = r.p.alpha;
    j["gamma"] = r.p.gamma;
    if (r.beta)
        j["beta_soc"] = *r.beta;
    else
        j["beta_soc"] = nullptr;
    if (r.vx)
        j["vx"] = *r.vx;
    else
        j["vx"] = nullptr;
    if (r.temperature)
        j["temperature_K"] = *r.temperature;
    else
        j["temperature_K"] = nullptr;
    j["hbar"] = r.p.hbar;
    j["kB"] = r.p.kB;
    j["eV"] = r.p.eV;
    return j;
}

void write_manifest(const Resolved& r, const std::string& command,
                    const json& options, const std::vector<std::string>& outputs) {
    json m;
    m["command"] = command;
    m["params"] = params_json(r);
    m["options"] = options;
    m["outputs"] = outputs;
    m["seed"] = r.seed;
    auto out = open_out(r.out_dir + "/run-manifest.json");
    out << m.dump(2) << '\n';
}

// coupling for SI computations: direct beta_soc wins over alpha*gamma and is
// canonicalized to alpha = 1, gamma = beta/hbar (only the product enters).
void resolve_coupling(Resolved& r) {
    if (r.beta) {
        if (!(*r.beta > 0.0)) fail_config("beta_soc must be > 0");
        r.p.alpha = 1.0;
        r.p.gamma = *r.beta / r.p.hbar;
    } else if (!(r.p.alpha > 0.0) || !(r.p.gamma > 0.0)) {
        fail_config("missing coupling: set `alpha` and `gamma`, or `beta_soc` "
                    "(config keys or --alpha/--gamma/--beta)");
    }
}

double require_vx(const Resolved& r) {
    if (!r.vx)
        fail_config("missing required key `vx` (set it in the config file or pass --vx)");
    if (!(*r.vx > 0.0)) fail_config("vx must be > 0");
    return *r.vx;
}

// reference longitudinal wave number: explicit --kx wins, else m vx / hbar
double resolve_kx(const Resolved& r, double kx_flag, bool kx_set) {
    if (kx_set) {
        if (!(kx_flag > 0.0)) fail_config("--kx must be > 0 (populated torus branch)");
        return kx_flag;
    }
    return r.p.mass * require_vx(r) / r.p.hbar;
}

int cmd_estimate(const Resolved& r) {
    const double vx = require_vx(r);
    if (!r.beta && (!(r.p.alpha > 0.0) || !(r.p.gamma > 0.0)))
        fail_config("missing coupling: set `alpha` and `gamma`, or `beta_soc` "
                    "(config keys or --alpha/--gamma/--beta)");
    const auto rep = estimate_gap(r.p, vx, r.beta);

    json j;
    j["omega_c_per_s"] = rep.omega_c;
    j["gap_J"] = rep.gap_J;
    j["gap_eV"] = rep.gap_eV;
    j["temperature_K"] = rep.temperature_K;
    j["vx"] = rep.vx;
    j["params"] = params_json(r);
    {
        auto out = open_out(r.out_dir + "/estimate.json");
        out << j.dump(2) << '\n';
    }
    {
        auto out = open_out(r.out_dir + "/estimate.txt");
        out << "omega_c     = " << fmt17(rep.omega_c) << " s^-1\n"
            << "gap         = " << fmt17(rep.gap_J) << " J = " << fmt17(rep.gap_eV)
            << " eV\n"
            << "temperature = " << fmt17(rep.temperature_K) << " K\n";
    }
    if (!r.quiet)
        std::cout << "omega_c     = " << fmt17(rep.omega_c) << " s^-1\n"
                  << "gap         = " << fmt17(rep.gap_J) << " J = "
                  << fmt17(rep.gap_eV) << " eV\n"
                  << "temperature = " << fmt17(rep.temperature_K) << " K\n";

    json opts;
    opts["vx"] = vx;
    write_manifest(r, "estimate", opts, {"estimate.json", "estimate.txt"});
    return 0;
}

int cmd_spectrum(Resolved& r, double k_max_flag, bool k_max_set, int n_bands,
                 int n_k) {
    resolve_coupling(r);
    if (n_bands < 1) fail_config("--n-bands must be >= 1");
    if (n_k < 2) fail_config("--n-k must be >= 2");
    const double k_max = resolve_kx(r, k_max_flag, k_max_set);
    const auto scan = spectrum_scan(r.p, k_max, n_bands, n_k);
    write_spectrum_csv(r.out_dir + "/spectrum.csv", scan);
    if (!r.quiet)
        std::cout << "spectrum.csv: " << n_bands << " bands x " << n_k
                  << " kx points, omega_c(k_max) = " << fmt17(scan.omega_max)
                  << " s^-1\n";
    json opts;
    opts["k_max_per_m"] = k_max;
    opts["n_bands"] = n_bands;
    opts["n_k"] = n_k;
    write_manifest(r, "spectrum", opts, {"spectrum.csv"});
    return 0;
}

int cmd_eigen(Resolved& r, double kx_flag, bool kx_set, int n_levels, int n_points,
              const std::string& method, bool want_potential, bool want_density) {
    resolve_coupling(r);
    if (n_levels < 1) fail_config("--n-levels must be >= 1");
    if (n_points < 16) fail_config("--n-points must be >= 16");
    EigenMethod em;
    if (method == "bisect")
        em = EigenMethod::BisectionInverseIteration;
    else if (method == "ql")
        em = EigenMethod::QL;
    else
        fail_config("--method must be `bisect` or `ql`");

    const double kx = resolve_kx(r, kx_flag, kx_set);
    const Sector s{kx, +1};
    const Grid1D grid = default_grid(r.p, s, n_levels, n_points);
    const auto op = build_effective_1d(r.p, s, grid);
    const auto res = lowest_eigenpairs(op, n_levels, em);
    write_eigen_csv(r.out_dir + "/eigen.csv", res, r.p, s);

    std::vector<std::string> outputs = {"eigen.csv"};
    if (want_potential) {
        write_potential_csv(r.out_dir + "/potential.csv", grid,
                            potential_profile(r.p, s, grid));
        outputs.push_back("potential.csv");
    }
    if (want_density) {
        std::vector<EigenfunctionSample> samples;
        for (int n = 0; n < n_levels; ++n)
            samples.push_back(eigenfunction(r.p, s, n, grid.points()));
        write_density_csv(r.out_dir + "/density.csv", samples);
        outputs.push_back("density.csv");
    }
    if (!r.quiet) {
        const auto rep = compare_to_analytic(res, r.p, s);
        std::cout << "eigen.csv: " << n_levels << " levels on " << n_points
                  << " points, max rel error " << fmt17(rep.max_rel_error) << '\n';
    }
    json opts;
    opts["kx_per_m"] = kx;
    opts["n_levels"] = n_levels;
    opts["n_points"] = n_points;
    opts["method"] = method;
    opts["grid_y_min_m"] = grid.y_min;
    opts["grid_y_max_m"] = grid.y_max;
    write_manifest(r, "eigen", opts, outputs);
    return 0;
}

int cmd_evolve(Resolved& r, double kx_flag, bool kx_set, int mode, int nx, int ny,
               double y_extent, double y_trap, double width, double dt_nat,
               double t_end_nat, int n_steps_flag, bool no_absorber,
               int report_stride, int snapshot_stride, const std::string& spin_name) {
    resolve_coupling(r);
    if (mode < 1) fail_config("--mode must be >= 1");
    if (y_extent <= 0.0 || y_trap <= 0.0 || width <= 0.0)
        fail_config("--y-extent, --y-trap and --width must be > 0");
    if (y_trap >= y_extent) fail_config("--y-trap must be below --y-extent");
    if (dt_nat <= 0.0) fail_config("--dt must be > 0");
    if (report_stride < 1) fail_config("--report-stride must be >= 1");
    if (snapshot_stride < 0) fail_config("--snapshot-stride must be >= 0");
    SpinChoice spin;
    if (spin_name == "plus")
        spin = SpinChoice::Plus;
    else if (spin_name == "minus")
        spin = SpinChoice::Minus;
    else if (spin_name == "super")
        spin = SpinChoice::Superposition;
    else
        fail_config("--spin must be `plus`, `minus` or `super`");

    const double kx_ref = resolve_kx(r, kx_flag, kx_set);
    const UnitScale u = to_natural_units(r.p, kx_ref);

    // dimensionless problem: hbar = m = omega_c(kx_ref) = l = 1
    const double kx_nat = kx_ref * u.length;
    const PhysParams p_nat = natural_params(0.5 / kx_nat);
    const double Lx_nat = 2.0 * PI * mode / kx_nat; // mode j sits exactly at kx_nat
    const Grid2D grid(Lx_nat, nx, -y_extent, y_extent, ny,
                      no_absorber ? BoundaryY::None : BoundaryY::MaskAbsorber);

    const int n_steps =
        n_steps_flag > 0 ? n_steps_flag
                         : static_cast<int>(std::lround(t_end_nat / dt_nat));
    if (n_steps < 1) fail_config("need at least one step: raise --t-end or --n-steps");

    auto f0 = initial_packet(grid, p_nat, kx_nat, width, spin);
    EvolveOptions opt;
    opt.absorber = !no_absorber;
    opt.report_stride = report_stride;
    opt.y_trap = y_trap;
    opt.snapshot_stride = snapshot_stride;
    opt.snapshot_prefix = r.out_dir + "/snapshot";
    auto [ff, rep] = evolve(std::move(f0), p_nat, dt_nat, n_steps, opt);

    // convert the report to SI before writing
    for (double& t : rep.times) t *= u.time;
    for (double& w : rep.width_plus) w *= u.length;
    for (double& w : rep.width_minus) w *= u.length;
    write_evolution_csv(r.out_dir + "/evolution.csv", rep);
    if (!r.quiet)
        std::cout << "evolution.csv: " << rep.times.size() << " samples to t = "
                  << fmt17(rep.times.back()) << " s; final survival (+, -) = ("
                  << fmt17(rep.survival_plus.back()) << ", "
                  << fmt17(rep.survival_minus.back()) << ")\n";

    json opts_j;
    opts_j["kx_per_m"] = kx_ref;
    opts_j["mode"] = mode;
    opts_j["nx"] = nx;
    opts_j["ny"] = ny;
    opts_j["y_extent_l"] = y_extent;
    opts_j["y_trap_l"] = y_trap;
    opts_j["width_l"] = width;
    opts_j["dt_natural"] = dt_nat;
    opts_j["n_steps"] = n_steps;
    opts_j["absorber"] = !no_absorber;
    opts_j["report_stride"] = report_stride;
    opts_j["snapshot_stride"] = snapshot_stride;
    opts_j["spin"] = spin_name;
    json scale_j;
    scale_j["omega_c_per_s"] = u.omega_c;
    scale_j["length_m"] = u.length;
    scale_j["energy_J"] = u.energy;
    scale_j["time_s"] = u.time;
    opts_j["unit_scale"] = scale_j;
    std::vector<std::string> outputs = {"evolution.csv"};
    if (snapshot_stride > 0) {
        for (int step = 0; step <= n_steps; step += snapshot_stride) {
            char name[40];
            std::snprintf(name, sizeof name, "snapshot_step%06d.bin", step);
            outputs.push_back(name);
        }
    }
    write_manifest(r, "evolve", opts_j, outputs);
    return 0;
}

int cmd_thermal(Resolved& r, double k_lo_flag, bool k_lo_set, int n_levels,
                int bins, double sigma_frac) {
    resolve_coupling(r);
    if (n_levels < 1) fail_config("--n-levels must be >= 1");
    if (bins < 64) fail_config("--bins must be >= 64");
    if (sigma_frac <= 0.0) fail_config("--sigma-frac must be > 0");
    if (!r.temperature)
        fail_config("missing required key `temperature_K` "
                    "(set it in the config file or pass --temperature)");

    const double k_lo = resolve_kx(r, k_lo_flag, k_lo_set);
    const auto ens = make_ensemble(r.p, *r.temperature, k_lo);
    const double sigma_E = sigma_frac * r.p.hbar * cyclotron_frequency(r.p, k_lo);
    const auto d = smeared_spectrum(ens, r.p, n_levels, bins, sigma_E);
    write_thermal_csv(r.out_dir + "/thermal.csv", d, r.p);
    if (!r.quiet) {
        const auto peaks = detect_peaks(d.weights);
        std::cout << "thermal.csv: " << bins << " bins, " << peaks.size()
                  << " resolved peaks, gap visibility "
                  << fmt17(gap_visibility(d)) << '\n';
    }
    json opts;
    opts["k_lo_per_m"] = k_lo;
    opts["k_cut_per_m"] = ens.k_cut;
    opts["temperature_K"] = *r.temperature;
    opts["n_levels"] = n_levels;
    opts["bins"] = bins;
    opts["sigma_frac"] = sigma_frac;
    opts["sigma_E_J"] = sigma_E;
    write_manifest(r, "thermal", opts, {"thermal.csv"});
    return 0;
}

int cmd_convergence(Resolved& r, double kx_flag, bool kx_set,
                    const std::string& n_points_list, int n_levels,
                    double extent_lengths) {
    resolve_coupling(r);
    if (n_levels < 1) fail_config("--n-levels must be >= 1");
    std::vector<int> list;
    {
        std::string tok;
        std::istringstream ss(n_points_list);
        while (std::getline(ss, tok, ',')) {
            try {
                std::size_t used = 0;
                const int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                list.push_back(v);
            } catch (const std::exception&) {
                fail_config("--n-points-list must be comma-separated integers, got `" +
                            tok + "`");
            }
        }
    }
    if (list.empty()) fail_config("--n-points-list is empty");

    const double kx = resolve_kx(r, kx_flag, kx_set);
    const auto t = convergence_study(r.p, Sector{kx, +1}, list, n_levels,
                                     extent_lengths);
    write_convergence_csv(r.out_dir + "/convergence.csv", t);
    if (!r.quiet)
        std::cout << "convergence.csv: fitted order " << fmt17(t.fitted_order)
                  << (t.truncation_dominated ? " (truncation dominated)" : "")
                  << '\n';
    json opts;
    opts["kx_per_m"] = kx;
    opts["n_points_list"] = list;
    opts["n_levels"] = n_levels;
    opts["extent_lengths"] = extent_lengths;
    write_manifest(r, "convergence", opts, {"convergence.csv"});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-Landau levels of spin-orbit coupled neutral atoms: "
                 "estimates, spectra, eigensolves, wave-packet runs, thermal smearing"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".";
    bool quiet = false;
    long long seed = 0;
    app.add_option("--config", config_path, "key = value parameter file");
    app.add_option("--out", out_dir, "output directory (created if missing)");
    app.add_flag("--quiet", quiet, "suppress the stdout summary");
    app.add_option("--seed", seed, "RNG seed, recorded in the manifest "
                                   "(only test utilities consume it)");

    double f_mass = 0, f_alpha = 0, f_gamma = 0, f_beta = 0, f_vx = 0, f_temp = 0;
    auto* o_mass = app.add_option("--mass", f_mass, "particle mass [kg]");
    auto* o_alpha = app.add_option("--alpha", f_alpha, "moment-field coupling [m^2/(V s)]");
    auto* o_gamma = app.add_option("--gamma", f_gamma, "field curvature [V/m^3]");
    auto* o_beta = app.add_option("--beta", f_beta, "direct coupling beta_soc [kg m/s^2]");
    auto* o_vx = app.add_option("--vx", f_vx, "longitudinal speed [m/s]");
    auto* o_temp = app.add_option("--temperature", f_temp, "ensemble temperature [K]");

    auto* sc_estimate = app.add_subcommand("estimate", "level spacing and temperature scale");
    sc_estimate->fallthrough();

    auto* sc_spectrum = app.add_subcommand("spectrum", "band structure E_n(kx) scan");
    sc_spectrum->fallthrough();
    double k_max = 0;
    int sp_bands = 5, sp_nk = 200;
    auto* o_kmax = sc_spectrum->add_option("--k-max", k_max, "scan limit [1/m]; default m*vx/hbar");
    sc_spectrum->add_option("--n-bands", sp_bands, "bands to tabulate (default 5)");
    sc_spectrum->add_option("--n-k", sp_nk, "kx samples (default 200)");

    auto* sc_eigen = app.add_subcommand("eigen", "finite-difference eigensolve vs closed forms");
    sc_eigen->fallthrough();
    double eig_kx = 0;
    int eig_levels = 8, eig_points = DEFAULT_GRID_POINTS;
    std::string eig_method = "bisect";
    bool eig_pot = false, eig_dens = false;
    auto* o_eigkx = sc_eigen->add_option("--kx", eig_kx, "longitudinal wave number [1/m]; default m*vx/hbar");
    sc_eigen->add_option("--n-levels", eig_levels, "levels to solve (default 8)");
    sc_eigen->add_option("--n-points", eig_points, "grid points (default 32768)");
    sc_eigen->add_option("--method", eig_method, "bisect | ql (default bisect)");
    sc_eigen->add_flag("--write-potential", eig_pot, "also write potential.csv (y, V)");
    sc_eigen->add_flag("--write-density", eig_dens, "also write density.csv (y, n, density)");

    auto* sc_evolve = app.add_subcommand("evolve", "split-operator wave-packet run");
    sc_evolve->fallthrough();
    double ev_kx = 0, ev_yext = 17.0, ev_ytrap = 5.0;
    double ev_width = 0.70710678118654752; // channel ground state: l / sqrt(2)
    double ev_dt = 0.01, ev_tend = 20.0 * PI;
    int ev_mode = 6, ev_nx = 16, ev_ny = 256, ev_nsteps = 0;
    int ev_rstride = 100, ev_sstride = 0;
    bool ev_noabs = false;
    std::string ev_spin = "super";
    auto* o_evkx = sc_evolve->add_option("--kx", ev_kx, "reference wave number [1/m]; default m*vx/hbar");
    sc_evolve->add_option("--mode", ev_mode, "torus mode index j; Lx = 2 pi j / kx (default 6)");
    sc_evolve->add_option("--nx", ev_nx, "x grid points, power of two (default 16)");
    sc_evolve->add_option("--ny", ev_ny, "y grid points, power of two (default 256)");
    sc_evolve->add_option("--y-extent", ev_yext, "half-range of y [oscillator lengths] (default 17)");
    sc_evolve->add_option("--y-trap", ev_ytrap, "survival window half-width [oscillator lengths] (default 5)");
    sc_evolve->add_option("--width", ev_width, "packet density rms [oscillator lengths] (default 1/sqrt(2), the channel ground state)");
    sc_evolve->add_option("--dt", ev_dt, "time step [1/omega_c] (default 0.01)");
    sc_evolve->add_option("--t-end", ev_tend, "end time [1/omega_c] (default 20 pi = 10 periods)");
    sc_evolve->add_option("--n-steps", ev_nsteps, "step count; overrides --t-end when > 0");
    sc_evolve->add_option("--report-stride", ev_rstride, "steps between samples (default 100)");
    sc_evolve->add_option("--snapshot-stride", ev_sstride, "steps between density snapshots (0 = none)");
    sc_evolve->add_flag("--no-absorber", ev_noabs, "disable the boundary absorber (enables the spill monitor)");
    sc_evolve->add_option("--spin", ev_spin, "plus | minus | super (default super)");

    auto* sc_thermal = app.add_subcommand("thermal", "Boltzmann-smeared spectral density");
    sc_thermal->fallthrough();
    double th_klo = 0, th_sigma = 0.02;
    int th_levels = 5, th_bins = 512;
    auto* o_thklo = sc_thermal->add_option("--k-lo", th_klo, "infrared cutoff [1/m]; default m*vx/hbar");
    sc_thermal->add_option("--n-levels", th_levels, "levels in the ensemble (default 5)");
    sc_thermal->add_option("--bins", th_bins, "energy bins (default 512)");
    sc_thermal->add_option("--sigma-frac", th_sigma,
                           "instrumental broadening as a fraction of hbar omega_c(k_lo) (default 0.02)");

    auto* sc_conv = app.add_subcommand("convergence", "grid-refinement study of eigenvalue error");
    sc_conv->fallthrough();
    double cv_kx = 0, cv_extent = -1.0;
    std::string cv_list = "256,512,1024,2048";
    int cv_levels = 8;
    auto* o_cvkx = sc_conv->add_option("--kx", cv_kx, "longitudinal wave number [1/m]; default m*vx/hbar");
    sc_conv->add_option("--n-points-list", cv_list, "comma-separated grid sizes (default 256,512,1024,2048)");
    sc_conv->add_option("--n-levels", cv_levels, "levels compared (default 8)");
    sc_conv->add_option("--extent-lengths", cv_extent,
                        "grid half-extent [oscillator lengths]; default sqrt(2k+1)+6");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Resolved r;
        r.out_dir = out_dir;
        r.quiet = quiet;
        r.seed = seed;

        KeyValueConfig cfg;
        if (!config_path.empty()) {
            try {
                cfg = KeyValueConfig::from_file(config_path);
            } catch (const std::exception& e) {
                fail_config(e.what());
            }
        }
        if (o_mass->count()) cfg.set("mass_kg", f_mass);
        if (o_alpha->count()) cfg.set("alpha", f_alpha);
        if (o_gamma->count()) cfg.set("gamma", f_gamma);
        if (o_beta->count()) cfg.set("beta_soc", f_beta);
        if (o_vx->count()) cfg.set("vx", f_vx);
        if (o_temp->count()) cfg.set("temperature_K", f_temp);

        if (auto m = cfg.get("mass_kg")) {
            r.p.mass = *m;
        } else {
            r.p.mass = DEFAULT_MASS_KG;
            r.mass_defaulted = true;
        }
        r.p.alpha = cfg.get("alpha").value_or(0.0);
        r.p.gamma = cfg.get("gamma").value_or(0.0);
        r.beta = cfg.get("beta_soc");
        r.vx = cfg.get("vx");
        r.temperature = cfg.get("temperature_K");
        if (!(r.p.mass > 0.0)) fail_config("mass_kg must be > 0");
        if (r.p.alpha < 0.0 || r.p.gamma < 0.0)
            fail_config("alpha and gamma must be >= 0");

        std::error_code ec;
        std::filesystem::create_directories(r.out_dir, ec);
        if (ec) fail_config("cannot create output directory: " + r.out_dir);

        if (sc_estimate->parsed()) return cmd_estimate(r);
        if (sc_spectrum->parsed())
            return cmd_spectrum(r, k_max, o_kmax->count() > 0, sp_bands, sp_nk);
        if (sc_eigen->parsed())
            return cmd_eigen(r, eig_kx, o_eigkx->count() > 0, eig_levels, eig_points,
                             eig_method, eig_pot, eig_dens);
        if (sc_evolve->parsed())
            return cmd_evolve(r, ev_kx, o_evkx->count() > 0, ev_mode, ev_nx, ev_ny,
                              ev_yext, ev_ytrap, ev_width, ev_dt, ev_tend,
                              ev_nsteps, ev_noabs, ev_rstride, ev_sstride, ev_spin);
        if (sc_thermal->parsed())
            return cmd_thermal(r, th_klo, o_thklo->count() > 0, th_levels, th_bins,
                               th_sigma);
        if (sc_conv->parsed())
            return cmd_convergence(r, cv_kx, o_cvkx->count() > 0, cv_list, cv_levels,
                                   cv_extent);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
