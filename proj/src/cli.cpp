#include "decoshell/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <omp.h>

#include "decoshell/config.hpp"
#include "decoshell/csv.hpp"
#include "decoshell/errors.hpp"
#include "decoshell/figures.hpp"
#include "decoshell/kernels.hpp"
#include "decoshell/platforms.hpp"
#include "decoshell/rates.hpp"
#include "decoshell/selftest.hpp"
#include "decoshell/sweep.hpp"

namespace decoshell {

namespace {

struct Args {
    std::string config;
    std::string out;
    std::vector<std::string> sets;
    bool svg = false;
    int figure = 0;
    std::string quantity = "resonant";
    int threads = 0;
    std::vector<std::string> axes;
    double ky = 0.0;
};

Axis parse_axis(const std::string& spec) {
    // name:min:max:count[:log]
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() < 4 || parts.size() > 5)
        throw ConfigError("axis spec must be name:min:max:count[:log], got '" + spec + "'");
    Axis a;
    a.name = parts[0];
    try {
        a.min = std::stod(parts[1]);
        a.max = std::stod(parts[2]);
        const long n = std::stol(parts[3]);
        if (n < 2) throw ConfigError("axis count must be >= 2");
        a.count = static_cast<std::size_t>(n);
    } catch (const std::logic_error&) {
        throw ConfigError("bad number in axis spec '" + spec + "'");
    }
    if (parts.size() == 5) {
        if (parts[4] == "log")
            a.scale = AxisScale::log;
        else if (parts[4] != "lin" && parts[4] != "linear")
            throw ConfigError("axis scale must be lin or log");
    }
    try {
        a.validate();
    } catch (const ParamError& e) {
        throw ConfigError(e.what());
    }
    return a;
}

ExecPolicy setup_threads(int flag, bool given) {
    int n = flag;
    if (!given) {
        n = 0;
        if (const char* env = std::getenv("DECOSHELL_THREADS")) {
            try {
                n = std::stoi(env);
            } catch (const std::logic_error&) {
                throw ConfigError(std::string("DECOSHELL_THREADS is not an integer: ") + env);
            }
        }
    }
    if (n < 0) throw ConfigError("thread count must be >= 0");
    if (n > 0) omp_set_num_threads(n);
    return n == 1 ? ExecPolicy::serial : ExecPolicy::parallel;
}

void print_warnings(const ModelParams& p, const DerivedParams& d, std::ostream& err) {
    for (const auto& w : validate_regime(p, d)) err << "warning: " << w.message << '\n';
}

std::ostream& sci(std::ostream& os) { return os << std::scientific << std::setprecision(11); }

int cmd_derive(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const DerivedParams d = derive_condensate(cfg.model);
    print_warnings(cfg.model, d, err);
    sci(out);
    out << "rho0      " << d.rho0 << '\n'
        << "lambda_A  " << d.lambda_A << '\n'
        << "lambda_B  " << d.lambda_B << '\n'
        << "m_A       " << d.m_A << '\n'
        << "C         " << d.c_mix << '\n'
        << "m_H       " << d.m_H << '\n';
    return kExitOk;
}

int cmd_shell(const RunConfig& cfg, double ky, std::ostream& out, std::ostream& err) {
    const DerivedParams d = derive_condensate(cfg.model);
    print_warnings(cfg.model, d, err);
    if (!above_threshold(cfg.model)) {
        out << "no resonant shell: v_rel <= 2 u_phi\n";
        return kExitOk;
    }
    const ShellPoint s = shell_point(cfg.model, ky);
    const KernelPoint kp = kernel_point(d, cfg.model, s.omega_star, {s.kx_star, ky}, cfg.numerics);
    const Branches b = solve_branches(kp, d.c_mix, cfg.numerics.tol_deg);
    auto kind = [](BranchKind k) { return k == BranchKind::evanescent ? "evanescent" : "propagating"; };
    sci(out);
    out << "ky          " << s.ky << '\n'
        << "kx_star     " << s.kx_star << '\n'
        << "omega_star  " << s.omega_star << '\n'
        << "jacobian_w  " << s.jacobian_w << '\n'
        << "gamma1      " << b.gamma1.real() << ' ' << b.gamma1.imag() << ' ' << kind(b.kind1) << '\n'
        << "gamma2      " << b.gamma2.real() << ' ' << b.gamma2.imag() << ' ' << kind(b.kind2) << '\n'
        << "degenerate  " << (b.degenerate ? "yes" : "no") << '\n'
        << "near_threshold " << (s.near_threshold ? "yes" : "no") << '\n';
    return kExitOk;
}

int cmd_rate(const RunConfig& cfg, const std::string& quantity, std::ostream& out, std::ostream& err) {
    RateResult r;
    double coherence_value = -1.0;
    if (quantity == "symmetric") {
        r = im_gamma_symmetric(cfg.model, cfg.m_gap, cfg.numerics);
    } else {
        const DerivedParams d = derive_condensate(cfg.model);
        print_warnings(cfg.model, d, err);
        if (quantity == "resonant")
            r = rate_resonant(cfg.model, d, cfg.numerics);
        else if (quantity == "im_gamma")
            r = im_gamma_cross(cfg.model, d, cfg.numerics);
        else if (quantity == "regularized")
            r = rate_regularized(cfg.model, d, cfg.numerics);
        else if (quantity == "local")
            r = rate_local(cfg.model, d, Boundary::A, cfg.numerics);
        else if (quantity == "coherence") {
            r = rate_resonant(cfg.model, d, cfg.numerics);
            coherence_value = coherence(cfg.history, r);
        } else
            throw ConfigError("unknown rate quantity '" + quantity +
                              "' (resonant, im_gamma, regularized, symmetric, local, coherence)");
    }
    sci(out);
    out << "mode     " << to_string(r.mode) << '\n'
        << "value    " << r.value << '\n'
        << "abs_err  " << r.abs_err << '\n'
        << "n_evals  " << r.n_evals << '\n';
    if (r.shell) out << "omega_star " << r.shell->omega_star << "\nkx_star    " << r.shell->kx_star << '\n';
    if (r.stand_in_kernel) out << "kernel   stand-in (bulk propagator)\n";
    if (coherence_value >= 0.0) out << "coherence " << coherence_value << '\n';
    return kExitOk;
}

std::ostream& open_out(const std::string& path, std::ofstream& file, std::ostream& fallback) {
    if (path.empty() || path == "-") return fallback;
    file.open(path, std::ios::binary);
    if (!file) throw ConfigError("cannot write '" + path + "'");
    return file;
}

int cmd_sweep(const RunConfig& cfg, const Args& a, ExecPolicy exec, std::ostream& out, std::ostream& err) {
    if (a.axes.empty()) throw ConfigError("sweep needs at least one --axis name:min:max:count[:log]");
    Grid g;
    for (const auto& s : a.axes) g.axes.push_back(parse_axis(s));
    const GridTable t = run_grid(g, quantity_from_string(a.quantity), cfg, exec);
    std::ofstream file;
    std::ostream& os = open_out(a.out, file, out);
    std::vector<std::string> header = t.axis_names;
    for (const char* h : {"value", "abs_err", "n_evals", "mode", "error"}) header.push_back(h);
    csv::write_row(os, header);
    std::size_t failures = 0;
    for (const auto& r : t.rows) {
        std::vector<std::string> cells;
        for (double c : r.coords) cells.push_back(csv::number(c));
        cells.push_back(csv::number(r.value));
        cells.push_back(csv::number(r.rate.abs_err));
        cells.push_back(std::to_string(r.rate.n_evals));
        cells.push_back(r.ok() ? to_string(r.rate.mode) : "");
        cells.push_back(r.error);
        csv::write_row(os, cells);
        if (!r.ok()) ++failures;
    }
    if (failures) err << "warning: " << failures << " grid point(s) failed; see the error column\n";
    return kExitOk;
}

int cmd_figure(const RunConfig& cfg, const Args& a, ExecPolicy exec, std::ostream& out) {
    if (a.figure < kFirstFigure || a.figure > kLastFigure)
        throw ConfigError("--figure must be in 4..11");
    const FigureData f = figure_dataset(a.figure, cfg, exec);
    const std::filesystem::path dir = a.out.empty() ? std::filesystem::path(".") : std::filesystem::path(a.out);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto csv_path = dir / ("fig" + std::to_string(a.figure) + ".csv");
    std::ofstream csv_file(csv_path, std::ios::binary);
    if (!csv_file) throw ConfigError("cannot write '" + csv_path.string() + "'");
    csv::write_numeric(csv_file, f.header, f.rows);
    out << "wrote " << csv_path.string() << '\n';
    if (a.svg) {
        const auto svg_path = dir / ("fig" + std::to_string(a.figure) + ".svg");
        std::ofstream svg_file(svg_path, std::ios::binary);
        if (!svg_file) throw ConfigError("cannot write '" + svg_path.string() + "'");
        svg_file << figure_svg(f);
        out << "wrote " << svg_path.string() << '\n';
    }
    return kExitOk;
}

int cmd_platforms(const Args& a, std::ostream& out) {
    std::ofstream file;
    std::ostream& os = open_out(a.out, file, out);
    csv::write_row(os, {"key", "name", "u_phi_m_per_s", "a_m", "xi_m", "a_over_xi"});
    for (const auto& p : platform_registry())
        csv::write_row(os, {p.key, p.name, csv::number(p.u_phi_si), csv::number(p.a_si), csv::number(p.xi_si),
                            csv::number(p.a_over_xi())});
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Motion-activated correlated decoherence between two boundaries in a screened condensate"};
    app.name("decoshell");
    Args a;
    app.add_option("--config", a.config, "key=value config file");
    app.add_option("--out", a.out, "output file (sweep, platforms) or directory (figure)");
    app.add_option("--set", a.sets, "override key=value (repeatable)");
    app.add_flag("--svg", a.svg, "also write an SVG next to the figure CSV");
    app.add_option("--figure", a.figure, "figure id 4..11");
    app.add_option("--quantity", a.quantity, "resonant, im_gamma, regularized, coherence (+ symmetric, local for rate)");
    CLI::Option* threads_opt = app.add_option("--threads", a.threads, "worker threads, 0 = auto");
    app.add_option("--axis", a.axes, "sweep axis name:min:max:count[:log] (repeatable)");
    app.add_option("--ky", a.ky, "transverse momentum for the shell command");
    app.require_subcommand(1, 1);
    app.fallthrough();
    for (const char* name : {"derive", "shell", "rate", "sweep", "figure", "platforms", "selftest"})
        app.add_subcommand(name)->fallthrough();
    app.get_subcommand("derive")->description("print derived condensate quantities");
    app.get_subcommand("shell")->description("print the resonant shell point and branches");
    app.get_subcommand("rate")->description("evaluate one rate");
    app.get_subcommand("sweep")->description("evaluate a parameter grid to CSV");
    app.get_subcommand("figure")->description("write the dataset behind one figure");
    app.get_subcommand("platforms")->description("list the platform presets");
    app.get_subcommand("selftest")->description("run the fast invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();

    try {
        const ExecPolicy exec = setup_threads(a.threads, threads_opt->count() > 0);
        if (cmd == "selftest") {
            const SelftestReport rep = run_selftest(out);
            if (rep.passed()) {
                out << "selftest passed\n";
                return kExitOk;
            }
            err << "selftest failed: " << rep.first_failure() << '\n';
            return kExitSelftestFailed;
        }
        if (cmd == "platforms") return cmd_platforms(a, out);

        RunConfig cfg = load_config(a.config, a.sets);
        cfg.numerics.exec = exec;
        if (cmd == "derive") return cmd_derive(cfg, out, err);
        if (cmd == "shell") return cmd_shell(cfg, a.ky, out, err);
        if (cmd == "rate") return cmd_rate(cfg, a.quantity, out, err);
        if (cmd == "sweep") return cmd_sweep(cfg, a, exec, out, err);
        if (cmd == "figure") return cmd_figure(cfg, a, exec, out);
    } catch (const PhaseError& e) {
        err << "error: " << e.what() << "\n(symmetric phase: use `rate --quantity symmetric` for the uncondensed medium)\n";
        return kExitPhase;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParamError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const WidthError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
    err << "error: unknown command\n";
    return kExitUsage;
}

}  // namespace decoshell
