#include "wwlab/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>

#include "wwlab/cli/config.hpp"
#include "wwlab/csv.hpp"
#include "wwlab/dno/dno.hpp"
#include "wwlab/errors.hpp"
#include "wwlab/evolution/evolution.hpp"
#include "wwlab/normal_form/normal_form.hpp"
#include "wwlab/resonance/resonance.hpp"
#include "wwlab/spectral/norms.hpp"

namespace wwlab::cli {
namespace {

namespace fs = std::filesystem;

struct Context {
    Config config;
    fs::path out;
    bool dry_run;
    std::ostream& log;
};

std::ofstream open_output(const Context& c, const std::string& name) {
    fs::create_directories(c.out);
    std::ofstream os(c.out / name, std::ios::binary);
    if (!os) throw ConfigError("cannot write " + (c.out / name).string());
    return os;
}

std::vector<int> to_ints(const std::vector<double>& v, const std::string& key) {
    std::vector<int> out;
    for (double d : v) {
        if (d != std::round(d)) throw ConfigError("key '" + key + "' needs integers");
        out.push_back(static_cast<int>(d));
    }
    return out;
}

// ---- simulate ----

const std::set<std::string> kSimulateKeys{"n",  "L",     "epsilon", "k0x",     "k0y",    "envelope",    "width",
                                          "packet_time", "dt", "t0", "t_end", "delta", "N", "dno", "cadence",
                                          "nonlinear", "decay_probe", "track_g1", "cfl_bound", "seed"};

RunConfig run_config(const Config& c) {
    RunConfig r;
    r.n = c.get_int("n", r.n);
    r.L = c.get_double("L", r.L);
    r.packet.epsilon = c.get_double("epsilon", r.packet.epsilon);
    r.packet.k0 = {c.get_double("k0x", r.packet.k0.x), c.get_double("k0y", r.packet.k0.y)};
    r.packet.envelope = parse_envelope(c.get_string("envelope", to_string(r.packet.envelope)));
    r.packet.width = c.get_double("width", r.packet.width);
    r.packet.packet_time = c.get_double("packet_time", r.packet.packet_time);
    r.dt = c.get_double("dt", r.dt);
    r.t0 = c.get_double("t0", r.t0);
    r.t_end = c.get_double("t_end", r.t_end);
    r.delta = c.get_double("delta", r.delta);
    r.sobolev_n = c.get_int("N", r.sobolev_n);
    r.dno = DnoPath::parse(c.get_string("dno", r.dno.str()));
    r.cadence = c.get_double("cadence", r.cadence);
    r.nonlinear = c.get_bool("nonlinear", r.nonlinear);
    r.decay_probe = c.get_bool("decay_probe", r.decay_probe);
    r.track_g1 = c.get_bool("track_g1", r.track_g1);
    r.cfl_bound = c.get_double("cfl_bound", r.cfl_bound);
    r.validate();
    return r;
}

int simulate(Context& c) {
    c.config.require_known(kSimulateKeys);
    const auto cfg = run_config(c.config);
    if (c.dry_run) {
        c.log << "simulate: grid " << cfg.n << "^2, L = " << cfg.L << ", t in [" << cfg.t0 << ", " << cfg.t_end
              << "], dt = " << cfg.dt << ", about " << std::ceil((cfg.t_end - cfg.t0) / cfg.dt)
              << " steps; would write ledger.csv, pairs.csv, final_state.snap to " << c.out.string() << "\n";
        return kExitOk;
    }
    const auto result = run(cfg);
    {
        auto os = open_output(c, "ledger.csv");
        write_ledger_csv(os, result.ledger);
    }
    {
        auto os = open_output(c, "pairs.csv");
        write_pairs_csv(os, result.pairs);
    }
    {
        auto os = open_output(c, "final_state.snap");
        write_snapshot(os, complex_unknown(result.final_state), result.final_state.t);
    }
    if (!result.message.empty()) c.log << "simulate: " << result.message << "\n";
    if (result.aborted) return kExitNumerical;
    if (result.pairs.size() >= 4) {
        const double ref = result.ledger.empty() ? 0.0 : result.ledger.front().l2;
        const auto fit = scattering_probe(result.pairs, ref);
        if (fit.exact)
            c.log << "simulate: profile differences at roundoff; scattering fit skipped\n";
        else
            c.log << "simulate: scattering kappa = " << format_double(fit.kappa()) << " +- "
                  << format_double(fit.fit->stderr_exponent) << "\n";
    }
    return kExitOk;
}

// ---- resonance-map ----

const std::set<std::string> kResonanceKeys{"pattern", "kind", "resolution", "tolerance", "radius", "max_iterations",
                                           "seed"};

int resonance_map(Context& c) {
    c.config.require_known(kResonanceKeys);
    const auto pattern = SignPattern::parse(c.config.get_string("pattern", "--+"));
    const auto kind = parse_resonance_kind(c.config.get_string("kind", "space"));
    const int resolution = c.config.get_int("resolution", 16);
    const double tol = c.config.get_double("tolerance", 1e-3);
    SamplingOptions opt;
    opt.radius = c.config.get_double("radius", opt.radius);
    opt.max_iterations = c.config.get_int("max_iterations", opt.max_iterations);
    if (resolution < 1 || !(tol > 0.0) || !(opt.radius > 0.0) || opt.max_iterations < 1)
        throw ConfigError("resonance-map needs resolution >= 1 and positive tolerance, radius, iterations");
    if (c.dry_run) {
        c.log << "resonance-map: pattern " << pattern.str() << ", kind " << to_string(kind) << ", "
              << resolution * resolution * resolution << " seeds, tol " << tol << "; would write resonance_map.csv\n";
        return kExitOk;
    }
    const auto map = sample_resonant_set(pattern, kind, resolution, tol, opt);
    auto os = open_output(c, "resonance_map.csv");
    write_csv(os, map);
    c.log << "resonance-map: " << map.points.size() << " points\n";
    if (map.points.size() >= 1000) {
        const auto dim = dimension_probe(map);
        c.log << "resonance-map: sphere dimension " << format_double(dim.sphere_dimension) << "\n";
    }
    return kExitOk;
}

// ---- dno-verify ----

const std::set<std::string> kDnoKeys{"n", "L", "width", "orders", "epsilons", "kernel_terms", "normal_terms",
                                     "padding", "tolerance", "quadrature_tolerance", "seed"};

int dno_verify(Context& c) {
    c.config.require_known(kDnoKeys);
    const FourierGrid grid(c.config.get_int("n", 64), c.config.get_double("L", 40.0));
    const double w = c.config.get_double("width", 2.0);
    const auto orders = to_ints(c.config.get_doubles("orders", {1, 2, 3}), "orders");
    const auto eps = c.config.get_doubles("epsilons", {0.04, 0.02, 0.01, 0.005});
    BieOptions opt;
    opt.kernel_terms = c.config.get_int("kernel_terms", opt.kernel_terms);
    opt.normal_terms = c.config.get_int("normal_terms", opt.normal_terms);
    opt.padding = c.config.get_int("padding", opt.padding);
    opt.tolerance = c.config.get_double("tolerance", opt.tolerance);
    opt.quadrature_tolerance = c.config.get_double("quadrature_tolerance", opt.quadrature_tolerance);
    if (!(w > 0.0)) throw ConfigError("width must be positive");
    for (int o : orders)
        if (o < 1 || o > 3) throw ConfigError("orders must lie in {1, 2, 3}");
    for (double e : eps)
        if (!(e > 0.0)) throw ConfigError("epsilons must be positive");
    if (c.dry_run) {
        c.log << "dno-verify: grid " << grid.n() << "^2, " << orders.size() << " orders x " << eps.size()
              << " amplitudes; would write dno_compare.csv\n";
        return kExitOk;
    }
    const auto h = SpectralField::sample(grid, [w](double x, double y) { return std::exp(-(x * x + y * y) / (2 * w * w)); });
    const auto psi = SpectralField::sample(grid, [w](double x, double y) {
        const double a = x - 0.5 * w;
        return std::exp(-(a * a + y * y) / (2 * w * w));
    });
    auto os = open_output(c, "dno_compare.csv");
    CsvWriter csv(os, {"epsilon", "order", "l2_err", "linf_err", "exponent"});
    for (int o : orders) {
        const auto report = dno_compare(h, psi, o, eps, opt);
        for (const auto& r : report.rows) {
            csv << r.epsilon << r.order << r.l2_err << r.linf_err << report.fit.exponent;
            csv.end_row();
        }
        c.log << "dno-verify: order " << o << " exponent " << format_double(report.fit.exponent) << "\n";
    }
    return kExitOk;
}

// ---- decay-study ----

const std::set<std::string> kDecayKeys{"n", "L", "envelope", "width", "k0x", "k0y", "epsilon", "packet_time",
                                       "t_start", "t_end", "samples", "seed"};

int decay_study(Context& c) {
    c.config.require_known(kDecayKeys);
    const FourierGrid grid(c.config.get_int("n", 2048), c.config.get_double("L", 2048.0));
    PacketSpec spec;
    spec.envelope = parse_envelope(c.config.get_string("envelope", "mexican_hat"));
    spec.width = c.config.get_double("width", 1.5);
    spec.k0 = {c.config.get_double("k0x", 0.0), c.config.get_double("k0y", 0.0)};
    spec.epsilon = c.config.get_double("epsilon", 1.0);
    spec.packet_time = c.config.get_double("packet_time", 0.0);
    const double t0 = c.config.get_double("t_start", 2.0);
    const double t1 = c.config.get_double("t_end", 100.0);
    const int samples = c.config.get_int("samples", 16);
    const double horizon = wraparound_horizon(grid, spec.packet_time);
    if (t1 > horizon)
        throw ConfigError("t_end " + format_double(t1) + " lies past the wraparound horizon " + format_double(horizon));
    const auto times = geometric_times(t0, t1, samples);
    if (c.dry_run) {
        c.log << "decay-study: grid " << grid.n() << "^2, L = " << grid.length() << ", " << samples
              << " times in [" << t0 << ", " << t1 << "], horizon " << horizon
              << "; would write decay.csv, decay_fit.csv\n";
        return kExitOk;
    }
    const auto series = linear_decay_series(grid, spec, times);
    const auto fit = decay_fit(series);
    {
        auto os = open_output(c, "decay.csv");
        CsvWriter csv(os, {"t", "sup_norm"});
        for (auto [t, v] : series) {
            csv << t << v;
            csv.end_row();
        }
    }
    {
        auto os = open_output(c, "decay_fit.csv");
        CsvWriter csv(os, {"exponent", "prefactor", "r2", "stderr_exponent"});
        csv << fit.exponent << fit.prefactor << fit.r2 << fit.stderr_exponent;
        csv.end_row();
    }
    c.log << "decay-study: exponent " << format_double(fit.exponent) << "\n";
    return kExitOk;
}

// ---- symbol-check ----

const std::set<std::string> kSymbolKeys{"symbol", "pattern", "resolution", "seed"};

int symbol_check(Context& c) {
    c.config.require_known(kSymbolKeys);
    const std::string name = c.config.get_string("symbol", "m1");
    if (name != "m1" && name != "m2") throw ConfigError("symbol must be m1 or m2");
    const auto symbol = name == "m1" ? SymbolDescriptor::m1() : SymbolDescriptor::m2();
    const auto pattern = SignPattern::parse(c.config.get_string("pattern", "--"));
    const int resolution = c.config.get_int("resolution", 16);
    if (resolution < 1) throw ConfigError("resolution must be positive");
    if (c.dry_run) {
        c.log << "symbol-check: " << name << " on the time-resonant set of " << pattern.str()
              << "; would write null_structure.csv, symbol_fits.csv\n";
        return kExitOk;
    }
    const auto report = null_structure_report(symbol, pattern, resolution);
    {
        auto os = open_output(c, "null_structure.csv");
        CsvWriter csv(os, {"locus", "distance", "max_symbol", "max_ratio"});
        for (const auto& s : report.loci)
            for (std::size_t i = 0; i < s.distance.size(); ++i) {
                csv << locus_name(s.locus) << s.distance[i] << s.max_symbol[i] << s.max_ratio[i];
                csv.end_row();
            }
    }
    {
        auto os = open_output(c, "symbol_fits.csv");
        CsvWriter csv(os, {"locus", "base_points", "exponent", "r2", "sup_ratio"});
        for (const auto& s : report.loci) {
            csv << locus_name(s.locus) << s.base_points << s.symbol_fit.exponent << s.symbol_fit.r2 << s.sup_ratio;
            csv.end_row();
        }
    }
    if (report.vacuous()) c.log << "symbol-check: time-resonant set is empty; report is vacuous\n";
    return kExitOk;
}

// ---- bound-probe ----

const std::set<std::string> kProbeKeys{"operator", "variant", "J", "n", "L", "ensemble", "p", "r", "seed"};

int bound_probe_cmd(Context& c, std::uint64_t seed) {
    c.config.require_known(kProbeKeys);
    const std::string name = c.config.get_string("operator", "product");
    const FourierGrid grid(c.config.get_int("n", 32), c.config.get_double("L", 2.0 * std::numbers::pi));
    const int variant = c.config.get_int("variant", 1);
    const int J = c.config.get_int("J", 0);
    const int ensemble = c.config.get_int("ensemble", 20);
    const auto p = c.config.get_doubles("p", {4.0, 4.0});
    const double r = c.config.get_double("r", 2.0);
    if (ensemble < 1) throw ConfigError("ensemble must be positive");
    const auto op = make_probe_operator(name, grid, variant, J);
    if (p.size() != op.arity) throw ConfigError("operator " + name + " needs " + std::to_string(op.arity) + " exponents");
    if (c.dry_run) {
        c.log << "bound-probe: " << name << " on " << grid.n() << "^2, ensemble " << ensemble
              << "; would write bound_probe.csv\n";
        return kExitOk;
    }
    const auto result = bound_probe(op.apply, p, r, static_cast<std::size_t>(ensemble), grid, seed);
    auto os = open_output(c, "bound_probe.csv");
    CsvWriter csv(os, {"index", "ratio", "running_max"});
    for (std::size_t i = 0; i < result.ratios.size(); ++i) {
        csv << i << result.ratios[i] << result.running_max[i];
        csv.end_row();
    }
    c.log << "bound-probe: max ratio " << format_double(result.max_ratio) << "\n";
    return kExitOk;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"simulate",    "resonance-map", "dno-verify",
                                                "decay-study", "symbol-check",  "bound-probe"};
    return names;
}

ProbeOperator make_probe_operator(const std::string& name, const FourierGrid& grid, int variant, int J) {
    if (name == "product")
        return {[](std::span<const SpectralField> f) { return multiply(f[0], f[1], Dealias::two_thirds); }, 2};
    if (name == "chi_mu") {
        BilinearOperator op;
        op.symbol = [](const Vec2& xi, const Vec2& eta) {
            return chi(xi, eta) * normal_form_multiplier(1, SignPattern{-1, -1}, xi, eta) / (norm(xi) + norm(eta));
        };
        op.singular = {Locus::eta, Locus::xi_minus_eta};
        auto table = std::make_shared<LatticeSymbol>(op, grid);
        return {[table](std::span<const SpectralField> f) { return table->apply(f[0], f[1]); }, 2};
    }
    if (name == "flag") {
        TrilinearOperator op;
        op.symbol = [](const Vec2& xi, const Vec2& eta, const Vec2& sigma) {
            const double s = norm(xi) + norm(eta) + norm(sigma);
            return cplx(eval_cubic_symbol(CubicSymbol::m3, xi, eta, sigma) *
                        eval_quadratic_symbol(QuadraticSymbol::m1, xi, eta) / std::pow(s, 4));
        };
        op.singular = {Locus::eta};
        return {[op](std::span<const SpectralField> f) { return trilinear_apply(op, f[0], f[1], f[2]); }, 3};
    }
    if (name == "model") {
        if (variant < 1 || variant > 3 || J < 0) throw ConfigError("model operator needs variant 1..3 and J >= 0");
        return {[variant, J](std::span<const SpectralField> f) {
                    return model_operator_apply(variant, J, f[0], f[1], f[2]);
                },
                3};
    }
    throw ConfigError("unknown operator '" + name + "' (product, chi_mu, flag, model)");
}

int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err) {
    try {
        Context c{options.config ? Config::load(*options.config) : Config{}, options.out, options.dry_run, out};
        for (const auto& o : options.overrides) c.config.apply_override(o);
        if (options.seed) c.config.set("seed", std::to_string(*options.seed));
        const std::uint64_t seed = c.config.get_u64("seed", 0);

        if (options.command == "simulate") return simulate(c);
        if (options.command == "resonance-map") return resonance_map(c);
        if (options.command == "dno-verify") return dno_verify(c);
        if (options.command == "decay-study") return decay_study(c);
        if (options.command == "symbol-check") return symbol_check(c);
        if (options.command == "bound-probe") return bound_probe_cmd(c, seed);
        throw ConfigError("unknown command '" + options.command + "'");
    } catch (const ConfigError& e) {
        err << "wwlab: configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const GridMismatch& e) {
        err << "wwlab: configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const NumericalAbort& e) {
        err << "wwlab: numerical abort: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const ContractionFailure& e) {
        err << "wwlab: numerical abort: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "wwlab: error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace wwlab::cli
