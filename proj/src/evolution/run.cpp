#include <algorithm>
#include <cmath>
#include <map>

#include "wwlab/errors.hpp"
#include "wwlab/evolution/evolution.hpp"
#include "wwlab/normal_form/normal_form.hpp"
#include "wwlab/spectral/norms.hpp"

namespace wwlab {

void RunConfig::validate() const {
    FourierGrid(n, L);
    if (!(packet.epsilon >= 0.0)) throw ConfigError("epsilon must be nonnegative");
    if (!(packet.width > 0.0)) throw ConfigError("width must be positive");
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    if (!(t_end > t0)) throw ConfigError("t_end must exceed the initial time");
    if (!(cadence > 0.0)) throw ConfigError("cadence must be positive");
    if (!(delta >= 0.0)) throw ConfigError("delta must be nonnegative");
    if (sobolev_n < 0) throw ConfigError("N must be nonnegative");
    if (!(cfl_bound > 0.0)) throw ConfigError("cfl bound must be positive");
    if (dt * std::sqrt(FourierGrid(n, L).max_abs_xi()) > cfl_bound)
        throw ConfigError("dt violates the step guard dt * max|xi|^{1/2} <= cfl bound");
}

std::vector<std::pair<double, double>> scattering_times(double t0, double t_end) {
    std::vector<std::pair<double, double>> out;
    for (int k = 0;; ++k) {
        const double s = 2.0 * std::exp2(0.5 * k);
        if (1.5 * s > t_end) break;
        if (s >= t0) out.emplace_back(s, 1.5 * s);
    }
    return out;
}

namespace {

LedgerRow measure(const SurfaceState& s, const RunConfig& c) {
    const auto u = complex_unknown(s);
    const auto f = half_wave(u, s.t);
    const auto x = x_norm(u, f, s.t, c.delta, c.sobolev_n);
    LedgerRow row{s.t,
                  conserved_energy(s, c.dno),
                  x.decay / s.t,
                  sobolev_h(u, c.sobolev_n),
                  weighted_norm(f).value,
                  x.mass,
                  x.total(),
                  std::nullopt,
                  std::nullopt};
    if (c.track_g1) {
        const auto g1 = quadratic_boundary_term(s, 1, SignPattern{-1, -1});
        row.g1_l2 = l2_norm(g1);
        row.g1_xf = weighted_norm(g1).value;
    }
    return row;
}

}  // namespace

RunResult run(const RunConfig& c) {
    c.validate();
    const FourierGrid grid(c.n, c.L);
    RunResult result{{}, {}, wave_packet(grid, c.packet, c.t0), false, false, {}};

    double t_stop = c.t_end;
    if (c.decay_probe) {
        const double horizon = wraparound_horizon(grid, c.packet.packet_time);
        if (horizon < t_stop) {
            t_stop = horizon;
            result.stopped_at_horizon = true;
            result.message = "stopped at the wraparound horizon t = " + std::to_string(horizon);
        }
    }

    // Event times: ledger samples and scattering pair endpoints.
    constexpr double kTimeTol = 1e-9;
    std::vector<double> events;
    for (int k = 0;; ++k) {
        const double t = c.t0 + k * c.cadence;
        if (t > t_stop + kTimeTol) break;
        events.push_back(std::min(t, t_stop));
    }
    const auto pairs = scattering_times(c.t0, t_stop);
    for (auto [s, t] : pairs) {
        events.push_back(s);
        events.push_back(t);
    }
    events.push_back(t_stop);
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end(), [](double a, double b) { return b - a < kTimeTol; }),
                 events.end());

    auto is_sample = [&](double t) {
        const double k = (t - c.t0) / c.cadence;
        return std::abs(k - std::round(k)) * c.cadence < kTimeTol || std::abs(t - t_stop) < kTimeTol;
    };
    std::map<double, SpectralField> stored;
    auto near = [&](double a, double b) { return std::abs(a - b) < kTimeTol; };

    const StepOptions opt{c.nonlinear, c.cfl_bound};
    SurfaceState& s = result.final_state;
    for (double te : events) {
        try {
            while (s.t < te - kTimeTol) s = step(s, std::min(c.dt, te - s.t), opt);
        } catch (const NumericalAbort& e) {
            result.aborted = true;
            result.message = e.what();
            return result;
        }
        s.t = te;
        if (is_sample(te)) result.ledger.push_back(measure(s, c));
        for (auto [ps, pt] : pairs) {
            if (near(te, ps)) stored.insert_or_assign(ps, profile(s));
            if (near(te, pt)) {
                const auto it = stored.find(ps);
                if (it != stored.end()) result.pairs.push_back({ps, pt, l2_norm(profile(s) - it->second)});
            }
        }
    }
    return result;
}

ScatteringFit scattering_probe(const std::vector<ScatteringPair>& pairs, double reference_norm) {
    if (pairs.size() < 4) throw ConfigError("scattering probe needs at least 4 dyadic pairs");
    ScatteringFit out;
    const double floor = 1e-12 * std::max(reference_norm, 1e-300);
    out.exact = std::all_of(pairs.begin(), pairs.end(), [&](const ScatteringPair& p) { return p.diff <= floor; });
    if (out.exact) return out;
    std::vector<std::pair<double, double>> series;
    for (const auto& p : pairs)
        if (p.diff > 0.0) series.emplace_back(p.t, p.diff);
    if (series.size() < 4) throw ConfigError("scattering probe needs 4 nonzero differences");
    out.fit = loglog_fit(series);
    return out;
}

std::vector<std::pair<double, double>> linear_decay_series(const FourierGrid& grid, const PacketSpec& spec,
                                                           const std::vector<double>& times) {
    const auto u = packet_unknown(grid, spec);
    std::vector<std::pair<double, double>> out;
    out.reserve(times.size());
    for (double t : times) out.emplace_back(t, lebesgue_norm(half_wave(u, -(t - spec.packet_time)), kInf));
    return out;
}

std::vector<double> geometric_times(double t0, double t1, int n) {
    if (n < 2 || !(t0 > 0.0) || !(t1 > t0)) throw ConfigError("geometric times need n >= 2 and 0 < t0 < t1");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = t0 * std::pow(t1 / t0, static_cast<double>(i) / (n - 1));
    out.back() = t1;
    return out;
}

}  // namespace wwlab
