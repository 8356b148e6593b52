#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wwlab/dno/dno.hpp"
#include "wwlab/spectral/fit.hpp"

namespace wwlab {

/// u = h + i Lambda^{1/2} psi.
SpectralField complex_unknown(const SurfaceState& s);
/// f = e^{i t Lambda^{1/2}} u.
SpectralField profile(const SurfaceState& s);
/// Inverse of complex_unknown; the mean of psi is set to psi_mean.
SurfaceState state_from_unknown(const SpectralField& u, double t, double psi_mean = 0.0);

struct Tendency {
    SpectralField dh;
    SpectralField dpsi;
};

/// Right-hand side of the cubic system with g = 1, every product 2/3-dealiased.
Tendency rhs_cubic(const SurfaceState& s);
/// rhs_cubic minus the linear part (Lambda psi, -h).
Tendency nonlinear_terms(const SurfaceState& s);

struct StepOptions {
    bool nonlinear = true;
    /// Upper bound on dt * max |xi|^{1/2}.
    double cfl_bound = 50.0;
};

/// One integrating-factor RK4 step; the linear flow is propagated exactly.
/// Throws ConfigError on the step guard and NumericalAbort on non-finite output.
SurfaceState step(const SurfaceState& s, double dt, const StepOptions& opt = {});

/// Which Dirichlet-Neumann evaluation the energy uses.
struct DnoPath {
    enum class Kind { series, bie };
    Kind kind = Kind::series;
    int order = 3;
    BieOptions bie{};

    /// "series1" .. "series3" or "bie".
    static DnoPath parse(const std::string& s);
    std::string str() const;
};

/// 1/2 <psi, G(h) psi> + 1/2 ||h||_2^2.
double conserved_energy(const SurfaceState& s, const DnoPath& path = {});

enum class Envelope { gaussian, mexican_hat };
Envelope parse_envelope(const std::string& s);
std::string to_string(Envelope e);

struct PacketSpec {
    double epsilon = 0.01;
    Vec2 k0{1.0, 0.0};
    Envelope envelope = Envelope::gaussian;
    double width = 4.0;
    /// Time at which u equals epsilon e^{i k0 . x} envelope(x).
    double packet_time = 2.0;
};

/// Focused packet epsilon e^{i k0 . x} envelope(|x| / width).
SpectralField packet_unknown(const FourierGrid& grid, const PacketSpec& spec);
/// Surface state at time t0 whose linear flow passes through the packet at packet_time.
SurfaceState wave_packet(const FourierGrid& grid, const PacketSpec& spec, double t0 = 2.0);

/// Fastest linear group speed on the grid, 1/2 (min |xi|)^{-1/2}.
double max_group_speed(const FourierGrid& grid);
/// Last time before the fastest waves launched at packet_time cross half the box.
double wraparound_horizon(const FourierGrid& grid, double packet_time);

struct RunConfig {
    int n = 128;
    double L = 64.0;
    PacketSpec packet{};
    double dt = 0.05;
    double t0 = 2.0;
    double t_end = 50.0;
    double delta = 0.01;
    int sobolev_n = 8;
    DnoPath dno{};
    /// Time between ledger rows.
    double cadence = 1.0;
    bool nonlinear = true;
    /// Stop at the wraparound horizon.
    bool decay_probe = false;
    /// Record the quadratic boundary term (n <= 64).
    bool track_g1 = false;
    double cfl_bound = 50.0;

    void validate() const;
};

struct LedgerRow {
    double t;
    double energy;
    double w4_inf;
    double h_n;
    double xf;
    double l2;
    double x_norm;
    std::optional<double> g1_l2;
    std::optional<double> g1_xf;
};

struct ScatteringPair {
    double s;
    double t;
    double diff;
};

struct RunResult {
    std::vector<LedgerRow> ledger;
    std::vector<ScatteringPair> pairs;
    SurfaceState final_state;
    bool aborted = false;
    bool stopped_at_horizon = false;
    std::string message;
};

/// Dyadic pairs (s, 3s/2) with s = 2 * 2^{k/2} and 3s/2 <= t_end.
std::vector<std::pair<double, double>> scattering_times(double t0, double t_end);

/// Integrates from t0 to t_end. A NaN abort returns the partial ledger with aborted = true.
RunResult run(const RunConfig& config);

struct ScatteringFit {
    /// All differences at roundoff level; no fit attempted.
    bool exact = false;
    std::optional<PowerFit> fit;
    /// kappa = -exponent.
    double kappa() const { return fit ? -fit->exponent : 0.0; }
};

/// Fits ||f(t) - f(s)||_2 against t; needs at least 4 pairs.
ScatteringFit scattering_probe(const std::vector<ScatteringPair>& pairs, double reference_norm);

/// (t, ||e^{-i (t - packet_time) Lambda^{1/2}} u_packet||_inf) for linear flow.
std::vector<std::pair<double, double>> linear_decay_series(const FourierGrid& grid, const PacketSpec& spec,
                                                           const std::vector<double>& times);
/// n geometric times between t0 and t1.
std::vector<double> geometric_times(double t0, double t1, int n);

void write_ledger_csv(std::ostream& os, const std::vector<LedgerRow>& rows);
void write_pairs_csv(std::ostream& os, const std::vector<ScatteringPair>& pairs);

/// Binary snapshot: "WWSNAP01", uint32 n, float64 L, float64 t, then n*n little-endian complex64 coefficients.
void write_snapshot(std::ostream& os, const SpectralField& f, double t);
struct Snapshot {
    SpectralField field;
    double t;
};
Snapshot read_snapshot(std::istream& is);

}  // namespace wwlab
