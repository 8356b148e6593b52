#include <cmath>

#include "wwlab/errors.hpp"
#include "wwlab/evolution/evolution.hpp"
#include "wwlab/spectral/norms.hpp"

namespace wwlab {
namespace {

constexpr auto kRule = Dealias::two_thirds;

SpectralField mul(const SpectralField& a, const SpectralField& b) { return multiply(a, b, kRule); }

// Coefficients of (h, psi).
struct Pair {
    std::vector<cplx> h, p;
};

Pair coefficients_of(const SurfaceState& s) {
    return {{s.h.coefficients().begin(), s.h.coefficients().end()},
            {s.psi.coefficients().begin(), s.psi.coefficients().end()}};
}

// Exact linear flow over time tau, mode by mode.
class Propagator {
public:
    Propagator(const FourierGrid& g, double tau) : c_(g.size()), ws_(g.size()), sw_(g.size()) {
        for (std::size_t k = 0; k < g.size(); ++k) {
            const double w = std::sqrt(g.abs_xi(k));
            c_[k] = std::cos(w * tau);
            ws_[k] = w * std::sin(w * tau);
            sw_[k] = w == 0.0 ? tau : std::sin(w * tau) / w;
        }
    }

    Pair operator()(const Pair& in) const {
        Pair out{std::vector<cplx>(in.h.size()), std::vector<cplx>(in.p.size())};
        for (std::size_t k = 0; k < in.h.size(); ++k) {
            out.h[k] = c_[k] * in.h[k] + ws_[k] * in.p[k];
            out.p[k] = -sw_[k] * in.h[k] + c_[k] * in.p[k];
        }
        return out;
    }

private:
    std::vector<double> c_, ws_, sw_;
};

// a + s * b.
Pair axpy(const Pair& a, double s, const Pair& b) {
    Pair out = a;
    for (std::size_t k = 0; k < a.h.size(); ++k) {
        out.h[k] += s * b.h[k];
        out.p[k] += s * b.p[k];
    }
    return out;
}

SurfaceState state_of(const FourierGrid& g, const Pair& w, double t) {
    return {SpectralField::from_coefficients(g, w.h), SpectralField::from_coefficients(g, w.p), t};
}

bool finite(const Pair& w) {
    for (std::size_t k = 0; k < w.h.size(); ++k)
        if (!std::isfinite(w.h[k].real()) || !std::isfinite(w.h[k].imag()) || !std::isfinite(w.p[k].real()) ||
            !std::isfinite(w.p[k].imag()))
            return false;
    return true;
}

}  // namespace

SpectralField complex_unknown(const SurfaceState& s) {
    require_same_grid(s.h.grid(), s.psi.grid());
    return s.h + cplx(0.0, 1.0) * radial_power(s.psi, 0.5);
}

SpectralField profile(const SurfaceState& s) { return half_wave(complex_unknown(s), s.t); }

SurfaceState state_from_unknown(const SpectralField& u, double t, double psi_mean) {
    auto psi = radial_power(u.imag_part(), -0.5);
    std::vector<cplx> c(psi.coefficients().begin(), psi.coefficients().end());
    c[0] = psi_mean;
    return {u.real_part(), SpectralField::from_coefficients(u.grid(), std::move(c)), t};
}

Tendency nonlinear_terms(const SurfaceState& s) {
    require_same_grid(s.h.grid(), s.psi.grid());
    // Truncating once keeps every later operand inside the band.
    const SurfaceState band{truncate(s.h, kRule), truncate(s.psi, kRule), s.t};
    const auto& h = band.h;
    const auto lpsi = radial_power(band.psi, 1.0);
    auto dh = dno_series(band, 3, ProductRule::two_thirds) - lpsi;

    const auto px = partial(band.psi, 0), py = partial(band.psi, 1);
    auto dpsi = -0.5 * (mul(px, px) + mul(py, py));
    dpsi += 0.5 * mul(lpsi, lpsi);
    dpsi += mul(lpsi, mul(h, radial_power(band.psi, 2.0)) - radial_power(mul(h, lpsi), 1.0));
    return {std::move(dh), std::move(dpsi)};
}

Tendency rhs_cubic(const SurfaceState& s) {
    auto n = nonlinear_terms(s);
    n.dh += radial_power(s.psi, 1.0);
    n.dpsi -= s.h;
    return n;
}

SurfaceState step(const SurfaceState& s, double dt, const StepOptions& opt) {
    require_same_grid(s.h.grid(), s.psi.grid());
    const auto& g = s.h.grid();
    if (!(dt > 0.0)) throw ConfigError("time step must be positive");
    if (dt * std::sqrt(g.max_abs_xi()) > opt.cfl_bound)
        throw ConfigError("time step exceeds the guard dt * max|xi|^{1/2} <= " + std::to_string(opt.cfl_bound));

    const Propagator full(g, dt), half(g, 0.5 * dt);
    const Pair w = coefficients_of(s);
    Pair out;
    if (!opt.nonlinear) {
        out = full(w);
    } else {
        auto N = [&](const Pair& x, double t) {
            const auto n = nonlinear_terms(state_of(g, x, t));
            return Pair{{n.dh.coefficients().begin(), n.dh.coefficients().end()},
                        {n.dpsi.coefficients().begin(), n.dpsi.coefficients().end()}};
        };
        const Pair hw = half(w);
        const Pair k1 = N(w, s.t);
        const Pair k2 = N(axpy(hw, 0.5 * dt, half(k1)), s.t + 0.5 * dt);
        const Pair k3 = N(axpy(hw, 0.5 * dt, k2), s.t + 0.5 * dt);
        const Pair k4 = N(axpy(full(w), dt, half(k3)), s.t + dt);
        out = full(w);
        const Pair e1 = full(k1), h2 = half(k2), h3 = half(k3);
        for (std::size_t k = 0; k < out.h.size(); ++k) {
            out.h[k] += dt / 6.0 * (e1.h[k] + 2.0 * h2.h[k] + 2.0 * h3.h[k] + k4.h[k]);
            out.p[k] += dt / 6.0 * (e1.p[k] + 2.0 * h2.p[k] + 2.0 * h3.p[k] + k4.p[k]);
        }
    }
    if (!finite(out)) throw NumericalAbort("non-finite state at t = " + std::to_string(s.t + dt));
    return state_of(g, out, s.t + dt);
}

DnoPath DnoPath::parse(const std::string& s) {
    if (s == "bie") return {Kind::bie, 3, {}};
    if (s == "series1" || s == "series2" || s == "series3") return {Kind::series, s.back() - '0', {}};
    throw ConfigError("unknown DNO path '" + s + "' (series1, series2, series3, bie)");
}

std::string DnoPath::str() const { return kind == Kind::bie ? "bie" : "series" + std::to_string(order); }

double conserved_energy(const SurfaceState& s, const DnoPath& path) {
    const auto G = path.kind == DnoPath::Kind::bie ? dno_bie(s, path.bie) : dno_series(s, path.order);
    const double l2h = l2_norm(s.h);
    return 0.5 * inner_product(s.psi, G).real() + 0.5 * l2h * l2h;
}

Envelope parse_envelope(const std::string& s) {
    if (s == "gaussian") return Envelope::gaussian;
    if (s == "mexican_hat") return Envelope::mexican_hat;
    throw ConfigError("unknown envelope '" + s + "' (gaussian, mexican_hat)");
}

std::string to_string(Envelope e) { return e == Envelope::gaussian ? "gaussian" : "mexican_hat"; }

SpectralField packet_unknown(const FourierGrid& grid, const PacketSpec& spec) {
    if (!(spec.width > 0.0)) throw ConfigError("packet width must be positive");
    return SpectralField::sample(grid, [&](double x1, double x2) {
        const double q = (x1 * x1 + x2 * x2) / (2.0 * spec.width * spec.width);
        const double env = spec.envelope == Envelope::gaussian ? std::exp(-q) : (1.0 - q) * std::exp(-q);
        return spec.epsilon * env * std::polar(1.0, spec.k0.x * x1 + spec.k0.y * x2);
    });
}

SurfaceState wave_packet(const FourierGrid& grid, const PacketSpec& spec, double t0) {
    return state_from_unknown(half_wave(packet_unknown(grid, spec), -(t0 - spec.packet_time)), t0);
}

double max_group_speed(const FourierGrid& grid) { return 0.5 / std::sqrt(grid.min_abs_xi()); }

double wraparound_horizon(const FourierGrid& grid, double packet_time) {
    return packet_time + 0.5 * grid.length() / max_group_speed(grid);
}

}  // namespace wwlab
