#include "wwlab/symbols/symbols.hpp"

#include <cmath>

#include "wwlab/errors.hpp"

namespace wwlab {
namespace {

double sqrt_abs(const Vec2& v) { return std::sqrt(norm(v)); }

// Gradient of |v|^{1/2}.
Vec2 half_power_gradient(const Vec2& v, double scale) {
    if (on_locus(v, scale)) throw DomainError("phase gradient is singular on a coordinate locus");
    const double r = norm(v);
    return v * (0.5 / (r * std::sqrt(r)));
}

void require_quadratic(const SignPattern& s) {
    if (s.size() != 2) throw ConfigError("expected a quadratic sign pattern");
}

}  // namespace

double point_scale(const Point& p, bool cubic) {
    return norm(p.xi) + norm(p.eta) + (cubic ? norm(p.sigma) : 0.0);
}

bool on_locus(const Vec2& v, double scale) { return norm(v) < kLocusTolerance * scale || norm(v) == 0.0; }

double eval_quadratic_symbol(QuadraticSymbol which, const Vec2& xi, const Vec2& eta) {
    const double scale = norm(xi) + norm(eta);
    if (on_locus(eta, scale)) throw DomainError("quadratic symbol evaluated at eta = 0");
    const Vec2 d = xi - eta;
    if (which == QuadraticSymbol::m1) return (dot(xi, eta) - norm(xi) * norm(eta)) / sqrt_abs(eta);
    if (on_locus(d, scale)) throw DomainError("m2 evaluated at xi - eta = 0");
    return 0.5 * sqrt_abs(xi) / (sqrt_abs(eta) * sqrt_abs(d)) * (dot(eta, d) + norm(eta) * norm(d));
}

double eval_cubic_symbol(CubicSymbol which, const Vec2& xi, const Vec2& eta, const Vec2& sigma) {
    const double rz = norm(xi - eta - sigma);
    const double sz = std::sqrt(rz);
    const double rd = norm(xi - eta);
    if (which == CubicSymbol::m3) {
        const double rx = norm(xi);
        return -0.5 * rx * (rz * sz + rx * sz - 2.0 * rd * sz);
    }
    return sqrt_abs(xi) * sqrt_abs(eta) * (rz * sz - rd * sz);
}

double eval_phase(const SignPattern& s, const Point& p) {
    if (s.size() == 2) return sqrt_abs(p.xi) + s[0] * sqrt_abs(p.eta) + s[1] * sqrt_abs(p.xi - p.eta);
    const Vec2 zeta = p.xi - p.eta - p.sigma;
    return sqrt_abs(p.xi) + s[0] * sqrt_abs(p.eta) + s[1] * sqrt_abs(p.sigma) + s[2] * sqrt_abs(zeta);
}

Vec2 phase_gradient(const SignPattern& s, Variable v, const Point& p) {
    if (s.size() == 2) {
        const double scale = point_scale(p, false);
        const Vec2 d = p.xi - p.eta;
        switch (v) {
            case Variable::xi: return half_power_gradient(p.xi, scale) + s[1] * half_power_gradient(d, scale);
            case Variable::eta: return s[0] * half_power_gradient(p.eta, scale) - s[1] * half_power_gradient(d, scale);
            case Variable::sigma: throw ConfigError("quadratic phases do not depend on sigma");
        }
    }
    const double scale = point_scale(p, true);
    const Vec2 zeta = p.xi - p.eta - p.sigma;
    switch (v) {
        case Variable::xi: return half_power_gradient(p.xi, scale) + s[2] * half_power_gradient(zeta, scale);
        case Variable::eta: return s[0] * half_power_gradient(p.eta, scale) - s[2] * half_power_gradient(zeta, scale);
        case Variable::sigma: return s[1] * half_power_gradient(p.sigma, scale) - s[2] * half_power_gradient(zeta, scale);
    }
    return {};
}

std::complex<double> normal_form_multiplier(int l, const SignPattern& pattern, const Vec2& xi, const Vec2& eta) {
    require_quadratic(pattern);
    if (l != 1 && l != 2) throw ConfigError("normal form multiplier index must be 1 or 2");
    const double m = eval_quadratic_symbol(l == 1 ? QuadraticSymbol::m1 : QuadraticSymbol::m2, xi, eta);
    const double phi = eval_phase(pattern, {xi, eta, {}});
    const double scale = norm(xi) + norm(eta);
    if (std::abs(phi) <= 1e-13 * std::sqrt(scale)) throw DomainError("normal form multiplier on the zero set of the phase");
    return {0.0, -m / phi};
}

}  // namespace wwlab
