#include "wwlab/normal_form/normal_form.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "wwlab/errors.hpp"
#include "wwlab/evolution/evolution.hpp"
#include "wwlab/resonance/resonance.hpp"
#include "wwlab/spectral/norms.hpp"

namespace wwlab {
namespace {

double tail(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

QuadraticSymbol quadratic_symbol(int l) {
    if (l == 1) return QuadraticSymbol::m1;
    if (l == 2) return QuadraticSymbol::m2;
    throw ConfigError("quadratic symbol index must be 1 or 2");
}

}  // namespace

double symmetric_step(double s) noexcept {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    const double a = tail(s), b = tail(1.0 - s);
    return a / (a + b);
}

double chi(const Vec2& xi, const Vec2& eta) noexcept {
    const double a = std::atan2(norm(eta), norm(xi - eta));
    return symmetric_step((a - std::numbers::pi / 8.0) / (std::numbers::pi / 4.0));
}

std::pair<BilinearSymbol, BilinearSymbol> chi_split(const BilinearSymbol& m) {
    return {[m](const Vec2& xi, const Vec2& eta) { return chi(xi, eta) * m(xi, eta); },
            [m](const Vec2& xi, const Vec2& eta) { return (1.0 - chi(xi, eta)) * m(xi, eta); }};
}

SpectralField boundary_term(const SpectralField& f, const BilinearSymbol& m, CutoffPiece piece) {
    BilinearOperator op;
    switch (piece) {
        case CutoffPiece::full: op.symbol = m; break;
        case CutoffPiece::chi: op.symbol = chi_split(m).first; break;
        case CutoffPiece::complement: op.symbol = chi_split(m).second; break;
    }
    op.singular = {Locus::eta, Locus::xi_minus_eta};
    op.rule = Dealias::two_thirds;
    return bilinear_apply(op, f, f);
}

BilinearSymbol boundary_symbol(int l, const SignPattern& pattern, double t) {
    if (pattern.size() != 2) throw ConfigError("boundary term needs a quadratic sign pattern");
    quadratic_symbol(l);
    return [=](const Vec2& xi, const Vec2& eta) {
        const double phi = eval_phase(pattern, Point{xi, eta, {}});
        return std::polar(1.0, t * phi) * normal_form_multiplier(l, pattern, xi, eta);
    };
}

SpectralField quadratic_boundary_term(const SurfaceState& s, int l, const SignPattern& pattern, CutoffPiece piece) {
    return boundary_term(profile(s), boundary_symbol(l, pattern, s.t), piece);
}

TrilinearSymbol weak_cubic_symbol(const WeakCubicChoice& c, double s) {
    if (c.quadratic.size() != 2 || c.cubic.size() != 3) throw ConfigError("weak cubic symbol needs (2, 3) patterns");
    const auto mj = quadratic_symbol(c.j);
    quadratic_symbol(c.k);
    return [=](const Vec2& xi, const Vec2& eta, const Vec2& sigma) {
        const double phi = eval_phase(c.cubic, Point{xi, eta, sigma});
        return std::polar(1.0, s * phi) * normal_form_multiplier(c.k, c.quadratic, xi, eta) *
               eval_quadratic_symbol(mj, xi - eta, sigma);
    };
}

WeakCubicSlice weak_cubic_integrand(const SurfaceState& state, double s, const WeakCubicChoice& c, bool allow_large) {
    if (classify_cubic_phase(c.cubic) != CubicClass::weakly_resonant)
        throw ConfigError("pattern " + c.cubic.str() + " is strongly resonant");
    TrilinearOperator op;
    op.symbol = weak_cubic_symbol(c, s);
    op.singular = {Locus::eta, Locus::sigma, Locus::xi_minus_eta, Locus::zeta};
    op.allow_large = allow_large;
    const auto f = profile(state);
    auto field = trilinear_apply(op, f, f, f);
    const double l2 = l2_norm(field), linf = lebesgue_norm(field, kInf), h2 = sobolev_h(field, 2.0);
    return {std::move(field), l2, linf, h2};
}

double inverse_phase_ratio(const SignPattern& pattern, const Point& p) {
    if (pattern.size() != 3) throw ConfigError("inverse phase ratio needs a cubic pattern");
    const Vec2 zeta = p.xi - p.eta - p.sigma;
    double denom = 1.0;
    for (const Vec2& v : {p.xi, p.eta, p.sigma, zeta}) {
        const double r = norm(v);
        if (r == 0.0) return 0.0;
        denom += 1.0 / std::sqrt(r);
    }
    const double phi = eval_phase(pattern, p);
    if (phi == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / (std::abs(phi) * denom);
}

}  // namespace wwlab
