#include "wwlab/symbols/structure.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "wwlab/errors.hpp"

namespace wwlab {
namespace {

Vec2 quarter_turn(const Vec2& v, int times) {
    Vec2 r = v;
    for (int i = 0; i < times; ++i) r = {-r.y, r.x};
    return r;
}

}  // namespace

ApproachPath ApproachPath::eta_to_zero(const Vec2& xi, const Vec2& u) {
    return {[xi, u](double d) { return Point{xi, d * u, {}}; }};
}

ApproachPath ApproachPath::xi_minus_eta_to_zero(const Vec2& eta, const Vec2& u) {
    return {[eta, u](double d) { return Point{eta + d * u, eta, {}}; }};
}

ApproachPath ApproachPath::xi_to_zero(const Vec2& eta, const Vec2& u) {
    return {[eta, u](double d) { return Point{d * u, eta, {}}; }};
}

VanishingFit vanishing_exponent(const SymbolDescriptor& symbol, const ApproachPath& path) {
    if (path.kmax - path.kmin < 1) throw ConfigError("approach path needs at least two scales");
    VanishingFit out;
    for (int k = path.kmin; k <= path.kmax; ++k) {
        const double d = std::ldexp(1.0, -k);
        const double v = std::abs(symbol(path.at(d)));
        if (!(v > 0.0)) throw DomainError("symbol vanishes identically along the approach path");
        out.samples.emplace_back(d, v);
    }
    out.fit = loglog_fit(out.samples);
    return out;
}

CatResidual cat_residual(const Vec2& xi, const Vec2& eta, const Vec2& sigma) {
    const SignPattern pattern{-1, -1, 1};
    const Vec2 a = eta - xi, b = sigma - xi;
    CatResidual out;
    out.distance = norm(a) + norm(b);
    out.in_regime = out.distance < 0.25 * norm(xi);
    if (out.distance == 0.0) return out;

    constexpr int kCloud = 16;
    Eigen::Matrix<double, kCloud, 4> X;
    Eigen::Matrix<double, kCloud, 2> Y;
    int row = 0;
    for (int ra = 0; ra < 4; ++ra)
        for (int rb = 0; rb < 4; ++rb, ++row) {
            const Point p{xi, xi + quarter_turn(a, ra), xi + quarter_turn(b, rb)};
            const Vec2 gx = phase_gradient(pattern, Variable::xi, p);
            const Vec2 ge = phase_gradient(pattern, Variable::eta, p);
            const Vec2 gs = phase_gradient(pattern, Variable::sigma, p);
            X.row(row) << ge.x, ge.y, gs.x, gs.y;
            Y.row(row) << gx.x, gx.y;
        }
    const Eigen::Matrix<double, 4, 2> A = X.colPivHouseholderQr().solve(Y);
    out.residual = std::sqrt((X * A - Y).squaredNorm() / kCloud);
    out.gradient_scale = std::sqrt(Y.squaredNorm() / kCloud);
    return out;
}

}  // namespace wwlab
