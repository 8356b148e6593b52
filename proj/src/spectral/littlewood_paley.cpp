#include "wwlab/spectral/littlewood_paley.hpp"

#include <cmath>

#include "wwlab/spectral/operators.hpp"

namespace wwlab {
namespace {

double bump_tail(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

// Smooth transition from 0 (s <= 0) to 1 (s >= 1).
double smooth_step(double s) {
    const double a = bump_tail(s), b = bump_tail(1.0 - s);
    return a / (a + b);
}

}  // namespace

double lp_low_pass(double r) noexcept {
    constexpr double lo = 0.75, hi = 4.0 / 3.0;
    if (r <= lo) return 1.0;
    if (r >= hi) return 0.0;
    return 1.0 - smooth_step((r - lo) / (hi - lo));
}

double lp_bump(double r) noexcept { return lp_low_pass(0.5 * r) - lp_low_pass(r); }

LittlewoodPaleyBank::LittlewoodPaleyBank(const FourierGrid& grid) : grid_(grid) {
    // theta(r) > 0 exactly for r in (3/4, 8/3).
    jmin_ = static_cast<int>(std::floor(std::log2(3.0 * grid.min_abs_xi() / 8.0))) + 1;
    jmax_ = static_cast<int>(std::ceil(std::log2(4.0 * grid.max_abs_xi() / 3.0))) - 1;
}

double LittlewoodPaleyBank::weight(const LpSelector& s, double abs_xi) const noexcept {
    switch (s.kind) {
        case LpSelector::Kind::exactly: return lp_bump(std::ldexp(abs_xi, -s.j));
        case LpSelector::Kind::below: return lp_low_pass(std::ldexp(abs_xi, -s.j));
        case LpSelector::Kind::above: return 1.0 - lp_low_pass(std::ldexp(abs_xi, -(s.j + 1)));
        case LpSelector::Kind::at_least: return 1.0 - lp_low_pass(std::ldexp(abs_xi, -s.j));
    }
    return 0.0;
}

SpectralField LittlewoodPaleyBank::project(const SpectralField& f, const LpSelector& s) const {
    return apply_multiplier(f, [&](const Vec2& xi) { return weight(s, norm(xi)); });
}

SpectralField LittlewoodPaleyBank::bucket(const SpectralField& f, int j) const {
    if (j == jmin_ - 1) return apply_multiplier(f, [](const Vec2& xi) { return xi == Vec2{} ? 1.0 : 0.0; });
    return project(f, LpSelector::P(j));
}

}  // namespace wwlab
