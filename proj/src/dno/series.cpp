#include "wwlab/dno/dno.hpp"
#include "wwlab/errors.hpp"

namespace wwlab {

void require_real_state(const SurfaceState& s) {
    require_same_grid(s.h.grid(), s.psi.grid());
    if (s.h.max_abs_imag() > 1e-10 || s.psi.max_abs_imag() > 1e-10)
        throw ConfigError("surface state must be real-valued");
}

SpectralField dno_series(const SurfaceState& s, int order, ProductRule rule) {
    if (order < 1 || order > 3) throw ConfigError("series order must be 1, 2 or 3");
    require_same_grid(s.h.grid(), s.psi.grid());
    auto mul = [rule](const SpectralField& a, const SpectralField& b) {
        return rule == ProductRule::exact ? multiply_exact(a, b) : multiply(a, b, Dealias::two_thirds);
    };
    const auto& h = s.h;
    const auto lpsi = radial_power(s.psi, 1.0);
    auto g = lpsi;
    if (order >= 2) {
        g -= partial(mul(h, partial(s.psi, 0)), 0) + partial(mul(h, partial(s.psi, 1)), 1);
        g -= radial_power(mul(h, lpsi), 1.0);
    }
    if (order >= 3) {
        const auto h2 = mul(h, h);
        auto bracket = radial_power(mul(h2, radial_power(s.psi, 2.0)), 1.0);
        bracket += radial_power(mul(h2, lpsi), 2.0);
        bracket -= 2.0 * radial_power(mul(h, radial_power(mul(h, lpsi), 1.0)), 1.0);
        g -= 0.5 * bracket;
    }
    return g;
}

}  // namespace wwlab
