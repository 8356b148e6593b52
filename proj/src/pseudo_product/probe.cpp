#include <cmath>

#include "wwlab/errors.hpp"
#include "wwlab/pseudo_product/pseudo_product.hpp"

namespace wwlab {

SpectralField random_multiscale_field(const FourierGrid& grid, std::mt19937_64& rng) {
    const LittlewoodPaleyBank bank(grid);
    const double kmax = grid.dk() * band_limit(grid.n(), Dealias::two_thirds);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unit;
    const double L = grid.length();

    std::vector<double> total(grid.size(), 0.0);
    for (int j = bank.jmin(); j <= bank.jmax(); ++j) {
        if (std::ldexp(0.75, j) > kmax) break;
        if (unit(rng) < 0.3) continue;
        std::vector<cplx> c(grid.size());
        for (std::size_t idx = 0; idx < c.size(); ++idx) {
            const double w = lp_bump(std::ldexp(grid.abs_xi(idx), -j));
            if (w > 0.0) c[idx] = w * cplx(normal(rng), normal(rng));
        }
        const auto shell = SpectralField::from_coefficients(grid, std::move(c));
        const auto v = shell.real_values();
        double peak = 0.0;
        for (double x : v) peak = std::max(peak, std::abs(x));
        if (peak == 0.0) continue;
        const double amp = std::exp(3.0 * normal(rng)) / peak;
        // Half of the shells are localized in space around a random centre.
        const bool localized = unit(rng) < 0.5;
        const double cx = (unit(rng) - 0.5) * 0.6 * L, cy = (unit(rng) - 0.5) * 0.6 * L;
        const double width = L * std::exp2(-1.0 - 4.0 * unit(rng));
        for (int i = 0; i < grid.n(); ++i)
            for (int k = 0; k < grid.n(); ++k) {
                double window = 1.0;
                if (localized) {
                    const double dx = grid.x(i) - cx, dy = grid.x(k) - cy;
                    window = std::exp(-(dx * dx + dy * dy) / (2.0 * width * width));
                }
                total[grid.flat(i, k)] += amp * window * v[grid.flat(i, k)];
            }
    }
    return truncate(SpectralField::from_real_values(grid, total), Dealias::two_thirds);
}

BoundProbeResult bound_probe(const FieldOperator& op, std::span<const double> p, double r, std::size_t ensemble_size,
                             const FourierGrid& grid, std::uint64_t seed) {
    if (p.empty()) throw ConfigError("bound probe needs at least one input exponent");
    double inv = 0.0;
    for (double q : p) {
        if (!(q > 1.0 && std::isfinite(q))) throw ConfigError("input exponents must lie in (1, inf)");
        inv += 1.0 / q;
    }
    if (!(r > 1.0 && std::isfinite(r))) throw ConfigError("output exponent must lie in (1, inf)");
    if (std::abs(inv - 1.0 / r) > 1e-12) throw ConfigError("exponents violate the Hoelder relation");

    std::mt19937_64 rng(seed);
    BoundProbeResult result;
    std::vector<SpectralField> inputs;
    for (std::size_t e = 0; e < ensemble_size; ++e) {
        inputs.clear();
        double denom = 1.0;
        for (double q : p) {
            auto f = random_multiscale_field(grid, rng);
            while (l2_norm(f) == 0.0) f = random_multiscale_field(grid, rng);
            denom *= lebesgue_norm(f, q);
            inputs.push_back(std::move(f));
        }
        const double ratio = lebesgue_norm(op(inputs), r) / denom;
        result.ratios.push_back(ratio);
        result.max_ratio = std::max(result.max_ratio, ratio);
        result.running_max.push_back(result.max_ratio);
    }
    return result;
}

}  // namespace wwlab
