#include "wwlab/errors.hpp"
#include "wwlab/pseudo_product/pseudo_product.hpp"

namespace wwlab {

Paraproduct paraproduct_split(const SpectralField& f, const SpectralField& g) {
    require_same_grid(f.grid(), g.grid());
    const auto& grid = f.grid();
    const LittlewoodPaleyBank bank(grid);
    const auto ft = truncate(f, Dealias::two_thirds);
    const auto gt = truncate(g, Dealias::two_thirds);

    // Bucket index 0 is the mean, index i >= 1 is scale jmin + i - 1.
    const int count = bank.jmax() - bank.jmin() + 2;
    std::vector<SpectralField> fb, gb;
    fb.reserve(count);
    gb.reserve(count);
    for (int i = 0; i < count; ++i) {
        fb.push_back(bank.bucket(ft, bank.jmin() - 1 + i));
        gb.push_back(bank.bucket(gt, bank.jmin() - 1 + i));
    }
    // low_f[i] = sum of buckets strictly below i - 1.
    std::vector<SpectralField> low_f(count, SpectralField(grid)), low_g(count, SpectralField(grid));
    for (int i = 2; i < count; ++i) {
        low_f[i] = low_f[i - 1] + fb[i - 2];
        low_g[i] = low_g[i - 1] + gb[i - 2];
    }

    Paraproduct out{SpectralField(grid), SpectralField(grid), SpectralField(grid)};
    for (int i = 0; i < count; ++i) {
        if (i >= 2) {
            out.high_low += multiply(fb[i], low_g[i], Dealias::two_thirds);
            out.low_high += multiply(low_f[i], gb[i], Dealias::two_thirds);
        }
        SpectralField near = gb[i];
        if (i > 0) near += gb[i - 1];
        if (i + 1 < count) near += gb[i + 1];
        out.high_high += multiply(fb[i], near, Dealias::two_thirds);
    }
    return out;
}

SpectralField model_operator_apply(int variant, int J, const SpectralField& f, const SpectralField& g,
                                   const SpectralField& h) {
    if (variant < 1 || variant > 3) throw ConfigError("model operator variant must be 1, 2 or 3");
    if (J < 0) throw ConfigError("model operator offset J must be nonnegative");
    require_same_grid(f.grid(), g.grid());
    require_same_grid(f.grid(), h.grid());
    const auto& grid = f.grid();
    const LittlewoodPaleyBank bank(grid);
    constexpr auto rule = Dealias::two_thirds;

    SpectralField out(grid);
    for (int j = bank.jmin() - J; j <= bank.jmax() - J; ++j) {
        const auto fj = bank.project(f, LpSelector::P(j + J));
        const auto hj = bank.project(h, LpSelector::P(j + J));
        const auto high = multiply(fj, hj, rule);
        switch (variant) {
            case 1:
                out += multiply(bank.project(high, LpSelector::P(j)), bank.project(g, LpSelector::below(j - 1)), rule);
                break;
            case 2:
                out += multiply(bank.project(high, LpSelector::below(j - 1)), bank.project(g, LpSelector::P(j)), rule);
                break;
            case 3:
                out += multiply(bank.project(high, LpSelector::P(j)), bank.project(g, LpSelector::P(j)), rule);
                break;
        }
    }
    return out;
}

}  // namespace wwlab
