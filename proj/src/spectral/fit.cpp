#include "wwlab/spectral/fit.hpp"

#include <cmath>
#include <vector>

#include "wwlab/errors.hpp"

namespace wwlab {

PowerFit loglog_fit(std::span<const std::pair<double, double>> series) {
    if (series.size() < 2) throw ConfigError("power fit needs at least two samples");
    std::vector<double> x, y;
    for (auto [t, v] : series) {
        if (!(t > 0.0) || !(v > 0.0)) throw ConfigError("power fit needs positive abscissae and values");
        x.push_back(std::log(t));
        y.push_back(std::log(v));
    }
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) { mx += x[i]; my += y[i]; }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) throw ConfigError("power fit needs distinct abscissae");
    PowerFit fit;
    fit.exponent = sxy / sxx;
    fit.prefactor = std::exp(my - fit.exponent * mx);
    const double sse = std::max(0.0, syy - fit.exponent * sxy);
    fit.r2 = syy > 0.0 ? 1.0 - sse / syy : 1.0;
    fit.stderr_exponent = x.size() > 2 ? std::sqrt(sse / (n - 2.0) / sxx) : 0.0;
    return fit;
}

PowerFit decay_fit(std::span<const std::pair<double, double>> series) {
    if (series.size() < 8) throw ConfigError("decay_fit needs at least 8 samples");
    return loglog_fit(series);
}

}  // namespace wwlab
