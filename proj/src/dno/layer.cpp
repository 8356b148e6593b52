#include <cmath>
#include <numbers>
#include <optional>

#include "wwlab/dno/dno.hpp"
#include "wwlab/errors.hpp"
#include "wwlab/spectral/norms.hpp"

namespace wwlab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Generalized binomial coefficient binom(a, k).
double binom(double a, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= (a - i) / (i + 1);
    return r;
}

// The 2D Fourier transform of |x|^{-a} is c_a |xi|^{a-2} for odd a.
double kernel_constant(int a) {
    double c = kTwoPi;
    for (int b = 1; b < a; b += 2) c = -c / (b * b);
    return c;
}

// Periodized convolution with |x|^{-a}.
SpectralField conv_w(int a, const SpectralField& g) {
    const double c = kernel_constant(a);
    return apply_multiplier(g, [&](const Vec2& xi) { return c * std::pow(norm(xi), a - 2); });
}

// Component `axis` of the periodized convolution with x |x|^{-a}, a >= 3.
SpectralField conv_v(int a, int axis, const SpectralField& g) {
    const double c = kernel_constant(a - 2);
    return apply_multiplier(g, [&](const Vec2& xi) {
        const double r = norm(xi);
        if (r == 0.0) return cplx{};
        const double comp = axis == 0 ? xi.x : xi.y;
        return cplx(0.0, -comp / (a - 2)) * c * std::pow(r, a - 4);
    });
}

// h^0 .. h^count on the working grid.
std::vector<SpectralField> powers(const SpectralField& h, int count) {
    std::vector<SpectralField> p;
    p.reserve(count + 1);
    p.push_back(SpectralField::sample(h.grid(), [](double, double) { return 1.0; }));
    for (int k = 1; k <= count; ++k) p.push_back(multiply(p.back(), h));
    return p;
}

// sum_k binom(e, k) (-1)^k h^{e-k} conv(rho h^k), the expansion of (h(x) - h(y))^e.
template <class Conv>
SpectralField difference_power(int e, const std::vector<SpectralField>& hp, const SpectralField& rho, Conv&& conv) {
    SpectralField out(rho.grid());
    for (int k = 0; k <= e; ++k) {
        const double w = binom(e, k) * (k % 2 ? -1.0 : 1.0);
        out += w * multiply(hp[e - k], conv(multiply(rho, hp[k])));
    }
    return out;
}

SpectralField kn_on_grid(int n, const SpectralField& rho, const std::vector<SpectralField>& hp) {
    const double alpha = binom(-0.5, n) / kTwoPi;
    auto conv = [n](const SpectralField& g) { return conv_w(2 * n + 1, g); };
    return alpha * radial_power(difference_power(2 * n, hp, rho, conv), 1.0);
}

FourierGrid working_grid(const FourierGrid& g, int padding) {
    if (padding < 1 || (padding & (padding - 1)) != 0) throw ConfigError("padding must be a power of two");
    return FourierGrid(g.n() * padding, g.length());
}

cplx interpolate(const SpectralField& f, double x1, double x2) {
    const auto& g = f.grid();
    const auto c = f.coefficients();
    cplx acc = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0.0) continue;
        const Vec2 xi = g.xi(k);
        acc += c[k] * std::polar(1.0, xi.x * x1 + xi.y * x2);
    }
    return acc;
}

}  // namespace

SpectralField kn_apply(int n, const SpectralField& rho, const SpectralField& h) {
    if (n < 1) throw ConfigError("K_n needs n >= 1");
    require_same_grid(rho.grid(), h.grid());
    return kn_on_grid(n, rho, powers(h, 2 * n));
}

LayerDensity layer_density_solve(const SurfaceState& s, const BieOptions& opt) {
    require_real_state(s);
    if (opt.kernel_terms < 1 || opt.max_iterations < 1 || !(opt.quadrature_tolerance > 0.0))
        throw ConfigError("invalid layer solve options");
    const auto grid = working_grid(s.h.grid(), opt.padding);
    const auto h = resample(s.h, grid);
    const auto lpsi = radial_power(resample(s.psi, grid), 1.0);
    // Iterates stay on the input lattice so that padded products do not alias.
    auto project = [&](const SpectralField& f) { return resample(resample(f, s.h.grid()), grid); };
    const auto hp = powers(h, 2 * opt.kernel_terms);
    const double scale = std::max(l2_norm(lpsi), 1e-300);

    LayerDensity out{lpsi, 0, 0.0, {}};
    for (int it = 1; it <= opt.max_iterations; ++it) {
        SpectralField next = lpsi;
        double tail = 0.0;
        for (int n = 1; n <= opt.kernel_terms; ++n) {
            const auto k = kn_on_grid(n, out.rho, hp);
            if (n == opt.kernel_terms) tail = l2_norm(k) / scale;
            next -= k;
        }
        next = project(next);
        const double r = l2_norm(next - out.rho) / scale;
        out.rho = std::move(next);
        out.iterations = it;
        out.residual = r;
        out.history.push_back(r);
        if (!std::isfinite(r)) throw ContractionFailure("layer density iteration produced non-finite values", out.history);
        if (r <= opt.tolerance) {
            if (tail > opt.quadrature_tolerance)
                throw NumericalAbort("kernel expansion truncated above the quadrature tolerance; raise kernel_terms");
            return out;
        }
        if (it >= 2 && r > out.history[it - 2] && r > 1e3 * opt.tolerance)
            throw ContractionFailure("layer density iteration is not contracting", out.history);
    }
    throw ContractionFailure("layer density iteration did not reach the tolerance", out.history);
}

SpectralField single_layer_trace(const LayerDensity& density, const SpectralField& h, const BieOptions& opt) {
    const auto& grid = density.rho.grid();
    const auto hw = resample(h, grid);
    const auto hp = powers(hw, 2 * opt.kernel_terms);
    auto psi = radial_power(density.rho, -1.0);
    for (int n = 1; n <= opt.kernel_terms; ++n) {
        auto conv = [n](const SpectralField& g) { return conv_w(2 * n + 1, g); };
        psi += (binom(-0.5, n) / kTwoPi) * difference_power(2 * n, hp, density.rho, conv);
    }
    return resample(psi, h.grid());
}

std::vector<double> single_layer_eval(const LayerDensity& density, const SpectralField& h,
                                      const std::vector<EvalPoint>& points, const BieOptions& opt) {
    const auto& grid = density.rho.grid();
    const auto hw = resample(h, grid);
    const double hmax = lebesgue_norm(hw, kInf);
    const double surface_tol = 1e-12 * (1.0 + hmax);

    std::optional<SpectralField> trace;
    std::vector<std::vector<cplx>> layers;  // coefficients of rho (-h)^j / j!
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        const double hx = interpolate(hw, p.x1, p.x2).real();
        if (p.z > hx + surface_tol) throw DomainError("evaluation point lies above the surface");
        if (p.z >= hx - surface_tol) {
            if (!trace) trace = resample(single_layer_trace(density, h, opt), grid);
            out.push_back(interpolate(*trace, p.x1, p.x2).real());
            continue;
        }
        if (layers.empty()) {
            const double reach = grid.max_abs_xi() * hmax;
            if (reach > 25.0) throw DomainError("interior expansion outside its range; refine or flatten the surface");
            SpectralField term = density.rho;
            const auto minus_h = -1.0 * hw;
            for (int j = 0;; ++j) {
                layers.emplace_back(term.coefficients().begin(), term.coefficients().end());
                double bound = 1.0;
                for (int i = 1; i <= j + 1; ++i) bound *= reach / i;
                if (bound < 1e-17 || j >= 200) break;
                term = (1.0 / (j + 1)) * multiply(term, minus_h);
            }
        }
        cplx acc = 0.0;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const double r = grid.abs_xi(k);
            if (r == 0.0) {
                if (layers.size() > 1) acc += layers[1][k];
                continue;
            }
            cplx sum = 0.0;
            double w = 1.0 / r;
            for (const auto& layer : layers) {
                sum += w * layer[k];
                w *= r;
            }
            const Vec2 xi = grid.xi(k);
            acc += sum * std::exp(r * p.z) * std::polar(1.0, xi.x * p.x1 + xi.y * p.x2);
        }
        out.push_back(acc.real());
    }
    return out;
}

SpectralField dno_bie(const SurfaceState& s, const BieOptions& opt) {
    if (opt.normal_terms < 1) throw ConfigError("normal_terms must be at least 1");
    const auto density = layer_density_solve(s, opt);
    const auto& grid = density.rho.grid();
    const auto h = resample(s.h, grid);
    const auto hp = powers(h, 2 * opt.normal_terms + 1);
    const auto dh1 = partial(h, 0), dh2 = partial(h, 1);

    SpectralField sum(grid);
    double tail = 0.0;
    for (int m = 0; m <= opt.normal_terms; ++m) {
        const int a = 2 * m + 3;
        auto v1 = [a](const SpectralField& g) { return conv_v(a, 0, g); };
        auto v2 = [a](const SpectralField& g) { return conv_v(a, 1, g); };
        auto w = [a](const SpectralField& g) { return conv_w(a, g); };
        SpectralField term = multiply(dh1, difference_power(2 * m, hp, density.rho, v1)) +
                             multiply(dh2, difference_power(2 * m, hp, density.rho, v2));
        term -= difference_power(2 * m + 1, hp, density.rho, w);
        term *= binom(-1.5, m);
        sum += term;
        if (m == opt.normal_terms) tail = l2_norm(term);
    }
    auto g = density.rho + (1.0 / kTwoPi) * sum;
    if (tail / kTwoPi > opt.quadrature_tolerance * std::max(l2_norm(g), 1e-300))
        throw NumericalAbort("normal-derivative expansion truncated above the quadrature tolerance; raise normal_terms");
    return resample(g, s.h.grid()).real_part();
}

}  // namespace wwlab
