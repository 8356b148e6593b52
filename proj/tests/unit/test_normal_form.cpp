#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wwlab/errors.hpp"
#include "wwlab/evolution/evolution.hpp"
#include "wwlab/normal_form/normal_form.hpp"
#include "wwlab/resonance/resonance.hpp"
#include "wwlab/spectral/norms.hpp"

using namespace wwlab;
using std::numbers::pi;

namespace {

Vec2 random_vec(std::mt19937_64& rng, double r = 2.0) {
    std::uniform_real_distribution<double> u(-r, r);
    return {u(rng), u(rng)};
}

SpectralField random_field(const FourierGrid& g, int kmax, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    std::vector<cplx> c(g.size());
    for (int k1 = -kmax; k1 <= kmax; ++k1)
        for (int k2 = -kmax; k2 <= kmax; ++k2) c[g.flat_mode(k1, k2)] = cplx(nd(rng), nd(rng)) / (1.0 + k1 * k1 + k2 * k2);
    return SpectralField::from_coefficients(g, std::move(c));
}

double max_coeff_diff(const SpectralField& a, const SpectralField& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.coefficients().size(); ++k)
        m = std::max(m, std::abs(a.coefficients()[k] - b.coefficients()[k]));
    return m;
}

double m1_by_hand(const Vec2& x, const Vec2& y) { return (dot(x, y) - norm(x) * norm(y)) / std::sqrt(norm(y)); }

}  // namespace

TEST_CASE("symmetric step") {
    CHECK(symmetric_step(0.0) == 0.0);
    CHECK(symmetric_step(1.0) == 1.0);
    CHECK(symmetric_step(-0.5) == 0.0);
    CHECK(symmetric_step(0.5) == doctest::Approx(0.5));
    for (double s = 0.05; s < 1.0; s += 0.1) {
        CHECK(symmetric_step(1.0 - s) == doctest::Approx(1.0 - symmetric_step(s)).epsilon(1e-14));
        CHECK(symmetric_step(s + 0.05) > symmetric_step(s));
    }
}

TEST_CASE("cutoff is homogeneous, bounded and swaps under relabeling") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        const Vec2 xi = random_vec(rng), eta = random_vec(rng);
        const double c = chi(xi, eta);
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
        CHECK(std::abs(chi(xi * 3.7, eta * 3.7) - c) < 1e-12);
        CHECK(std::abs(chi(xi * 0.01, eta * 0.01) - c) < 1e-12);
        CHECK(std::abs(chi(xi, xi - eta) - (1.0 - c)) < 1e-12);
        // Where chi > 0, |eta| >= tan(pi/8) / (1 + tan(pi/8)) |xi|.
        if (c > 0.0) CHECK(norm(eta) >= 0.29 * norm(xi));
    }
    // chi vanishes on a cone around eta = 0 and equals 1 around xi - eta = 0.
    const Vec2 xi{1.0, 0.5};
    for (double d : {1e-1, 1e-3, 1e-6}) {
        CHECK(chi(xi, Vec2{d, -d}) == 0.0);
        CHECK(chi(xi, xi + Vec2{d, d}) == 1.0);
    }
}

TEST_CASE("chi split reconstructs the symbol") {
    const BilinearSymbol m = [](const Vec2& xi, const Vec2& eta) { return cplx(xi.x - eta.y, norm(xi + eta)); };
    const auto [a, b] = chi_split(m);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
        const Vec2 xi = random_vec(rng), eta = random_vec(rng);
        CHECK(std::abs(a(xi, eta) + b(xi, eta) - m(xi, eta)) < 1e-12 * std::max(1.0, std::abs(m(xi, eta))));
    }
}

TEST_CASE("boundary term of zero and of a single plane wave") {
    const FourierGrid g(32, 2 * pi);
    const SignPattern mm{-1, -1};
    const double t = 3.0;
    const auto sym = boundary_symbol(1, mm, t);
    CHECK(l2_norm(boundary_term(SpectralField(g), sym)) == 0.0);

    const Vec2 k{2.0, 1.0};
    const auto f = SpectralField::plane_wave(g, 2, 1, cplx(0.5, 0.25));
    const auto g1 = boundary_term(f, sym);
    const double phi = std::sqrt(norm(2.0 * k)) - 2.0 * std::sqrt(norm(k));
    const cplx want = std::polar(1.0, t * phi) * cplx(0.0, -m1_by_hand(2.0 * k, k) / phi) * cplx(0.5, 0.25) * cplx(0.5, 0.25);
    CHECK(std::abs(g1.coefficient(4, 2) - want) < 1e-13);
    CHECK(l2_norm(g1) == doctest::Approx(std::abs(want) * 2 * pi));
}

TEST_CASE("quadratic boundary term reads the profile of the state") {
    const FourierGrid g(32, 2 * pi);
    const double t = 2.5;
    const auto f = SpectralField::plane_wave(g, 1, 2, 0.1);
    const auto s = state_from_unknown(half_wave(f, -t), t);
    const auto a = quadratic_boundary_term(s, 2, SignPattern{-1, -1});
    const auto b = boundary_term(f, boundary_symbol(2, SignPattern{-1, -1}, t));
    CHECK(max_coeff_diff(a, b) < 1e-14);
    CHECK_THROWS_AS(quadratic_boundary_term(s, 3, SignPattern{-1, -1}), ConfigError);
    CHECK_THROWS_AS(boundary_symbol(1, SignPattern{-1, -1, 1}, t), ConfigError);
}

TEST_CASE("relabeling eta and xi - eta swaps chi and its complement") {
    const FourierGrid g(16, 9.0);
    const auto f = random_field(g, 4, 3);
    const auto m = boundary_symbol(1, SignPattern{-1, -1}, 2.0);
    const BilinearSymbol swapped = [m](const Vec2& xi, const Vec2& eta) { return m(xi, xi - eta); };
    const auto a = boundary_term(f, m, CutoffPiece::chi);
    const auto b = boundary_term(f, swapped, CutoffPiece::complement);
    CHECK(max_coeff_diff(a, b) < 1e-10);
    const auto full = boundary_term(f, m);
    CHECK(max_coeff_diff(a + boundary_term(f, m, CutoffPiece::complement), full) < 1e-12);
}

TEST_CASE("separable symbols agree with the physical-space product path") {
    const FourierGrid g(32, 12.0);
    const auto f = random_field(g, 6, 4);
    const BilinearSymbol m = [](const Vec2& xi, const Vec2& eta) {
        return cplx(std::sqrt(norm(eta)) * norm(xi - eta) * (1.0 + norm(xi)));
    };
    const auto direct = boundary_term(f, m);
    const auto product = apply_multiplier(multiply(radial_power(f, 0.5), radial_power(f, 1.0), Dealias::two_thirds),
                                          [](const Vec2& xi) { return 1.0 + norm(xi); });
    CHECK(max_coeff_diff(direct, product) < 1e-11);
}

TEST_CASE("normal form multiplier on phi_{--} stays bounded as eta -> 0") {
    double prev = 0.0;
    for (int k = 4; k <= 20; ++k) {
        const double d = std::ldexp(1.0, -k);
        double mx = 0.0;
        for (int a = 0; a < 16; ++a)
            for (int b = 0; b < 8; ++b) {
                const Vec2 xi{std::cos(a * pi / 8), std::sin(a * pi / 8)};
                const Vec2 eta{d * std::cos((b + 0.5) * pi / 4), d * std::sin((b + 0.5) * pi / 4)};
                mx = std::max(mx, std::abs(normal_form_multiplier(1, SignPattern{-1, -1}, xi, eta)));
            }
        if (k > 10) CHECK(mx / prev == doctest::Approx(1.0).epsilon(0.05));
        CHECK(mx < 10.0);
        prev = mx;
    }
}

TEST_CASE("weak cubic symbol by hand") {
    const WeakCubicChoice c;  // mu_1 with (-,-), m_1, phase (+,+,+)
    const double s = 1.5;
    const Vec2 xi{1.0, 2.0}, eta{0.0, 1.0}, sigma{1.0, 0.0};
    const Vec2 zeta = xi - eta - sigma;
    const double phi3 = std::sqrt(norm(xi)) + std::sqrt(norm(eta)) + std::sqrt(norm(sigma)) + std::sqrt(norm(zeta));
    const double phi2 = std::sqrt(norm(xi)) - std::sqrt(norm(eta)) - std::sqrt(norm(xi - eta));
    const cplx want = std::polar(1.0, s * phi3) * cplx(0.0, -m1_by_hand(xi, eta) / phi2) * m1_by_hand(xi - eta, sigma);
    CHECK(std::abs(weak_cubic_symbol(c, s)(xi, eta, sigma) - want) < 1e-14);

    const FourierGrid g(16, 2 * pi);
    TrilinearOperator op;
    op.symbol = weak_cubic_symbol(c, s);
    const auto out = trilinear_apply(op, SpectralField::plane_wave(g, 1, 0), SpectralField::plane_wave(g, 0, 1),
                                     SpectralField::plane_wave(g, 0, 1));
    CHECK(std::abs(out.coefficient(1, 2) - want) < 1e-14);
}

TEST_CASE("weak cubic integrand") {
    const FourierGrid g(16, 2 * pi);
    const SurfaceState zero{SpectralField(g), SpectralField(g), 2.0};
    const auto z = weak_cubic_integrand(zero, 2.0, {});
    CHECK(z.l2 == 0.0);
    CHECK(z.linf == 0.0);
    CHECK(z.h2 == 0.0);
    WeakCubicChoice strong;
    strong.cubic = SignPattern{-1, -1, 1};
    CHECK_THROWS_AS(weak_cubic_integrand(zero, 2.0, strong), ConfigError);
    const FourierGrid big(128, 10.0);
    const SurfaceState large{SpectralField(big), SpectralField(big), 2.0};
    CHECK_THROWS_AS(weak_cubic_integrand(large, 2.0, {}), CostGuardError);

    const auto f = random_field(g, 3, 5);
    const auto s = state_from_unknown(half_wave(f, -2.0), 2.0);
    const auto w = weak_cubic_integrand(s, 2.0, {});
    CHECK(w.l2 > 0.0);
    CHECK(w.l2 == doctest::Approx(l2_norm(w.field)));
    CHECK(w.h2 >= w.l2);
}

TEST_CASE("1/phi is controlled by the coordinate singularities for weak patterns") {
    std::mt19937_64 rng(8);
    for (const auto& p : SignPattern::all(3)) {
        if (classify_cubic_phase(p) != CubicClass::weakly_resonant) continue;
        double worst = 0.0;
        for (int i = 0; i < 5000; ++i) {
            const Point q{random_vec(rng), random_vec(rng), random_vec(rng)};
            worst = std::max(worst, inverse_phase_ratio(p, q));
        }
        CHECK(worst < 10.0);
    }
    // Strongly resonant phases vanish at xi = eta = sigma.
    const Vec2 v{0.3, 0.4};
    CHECK(std::isinf(inverse_phase_ratio(SignPattern{-1, -1, 1}, {v, v, v})));
}

TEST_CASE("weighted norm of g1 does not grow along linear flow") {
    const FourierGrid g(64, 64.0);
    PacketSpec p;
    p.width = 4.0;
    std::vector<std::pair<double, double>> series;
    for (double t : geometric_times(2.0, 30.0, 5)) {
        const auto s = wave_packet(g, p, t);
        series.emplace_back(t, weighted_norm(quadratic_boundary_term(s, 1, SignPattern{-1, -1})).value);
    }
    CHECK(loglog_fit(series).exponent <= 0.1);
}
