#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "wwlab/dno/dno.hpp"
#include "wwlab/errors.hpp"
#include "wwlab/spectral/norms.hpp"

using namespace wwlab;
using std::numbers::pi;

namespace {

SpectralField random_real(const FourierGrid& g, int kmax, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    std::vector<cplx> c(g.size());
    for (int k1 = -kmax; k1 <= kmax; ++k1)
        for (int k2 = -kmax; k2 <= kmax; ++k2) c[g.flat_mode(k1, k2)] = cplx(nd(rng), nd(rng)) / (1.0 + k1 * k1 + k2 * k2);
    return SpectralField::from_coefficients(g, std::move(c)).real_part();
}

double rel(const SpectralField& a, const SpectralField& b) { return l2_norm(a - b) / l2_norm(b); }

// Phi = e^z cos x1 is harmonic; its trace and normal data on z = h are known in closed form.
struct HarmonicCase {
    SurfaceState state;
    SpectralField g;
};

HarmonicCase harmonic_case(const FourierGrid& grid, double eps) {
    auto h_of = [eps](double x, double y) { return eps * (std::cos(y) + 0.5 * std::sin(x + y)); };
    auto h = SpectralField::sample(grid, h_of);
    auto psi = SpectralField::sample(grid, [&](double x, double y) { return std::exp(h_of(x, y)) * std::cos(x); });
    auto g = SpectralField::sample(grid, [&](double x, double y) {
        const double e = std::exp(h_of(x, y)), hx = eps * 0.5 * std::cos(x + y);
        return e * std::cos(x) + hx * e * std::sin(x);
    });
    return {{h.real_part(), psi.real_part(), 2.0}, g.real_part()};
}

}  // namespace

TEST_CASE("flat surface gives Lambda psi") {
    const FourierGrid g(32, 10.0);
    const SurfaceState s{SpectralField(g), random_real(g, 6, 1), 2.0};
    const auto want = radial_power(s.psi, 1.0);
    for (int order = 1; order <= 3; ++order) CHECK(rel(dno_series(s, order), want) < 1e-14);
    CHECK(rel(dno_bie(s), want) < 1e-12);
    const auto d = layer_density_solve(s);
    CHECK(d.iterations <= 2);
    CHECK_THROWS_AS(dno_series(s, 4), ConfigError);
}

TEST_CASE("constants are annihilated") {
    const FourierGrid g(32, 10.0);
    const auto h = 0.05 * random_real(g, 5, 2);
    const auto one = SpectralField::sample(g, [](double, double) { return 1.0; });
    const SurfaceState s{h, one, 2.0};
    for (int order = 1; order <= 3; ++order) CHECK(l2_norm(dno_series(s, order)) < 1e-14);
    CHECK(l2_norm(dno_bie(s)) < 1e-10);
}

TEST_CASE("linear-in-h term for crossed cosines") {
    // h = eps cos x2, psi = cos x1: the increment is (1 - sqrt 2) eps cos x1 cos x2, worked by hand.
    const FourierGrid g(16, 2 * pi);
    const double eps = 0.1;
    const SurfaceState s{SpectralField::sample(g, [&](double, double y) { return eps * std::cos(y); }),
                         SpectralField::sample(g, [](double x, double) { return std::cos(x); }), 2.0};
    const auto g1 = dno_series(s, 2) - dno_series(s, 1);
    const double c = (1.0 - std::sqrt(2.0)) * eps / 4.0;
    for (int a : {-1, 1})
        for (int b : {-1, 1}) CHECK(std::abs(g1.coefficient(a, b) - c) < 1e-15);
    CHECK(l2_norm(g1) == doctest::Approx(std::abs(c) * 2.0 * 2.0 * pi).epsilon(1e-12));
}

TEST_CASE("order 2 for a co-directed sine") {
    // h = eps cos x1, psi = sin x1: the two linear corrections cancel, leaving sin x1.
    const FourierGrid g(16, 2 * pi);
    const SurfaceState s{SpectralField::sample(g, [](double x, double) { return 0.1 * std::cos(x); }),
                         SpectralField::sample(g, [](double x, double) { return std::sin(x); }), 2.0};
    const auto g2 = dno_series(s, 2);
    CHECK(std::abs(g2.coefficient(1, 0) - cplx(0.0, -0.5)) < 1e-15);
    CHECK(std::abs(g2.coefficient(-1, 0) - cplx(0.0, 0.5)) < 1e-15);
    CHECK(std::abs(g2.coefficient(2, 0)) < 1e-15);
}

TEST_CASE("series terms are homogeneous in h") {
    const FourierGrid g(32, 12.0);
    const auto h = random_real(g, 4, 3), psi = random_real(g, 5, 4);
    const double lambda = 0.37;
    CHECK(rel(dno_series({lambda * h, psi, 2.0}, 1), dno_series({h, psi, 2.0}, 1)) == 0.0);
    for (int order = 2; order <= 3; ++order) {
        auto term = [&](const SpectralField& hh) {
            return dno_series({hh, psi, 2.0}, order) - dno_series({hh, psi, 2.0}, order - 1);
        };
        CHECK(rel(term(lambda * h), std::pow(lambda, order - 1) * term(h)) < 1e-12);
    }
}

TEST_CASE("series are self-adjoint and real") {
    const FourierGrid g(32, 12.0);
    const auto h = 0.2 * random_real(g, 6, 5);
    const auto p1 = random_real(g, 6, 6), p2 = random_real(g, 6, 7);
    for (auto rule : {ProductRule::exact, ProductRule::two_thirds})
        for (int order = 1; order <= 3; ++order) {
            const cplx a = inner_product(dno_series({h, p1, 2.0}, order, rule), p2);
            const cplx b = inner_product(p1, dno_series({h, p2, 2.0}, order, rule));
            CHECK(std::abs(a - b) < 1e-12 * std::abs(a));
            CHECK(dno_series({h, p1, 2.0}, order, rule).hermitian_defect() < 1e-13);
        }
}

TEST_CASE("layer oracle reproduces an exact harmonic function") {
    const FourierGrid g(32, 2 * pi);
    const auto c = harmonic_case(g, 0.05);
    CHECK(rel(dno_bie(c.state), c.g) < 1e-9);
    // The order-3 series misses the h^3 term.
    const double e3 = rel(dno_series(c.state, 3), c.g);
    const auto c2 = harmonic_case(g, 0.025);
    const double e3h = rel(dno_series(c2.state, 3), c2.g);
    CHECK(std::log2(e3 / e3h) == doctest::Approx(3.0).epsilon(0.1));
}

TEST_CASE("layer oracle is self-adjoint") {
    const FourierGrid g(32, 12.0);
    const auto h = 0.05 * random_real(g, 4, 8);
    const auto p1 = random_real(g, 5, 9), p2 = random_real(g, 5, 10);
    const cplx a = inner_product(dno_bie({h, p1, 2.0}), p2);
    const cplx b = inner_product(p1, dno_bie({h, p2, 2.0}));
    CHECK(std::abs(a - b) < 1e-8 * std::abs(a));
}

TEST_CASE("layer density iteration contracts") {
    const FourierGrid g(32, 2 * pi);
    const auto c = harmonic_case(g, 0.1);
    const auto d = layer_density_solve(c.state);
    CHECK(d.residual <= 1e-13);
    CHECK(d.iterations == static_cast<int>(d.history.size()));
    for (std::size_t i = 1; i < d.history.size(); ++i) CHECK(d.history[i] < d.history[i - 1]);
    // rho - Lambda psi = O(eps^2)
    const auto c2 = harmonic_case(g, 0.05);
    const auto d2 = layer_density_solve(c2.state);
    const auto lp = radial_power(resample(c.state.psi, d.rho.grid()), 1.0);
    const auto lp2 = radial_power(resample(c2.state.psi, d2.rho.grid()), 1.0);
    const double r = l2_norm(d.rho - lp) / l2_norm(d2.rho - lp2);
    CHECK(std::log2(r) == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("K_n kernels") {
    const FourierGrid g(32, 10.0);
    const auto rho = random_real(g, 5, 11), h = random_real(g, 3, 12);
    const auto flat = SpectralField::sample(g, [](double, double) { return 0.7; });
    CHECK(l2_norm(kn_apply(1, rho, flat)) < 1e-12 * l2_norm(rho));
    for (int n = 1; n <= 2; ++n) CHECK(rel(kn_apply(n, rho, 0.5 * h), std::pow(0.5, 2 * n) * kn_apply(n, rho, h)) < 1e-10);
    CHECK_THROWS_AS(kn_apply(0, rho, h), ConfigError);
}

TEST_CASE("large slopes stop the contraction") {
    const FourierGrid g(32, 2 * pi);
    const SurfaceState s{SpectralField::sample(g, [](double x, double) { return 2.0 * std::cos(3 * x); }),
                         SpectralField::sample(g, [](double x, double y) { return std::cos(x + y); }), 2.0};
    try {
        layer_density_solve(s);
        FAIL("expected a contraction failure");
    } catch (const ContractionFailure& e) {
        CHECK_FALSE(e.history().empty());
    }
}

TEST_CASE("truncated expansions above the quadrature tolerance are refused") {
    const FourierGrid g(32, 2 * pi);
    const auto c = harmonic_case(g, 0.2);
    BieOptions opt;
    opt.kernel_terms = 1;
    opt.normal_terms = 1;
    opt.quadrature_tolerance = 1e-9;
    CHECK_THROWS_AS(dno_bie(c.state, opt), NumericalAbort);
    opt.quadrature_tolerance = 1.0;
    CHECK_NOTHROW(dno_bie(c.state, opt));
}

TEST_CASE("single-layer potential") {
    const FourierGrid g(32, 2 * pi);
    SUBCASE("flat surface trace is Lambda^{-1} rho") {
        const LayerDensity d{resample(random_real(g, 4, 13), FourierGrid(64, 2 * pi)), 1, 0.0, {1.0}};
        const auto tr = single_layer_trace(d, SpectralField(g), {});
        CHECK(rel(tr, resample(radial_power(d.rho, -1.0), g)) < 1e-13);
    }
    const auto c = harmonic_case(g, 0.1);
    const auto d = layer_density_solve(c.state);
    SUBCASE("trace reproduces psi") {
        const auto tr = single_layer_trace(d, c.state.h, {});
        CHECK(rel(tr - SpectralField::sample(g, [&](double, double) { return tr.mean(); }), c.state.psi) < 1e-9);
    }
    SUBCASE("evaluation rules") {
        const double x = 0.3, y = -1.1;
        const double hx = 0.1 * (std::cos(y) + 0.5 * std::sin(x + y));
        CHECK_THROWS_AS(single_layer_eval(d, c.state.h, {{x, y, hx + 1e-3}}), DomainError);
        const auto on = single_layer_eval(d, c.state.h, {{x, y, hx}, {x, y, hx - 1e-7}});
        CHECK(on[1] == doctest::Approx(on[0]).epsilon(1e-5));
        // Far below the surface only the mean of rho h survives.
        const auto deep = single_layer_eval(d, c.state.h, {{x, y, -40.0}, {2.0, 1.0, -40.0}});
        const double want = -inner_product(d.rho, resample(c.state.h, d.rho.grid())).real() / (4 * pi * pi);
        CHECK(deep[0] == doctest::Approx(want).epsilon(1e-9));
        CHECK(deep[1] == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("series against the oracle on an amplitude sweep") {
    const FourierGrid g(32, 2 * pi);
    const auto h = SpectralField::sample(g, [](double x, double y) { return std::cos(y) + 0.5 * std::sin(x + y); });
    const auto psi = SpectralField::sample(g, [](double x, double y) { return std::cos(x) * std::cos(y); });
    const auto report = dno_compare(h, psi, 1, {0.04, 0.02, 0.01, 0.005});
    REQUIRE(report.rows.size() == 4);
    CHECK(report.fit.exponent == doctest::Approx(2.0).epsilon(0.1));
    std::ostringstream os;
    write_csv(os, report);
    CHECK(os.str().rfind("epsilon,order,l2_err,linf_err\n0.04,1,", 0) == 0);
    CHECK_THROWS_AS(dno_compare(h, psi, 1, {}), ConfigError);
}

TEST_CASE("complex states are rejected") {
    const FourierGrid g(16, 5.0);
    const auto z = SpectralField::plane_wave(g, 1, 0);
    CHECK_THROWS_AS(dno_bie({z, z, 2.0}), ConfigError);
}
