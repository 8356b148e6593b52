// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wwlab/dno/dno.hpp"
#include "wwlab/errors.hpp"
#include "wwlab/evolution/evolution.hpp"
#include "wwlab/normal_form/normal_form.hpp"
#include "wwlab/pseudo_product/pseudo_product.hpp"
#include "wwlab/resonance/resonance.hpp"
#include "wwlab/spectral/littlewood_paley.hpp"
#include "wwlab/spectral/norms.hpp"
#include "wwlab/symbols/structure.hpp"

using namespace wwlab;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Accumulates named sub-checks into one outcome.
class Report {
public:
    void check(bool ok, const std::string& what) {
        pass_ = pass_ && ok;
        if (!detail_.empty()) detail_ += "; ";
        detail_ += what;
        if (!ok) detail_ += " [x]";
    }
    Outcome done() const { return {pass_, detail_}; }

private:
    bool pass_ = true;
    std::string detail_;
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

std::string fmt(const char* f, double a, double b, double c) {
    char buf[192];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

SpectralField random_coeffs(const FourierGrid& g, int kmax, unsigned seed, bool decay) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    std::vector<cplx> c(g.size());
    for (int k1 = -kmax; k1 <= kmax; ++k1)
        for (int k2 = -kmax; k2 <= kmax; ++k2)
            c[g.flat_mode(k1, k2)] = cplx(nd(rng), nd(rng)) / (decay ? 1.0 + k1 * k1 + k2 * k2 : 1.0);
    return SpectralField::from_coefficients(g, std::move(c));
}

SpectralField random_real(const FourierGrid& g, int kmax, unsigned seed) {
    return random_coeffs(g, kmax, seed, true).real_part();
}

double max_coeff_diff(const SpectralField& a, const SpectralField& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.coefficients().size(); ++k)
        m = std::max(m, std::abs(a.coefficients()[k] - b.coefficients()[k]));
    return m;
}

double max_coeff(const SpectralField& a) {
    double m = 0.0;
    for (auto c : a.coefficients()) m = std::max(m, std::abs(c));
    return m;
}

// ---------------------------------------------------------------------------

Outcome null_structure() {
    Report r;
    const auto rep = null_structure_report(SymbolDescriptor::m1(), SignPattern::parse("--"), 16);
    const auto* eta = rep.find(Locus::eta);
    const auto* diag = rep.find(Locus::xi_minus_eta);
    r.check(!rep.vacuous() && eta && diag, std::to_string(rep.resonant_points) + " resonant points");
    if (eta) r.check(std::abs(eta->symbol_fit.exponent - 0.5) <= 0.05, fmt("eta->0 exponent %.4f", eta->symbol_fit.exponent));
    if (diag)
        r.check(std::abs(diag->symbol_fit.exponent - 2.0) <= 0.05,
                fmt("xi-eta->0 exponent %.4f", diag->symbol_fit.exponent));
    return r.done();
}

Outcome resonance_geometry() {
    Report r;
    const double tol = 1e-3;
    const auto space = sample_resonant_set(SignPattern::parse("--+"), ResonanceKind::space, 16, tol);
    std::size_t inside = 0;
    double worst = 0.0;
    for (const auto& p : space.points) {
        const double phi = std::abs(eval_phase(space.pattern, p.point()));
        worst = std::max(worst, phi);
        if (phi < 10 * tol) ++inside;
    }
    r.check(!space.points.empty() && inside == space.points.size(),
            std::to_string(inside) + "/" + std::to_string(space.points.size()) + " space points time resonant" +
                fmt(", max |phi| %.2e", worst));
    const auto pp = sample_resonant_set(SignPattern::parse("++"), ResonanceKind::time, 16, tol);
    r.check(pp.points.empty(), std::to_string(pp.points.size()) + " time-resonant points for ++");
    return r.done();
}

Outcome cat_identity() {
    Report r;
    const Vec2 xi{1.0, 0.3}, a{0.7, -0.2}, b{-0.3, 0.9};
    std::vector<std::pair<double, double>> samples;
    bool regime = true;
    for (int i = 0; i <= 12; ++i) {
        const double d = std::pow(10.0, -1.0 - 0.25 * i);
        const auto c = cat_residual(xi, xi + a * d, xi + b * d);
        regime = regime && c.in_regime;
        samples.emplace_back(c.distance, c.residual);
    }
    const auto fit = loglog_fit(samples);
    r.check(fit.exponent >= 1.9, fmt("residual exponent %.4f over d in [1e-4, 1e-1] (r2 %.6f)", fit.exponent, fit.r2));
    r.check(regime, "all samples in regime");
    return r.done();
}

Outcome dno_cross_validation() {
    Report r;
    const FourierGrid g(128, 40.0);
    const double w = 2.0;
    const auto h = SpectralField::sample(g, [w](double x, double y) { return std::exp(-(x * x + y * y) / (2 * w * w)); });
    const auto psi = SpectralField::sample(g, [w](double x, double y) {
        const double a = x - 0.5 * w;
        return std::exp(-(a * a + y * y) / (2 * w * w));
    });
    BieOptions opt;
    opt.quadrature_tolerance = 1e-6;
    for (int k = 1; k <= 3; ++k) {
        const auto rep = dno_compare(h, psi, k, {0.04, 0.02, 0.01, 0.005}, opt);
        r.check(std::abs(rep.fit.exponent - (k + 1)) <= 0.3, fmt("order %.0f exponent %.4f", k, rep.fit.exponent));
    }
    return r.done();
}

// Largest relative and absolute energy excursion over one run.
std::pair<double, double> energy_drift(double eps) {
    RunConfig c;
    c.n = 128;
    c.L = 64.0;
    c.packet.epsilon = eps;
    c.dt = 0.1;
    c.t0 = 2.0;
    c.t_end = 50.0;
    c.cadence = 2.0;
    c.dno = DnoPath::parse("series2");
    const auto res = run(c);
    if (res.aborted) throw NumericalAbort(res.message);
    const double e0 = res.ledger.front().energy;
    double d = 0.0;
    for (const auto& row : res.ledger) d = std::max(d, std::abs(row.energy - e0));
    return {d / e0, d};
}

Outcome energy_conservation() {
    Report r;
    const auto [rel01, abs01] = energy_drift(0.01);
    r.check(rel01 <= 1e-3, fmt("relative drift %.3e at eps 0.01", rel01));
    std::vector<std::pair<double, double>> samples{{0.01, abs01}};
    for (double eps : {0.02, 0.005}) samples.emplace_back(eps, energy_drift(eps).second);
    std::sort(samples.begin(), samples.end());
    const auto fit = loglog_fit(samples);
    r.check(std::abs(fit.exponent - 4.0) <= 0.5,
            fmt("drift exponent %.3f (drifts %.2e %.2e", fit.exponent, samples[0].second, samples[1].second) +
                fmt(" %.2e)", samples[2].second));
    return r.done();
}

Outcome dispersive_decay() {
    Report r;
    const FourierGrid g(2048, 2048.0);
    PacketSpec spec;
    spec.envelope = Envelope::mexican_hat;
    spec.width = 1.5;
    spec.k0 = {0.0, 0.0};
    spec.epsilon = 1.0;
    spec.packet_time = 0.0;
    const double horizon = wraparound_horizon(g, spec.packet_time);
    r.check(horizon >= 100.0, fmt("wraparound horizon %.1f", horizon));
    const auto fit = decay_fit(linear_decay_series(g, spec, geometric_times(2.0, 100.0, 16)));
    r.check(std::abs(fit.exponent + 1.0) <= 0.1, fmt("sup-norm exponent %.4f (r2 %.4f)", fit.exponent, fit.r2));
    return r.done();
}

Outcome operator_exactness() {
    Report r;
    {
        const FourierGrid g(64, 11.0);
        const auto a = random_coeffs(g, 31, 1, false), b = random_coeffs(g, 31, 2, false);
        BilinearOperator op;
        op.symbol = [](const Vec2&, const Vec2&) { return cplx(1.0); };
        const auto want = multiply(a, b, Dealias::two_thirds);
        const double e = max_coeff_diff(bilinear_apply(op, a, b), want) / max_coeff(want);
        r.check(e < 1e-10, fmt("bilinear m=1 %.1e", e));
    }
    {
        const FourierGrid g(32, 7.0);
        const auto a = random_coeffs(g, 15, 3, false), b = random_coeffs(g, 15, 4, false),
                   c = random_coeffs(g, 15, 5, false);
        TrilinearOperator op;
        op.symbol = [](const Vec2&, const Vec2&, const Vec2&) { return cplx(1.0); };
        const auto ta = truncate(a, Dealias::half), tb = truncate(b, Dealias::half), tc = truncate(c, Dealias::half);
        const auto want = truncate(multiply(multiply(ta, tb), tc), Dealias::half);
        const double e = max_coeff_diff(trilinear_apply(op, a, b, c), want) / max_coeff(want);
        r.check(e < 1e-10, fmt("trilinear m=1 %.1e", e));
    }
    {
        // Brute-force scatter over every admissible triple.
        const FourierGrid g(16, 8.0);
        const auto a = random_coeffs(g, 7, 11, false), b = random_coeffs(g, 7, 12, false),
                   c = random_coeffs(g, 7, 13, false);
        const int bl = band_limit(g.n(), Dealias::half);
        const double dk = g.dk();
        for (const auto& d : {SymbolDescriptor::m3(), SymbolDescriptor::m4()}) {
            const auto op = TrilinearOperator::from(d);
            std::map<std::pair<int, int>, cplx> acc;
            for (int s1 = -bl; s1 <= bl; ++s1)
                for (int s2 = -bl; s2 <= bl; ++s2)
                    for (int e1 = -bl; e1 <= bl; ++e1)
                        for (int e2 = -bl; e2 <= bl; ++e2)
                            for (int z1 = -bl; z1 <= bl; ++z1)
                                for (int z2 = -bl; z2 <= bl; ++z2) {
                                    const int x1 = s1 + e1 + z1, x2 = s2 + e2 + z2;
                                    if (std::abs(x1) > bl || std::abs(x2) > bl) continue;
                                    acc[{x1, x2}] += op.symbol({dk * x1, dk * x2}, {dk * e1, dk * e2}, {dk * s1, dk * s2}) *
                                                     a.coefficient(s1, s2) * b.coefficient(e1, e2) *
                                                     c.coefficient(z1, z2);
                                }
            std::vector<cplx> out(g.size());
            for (const auto& [k, v] : acc) out[g.flat_mode(k.first, k.second)] = v;
            const auto want = SpectralField::from_coefficients(g, std::move(out));
            const double e = max_coeff_diff(trilinear_apply(op, a, b, c), want) / max_coeff(want);
            r.check(e < 1e-9, d.name() + fmt(" vs brute force %.1e", e));
        }
    }
    {
        const FourierGrid g(64, 30.0);
        std::mt19937_64 rng(3);
        const auto f = random_multiscale_field(g, rng), h = random_multiscale_field(g, rng);
        const auto p = paraproduct_split(f, h);
        const auto want = multiply(f, h, Dealias::two_thirds);
        const double e = max_coeff_diff(p.high_low + p.low_high + p.high_high, want) / max_coeff(want);
        r.check(e < 1e-10, fmt("paraproduct sum %.1e", e));
    }
    return r.done();
}

Outcome model_operators() {
    Report r;
    const FourierGrid g(128, 100.0);
    const std::vector<double> p{6.0, 6.0, 6.0};
    for (int v = 1; v <= 3; ++v) {
        std::vector<std::pair<double, double>> series;
        std::string values;
        bool increasing = true, finite = true;
        double prev = -1.0, top = 0.0;
        for (int J = 0; J <= 8; ++J) {
            const FieldOperator op = [v, J](std::span<const SpectralField> f) {
                return model_operator_apply(v, J, f[0], f[1], f[2]);
            };
            const double m = bound_probe(op, p, 2.0, 100, g, 1000 + J).max_ratio;
            finite = finite && std::isfinite(m);
            increasing = increasing && m >= prev;
            prev = m;
            top = std::max(top, m);
            series.emplace_back(J, m);
            values += fmt(J ? " %.2e" : "%.2e", m);
        }
        // Least-squares slope of the normalized maxima against J.
        double sj = 0.0, sm = 0.0, sjj = 0.0, sjm = 0.0;
        for (auto [J, m] : series) {
            const double y = top > 0.0 ? m / top : 0.0;
            sj += J, sm += y, sjj += J * J, sjm += J * y;
        }
        const double nn = static_cast<double>(series.size());
        const double slope = (nn * sjm - sj * sm) / (nn * sjj - sj * sj);
        r.check(finite && !increasing && slope <= 0.05,
                "variant " + std::to_string(v) + fmt(" slope %.3f, max ratio over J ", slope) + "[" + values + "]");
    }
    return r.done();
}

Outcome normal_form_boundedness() {
    Report r;
    double prev = 0.0, sup = 0.0, last_ratio = 0.0;
    bool stable = true;
    for (int k = 4; k <= 20; ++k) {
        const double d = std::ldexp(1.0, -k);
        double mx = 0.0;
        for (int a = 0; a < 16; ++a)
            for (int b = 0; b < 8; ++b) {
                const Vec2 xi{std::cos(a * pi / 8), std::sin(a * pi / 8)};
                const Vec2 eta{d * std::cos((b + 0.5) * pi / 4), d * std::sin((b + 0.5) * pi / 4)};
                mx = std::max(mx, std::abs(normal_form_multiplier(1, SignPattern{-1, -1}, xi, eta)));
            }
        if (k > 10) {
            last_ratio = mx / prev;
            stable = stable && std::abs(last_ratio - 1.0) <= 0.05;
        }
        sup = std::max(sup, mx);
        prev = mx;
    }
    r.check(std::isfinite(sup), fmt("sup |m1/phi| %.4f", sup));
    r.check(stable, fmt("successive ratio %.6f at eta = 2^-20", last_ratio));
    return r.done();
}

Outcome invariant_suite() {
    Report r;
    {
        const FourierGrid g(64, 10.0);
        const auto f = random_coeffs(g, 31, 5, true);
        double worst = 0.0;
        for (double t = -100.0; t <= 100.0; t += 12.5)
            worst = std::max(worst, std::abs(l2_norm(half_wave(f, t)) / l2_norm(f) - 1.0));
        r.check(worst < 1e-12, fmt("unitarity %.1e", worst));
    }
    {
        const FourierGrid g(64, 13.0);
        const LittlewoodPaleyBank bank(g);
        const auto f = random_coeffs(g, 31, 6, false);
        auto sum = SpectralField(g);
        for (int j = bank.jmin() - 1; j <= bank.jmax(); ++j) sum += bank.bucket(f, j);
        const double e = max_coeff_diff(sum, f);
        r.check(e < 1e-10, fmt("partition of unity %.1e", e));
    }
    {
        const FourierGrid g(64, 12.0);
        const auto a = random_real(g, 20, 7), b = random_real(g, 20, 8);
        const double d = std::max({multiply(a, b, Dealias::two_thirds).hermitian_defect(),
                                   partial(radial_power(a, 0.5), 1).hermitian_defect(),
                                   half_wave(a, 3.0).real_part().hermitian_defect()});
        r.check(d < 1e-12, fmt("hermitian symmetry %.1e", d));
    }
    {
        const FourierGrid g(32, 12.0);
        const auto h = 0.05 * random_real(g, 4, 8);
        const auto p1 = random_real(g, 5, 9), p2 = random_real(g, 5, 10);
        double series = 0.0;
        for (int order = 1; order <= 3; ++order) {
            const cplx a = inner_product(dno_series({h, p1, 2.0}, order), p2);
            const cplx b = inner_product(p1, dno_series({h, p2, 2.0}, order));
            series = std::max(series, std::abs(a - b) / std::abs(a));
        }
        const cplx a = inner_product(dno_bie({h, p1, 2.0}), p2);
        const cplx b = inner_product(p1, dno_bie({h, p2, 2.0}));
        const double bie = std::abs(a - b) / std::abs(a);
        r.check(series < 1e-12 && bie < 1e-8, fmt("DNO self-adjointness series %.1e, layer %.1e", series, bie));
    }
    {
        const FourierGrid g(32, 16.0);
        PacketSpec p;
        p.epsilon = 0.05;
        p.width = 2.0;
        auto s = wave_packet(g, p, 2.0);
        const cplx h0 = s.h.mean();
        double imag = 0.0, mean = 0.0;
        for (int i = 0; i < 40; ++i) {
            s = step(s, 0.1);
            imag = std::max({imag, s.h.max_abs_imag(), s.psi.max_abs_imag()});
            mean = std::max(mean, std::abs(s.h.mean() - h0));
        }
        r.check(imag < 1e-10 && mean < 1e-10, fmt("reality %.1e, mean %.1e", imag, mean));
    }
    {
        const FourierGrid g(32, 2 * pi);
        const auto h = random_real(g, 4, 9), psi = random_real(g, 4, 10);
        const SurfaceState s0{(0.3 / l2_norm(h)) * h, (0.3 / l2_norm(psi)) * psi, 2.0};
        std::vector<SpectralField> u;
        for (double dt : {0.2, 0.1, 0.05}) {
            auto s = s0;
            while (s.t < 3.6 - 1e-12) s = step(s, std::min(dt, 3.6 - s.t));
            u.push_back(complex_unknown(s));
        }
        const double ratio = l2_norm(u[0] - u[1]) / l2_norm(u[1] - u[2]);
        r.check(std::abs(ratio / 16.0 - 1.0) <= 0.2, fmt("step self-convergence ratio %.2f", ratio));
    }
    return r.done();
}

struct Criterion {
    const char* name;
    double budget;  // seconds; 0 when no runtime bound applies
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"null structure of m1 on T_{--}", 10.0, null_structure},
        {"resonance geometry", 30.0, resonance_geometry},
        {"phase gradient identity near the diagonal", 10.0, cat_identity},
        {"DNO series against the layer oracle", 300.0, dno_cross_validation},
        {"energy conservation", 600.0, energy_conservation},
        {"dispersive decay", 120.0, dispersive_decay},
        {"operator exactness", 0.0, operator_exactness},
        {"model operators uniform in J", 300.0, model_operators},
        {"normal form multiplier boundedness", 0.0, normal_form_boundedness},
        {"invariant suite", 0.0, invariant_suite},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget > 0.0 && secs > c.budget) {
            o.pass = false;
            o.detail += fmt("; over the %.0f s budget", c.budget);
        }
        if (!o.pass) ++failed;
        std::printf("%s %2zu %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
