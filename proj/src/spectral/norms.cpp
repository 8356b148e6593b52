#include "wwlab/spectral/norms.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "wwlab/errors.hpp"
#include "wwlab/spectral/operators.hpp"

namespace wwlab {
namespace {

void require_exponent(double p, const char* what) {
    if (!(p >= 1.0)) throw ConfigError(std::string(what) + " exponent must be >= 1");
}

double lebesgue_of_samples(std::span<const double> moduli, double cell_area, double p) {
    if (std::isinf(p)) return moduli.empty() ? 0.0 : *std::max_element(moduli.begin(), moduli.end());
    double s = 0.0;
    for (double m : moduli) s += std::pow(m, p);
    return std::pow(s * cell_area, 1.0 / p);
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

double lebesgue_norm(const SpectralField& f, double p) {
    require_exponent(p, "Lebesgue");
    std::vector<double> m(f.values().size());
    std::transform(f.values().begin(), f.values().end(), m.begin(), [](cplx z) { return std::abs(z); });
    return lebesgue_of_samples(m, f.grid().cell_area(), p);
}

double l2_norm(const SpectralField& f) {
    double s = 0.0;
    for (auto c : f.coefficients()) s += std::norm(c);
    return std::sqrt(s) * f.grid().length();
}

double sobolev_h(const SpectralField& f, double s) {
    double acc = 0.0;
    const auto& g = f.grid();
    for (std::size_t k = 0; k < g.size(); ++k) {
        const double r = g.abs_xi(k);
        acc += std::pow(1.0 + r * r, s) * std::norm(f.coefficients()[k]);
    }
    return std::sqrt(acc) * g.length();
}

double sobolev_w(const SpectralField& f, int k, double p) {
    require_exponent(p, "Sobolev");
    if (k < 0) throw ConfigError("Sobolev order must be nonnegative");
    if (k == 0) return lebesgue_norm(f, p);
    // |nabla^k f|^2 = sum over ordered k-tuples = sum_a binom(k, a) |d1^a d2^(k-a) f|^2.
    std::vector<double> frob(f.values().size(), 0.0);
    for (int a = 0; a <= k; ++a) {
        const auto d = partial(f, a, k - a);
        const double w = binomial(k, a);
        for (std::size_t i = 0; i < frob.size(); ++i) frob[i] += w * std::norm(d.values()[i]);
    }
    for (auto& v : frob) v = std::sqrt(v);
    return lebesgue_norm(f, p) + lebesgue_of_samples(frob, f.grid().cell_area(), p);
}

double besov_norm(const SpectralField& f, double s, double p, double q, bool homogeneous,
                  const LittlewoodPaleyBank& bank) {
    require_exponent(p, "Besov p");
    require_exponent(q, "Besov q");
    std::vector<double> terms;
    double low = 0.0;
    int jstart = bank.jmin();
    if (!homogeneous) {
        low = lebesgue_norm(bank.project(f, LpSelector::below(0)), p);
        jstart = std::max(0, bank.jmin());
    }
    for (int j = jstart; j <= bank.jmax(); ++j)
        terms.push_back(std::pow(2.0, j * s) * lebesgue_norm(bank.project(f, LpSelector::P(j)), p));
    double sum = 0.0;
    if (std::isinf(q)) {
        for (double t : terms) sum = std::max(sum, t);
    } else {
        for (double t : terms) sum += std::pow(t, q);
        sum = std::pow(sum, 1.0 / q);
    }
    return low + sum;
}

WeightedNorm weighted_norm(const SpectralField& f) {
    const auto& g = f.grid();
    const int n = g.n();
    const double edge = 0.4 * g.length();
    double total = 0.0, boundary = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double x1 = g.x(i), x2 = g.x(j);
            const double w = (x1 * x1 + x2 * x2) * std::norm(f.values()[g.flat(i, j)]);
            total += w;
            if (std::abs(x1) > edge || std::abs(x2) > edge) boundary += w;
        }
    WeightedNorm out;
    out.value = std::sqrt(total * g.cell_area());
    out.boundary_fraction = total > 0.0 ? boundary / total : 0.0;
    if (out.contaminated())
        std::clog << "wwlab: warning: " << 100.0 * out.boundary_fraction
                  << "% of |x f|^2 sits near the box boundary (wraparound contamination)\n";
    return out;
}

XNormComponents x_norm(const SpectralField& u, const SpectralField& profile, double t, double delta, int sobolev_n) {
    XNormComponents c;
    const double damp = std::pow(t, -delta);
    c.decay = t * sobolev_w(u, 4, kInf);
    c.sobolev = damp * sobolev_h(u, sobolev_n);
    c.weighted = damp * weighted_norm(profile).value;
    c.mass = l2_norm(u);
    return c;
}

NormReport compute_norms(const SpectralField& f, const NormRequest& r) {
    NormReport out;
    for (double p : r.lebesgue) out.lebesgue[p] = lebesgue_norm(f, p);
    for (auto [k, p] : r.sobolev_w) out.sobolev_w[{k, p}] = sobolev_w(f, k, p);
    for (int s : r.sobolev_h) out.sobolev_h[s] = sobolev_h(f, s);
    if (!r.besov.empty()) {
        const LittlewoodPaleyBank bank(f.grid());
        for (const auto& b : r.besov) {
            out.besov_homogeneous[b] = besov_norm(f, b.s, b.p, b.q, true, bank);
            out.besov_inhomogeneous[b] = besov_norm(f, b.s, b.p, b.q, false, bank);
        }
    }
    if (r.weighted) out.weighted = weighted_norm(f);
    if (r.x_norm) out.x_norm = x_norm(f, r.x_norm->profile, r.x_norm->t, r.x_norm->delta, r.x_norm->sobolev_n);
    return out;
}

}  // namespace wwlab
