#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "wwlab/csv.hpp"
#include "wwlab/errors.hpp"
#include "wwlab/resonance/resonance.hpp"

namespace wwlab {
namespace {

constexpr int kDirections = 8;
constexpr std::size_t kMaxBasePoints = 32;

Vec2 unit(const Vec2& v) {
    const double r = norm(v);
    return r > 0.0 ? v * (1.0 / r) : Vec2{1.0, 0.0};
}

// Point at distance d from the locus, built from a unit base vector.
Point approach(Locus l, const Vec2& base, const Vec2& u, double d) {
    switch (l) {
        case Locus::eta: return {base, d * u, {}};
        case Locus::xi_minus_eta: return {base + d * u, base, {}};
        case Locus::xi: return {d * u, base, {}};
        default: break;
    }
    throw ConfigError("unsupported locus for quadratic approaches");
}

// Unit vector identifying the nearest point on the locus.
Vec2 base_vector(Locus l, const Point& p) {
    switch (l) {
        case Locus::eta: return unit(p.xi);
        case Locus::xi_minus_eta: return unit(p.xi + p.eta);
        case Locus::xi: return unit(p.eta);
        default: break;
    }
    return {1.0, 0.0};
}

}  // namespace

CubicClass classify_cubic_phase(const SignPattern& s) {
    if (s.size() != 3) throw ConfigError("cubic classification needs a pattern of length 3");
    const int minus = (s[0] < 0) + (s[1] < 0) + (s[2] < 0);
    return minus == 2 ? CubicClass::strongly_resonant : CubicClass::weakly_resonant;
}

const LocusSeries* NullStructureReport::find(Locus l) const {
    for (const auto& s : loci)
        if (s.locus == l) return &s;
    return nullptr;
}

NullStructureReport null_structure_report(const SymbolDescriptor& symbol, const SignPattern& pattern, int resolution) {
    if (symbol.arity() != 2 || pattern.size() != 2)
        throw ConfigError("null structure reports take a quadratic symbol and pattern");
    const auto map = sample_resonant_set(pattern, ResonanceKind::time, resolution, 1e-3);
    NullStructureReport report{symbol.name(), pattern, map.points.size(), {}};
    if (map.points.empty()) return report;

    std::map<Locus, std::vector<Vec2>> bases;
    for (const auto& rp : map.points) {
        const Point p = rp.point();
        const std::pair<double, Locus> cands[] = {
            {norm(p.xi), Locus::xi}, {norm(p.eta), Locus::eta}, {norm(p.xi - p.eta), Locus::xi_minus_eta}};
        const auto nearest = *std::min_element(std::begin(cands), std::end(cands),
                                               [](const auto& a, const auto& b) { return a.first < b.first; });
        bases[nearest.second].push_back(base_vector(nearest.second, p));
    }

    for (auto& [locus, all] : bases) {
        std::vector<Vec2> chosen;
        const std::size_t stride = std::max<std::size_t>(1, all.size() / kMaxBasePoints);
        for (std::size_t i = 0; i < all.size() && chosen.size() < kMaxBasePoints; i += stride) chosen.push_back(all[i]);

        LocusSeries series;
        series.locus = locus;
        series.base_points = all.size();
        std::vector<std::pair<double, double>> fit_samples;
        for (int k = 4; k <= 20; ++k) {
            const double d = std::ldexp(1.0, -k);
            double max_m = 0.0, max_ratio = 0.0;
            for (const Vec2& b : chosen)
                for (int q = 0; q < kDirections; ++q) {
                    const double a = 2.0 * std::numbers::pi * (q + 0.5) / kDirections;
                    const Point p = approach(locus, b, {std::cos(a), std::sin(a)}, d);
                    try {
                        const double m = std::abs(symbol(p));
                        const double phi = std::abs(eval_phase(pattern, p));
                        max_m = std::max(max_m, m);
                        if (phi > 0.0) max_ratio = std::max(max_ratio, m / phi);
                    } catch (const DomainError&) {
                    }
                }
            series.distance.push_back(d);
            series.max_symbol.push_back(max_m);
            series.max_ratio.push_back(max_ratio);
            series.sup_ratio = std::max(series.sup_ratio, max_ratio);
            if (max_m > 0.0) fit_samples.emplace_back(d, max_m);
        }
        if (fit_samples.size() >= 2) series.symbol_fit = loglog_fit(fit_samples);
        report.loci.push_back(std::move(series));
    }
    return report;
}

DimensionEstimate dimension_probe(const ResonanceMap& map) {
    if (map.points.size() < 1000) throw ConfigError("dimension_probe needs at least 1000 points");
    DimensionEstimate est;
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i < 4; ++i) {
        const double s = 0.4 * std::ldexp(1.0, -i);
        std::set<std::vector<long>> boxes;
        for (const auto& p : map.points) {
            std::vector<long> key(p.coords.size());
            for (std::size_t c = 0; c < key.size(); ++c) key[c] = static_cast<long>(std::floor(p.coords[c] / s));
            boxes.insert(std::move(key));
        }
        est.counts.emplace_back(s, boxes.size());
        samples.emplace_back(1.0 / s, static_cast<double>(boxes.size()));
    }
    est.sphere_dimension = loglog_fit(samples).exponent;
    est.cone_dimension = est.sphere_dimension + 1.0;
    return est;
}

void write_csv(std::ostream& os, const ResonanceMap& map) {
    std::vector<std::string> header{"xi1", "xi2", "eta1", "eta2"};
    if (map.cubic()) header.insert(header.end(), {"sigma1", "sigma2"});
    header.insert(header.end(), {"abs_phi", "abs_grad_phi", "m1", "m2"});
    if (map.cubic()) header.insert(header.end(), {"m3", "m4"});
    CsvWriter w(os, header);
    for (const auto& p : map.points) {
        for (double c : p.coords) w << c;
        w << p.abs_phi << p.abs_grad_phi << p.m1 << p.m2;
        if (map.cubic()) w << p.m3 << p.m4;
        w.end_row();
    }
}

}  // namespace wwlab
