#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "wwlab/spectral/fit.hpp"
#include "wwlab/symbols/descriptor.hpp"

namespace wwlab {

enum class ResonanceKind { time, space, spacetime };
ResonanceKind parse_resonance_kind(std::string_view text);
std::string to_string(ResonanceKind k);

struct ResonancePoint {
    std::vector<double> coords;  // (xi, eta[, sigma]) flattened, on the unit sphere
    double abs_phi = 0.0;
    double abs_grad_phi = 0.0;   // |grad_{eta[,sigma]} phi|
    double m1 = 0.0, m2 = 0.0;   // at (xi, eta); NaN on the symbol locus
    double m3 = 0.0, m4 = 0.0;   // cubic maps only
    Point point() const;
};

struct ResonanceMap {
    SignPattern pattern;
    ResonanceKind kind;
    double tolerance;
    std::vector<ResonancePoint> points;
    bool cubic() const noexcept { return pattern.size() == 3; }
};

struct SamplingOptions {
    /// Radius of the sphere the projection runs on; stored points are rescaled to radius 1.
    double radius = 1.0;
    int max_iterations = 80;
};

/// Projects resolution^3 low-discrepancy seeds on the unit sphere of R^4 (or
/// R^6) onto the resonant set and keeps those meeting the threshold:
/// time |phi| < tol, space |grad_{eta[,sigma]} phi| < tol, spacetime both.
ResonanceMap sample_resonant_set(const SignPattern& pattern, ResonanceKind kind, int resolution, double tol,
                                 const SamplingOptions& options = {});

enum class CubicClass { weakly_resonant, strongly_resonant };
/// Strongly resonant exactly for --+, -+-, +--.
CubicClass classify_cubic_phase(const SignPattern& pattern);

struct LocusSeries {
    Locus locus;
    std::size_t base_points = 0;
    std::vector<double> distance;
    std::vector<double> max_symbol;  // max |m| at that distance
    std::vector<double> max_ratio;   // max |m / phi|
    PowerFit symbol_fit;
    double sup_ratio = 0.0;
};

struct NullStructureReport {
    std::string symbol;
    SignPattern pattern;
    std::size_t resonant_points = 0;
    std::vector<LocusSeries> loci;
    bool vacuous() const noexcept { return resonant_points == 0; }
    const LocusSeries* find(Locus l) const;
};

/// Samples the time-resonant set of a quadratic pattern, attributes each
/// point to the nearest coordinate locus, and measures |m| and |m/phi| along
/// approaches d = 2^{-k}, k = 4..20, maximized over 8 directions.
NullStructureReport null_structure_report(const SymbolDescriptor& symbol, const SignPattern& pattern, int resolution);

struct DimensionEstimate {
    double sphere_dimension = 0.0;  // box-counting dimension on the unit sphere
    double cone_dimension = 0.0;    // dimension of the homogeneous cone, sphere + 1
    std::vector<std::pair<double, std::size_t>> counts;  // (box size, occupied boxes)
};

/// Box counting over four dyadic box sizes 0.4 .. 0.05. Needs >= 1000 points.
DimensionEstimate dimension_probe(const ResonanceMap& map);

void write_csv(std::ostream& os, const ResonanceMap& map);

}  // namespace wwlab
