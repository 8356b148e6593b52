#pragma once

#include <limits>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "wwlab/spectral/field.hpp"
#include "wwlab/spectral/littlewood_paley.hpp"

namespace wwlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// (integral |f|^p dx)^{1/p} by the periodic trapezoid rule; p = kInf gives the max.
double lebesgue_norm(const SpectralField& f, double p);
/// L^2 norm through Parseval.
double l2_norm(const SpectralField& f);
/// ||(1 + |D|^2)^{s/2} f||_2.
double sobolev_h(const SpectralField& f, double s);
/// ||f||_p + || |nabla^k f| ||_p with the Frobenius norm of the k-tensor.
double sobolev_w(const SpectralField& f, int k, double p);
/// Homogeneous (sum over active scales) or inhomogeneous (low part below 2^0 plus j >= 0) Besov norm.
double besov_norm(const SpectralField& f, double s, double p, double q, bool homogeneous,
                  const LittlewoodPaleyBank& bank);

struct WeightedNorm {
    double value = 0.0;
    /// Share of |x f|^2 carried by the outer 10% of the box on each axis.
    double boundary_fraction = 0.0;
    bool contaminated() const noexcept { return boundary_fraction > 0.01; }
};
/// ||x f||_2 with x the centered coordinate; logs a warning when contaminated.
WeightedNorm weighted_norm(const SpectralField& f);

struct XNormComponents {
    double decay = 0.0;     // t ||u||_{W^{4,inf}}
    double sobolev = 0.0;   // t^{-delta} ||u||_{H^N}
    double weighted = 0.0;  // t^{-delta} ||x f||_2
    double mass = 0.0;      // ||u||_2
    double total() const noexcept { return decay + sobolev + weighted + mass; }
};
XNormComponents x_norm(const SpectralField& u, const SpectralField& profile, double t, double delta, int sobolev_n);

struct BesovIndex {
    double s, p, q;
    auto operator<=>(const BesovIndex&) const = default;
};

struct NormRequest {
    std::vector<double> lebesgue;
    std::vector<std::pair<int, double>> sobolev_w;
    std::vector<int> sobolev_h;
    std::vector<BesovIndex> besov;
    bool weighted = false;
    struct XNorm {
        SpectralField profile;
        double t;
        double delta = 0.01;
        int sobolev_n = 8;
    };
    std::optional<XNorm> x_norm;
};

struct NormReport {
    std::map<double, double> lebesgue;
    std::map<std::pair<int, double>, double> sobolev_w;
    std::map<int, double> sobolev_h;
    std::map<BesovIndex, double> besov_homogeneous;
    std::map<BesovIndex, double> besov_inhomogeneous;
    std::optional<WeightedNorm> weighted;
    std::optional<XNormComponents> x_norm;
};

/// Throws ConfigError for p < 1 or q < 1.
NormReport compute_norms(const SpectralField& f, const NormRequest& request);

}  // namespace wwlab
