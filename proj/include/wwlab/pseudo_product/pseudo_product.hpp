#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "wwlab/spectral/norms.hpp"
#include "wwlab/spectral/operators.hpp"
#include "wwlab/symbols/descriptor.hpp"

namespace wwlab {

using BilinearSymbol = std::function<cplx(const Vec2& xi, const Vec2& eta)>;
using TrilinearSymbol = std::function<cplx(const Vec2& xi, const Vec2& eta, const Vec2& sigma)>;
using RadialFactor = std::function<cplx(const Vec2&)>;

/// B_m(f, g)^(xi) = sum_eta m(xi, eta) f^(eta) g^(xi - eta) over the band.
struct BilinearOperator {
    BilinearSymbol symbol;
    /// Lattice points on these loci contribute zero weight.
    std::vector<Locus> singular;
    Dealias rule = Dealias::two_thirds;
    /// Largest |eta| included in the sum.
    double truncation = kInf;

    static BilinearOperator from(const SymbolDescriptor& d, Dealias rule = Dealias::two_thirds);
};

/// m(xi, eta, sigma) = out(xi) first(sigma) second(eta) third(xi - eta - sigma).
struct SeparableFactors {
    RadialFactor out, first, second, third;
};

/// sum m(xi, eta, sigma) f1^(sigma) f2^(eta) f3^(xi - eta - sigma).
struct TrilinearOperator {
    TrilinearSymbol symbol;
    std::vector<Locus> singular;
    Dealias rule = Dealias::half;
    double truncation = kInf;
    std::optional<SeparableFactors> separable;
    /// Lifts the n <= kTrilinearSizeCap guard for non-separable symbols.
    bool allow_large = false;

    static TrilinearOperator from(const SymbolDescriptor& d, Dealias rule = Dealias::half);
};

inline constexpr int kTrilinearSizeCap = 64;

/// Bilinear symbol sampled on the band of one grid.
class LatticeSymbol {
public:
    LatticeSymbol(const BilinearOperator& op, const FourierGrid& grid);

    const FourierGrid& grid() const noexcept { return grid_; }
    Dealias rule() const noexcept { return rule_; }
    /// Value at integer wavenumbers; zero outside the band or on a locus.
    cplx at(int xi1, int xi2, int eta1, int eta2) const;
    SpectralField apply(const SpectralField& f, const SpectralField& g) const;

private:
    FourierGrid grid_;
    Dealias rule_;
    int band_;
    std::vector<cplx> table_;  // [out mode][eta mode], modes enumerated over the band square
};

SpectralField bilinear_apply(const BilinearOperator& op, const SpectralField& f, const SpectralField& g);
SpectralField trilinear_apply(const TrilinearOperator& op, const SpectralField& f1, const SpectralField& f2,
                              const SpectralField& f3);

struct Paraproduct {
    SpectralField high_low;   // sum_j P_j f P_{<j-1} g
    SpectralField low_high;   // sum_j P_{<j-1} f P_j g
    SpectralField high_high;  // sum_{|j-l| <= 1} P_j f P_l g
};

/// Splits the 2/3-rule product; the mean of each factor is treated as one
/// extra bucket just below the lowest active scale so the pieces sum to the product.
Paraproduct paraproduct_split(const SpectralField& f, const SpectralField& g);

/// Variants: 1) sum_j P_j(P_{j+J} f P_{j+J} h) P_{<j-1} g,
/// 2) sum_j P_{<j-1}(P_{j+J} f P_{j+J} h) P_j g, 3) sum_j P_j(P_{j+J} f P_{j+J} h) P_j g.
SpectralField model_operator_apply(int variant, int J, const SpectralField& f, const SpectralField& g,
                                   const SpectralField& h);

/// Random real field: sum of randomly weighted, randomly windowed LP shells.
SpectralField random_multiscale_field(const FourierGrid& grid, std::mt19937_64& rng);

using FieldOperator = std::function<SpectralField(std::span<const SpectralField>)>;

struct BoundProbeResult {
    std::vector<double> ratios;
    std::vector<double> running_max;
    double max_ratio = 0.0;
};

/// max over an ensemble of ||op(f_1..f_k)||_r / prod ||f_i||_{p_i}.
/// Requires sum 1/p_i = 1/r and all exponents in (1, inf).
BoundProbeResult bound_probe(const FieldOperator& op, std::span<const double> p, double r, std::size_t ensemble_size,
                             const FourierGrid& grid, std::uint64_t seed);

}  // namespace wwlab
